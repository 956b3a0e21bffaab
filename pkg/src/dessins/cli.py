"""Command line front end.

Subcommands: roots | monodromy | dessin | orbit | evidence | render.
Payloads go to stdout as JSON (numbers trimmed to 15 significant digits);
failures go to stderr as a structured JSON error object.  Exit codes:
0 success, 2 bad arguments, 3 numerical failure, 4 incomplete evidence.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import galois, maps, polynomials
from .dessin import Constellation, dessin_json
from .maps import MapExprError
from .monodromy import (
    NotBelyiError,
    TrackingConfig,
    TrackingError,
    monodromy,
    monodromy_json,
    verify_stability,
)
from .polynomials import EvidenceIncompleteError, RootFindingError
from .render import RenderError, RenderPlan, render_graph

PARSE_EXIT = 2
NUMERIC_EXIT = 3
EVIDENCE_EXIT = 4


def round_floats(obj, digits: int = 15):
    """Recursively trim floats to the given significant digits."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return float(f"{obj:.{digits}g}")
    if isinstance(obj, dict):
        return {k: round_floats(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v, digits) for v in obj]
    return obj


def _emit(payload, pretty: bool) -> None:
    payload = round_floats(payload)
    if pretty:
        text = json.dumps(payload, indent=2, sort_keys=False)
    else:
        text = json.dumps(payload, separators=(",", ":"))
    sys.stdout.write(text + "\n")


def _fail(exc: BaseException, code: int) -> int:
    body = {
        "error": type(exc).__name__,
        "message": str(exc),
        "exit_code": code,
    }
    sys.stderr.write(json.dumps(body) + "\n")
    return code


def _parse_triple(text: str) -> galois.Triple:
    parts = text.replace("(", "").replace(")", "").split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated labels, got {text!r}")
    try:
        i, j, k = (int(p.strip()) for p in parts)
    except ValueError:
        raise ValueError(f"triple entries must be integers: {text!r}") from None
    return galois.Triple.of((i, j, k))


def _load_config(path: str | None) -> TrackingConfig:
    if path is None:
        return TrackingConfig()
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return TrackingConfig.from_json_dict(data)


# ---------------------------------------------------------------------------
# command handlers


def cmd_roots(args, cfg: TrackingConfig):
    return polynomials.roots_of_f().to_json_list()


def cmd_monodromy(args, cfg: TrackingConfig):
    e = maps.parse_map_expr(args.map)
    stability = verify_stability(e, cfg) if args.check_stability else None
    return monodromy_json(e, cfg, stability=stability)


def cmd_dessin(args, cfg: TrackingConfig):
    t = _parse_triple(args.triple)
    e = galois.full_chain(t)
    pair = monodromy(e, cfg)
    body = dessin_json(Constellation(pair.g0, pair.g1))
    return {
        "triple": list(t.as_tuple()),
        "map": maps.format_map_expr(e),
        **body,
    }


def cmd_orbit(args, cfg: TrackingConfig):
    t = _parse_triple(args.triple)
    spec = galois.SubgroupSpec(generator_words=(args.subgroup,))
    report = galois.orbit_dessins(spec, t, cfg, workers=args.workers)
    return report.to_json_dict()


def cmd_evidence(args, cfg: TrackingConfig):
    return polynomials.s12_evidence(max_prime=args.max_prime).to_json_dict()


def cmd_render(args, cfg: TrackingConfig):
    e = maps.parse_map_expr(args.map)
    plan = RenderPlan(samples_per_edge=args.samples)
    result = render_graph(e, plan, cfg)
    if args.out == "-":
        sys.stdout.write(result.svg + "\n")
        return None
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(result.svg)
    return {
        "out": args.out,
        "map": maps.format_map_expr(e),
        "arcs": result.arc_count,
        "black_dots": result.merged_black_count,
        "white_dots": result.merged_white_count,
        "vertices": result.vertex_count,
    }


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json-pretty", action="store_true",
                        help="indent the JSON output")
    common.add_argument("--config", metavar="PATH", default=None,
                        help="tracking configuration as a JSON file")
    common.add_argument("--seed-offset", type=float, default=None, metavar="RAD",
                        help="angular offset for the root finder's start circle")

    parser = argparse.ArgumentParser(
        prog="dessins",
        description="Belyi maps on a family of elliptic curves: roots, "
                    "monodromy, dessins, Galois orbits, drawings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common],
                       help="labeled roots of the degree-12 polynomial f")
    p.set_defaults(handler=cmd_roots)

    p = sub.add_parser("monodromy", parents=[common],
                       help="permutation pair of a Belyi chain")
    p.add_argument("--map", required=True,
                   help='chain expression, e.g. "b(1,1).b(10,1)"')
    p.add_argument("--check-stability", action="store_true",
                   help="re-track with smaller loops and doubled sampling")
    p.set_defaults(handler=cmd_monodromy)

    p = sub.add_parser("dessin", parents=[common],
                       help="dessin invariants of the full chain at a triple")
    p.add_argument("--triple", required=True, metavar="I,J,K",
                   help="three distinct root labels, e.g. 2,7,11")
    p.set_defaults(handler=cmd_dessin)

    p = sub.add_parser("orbit", parents=[common],
                       help="subgroup orbit of a triple with per-dessin data")
    p.add_argument("--triple", required=True, metavar="I,J,K")
    p.add_argument("--subgroup", required=True,
                   help="generator word(s) over a,b,A,B, e.g. a or ab")
    p.add_argument("--workers", type=int, default=None,
                   help="process count for per-triple dessins")
    p.set_defaults(handler=cmd_orbit)

    p = sub.add_parser("evidence", parents=[common],
                       help="factorization witnesses for the Galois group of f")
    p.add_argument("--max-prime", type=int, default=2000,
                   help="largest prime to scan (default 2000)")
    p.set_defaults(handler=cmd_evidence)

    p = sub.add_parser("render", parents=[common],
                       help="draw the dessin of a chain as SVG")
    p.add_argument("--map", required=True)
    p.add_argument("--out", required=True,
                   help='output SVG path, or "-" for stdout')
    p.add_argument("--samples", type=int, default=48,
                   help="sample points per edge half (default 48)")
    p.set_defaults(handler=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed_offset is not None:
            polynomials.set_default_angular_offset(args.seed_offset)
        cfg = _load_config(args.config)
    except json.JSONDecodeError as exc:
        return _fail(exc, PARSE_EXIT)
    except (OSError, ValueError) as exc:
        return _fail(exc, PARSE_EXIT)

    try:
        payload = args.handler(args, cfg)
    except EvidenceIncompleteError as exc:
        return _fail(exc, EVIDENCE_EXIT)
    except (RootFindingError, TrackingError, RenderError, ZeroDivisionError) as exc:
        return _fail(exc, NUMERIC_EXIT)
    except (MapExprError, galois.BadWordError, NotBelyiError, ValueError) as exc:
        return _fail(exc, PARSE_EXIT)

    if payload is not None:
        _emit(payload, args.json_pretty)
    return 0


if __name__ == "__main__":
    sys.exit(main())
