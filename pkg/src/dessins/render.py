"""Deterministic SVG drawings of dessins by lifting the segment [0, 1].

Vertices are the structural preimages of 0 (black) and 1 (white), computed
stage by stage with exact multiplicity bookkeeping at critical values.
Edges are the fiber points over 1/2, continued toward both endpoints along
a geometric sample ladder; each strand is attached to the vertex nearest
its deep endpoint (x and y jointly on curves).  The strand count at every
vertex must equal the vertex's ramification order, and the drawing refuses
to render when the two disagree.

On curve chains the two y-sheets share x trajectories; they are drawn
with two distinguishable strokes.  Vertices closer than the merge
tolerance in the x plane are drawn as a single dot carrying the orders of
all constituents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import maps
from .maps import INF, BelyiMN, FPoly, MapExpr, Proj, RootRef
from .monodromy import TrackingConfig, _composite_and_derivative, _stage_polys, fiber
from .polynomials import ComplexPoly, roots

ENDPOINT_VALUE_GAP = 1e-8  # how close to 0 and 1 the strands are tracked


class RenderError(RuntimeError):
    pass


@dataclass(frozen=True)
class RenderPlan:
    samples_per_edge: int = 48
    width: float = 840.0
    padding: float = 28.0
    merge_tol: float = 1e-4
    edge_width: float = 1.6
    sheet_widths: tuple[float, float] = (2.4, 1.1)
    sheet_colors: tuple[str, str] = ("#5b8dd9", "#d97b5b")
    edge_color: str = "#555555"
    black_color: str = "#111111"
    white_fill: str = "#ffffff"
    vertex_radius: float = 3.2

    def __post_init__(self) -> None:
        if self.samples_per_edge < 8:
            raise ValueError("samples_per_edge must be at least 8")


@dataclass(frozen=True)
class RenderVertex:
    x: complex
    y: complex | None
    order: int
    color: str


@dataclass(frozen=True)
class RenderResult:
    svg: str
    black_vertices: tuple[RenderVertex, ...]
    white_vertices: tuple[RenderVertex, ...]
    arc_count: int
    merged_black_count: int
    merged_white_count: int

    @property
    def vertex_count(self) -> int:
        return len(self.black_vertices) + len(self.white_vertices)


# ---------------------------------------------------------------------------
# structural preimages with multiplicity


def _poly_minus(prim, v: complex) -> ComplexPoly:
    poly = maps.as_poly(prim)
    return ComplexPoly((poly.coeffs[0] - v,) + poly.coeffs[1:])


def _deflated_roots(prim, v: complex, at: complex, times: int) -> tuple[complex, ...]:
    poly = _poly_minus(prim, v)
    for _ in range(times):
        poly = poly.deflate(at)
    if poly.degree == 0:
        return ()
    return roots(poly)


def _preimages(prim, v):
    """(preimage, multiplicity) pairs of a single primitive at one value."""
    if isinstance(prim, BelyiMN):
        if v == Fraction(0):
            return [(Fraction(0), prim.m), (Fraction(1), prim.n)]
        if v == Fraction(1):
            crit = Fraction(prim.m, prim.m + prim.n)
            extra = _deflated_roots(prim, 1.0, complex(crit), 2)
            return [(crit, 2)] + [(r, 1) for r in extra]
        return [(r, 1) for r in _solve_regular(prim, v)]
    if isinstance(prim, FPoly):
        if v == Fraction(1):
            return [(Fraction(0), 11), (Fraction(12, 11), 1)]
        if v == Fraction(10, 11):
            extra = _deflated_roots(prim, 10.0 / 11.0, 1.0, 2)
            return [(Fraction(1), 2)] + [(r, 1) for r in extra]
        if v == Fraction(0):
            return [(RootRef(i), 1) for i in range(1, 13)]
        return [(r, 1) for r in _solve_regular(prim, v)]
    raise TypeError("pi preimages are handled on the curve")


def _solve_regular(prim, v) -> tuple[complex, ...]:
    vc = maps.point_to_complex(v) if not isinstance(v, complex) else v
    data = maps.branch_values(MapExpr((prim,)))
    for bv in data.finite_numeric():
        if abs(vc - bv) < 1e-9 and not _is_exact(v):
            raise RenderError(
                f"value {vc} sits on a critical value without an exact tag")
    return roots(_poly_minus(prim, vc))


def _is_exact(v) -> bool:
    return isinstance(v, (Fraction, RootRef))


def structural_vertices(e: MapExpr, target: int) -> list[RenderVertex]:
    """Preimages of 0 or 1 under the chain, with ramification orders."""
    if target not in (0, 1):
        raise ValueError("target must be 0 or 1")
    color = "black" if target == 0 else "white"
    current: list[tuple[object, int]] = [(Fraction(target), 1)]
    for prim in e.polynomial_part():
        nxt: list[tuple[object, int]] = []
        for v, mult in current:
            for w, m in _preimages(prim, v):
                nxt.append((w, mult * m))
        current = nxt

    out = []
    if e.has_curve:
        proj = e.proj
        in_triple = set(proj.triple)
        for v, mult in current:
            if isinstance(v, RootRef) and v.label in in_triple:
                out.append(RenderVertex(x=v.value(), y=0j, order=2 * mult, color=color))
                continue
            x = maps.point_to_complex(v)
            y = np.sqrt(complex(proj.curve_rhs(x)))
            out.append(RenderVertex(x=x, y=complex(y), order=mult, color=color))
            out.append(RenderVertex(x=x, y=-complex(y), order=mult, color=color))
    else:
        for v, mult in current:
            out.append(RenderVertex(
                x=maps.point_to_complex(v), y=None, order=mult, color=color))
    return out


# ---------------------------------------------------------------------------
# strand tracking


def _track_to_value(e, x, y, targets, cfg: TrackingConfig):
    """Continue the fiber through a decreasing ladder of base values.

    Returns the positions after each rung, inserting midpoints in value
    space whenever Newton or the sheet guards reject a rung.
    """
    stages = _stage_polys(e)
    derivs = [s.derivative() for s in stages]
    proj = e.proj
    # Strands run into ramification points where |F'| -> 0, so the
    # attainable Newton step plateaus near eps/|F'| (about 1e-8 on the
    # last rung of a 10-fold point).  The loop tolerance is unreachable
    # there; 1e-7 still sits three decades below the merge tolerance.
    rtol = max(cfg.newton_tol, 1e-7)
    xs = [x.copy()]
    ys = [y.copy()] if y is not None else None
    current = x.copy()
    ycur = y.copy() if y is not None else None
    reached = 0.5
    for target in targets:
        pending = [float(target)]
        depth = 0
        while pending:
            sub = pending[-1]
            base_value, slope = _composite_and_derivative(stages, derivs, current)
            x_new = current + (sub - base_value) / slope
            converged = False
            for _ in range(cfg.max_newton_iters):
                value, slope_new = _composite_and_derivative(stages, derivs, x_new)
                delta = (value - sub) / slope_new
                x_new = x_new - delta
                if np.all(np.abs(delta) <= rtol * np.maximum(1.0, np.abs(x_new))):
                    converged = True
                    break
            ok = converged
            y_new = None
            if ok and proj is not None:
                s = np.sqrt(proj.curve_rhs(x_new))
                y_new = np.where(np.abs(s - ycur) <= np.abs(s + ycur), s, -s)
                ok = bool(np.all(np.abs(y_new - ycur) < 0.5 * np.abs(ycur)))
            if ok:
                gaps = np.abs(current[:, None] - current[None, :])
                if ycur is not None:
                    gaps = gaps + np.abs(ycur[:, None] - ycur[None, :])
                np.fill_diagonal(gaps, np.inf)
                moved = np.abs(x_new - current)
                if y_new is not None:
                    moved = moved + np.abs(y_new - ycur)
                ok = bool(np.all(moved < 0.4 * gaps.min(axis=1)))
            if not ok:
                depth += 1
                if depth > 60:
                    raise RenderError("substep bisection stalled")
                pending.append((reached + sub) / 2)
                continue
            depth = 0
            current = x_new
            if y_new is not None:
                ycur = y_new
            reached = sub
            pending.pop()
        xs.append(current.copy())
        if ys is not None:
            ys.append(ycur.copy())
    return xs, ys


def _value_ladder(samples: int, toward_one: bool) -> list[float]:
    ratio = (ENDPOINT_VALUE_GAP / 0.5) ** (1.0 / samples)
    ladder = [0.5 * ratio**k for k in range(1, samples + 1)]
    if toward_one:
        return [1.0 - v for v in ladder]
    return ladder


# ---------------------------------------------------------------------------
# assembly


def _nearest_vertex(x, y, vertices: list[RenderVertex]) -> int:
    best, best_d = -1, float("inf")
    for idx, v in enumerate(vertices):
        d = abs(x - v.x)
        if y is not None and v.y is not None:
            d += abs(y - v.y)
        if d < best_d:
            best, best_d = idx, d
    return best


def render_graph(
    e: MapExpr,
    plan: RenderPlan = RenderPlan(),
    cfg: TrackingConfig = TrackingConfig(),
) -> RenderResult:
    """Render the dessin of a chain; see the module docstring."""
    blacks = structural_vertices(e, 0)
    whites = structural_vertices(e, 1)
    base = fiber(e, 0.5, cfg)
    x0 = np.array([pt.x for pt in base], dtype=complex)
    y0 = np.array([pt.y for pt in base], dtype=complex) if e.has_curve else None

    to_zero_x, to_zero_y = _track_to_value(
        e, x0, y0, _value_ladder(plan.samples_per_edge, False), cfg)
    to_one_x, to_one_y = _track_to_value(
        e, x0, y0, _value_ladder(plan.samples_per_edge, True), cfg)

    black_use = [0] * len(blacks)
    white_use = [0] * len(whites)
    arcs = []
    for idx, pt in enumerate(base):
        bx = to_zero_x[-1][idx]
        by = to_zero_y[-1][idx] if to_zero_y is not None else None
        wx = to_one_x[-1][idx]
        wy = to_one_y[-1][idx] if to_one_y is not None else None
        b = _nearest_vertex(bx, by, blacks)
        w = _nearest_vertex(wx, wy, whites)
        black_use[b] += 1
        white_use[w] += 1
        polyline = (
            [blacks[b].x]
            + [stage[idx] for stage in reversed(to_zero_x)]
            + [stage[idx] for stage in to_one_x]
            + [whites[w].x]
        )
        sheet = 0
        if pt.y is not None:
            sheet = 0 if (pt.y.imag, pt.y.real) >= (0.0, 0.0) else 1
        arcs.append((pt.label, sheet, polyline))

    for use, vertices, side in ((black_use, blacks, "black"), (white_use, whites, "white")):
        for count, v in zip(use, vertices):
            if count != v.order:
                raise RenderError(
                    f"{side} vertex at {v.x:.6f} collected {count} strands, "
                    f"ramification order is {v.order}")

    svg, merged_black, merged_white = _svg_document(e, plan, blacks, whites, arcs)
    return RenderResult(
        svg=svg,
        black_vertices=tuple(blacks),
        white_vertices=tuple(whites),
        arc_count=len(arcs),
        merged_black_count=merged_black,
        merged_white_count=merged_white,
    )


def merge_dots(vertices, tol: float) -> list[list[RenderVertex]]:
    """Group vertices by x-plane proximity; each group is one drawn dot."""
    groups: list[list[RenderVertex]] = []
    for v in sorted(vertices, key=lambda u: (u.x.real, u.x.imag, 0 if u.y is None else u.y.imag)):
        for g in groups:
            if abs(g[0].x - v.x) < tol:
                g.append(v)
                break
        else:
            groups.append([v])
    return groups


def _svg_document(e, plan, blacks, whites, arcs):
    points = [z for _, _, line in arcs for z in line]
    points += [v.x for v in blacks] + [v.x for v in whites]
    minx = min(z.real for z in points)
    maxx = max(z.real for z in points)
    miny = min(z.imag for z in points)
    maxy = max(z.imag for z in points)
    span_x = max(maxx - minx, 1e-9)
    span_y = max(maxy - miny, 1e-9)
    scale = (plan.width - 2 * plan.padding) / span_x
    height = span_y * scale + 2 * plan.padding

    def sx(z: complex) -> float:
        return (z.real - minx) * scale + plan.padding

    def sy(z: complex) -> float:
        return (maxy - z.imag) * scale + plan.padding

    out = []
    out.append(
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{plan.width:.0f}" height="{height:.2f}" '
        f'viewBox="0 0 {plan.width:.2f} {height:.2f}">'
    )
    title = maps.format_map_expr(e)
    out.append(f"<title>{title}</title>")
    out.append(f'<rect width="100%" height="100%" fill="{plan.white_fill}"/>')

    curve = e.has_curve
    for label, sheet, line in sorted(arcs):
        if curve:
            color = plan.sheet_colors[sheet]
            width = plan.sheet_widths[sheet]
        else:
            color = plan.edge_color
            width = plan.edge_width
        d = "M " + " L ".join(f"{sx(z):.2f},{sy(z):.2f}" for z in line)
        out.append(
            f'<path fill="none" stroke="{color}" stroke-width="{width:.2f}" '
            f'stroke-linecap="round" d="{d}"/>'
        )

    merged_black = merge_dots(blacks, plan.merge_tol)
    merged_white = merge_dots(whites, plan.merge_tol)
    for groups, fill, stroke in (
        (merged_black, plan.black_color, "none"),
        (merged_white, plan.white_fill, plan.black_color),
    ):
        for g in groups:
            total = sum(v.order for v in g)
            r = plan.vertex_radius * (1.0 + 0.25 * min(total, 24) ** 0.5)
            z = g[0].x
            orders = "+".join(str(v.order) for v in sorted(g, key=lambda u: -u.order))
            extra = '' if stroke == "none" else f' stroke="{stroke}" stroke-width="1.2"'
            out.append(
                f'<circle cx="{sx(z):.2f}" cy="{sy(z):.2f}" r="{r:.2f}" '
                f'fill="{fill}"{extra}><title>orders {orders}</title></circle>'
            )

    if curve:
        out.append(
            f'<text x="{plan.padding:.0f}" y="16" font-family="sans-serif" '
            f'font-size="12" fill="{plan.sheet_colors[0]}">sheet 1</text>'
        )
        out.append(
            f'<text x="{plan.padding + 70:.0f}" y="16" font-family="sans-serif" '
            f'font-size="12" fill="{plan.sheet_colors[1]}">sheet 2</text>'
        )
    out.append("</svg>")
    return "\n".join(out), len(merged_black), len(merged_white)
