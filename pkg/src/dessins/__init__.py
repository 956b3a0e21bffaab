"""Clean Belyi maps on a family of elliptic curves and their dessins.

The degree-12 polynomial f(x) = x^12 - (12/11) x^11 + 1 has twelve simple
complex roots and no real ones.  Choosing three of them cuts out a curve
y^2 = (x - ri)(x - rj)(x - rk), and the chain

    b(1,1) . b(10,1) . f . pi(i,j,k)

is a clean Belyi map of degree 528 on that curve.  This package finds the
roots, parses and evaluates such chains, extracts monodromy permutation
pairs by numerical continuation around 0 and 1, reduces them to dessin
invariants (passport, genus, bouquet profile, canonical form), moves the
triples under an A5 action and compares the dessins along each orbit, and
draws the graphs as SVG.
"""

from .dessin import (
    Constellation,
    DessinInvariants,
    Passport,
    canonical_form,
    canonical_hash,
    dessin_json,
    genus,
    invariants,
    isomorphic,
    passport,
)
from .galois import (
    SubgroupSpec,
    Triple,
    a5_orbit_partition,
    act,
    full_chain,
    generators_a5,
    j_invariant,
    orbit_dessins,
    orbit_triples,
    verify_a5,
    word_permutation,
)
from .maps import MapExpr, branch_values, format_map_expr, is_belyi, parse_map_expr
from .monodromy import (
    LoopSpec,
    MonodromyPair,
    TrackingConfig,
    fiber,
    monodromy,
    track_loop,
    verify_stability,
)
from .perms import (
    CycleType,
    Permutation,
    compose,
    cycle_decomposition,
    cycle_type,
    format_cycles,
    identity,
    inverse,
    parse_cycles,
    power,
)
from .polynomials import LabeledRoots, f_polynomial, roots_of_f, s12_evidence
from .render import RenderPlan, RenderResult, render_graph

__version__ = "0.1.0"

__all__ = [
    "CycleType",
    "Constellation",
    "DessinInvariants",
    "LabeledRoots",
    "LoopSpec",
    "MapExpr",
    "MonodromyPair",
    "Passport",
    "Permutation",
    "RenderPlan",
    "RenderResult",
    "SubgroupSpec",
    "TrackingConfig",
    "Triple",
    "a5_orbit_partition",
    "act",
    "branch_values",
    "canonical_form",
    "canonical_hash",
    "compose",
    "cycle_decomposition",
    "cycle_type",
    "dessin_json",
    "f_polynomial",
    "fiber",
    "format_cycles",
    "format_map_expr",
    "full_chain",
    "generators_a5",
    "genus",
    "identity",
    "invariants",
    "inverse",
    "is_belyi",
    "isomorphic",
    "j_invariant",
    "monodromy",
    "orbit_dessins",
    "orbit_triples",
    "parse_cycles",
    "parse_map_expr",
    "passport",
    "power",
    "render_graph",
    "roots_of_f",
    "s12_evidence",
    "track_loop",
    "verify_a5",
    "verify_stability",
    "word_permutation",
]
