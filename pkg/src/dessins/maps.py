"""Composite covering-map expressions over the three-point base.

An expression is a chain of primitives written outermost first, e.g.
``b(1,1).b(10,1).f.pi(2,7,11)`` denotes the composition

    x  |->  b11( b101( f( pi(x) ) ) ).

Primitives:

    b(m,n)     the degree m+n polynomial ((m+n)^(m+n)/(m^m n^n)) x^m (1-x)^n,
               sending 0 and 1 to 0, m/(m+n) to 1 and infinity to infinity
    f          x^12 - (12/11) x^11 + 1, degree 12
    pi(i,j,k)  projection (x, y) -> x from the curve y^2 = (x-ri)(x-rj)(x-rk)
               built on roots i, j, k of f, degree 2

``pi`` may only appear as the innermost element and at most once; ``f`` may
appear at most once and no ``b`` may sit inside it.  Branch values are
propagated forward exactly (rational arithmetic plus symbolic root
references) wherever the chain allows it.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

from .polynomials import ComplexPoly, f_polynomial, fraction_eval_f, roots_of_f

ON_CURVE_TOL = 1e-8


class MapExprError(ValueError):
    """Base class for expression construction and parse failures."""


class MapSyntaxError(MapExprError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class EmptyChainError(MapExprError):
    pass


class BadTripleError(MapExprError):
    pass


class MisplacedPrimitiveError(MapExprError):
    pass


class PointOffCurveError(ValueError):
    pass


class _Infinity:
    """Symbolic point at infinity; a singleton usable in branch-value sets."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"


INF = _Infinity()


@dataclass(frozen=True)
class RootRef:
    """Symbolic reference to root label i of ``f``; exact until evaluated."""

    label: int

    def __post_init__(self) -> None:
        if not 1 <= self.label <= 12:
            raise ValueError(f"root label {self.label} outside 1..12")

    def value(self) -> complex:
        return roots_of_f()[self.label]

    def __repr__(self) -> str:
        return f"r{self.label}"


BranchPoint = Union[Fraction, RootRef, _Infinity, complex]


@dataclass(frozen=True)
class BelyiMN:
    m: int
    n: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise MapExprError(f"b({self.m},{self.n}) needs positive exponents")

    @property
    def degree(self) -> int:
        return self.m + self.n

    @property
    def lead_constant(self) -> Fraction:
        m, n = self.m, self.n
        return Fraction((m + n) ** (m + n), m**m * n**n)

    def text(self) -> str:
        return f"b({self.m},{self.n})"


@dataclass(frozen=True)
class FPoly:
    degree = 12

    def text(self) -> str:
        return "f"


@dataclass(frozen=True)
class Proj:
    triple: tuple[int, int, int]

    def __post_init__(self) -> None:
        t = self.triple
        if len(t) != 3 or len(set(t)) != 3 or not all(1 <= i <= 12 for i in t):
            raise BadTripleError(f"pi{t} needs three distinct labels in 1..12")

    degree = 2

    def cubic_roots(self) -> tuple[complex, complex, complex]:
        labeled = roots_of_f()
        return tuple(labeled[i] for i in self.triple)

    def curve_rhs(self, x: complex | np.ndarray) -> complex | np.ndarray:
        ri, rj, rk = self.cubic_roots()
        return (x - ri) * (x - rj) * (x - rk)

    def text(self) -> str:
        return f"pi({self.triple[0]},{self.triple[1]},{self.triple[2]})"


Primitive = Union[BelyiMN, FPoly, Proj]


@dataclass(frozen=True)
class MapExpr:
    """A validated chain of primitives, outermost first."""

    chain: tuple[Primitive, ...]

    def __post_init__(self) -> None:
        if not self.chain:
            raise EmptyChainError("chain must contain at least one primitive")
        seen_f = False
        for index, prim in enumerate(self.chain):
            if isinstance(prim, Proj) and index != len(self.chain) - 1:
                raise MisplacedPrimitiveError("pi may only appear innermost")
            if isinstance(prim, FPoly):
                if seen_f:
                    raise MisplacedPrimitiveError("f may appear at most once")
                seen_f = True
            if isinstance(prim, BelyiMN) and seen_f:
                raise MisplacedPrimitiveError("b(m,n) may not appear inside f")
        if sum(isinstance(p, Proj) for p in self.chain) > 1:
            raise MisplacedPrimitiveError("pi may appear at most once")

    @property
    def has_curve(self) -> bool:
        return isinstance(self.chain[-1], Proj)

    @property
    def proj(self) -> Proj | None:
        return self.chain[-1] if self.has_curve else None

    def polynomial_part(self) -> tuple[Primitive, ...]:
        """The chain without a trailing projection, still outermost first."""
        return self.chain[:-1] if self.has_curve else self.chain

    def inner(self) -> "MapExpr | None":
        """The chain below the outermost primitive, or None for length 1."""
        if len(self.chain) == 1:
            return None
        return MapExpr(self.chain[1:])

    def __str__(self) -> str:
        return format_map_expr(self)


def degree(e: MapExpr) -> int:
    d = 1
    for prim in e.chain:
        d *= prim.degree
    return d


def format_map_expr(e: MapExpr) -> str:
    return ".".join(prim.text() for prim in e.chain)


# ---------------------------------------------------------------------------
# parsing


def parse_map_expr(text: str) -> MapExpr:
    """Parse chain grammar ``prim ('.' prim)*``; whitespace is ignored."""
    tokens = []  # (kind, value, position)
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        elif ch in "(),.":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise MapSyntaxError(f"unexpected character {ch!r}", i)
    if not tokens:
        raise EmptyChainError("empty expression")

    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else ("end", None, len(text))

    def take(kind):
        nonlocal pos
        tok = peek()
        if tok[0] != kind:
            raise MapSyntaxError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        pos += 1
        return tok

    def parse_prim() -> Primitive:
        tok = take("name")
        if tok[1] == "b":
            take("(")
            m = take("int")[1]
            take(",")
            n = take("int")[1]
            take(")")
            return BelyiMN(m, n)
        if tok[1] == "f":
            return FPoly()
        if tok[1] == "pi":
            take("(")
            i1 = take("int")[1]
            take(",")
            i2 = take("int")[1]
            take(",")
            i3 = take("int")[1]
            take(")")
            return Proj((i1, i2, i3))
        raise MapSyntaxError(f"unknown primitive {tok[1]!r}", tok[2])

    chain = [parse_prim()]
    while peek()[0] == ".":
        take(".")
        chain.append(parse_prim())
    if pos != len(tokens):
        tok = peek()
        raise MapSyntaxError(f"trailing input {tok[1]!r}", tok[2])
    return MapExpr(tuple(chain))


# ---------------------------------------------------------------------------
# evaluation


def as_poly(prim: Primitive) -> ComplexPoly:
    """Coefficient form of a polynomial primitive (not defined for pi)."""
    if isinstance(prim, FPoly):
        return f_polynomial()
    if isinstance(prim, BelyiMN):
        m, n, c = prim.m, prim.n, float(prim.lead_constant)
        coeffs = [0.0] * (m + n + 1)
        for k in range(n + 1):
            coeffs[m + k] = c * ((-1) ** k) * math.comb(n, k)
        return ComplexPoly(tuple(coeffs))
    raise TypeError("pi has no single-variable coefficient form")


def eval_primitive(prim: Primitive, x):
    if x is INF:
        return INF
    if isinstance(prim, BelyiMN):
        return complex(prim.lead_constant) * x**prim.m * (1 - x) ** prim.n
    if isinstance(prim, FPoly):
        return f_polynomial()(x)
    raise TypeError("pi consumes a curve point, not a plane value")


def eval_chain(e: MapExpr, point) -> complex | _Infinity:
    """Evaluate the chain at a point.

    For chains ending in ``pi`` the point must carry coordinates (x, y)
    with y^2 = (x-ri)(x-rj)(x-rk) up to 1e-8, else PointOffCurveError.
    Plain chains take a complex number.  INF propagates symbolically.
    """
    if e.has_curve:
        if point is INF:
            return INF
        x, y = _curve_coordinates(point)
        proj = e.proj
        if x is not INF:
            gap = abs(y * y - proj.curve_rhs(x))
            if gap >= ON_CURVE_TOL:
                raise PointOffCurveError(
                    f"|y^2 - c(x)| = {gap:.3e} exceeds {ON_CURVE_TOL}")
        value: complex | _Infinity = x
        rest = e.chain[:-1]
    else:
        if point is not INF and not isinstance(point, (int, float, complex)):
            raise TypeError("plain chains take a complex point")
        value = point
        rest = e.chain
    for prim in reversed(rest):
        value = eval_primitive(prim, value)
    return value


def _curve_coordinates(point) -> tuple[complex, complex]:
    if hasattr(point, "x") and hasattr(point, "y"):
        x, y = point.x, point.y
    else:
        try:
            x, y = point
        except TypeError:
            raise TypeError("curve chains take a point with x and y") from None
    if y is None:
        raise TypeError("curve chains need a y coordinate")
    return x, y


# ---------------------------------------------------------------------------
# branch values


@dataclass(frozen=True)
class BranchData:
    """Branch values of a chain, and per-value critical data when the
    chain is a single primitive (closed-form only in that case)."""

    values: tuple[BranchPoint, ...]
    ramification: tuple[tuple[BranchPoint, tuple[tuple[BranchPoint, int], ...]], ...] | None

    def finite_numeric(self) -> list[complex]:
        return [point_to_complex(v) for v in self.values if v is not INF]

    def contains(self, target: BranchPoint, tol: float = 1e-9) -> bool:
        if target is INF:
            return any(v is INF for v in self.values)
        t = point_to_complex(target)
        return any(
            v is not INF and abs(point_to_complex(v) - t) < tol for v in self.values
        )


def point_to_complex(v: BranchPoint) -> complex:
    if isinstance(v, Fraction):
        return complex(v)
    if isinstance(v, RootRef):
        return v.value()
    if v is INF:
        raise ValueError("infinity has no complex value")
    return complex(v)


def _own_branch_values(prim: Primitive) -> list[BranchPoint]:
    if isinstance(prim, BelyiMN):
        values: list[BranchPoint] = [Fraction(1), INF]
        if prim.m >= 2 or prim.n >= 2:
            values.insert(0, Fraction(0))
        return values
    if isinstance(prim, FPoly):
        return [Fraction(1), Fraction(10, 11), INF]
    return [RootRef(i) for i in prim.triple] + [INF]


def _forward_image(prim: Primitive, v: BranchPoint) -> BranchPoint:
    if v is INF:
        return INF
    if isinstance(prim, FPoly):
        if isinstance(v, RootRef):
            return Fraction(0)
        if isinstance(v, Fraction):
            return fraction_eval_f(v)
        return f_polynomial()(v)
    if isinstance(prim, BelyiMN):
        if isinstance(v, Fraction):
            return prim.lead_constant * v**prim.m * (1 - v) ** prim.n
        x = point_to_complex(v)
        return complex(prim.lead_constant) * x**prim.m * (1 - x) ** prim.n
    raise TypeError("pi is innermost and has no forward images to take")


def _dedup(values: Iterable[BranchPoint]) -> tuple[BranchPoint, ...]:
    kept: list[BranchPoint] = []
    for v in values:
        if v is INF:
            if not any(k is INF for k in kept):
                kept.append(v)
            continue
        vc = point_to_complex(v)
        for k in kept:
            if k is not INF and abs(point_to_complex(k) - vc) < 1e-9:
                break
        else:
            kept.append(v)
    return tuple(kept)


def _single_primitive_ramification(prim: Primitive):
    half = Fraction(1, 2)
    if isinstance(prim, BelyiMN):
        m, n = prim.m, prim.n
        zero_data = []
        if m >= 2:
            zero_data.append((Fraction(0), m))
        if n >= 2:
            zero_data.append((Fraction(1), n))
        out = []
        if zero_data:
            out.append((Fraction(0), tuple(zero_data)))
        out.append((Fraction(1), ((Fraction(m, m + n), 2),)))
        out.append((INF, ((INF, m + n),)))
        return tuple(out)
    if isinstance(prim, FPoly):
        return (
            (Fraction(1), ((Fraction(0), 11),)),
            (Fraction(10, 11), ((Fraction(1), 2),)),
            (INF, ((INF, 12),)),
        )
    return tuple(
        [(RootRef(i), ((RootRef(i), 2),)) for i in prim.triple] + [(INF, ((INF, 2),))]
    )


def branch_values(e: MapExpr) -> BranchData:
    """Branch values of the composite, propagated innermost to outermost.

    Every primitive contributes its own critical values, and all branch
    values of the inner part are pushed forward through the outer
    primitives.  Rational points and root references stay exact; anything
    else is carried numerically.
    """
    values: tuple[BranchPoint, ...] = ()
    for prim in reversed(e.chain):
        forwarded = [_forward_image(prim, v) for v in values]
        values = _dedup(list(_own_branch_values(prim)) + forwarded)
    ramification = (
        _single_primitive_ramification(e.chain[0]) if len(e.chain) == 1 else None
    )
    return BranchData(values=values, ramification=ramification)


def is_belyi(e: MapExpr) -> bool:
    """True when all branch values lie in {0, 1, infinity}."""
    data = branch_values(e)
    for v in data.values:
        if v is INF:
            continue
        vc = point_to_complex(v)
        if abs(vc) >= 1e-9 and abs(vc - 1) >= 1e-9:
            return False
    return True


def is_clean_syntactic(e: MapExpr) -> bool:
    """True when the outermost primitive is b(1,1) and the rest of the
    chain has branch values inside {0, 1, infinity}, which makes every
    preimage of 1 ramify with order exactly 2."""
    head = e.chain[0]
    if not (isinstance(head, BelyiMN) and head.m == 1 and head.n == 1):
        return False
    inner = e.inner()
    return inner is None or is_belyi(inner)
