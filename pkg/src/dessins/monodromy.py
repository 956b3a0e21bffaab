"""Numerical monodromy of covering-map chains by analytic continuation.

The fiber over a base point is computed stage by stage (outermost
primitive first, each value pulled back through the next primitive).  A
loop is a segment from the base point to a circle, the full circle
counterclockwise, and the segment back; the whole fiber is continued along
it with a tangent predictor and a Newton corrector on the composite
equation F(x) = gamma(t).  For chains ending in a projection the fiber
lives on the curve y^2 = c(x); the x coordinate satisfies the polynomial
stages alone and y follows the nearer square root, so a step is accepted
only when it moves each point much less than the gap to its nearest
neighbor and moves y by less than |y| / 2.

Permutations map start labels to end labels, so the product of the loop
permutations taken in traversal order is the permutation of the
concatenated path.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, asdict
from typing import Sequence

import numpy as np

from . import maps
from .maps import MapExpr
from .perms import Permutation, compose, inverse, format_cycles
from .polynomials import ComplexPoly, roots

BASEPOINT = 0.5


class TrackingError(RuntimeError):
    """Base class for numerical continuation failures."""


class NearBranchError(TrackingError):
    pass


class CollisionError(TrackingError):
    pass


class StepUnderflowError(TrackingError):
    pass


class MatchAmbiguousError(TrackingError):
    pass


class NotBijectiveError(TrackingError):
    pass


class NotBelyiError(ValueError):
    pass


@dataclass(frozen=True)
class TrackingConfig:
    newton_tol: float = 1e-12
    max_newton_iters: int = 30
    initial_step: float = 1.0 / 256.0   # fraction of the loop length
    min_step: float = 2.0**-20          # fraction of the loop length
    match_tol: float = 1e-6
    separation_factor: float = 10.0

    def to_json_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json_dict(cls, data: dict) -> "TrackingConfig":
        known = {f for f in cls.__dataclass_fields__}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**data)


@dataclass(frozen=True)
class LoopSpec:
    """Segment to the circle, counterclockwise circle, segment back.

    The entry point sits at ``center + radius * exp(i * entry_angle)``;
    by default the entry angle points from the center toward the base
    point, so the segment is radial.
    """

    center: complex
    radius: float
    basepoint: complex = BASEPOINT
    steps: int = 256
    entry_angle: float | None = None

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.steps < 1:
            raise ValueError("steps must be positive")
        if abs(self.basepoint - self.center) == 0:
            raise ValueError("basepoint must differ from center")

    @property
    def _entry(self) -> complex:
        angle = self.entry_angle
        if angle is None:
            angle = cmath.phase(self.basepoint - self.center)
        return self.center + self.radius * cmath.exp(1j * angle)

    @property
    def length(self) -> float:
        return 2 * abs(self._entry - self.basepoint) + 2 * math.pi * self.radius

    def point(self, t: float) -> complex:
        """Position along the loop at arc-length fraction t in [0, 1]."""
        entry = self._entry
        seg = abs(entry - self.basepoint)
        total = 2 * seg + 2 * math.pi * self.radius
        s = t * total
        if s <= seg:
            frac = s / seg if seg > 0 else 1.0
            return self.basepoint + frac * (entry - self.basepoint)
        if s <= seg + 2 * math.pi * self.radius:
            theta0 = cmath.phase(entry - self.center)
            theta = theta0 + (s - seg) / self.radius
            return self.center + self.radius * cmath.exp(1j * theta)
        frac = (s - seg - 2 * math.pi * self.radius) / seg if seg > 0 else 1.0
        return entry + frac * (self.basepoint - entry)


@dataclass(frozen=True)
class FiberPoint:
    x: complex
    y: complex | None
    label: int


@dataclass(frozen=True)
class MonodromyPair:
    g0: Permutation
    g1: Permutation

    def __iter__(self):
        return iter((self.g0, self.g1))


def _stage_polys(e: MapExpr) -> list[ComplexPoly]:
    return [maps.as_poly(p) for p in e.polynomial_part()]


def _composite_and_derivative(
    stages: Sequence[ComplexPoly],
    derivs: Sequence[ComplexPoly],
    x: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    value = x
    slope = np.ones_like(x)
    for poly, dpoly in zip(reversed(stages), reversed(derivs)):
        slope = dpoly.eval_many(value) * slope
        value = poly.eval_many(value)
    return value, slope


def fiber(e: MapExpr, p: complex, cfg: TrackingConfig = TrackingConfig()) -> tuple[FiberPoint, ...]:
    """The full fiber over a base point, deterministically labeled.

    Points are sorted by (re x, im x) and, on curves, by (im y, re y) to
    split the two sheets; labels count from 1.  Raises NearBranchError when
    the base point sits within 1e-6 of a branch value and CollisionError
    when two fiber points nearly coincide.
    """
    data = maps.branch_values(e)
    for v in data.finite_numeric():
        if abs(p - v) < 1e-6:
            raise NearBranchError(f"base point {p} within 1e-6 of branch value {v}")

    values: list[complex] = [complex(p)]
    for prim in e.polynomial_part():
        poly = maps.as_poly(prim)
        pulled: list[complex] = []
        for v in values:
            shifted = ComplexPoly((poly.coeffs[0] - v,) + poly.coeffs[1:])
            pulled.extend(roots(shifted))
        values = pulled

    if e.has_curve:
        proj = e.proj
        points = []
        for x in values:
            y = cmath.sqrt(proj.curve_rhs(x))
            points.extend([(x, y), (x, -y)])
        points.sort(key=lambda pt: (pt[0].real, pt[0].imag, pt[1].imag, pt[1].real))
        out = tuple(
            FiberPoint(x=x, y=y, label=i) for i, (x, y) in enumerate(points, 1)
        )
    else:
        values.sort(key=lambda x: (x.real, x.imag))
        out = tuple(FiberPoint(x=x, y=None, label=i) for i, x in enumerate(values, 1))

    if len(out) != maps.degree(e):
        raise TrackingError(
            f"fiber has {len(out)} points, expected {maps.degree(e)}")
    coords = _coords(out)
    dist = _pairwise_min(coords)
    if dist <= cfg.match_tol:
        raise CollisionError(f"fiber points within {dist:.3e}")
    for pt in out:
        probe = pt if e.has_curve else pt.x
        if abs(maps.eval_chain(e, probe) - p) >= 1e-8:
            raise TrackingError("fiber point fails to evaluate back to base")
    return out


def _coords(points: Sequence[FiberPoint]) -> tuple[np.ndarray, np.ndarray | None]:
    x = np.array([pt.x for pt in points], dtype=complex)
    if points[0].y is not None:
        y = np.array([pt.y for pt in points], dtype=complex)
    else:
        y = None
    return x, y


def _metric(ax, ay, bx, by) -> np.ndarray:
    d = np.abs(ax[:, None] - bx[None, :])
    if ay is not None:
        d = d + np.abs(ay[:, None] - by[None, :])
    return d


def _pairwise_min(coords) -> float:
    x, y = coords
    d = _metric(x, y, x, y)
    np.fill_diagonal(d, np.inf)
    return float(d.min())


def track_loop(
    e: MapExpr,
    loop: LoopSpec,
    points: Sequence[FiberPoint],
    cfg: TrackingConfig = TrackingConfig(),
) -> Permutation:
    """Continue the fiber around the loop; returns start label -> end label.

    The step is a fraction of the loop, starting at 1/steps and halving
    whenever Newton fails, a point moves more than 0.4 of the gap to its
    nearest neighbor, or y moves more than |y| / 2.  Raises
    StepUnderflowError below min_step, MatchAmbiguousError when the final
    nearest-neighbor match is not clear by separation_factor, and
    NotBijectiveError when two trajectories land on one fiber point.
    """
    stages = _stage_polys(e)
    derivs = [s.derivative() for s in stages]
    proj = e.proj

    x = np.array([pt.x for pt in points], dtype=complex)
    y = np.array([pt.y for pt in points], dtype=complex) if proj else None
    x0, y0 = x.copy(), (y.copy() if y is not None else None)

    t = 0.0
    h = 1.0 / loop.steps
    h_nominal = h
    gamma_t = loop.point(0.0)
    while t < 1.0:
        h = min(h, 1.0 - t)
        target = loop.point(t + h)
        _, slope = _composite_and_derivative(stages, derivs, x)
        x_new = x + (target - gamma_t) / slope

        converged = False
        for _ in range(cfg.max_newton_iters):
            value, slope_new = _composite_and_derivative(stages, derivs, x_new)
            delta = (value - target) / slope_new
            x_new = x_new - delta
            if np.all(np.abs(delta) <= cfg.newton_tol * np.maximum(1.0, np.abs(x_new))):
                converged = True
                break

        ok = converged
        y_new = None
        if ok and proj is not None:
            s = np.sqrt(proj.curve_rhs(x_new))
            y_new = np.where(np.abs(s - y) <= np.abs(s + y), s, -s)
            ok = bool(np.all(np.abs(y_new - y) < 0.5 * np.abs(y)))
        if ok:
            gaps = _metric(x, y, x, y)
            np.fill_diagonal(gaps, np.inf)
            nearest = gaps.min(axis=1)
            moved = np.abs(x_new - x)
            if y_new is not None:
                moved = moved + np.abs(y_new - y)
            ok = bool(np.all(moved < 0.4 * nearest))

        if not ok:
            h /= 2
            if h < cfg.min_step:
                raise StepUnderflowError(f"step underflow at t = {t:.6f}")
            continue

        x = x_new
        if y_new is not None:
            y = y_new
        t += h
        gamma_t = target
        h = min(h * 2, h_nominal)

    d = _metric(x, y, x0, y0)
    order = np.argsort(d, axis=1)
    nearest = order[:, 0]
    best = d[np.arange(len(points)), nearest]
    second = d[np.arange(len(points)), order[:, 1]]
    if np.any(best > cfg.match_tol):
        raise MatchAmbiguousError(
            f"endpoint {best.max():.3e} away from every start point")
    with np.errstate(divide="ignore"):
        ratio = np.where(best > 0, second / np.maximum(best, 1e-300), np.inf)
    if np.any(ratio < cfg.separation_factor):
        raise MatchAmbiguousError(
            f"match separation ratio {ratio.min():.2f} below "
            f"{cfg.separation_factor}")
    images = [0] * len(points)
    for row, pt in enumerate(points):
        images[pt.label - 1] = points[nearest[row]].label
    if sorted(images) != list(range(1, len(points) + 1)):
        raise NotBijectiveError("two trajectories matched one fiber point")
    return Permutation(tuple(images))


def default_radius(center: complex, e: MapExpr, basepoint: complex = BASEPOINT) -> float:
    """Half the least distance from the center to any other finite branch
    value or to the base point (1/4 for a chain branched over {0, 1})."""
    data = maps.branch_values(e)
    distances = [abs(basepoint - center)]
    for v in data.finite_numeric():
        gap = abs(v - center)
        if gap > 1e-9:
            distances.append(gap)
    return 0.5 * min(distances)


def monodromy(
    e: MapExpr,
    cfg: TrackingConfig = TrackingConfig(),
    radius_scale: float = 1.0,
    steps_scale: int = 1,
) -> MonodromyPair:
    """Loop permutations (g0, g1) around 0 and 1 from the base point 1/2.

    The chain must be branched only over {0, 1, infinity}.  The loop
    around infinity is never tracked; inverse(compose(g0, g1)) plays its
    part.
    """
    if not maps.is_belyi(e):
        raise NotBelyiError(f"{maps.format_map_expr(e)} is branched off {{0, 1, inf}}")
    steps = max(1, round(1.0 / cfg.initial_step)) * steps_scale
    base_fiber = fiber(e, BASEPOINT, cfg)
    perms = []
    for center in (0.0, 1.0):
        radius = default_radius(complex(center), e) * radius_scale
        loop = LoopSpec(center=complex(center), radius=radius, steps=steps)
        perms.append(track_loop(e, loop, base_fiber, cfg))
    return MonodromyPair(g0=perms[0], g1=perms[1])


def verify_stability(e: MapExpr, cfg: TrackingConfig = TrackingConfig()) -> bool:
    """Recompute with doubled steps and radius scaled by 0.8; True when
    both permutation pairs agree label for label."""
    base = monodromy(e, cfg)
    probe = monodromy(e, cfg, radius_scale=0.8, steps_scale=2)
    return base.g0 == probe.g0 and base.g1 == probe.g1


def monodromy_json(
    e: MapExpr,
    cfg: TrackingConfig = TrackingConfig(),
    stability: bool | None = None,
) -> dict:
    pair = monodromy(e, cfg)
    ginf = inverse(compose(pair.g0, pair.g1))
    return {
        "degree": maps.degree(e),
        "g0": format_cycles(pair.g0),
        "g1": format_cycles(pair.g1),
        "ginf": format_cycles(ginf),
        "stability": stability,
        "config_echo": cfg.to_json_dict(),
    }
