"""Complex polynomials, a simultaneous root finder, and mod-p degree patterns.

Coefficients are stored ascending, so ``coeffs[k]`` multiplies ``x**k``.
The root finder is an Aberth-style simultaneous iteration started on a
circle of radius ``1 + max|c_i / c_lead|`` (the Cauchy bound), rotated by a
fixed angular offset so that no starting point sits on a coordinate axis or
aligns with a symmetric root configuration.

The mod-p half of the module computes the multiset of irreducible factor
degrees of a monic integer polynomial over GF(p), which for a squarefree
reduction is the cycle type of a Frobenius element.  Three of those degree
patterns certify that a Galois group on 12 points contains a 12-cycle, an
11-cycle and a transposition, and together with transitivity that forces
the full symmetric group.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterator, Sequence

import cmath
import numpy as np

ANGULAR_OFFSET = 0.4  # radians; fixed rotation of the starting circle

ITERATION_TOL = 1e-12
RESIDUAL_TOL = 1e-10
CLUSTER_TOL = 1e-8
MAX_ITERATIONS = 1000


class RootFindingError(RuntimeError):
    """Base class for numerical root-finding failures."""


class NonConvergedError(RootFindingError):
    pass


class ClusteredRootsError(RootFindingError):
    pass


class EvidenceIncompleteError(RuntimeError):
    """Witness scan exhausted its prime budget; carries the missing classes."""

    def __init__(self, missing: Sequence[str], max_prime: int):
        self.missing = tuple(missing)
        self.max_prime = max_prime
        super().__init__(f"no witness below {max_prime} for: {', '.join(missing)}")


@dataclass(frozen=True)
class ComplexPoly:
    """Polynomial with ascending complex coefficients and nonzero lead."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(complex(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs or all(c == 0 for c in coeffs):
            raise ValueError("zero polynomial")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_many(self, x: np.ndarray) -> np.ndarray:
        acc = np.zeros_like(x, dtype=complex)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "ComplexPoly":
        if self.degree == 0:
            return ComplexPoly((0j,))
        return ComplexPoly(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def deflate(self, root: complex) -> "ComplexPoly":
        """Synthetic division by (x - root); the remainder is discarded."""
        out = [0j] * self.degree
        acc = 0j
        for k in range(self.degree, 0, -1):
            acc = acc * root + self.coeffs[k]
            out[k - 1] = acc
        return ComplexPoly(tuple(out))


def roots(
    poly: ComplexPoly,
    tol: float = ITERATION_TOL,
    residual_tol: float = RESIDUAL_TOL,
    max_iterations: int = MAX_ITERATIONS,
    angular_offset: float = ANGULAR_OFFSET,
) -> tuple[complex, ...]:
    """All complex roots, sorted by (re, im).

    Raises NonConvergedError if the iteration stalls or a residual stays
    above ``residual_tol * max(1, max|c|)``, and ClusteredRootsError if two
    approximations end up closer than 1e-8 (multiple roots are out of scope
    for the simultaneous iteration).
    """
    n = poly.degree
    if n < 1:
        raise ValueError("need degree >= 1")
    lead = poly.coeffs[-1]
    if n == 1:
        return (-poly.coeffs[0] / lead,)

    monic = np.array([c / lead for c in poly.coeffs], dtype=complex)
    radius = 1.0 + max(abs(c) for c in monic[:-1])
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + angular_offset))

    deriv = np.arange(1, n + 1) * monic[1:]
    for _ in range(max_iterations):
        pv = np.zeros_like(z)
        for c in monic[::-1]:
            pv = pv * z + c
        dv = np.zeros_like(z)
        for c in deriv[::-1]:
            dv = dv * z + c
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = np.where(dv != 0, pv / dv, 0.25 + 0.25j)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            repulse = np.sum(1.0 / diff, axis=1)
            w = newton / (1.0 - newton * repulse)
        w = np.where(np.isfinite(w), w, 0.0)
        z = z - w
        if np.all(np.abs(w) <= tol * np.maximum(1.0, np.abs(z))):
            break
    else:
        raise NonConvergedError(f"no convergence in {max_iterations} iterations")

    scale = max(1.0, max(abs(c) for c in monic))
    residuals = np.abs(poly.eval_many(z) / lead)
    if np.any(residuals > residual_tol * scale):
        raise NonConvergedError(f"residual {residuals.max():.3e} above tolerance")
    diff = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(diff, np.inf)
    if diff.min() < CLUSTER_TOL:
        raise ClusteredRootsError(f"root separation {diff.min():.3e}")
    return tuple(sorted((complex(v) for v in z), key=lambda v: (v.real, v.imag)))


# ---------------------------------------------------------------------------
# the degree-12 polynomial behind the curve family


def f_polynomial() -> ComplexPoly:
    """x^12 - (12/11) x^11 + 1, the polynomial named ``f`` in map expressions."""
    return ComplexPoly((1.0,) + (0.0,) * 10 + (-12.0 / 11.0, 1.0))


def scaled_integer_model() -> tuple[int, ...]:
    """Ascending coefficients of x^12 - 12 x^11 + 11^12, the monic model
    whose roots are 11 times the roots of ``f_polynomial()``."""
    return (11**12,) + (0,) * 10 + (-12, 1)


@dataclass(frozen=True)
class LabeledRoot:
    label: int
    value: complex
    residual: float

    @property
    def argument(self) -> float:
        """Argument in [0, 2*pi)."""
        a = cmath.phase(self.value)
        return a + 2 * cmath.pi if a < 0 else a


@dataclass(frozen=True)
class LabeledRoots:
    """The 12 roots of ``f``, labeled 1..12 in order of ascending argument."""

    roots: tuple[LabeledRoot, ...]

    def __post_init__(self) -> None:
        if len(self.roots) != 12:
            raise ValueError("expected exactly 12 roots")
        if [r.label for r in self.roots] != list(range(1, 13)):
            raise ValueError("labels must be 1..12 in order")
        args = [r.argument for r in self.roots]
        if any(b <= a for a, b in zip(args, args[1:])):
            raise ValueError("arguments must be strictly increasing")
        if any(r.residual >= RESIDUAL_TOL for r in self.roots):
            raise ValueError("residual above tolerance")
        values = [r.value for r in self.roots]
        sep = min(
            abs(u - v) for i, u in enumerate(values) for v in values[i + 1:]
        )
        if sep <= 1e-6:
            raise ValueError(f"pairwise separation {sep:.3e} too small")

    def __getitem__(self, label: int) -> complex:
        """Root value by 1-based label."""
        if not 1 <= label <= 12:
            raise KeyError(f"root labels run 1..12, got {label}")
        return self.roots[label - 1].value

    @property
    def values(self) -> tuple[complex, ...]:
        return tuple(r.value for r in self.roots)

    @property
    def min_argument_gap(self) -> float:
        args = [r.argument for r in self.roots]
        gaps = [args[(i + 1) % 12] - args[i] for i in range(12)]
        gaps[-1] += 2 * cmath.pi
        return min(gaps)

    def to_json_list(self) -> list[dict]:
        return [
            {"label": r.label, "re": r.value.real, "im": r.value.imag,
             "residual": r.residual}
            for r in self.roots
        ]


_default_offset = ANGULAR_OFFSET


def default_angular_offset() -> float:
    return _default_offset


def set_default_angular_offset(value: float) -> None:
    """Override the starting-circle rotation used by ``roots_of_f``."""
    global _default_offset
    _default_offset = float(value)


def roots_of_f(angular_offset: float | None = None) -> LabeledRoots:
    """Labeled roots of ``f``, cached; label 1 has the least argument."""
    if angular_offset is None:
        angular_offset = _default_offset
    return _roots_of_f_cached(angular_offset)


@lru_cache(maxsize=None)
def _roots_of_f_cached(angular_offset: float) -> LabeledRoots:
    poly = f_polynomial()
    values = sorted(
        roots(poly, angular_offset=angular_offset),
        key=lambda v: cmath.phase(v) % (2 * cmath.pi),
    )
    return LabeledRoots(tuple(
        LabeledRoot(label=i, value=v, residual=abs(poly(v)))
        for i, v in enumerate(values, 1)
    ))


# ---------------------------------------------------------------------------
# factor degree patterns over GF(p)


@dataclass(frozen=True)
class DegreePattern:
    """Irreducible-factor degrees of a monic polynomial reduced mod p.

    When the reduction is not squarefree the degrees describe its radical
    and cannot be read as a Frobenius cycle type.
    """

    prime: int
    degrees: tuple[int, ...]
    squarefree: bool

    def to_json_dict(self) -> dict:
        return {"prime": self.prime, "pattern": list(self.degrees),
                "squarefree": self.squarefree}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


def _gfp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                out[i + j] = (out[i + j] + ac * bc) % p
    return _gfp_trim(out)


def _gfp_rem(a: list[int], b: list[int], p: int) -> list[int]:
    a = _gfp_trim([c % p for c in a])
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        _gfp_trim(a)
    return a


def _gfp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _gfp_trim([c % p for c in a])
    b = _gfp_trim([c % p for c in b])
    while b:
        a, b = b, _gfp_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _gfp_pow_mod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    acc = [1]
    base = _gfp_rem(base, mod, p)
    while e:
        if e & 1:
            acc = _gfp_rem(_gfp_mul(acc, base, p), mod, p)
        base = _gfp_rem(_gfp_mul(base, base, p), mod, p)
        e >>= 1
    return acc


def factor_degrees_mod_p(coeffs: Sequence[int], p: int) -> DegreePattern:
    """Distinct-degree factorization pattern of a monic integer polynomial.

    ``coeffs`` ascend and the leading coefficient must be 1.  The returned
    degrees are sorted ascending; multiplicity information is discarded
    (each distinct irreducible factor contributes its degree once per
    appearance in the squarefree radical).
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if coeffs[-1] != 1:
        raise ValueError("polynomial must be monic")
    F = _gfp_trim([c % p for c in coeffs])
    n = len(F) - 1
    deriv = _gfp_trim([(k * c) % p for k, c in enumerate(F)][1:])
    g = _gfp_gcd(F, deriv, p) if deriv else list(F)
    squarefree = len(g) == 1
    if not squarefree:
        F = _gfp_radical(F, p)

    degrees: list[int] = []
    work = list(F)
    h = [0, 1]  # x
    d = 0
    while len(work) - 1 > 0:
        d += 1
        if 2 * d > len(work) - 1:
            degrees.append(len(work) - 1)
            break
        h = _gfp_pow_mod(h, p, work, p)
        probe = list(h)
        while len(probe) < 2:
            probe.append(0)
        probe[1] = (probe[1] - 1) % p
        shared = _gfp_gcd(probe, work, p)
        if len(shared) > 1:
            degrees.extend([d] * ((len(shared) - 1) // d))
            work = _gfp_quot(work, shared, p)
            h = _gfp_rem(h, work, p) if len(work) > 1 else [0]
    if squarefree and sum(degrees) != n:
        raise AssertionError("degree pattern does not sum to the degree")
    return DegreePattern(prime=p, degrees=tuple(sorted(degrees)), squarefree=squarefree)


def _gfp_radical(f: list[int], p: int) -> list[int]:
    """Monic product of the distinct irreducible factors of f over GF(p).

    A vanishing derivative means f is a p-th power; over the prime field
    the p-th root is read off the coefficients at indices divisible by p.
    Otherwise f / gcd(f, f') collects each tame factor once and the gcd
    carries whatever remains, handled recursively.
    """
    if len(f) <= 1:
        return [1]
    deriv = _gfp_trim([(k * c) % p for k, c in enumerate(f)][1:])
    if not deriv:
        return _gfp_radical([f[i] for i in range(0, len(f), p)], p)
    shared = _gfp_gcd(f, deriv, p)
    tame = _gfp_quot(f, shared, p)
    rest = _gfp_radical(shared, p)
    extra = _gfp_quot(rest, _gfp_gcd(rest, tame, p), p)
    return _gfp_mul(tame, extra, p)


def _gfp_quot(a: list[int], b: list[int], p: int) -> list[int]:
    a = _gfp_trim([c % p for c in a])
    b = _gfp_trim([c % p for c in b])
    inv = pow(b[-1], p - 2, p)
    out = [0] * (len(a) - len(b) + 1)
    while len(a) >= len(b):
        coef = a[-1] * inv % p
        shift = len(a) - len(b)
        out[shift] = coef
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        _gfp_trim(a)
    return _gfp_trim(out)


@dataclass(frozen=True)
class EvidenceCertificate:
    """Three degree patterns that jointly force the full symmetric group S12.

    A transitive group on 12 points containing an 11-cycle is 2-transitive,
    and a 2-transitive group containing a transposition is the symmetric
    group; pattern {12} supplies transitivity, pattern {1, 11} the 11-cycle,
    and a pattern with exactly one even part equal to 2 supplies an odd
    power that is a transposition.
    """

    witness_transitive: DegreePattern
    witness_11cycle: DegreePattern
    witness_transposition: DegreePattern
    primes_scanned: int

    def to_json_dict(self) -> dict:
        return {
            "witness_transitive": {
                "prime": self.witness_transitive.prime,
                "pattern": list(self.witness_transitive.degrees),
            },
            "witness_11cycle": {
                "prime": self.witness_11cycle.prime,
                "pattern": list(self.witness_11cycle.degrees),
            },
            "witness_transposition": {
                "prime": self.witness_transposition.prime,
                "pattern": list(self.witness_transposition.degrees),
            },
            "primes_scanned": self.primes_scanned,
        }


def _primes_up_to(n: int) -> Iterator[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i:: i] = bytearray(len(sieve[i * i:: i]))
    return (i for i in range(n + 1) if sieve[i])


def s12_evidence(max_prime: int = 2000) -> EvidenceCertificate:
    """Scan primes ascending for the three S12 witnesses of the monic model.

    Stops at the first prime completing the certificate.  Raises
    EvidenceIncompleteError listing the witness classes still missing when
    the scan passes ``max_prime``.
    """
    coeffs = scaled_integer_model()
    transitive = eleven = transposition = None
    scanned = 0
    for p in _primes_up_to(max_prime):
        scanned += 1
        pattern = factor_degrees_mod_p(coeffs, p)
        if not pattern.squarefree:
            continue
        if transitive is None and pattern.degrees == (12,):
            transitive = pattern
        if eleven is None and pattern.degrees == (1, 11):
            eleven = pattern
        evens = [d for d in pattern.degrees if d % 2 == 0]
        if transposition is None and evens == [2]:
            transposition = pattern
        if transitive and eleven and transposition:
            return EvidenceCertificate(
                witness_transitive=transitive,
                witness_11cycle=eleven,
                witness_transposition=transposition,
                primes_scanned=scanned,
            )
    missing = [
        name
        for name, found in [
            ("transitive", transitive),
            ("11cycle", eleven),
            ("transposition", transposition),
        ]
        if found is None
    ]
    raise EvidenceIncompleteError(missing, max_prime)


def fraction_eval_f(x: Fraction) -> Fraction:
    """Exact evaluation of ``f`` at a rational point."""
    return x**12 - Fraction(12, 11) * x**11 + 1
