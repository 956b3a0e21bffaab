import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dessins.polynomials import (
    ClusteredRootsError,
    ComplexPoly,
    LabeledRoot,
    LabeledRoots,
    f_polynomial,
    fraction_eval_f,
    roots,
    roots_of_f,
    scaled_integer_model,
)


class TestComplexPoly:
    def test_trims_trailing_zeros(self):
        p = ComplexPoly((1, 2, 0, 0))
        assert p.degree == 1

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            ComplexPoly(())

    def test_horner_eval(self):
        p = ComplexPoly((1, -2, 1))  # (x-1)^2
        assert p(1) == 0
        assert p(3) == 4

    def test_eval_many_matches_scalar(self):
        p = ComplexPoly((2, 0, 1, 3))
        xs = np.array([0.5, -1 + 2j, 3j])
        assert np.allclose(p.eval_many(xs), [p(x) for x in xs])

    def test_derivative(self):
        p = ComplexPoly((5, 3, 2))  # 2x^2+3x+5
        assert p.derivative().coeffs == (3, 4)

    def test_deflate_removes_root(self):
        p = ComplexPoly((-6, 11, -6, 1))  # (x-1)(x-2)(x-3)
        q = p.deflate(1.0)
        assert q.degree == 2
        assert abs(q(2)) < 1e-12 and abs(q(3)) < 1e-12


class TestRoots:
    def test_quadratic(self):
        got = roots(ComplexPoly((1, 0, 1)))  # x^2+1
        assert np.allclose(sorted(got, key=lambda z: z.imag), [-1j, 1j])

    def test_cubic_real(self):
        got = roots(ComplexPoly((-6, 11, -6, 1)))
        assert np.allclose(got, [1, 2, 3])

    def test_sorted_by_real_then_imag(self):
        got = roots(ComplexPoly((-6, 11, -6, 1)))
        assert list(got) == sorted(got, key=lambda z: (z.real, z.imag))

    def test_double_root_raises_clustered(self):
        with pytest.raises(ClusteredRootsError):
            roots(ComplexPoly((1, -2, 1)))  # (x-1)^2

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            roots(ComplexPoly((5,)))

    @given(
        st.lists(st.integers(-9, 9), min_size=2, max_size=7).filter(
            lambda c: c[-1] != 0
        )
    )
    @settings(max_examples=150, deadline=None)
    def test_random_integer_polynomials(self, coeffs):
        p = ComplexPoly(tuple(coeffs))
        if p.degree < 1:
            return
        try:
            got = roots(p)
        except ClusteredRootsError:
            return  # repeated roots are a documented refusal, not a bug
        assert len(got) == p.degree
        scale = max(1.0, max(abs(c) for c in coeffs))
        for z in got:
            assert abs(p(z)) < 1e-7 * scale

    def test_angular_offset_changes_start_not_result(self):
        p = ComplexPoly((-1, 0, 0, 1))  # x^3-1
        a = roots(p, angular_offset=0.4)
        b = roots(p, angular_offset=1.3)
        assert np.allclose(a, b, atol=1e-10)


class TestFPolynomial:
    def test_coefficients(self):
        f = f_polynomial()
        assert f.degree == 12
        assert f.coeffs[0] == 1.0
        assert f.coeffs[11] == pytest.approx(-12 / 11)
        assert f.coeffs[12] == 1.0

    def test_exact_values_via_fractions(self):
        assert fraction_eval_f(Fraction(0)) == 1
        assert fraction_eval_f(Fraction(1)) == Fraction(10, 11)
        # x^11 (x - 12/11) vanishes at 12/11 too
        assert fraction_eval_f(Fraction(12, 11)) == 1

    def test_scaled_integer_model(self):
        coeffs = scaled_integer_model()
        assert len(coeffs) == 13
        assert coeffs[0] == 11**12
        assert coeffs[11] == -12
        assert coeffs[12] == 1
        assert all(c == 0 for c in coeffs[1:11])


def _reference_roots_50_digits():
    """Ground truth from mpmath at 50 digits on the exact rational input."""
    with mpmath.workdps(50):
        coeffs = [mpmath.mpf(1), -mpmath.mpf(12) / 11] + [mpmath.mpf(0)] * 10
        coeffs.append(mpmath.mpf(1))
        return [complex(r) for r in mpmath.polyroots(coeffs, maxsteps=200)]


class TestRootsOfF:
    def test_twelve_labeled_roots(self):
        lr = roots_of_f()
        assert len(lr.roots) == 12
        assert [r.label for r in lr.roots] == list(range(1, 13))

    def test_residuals(self):
        assert all(r.residual < 1e-10 for r in roots_of_f().roots)

    def test_sum_and_product(self):
        vals = roots_of_f().values
        assert abs(sum(vals) - Fraction(12, 11)) < 1e-9
        prod = 1
        for v in vals:
            prod *= v
        assert abs(prod - 1) < 1e-9

    def test_labels_ascend_by_argument(self):
        args = [r.argument for r in roots_of_f().roots]
        assert args == sorted(args)
        assert all(0 <= a < 2 * math.pi for a in args)

    def test_min_argument_gap(self):
        gap = roots_of_f().min_argument_gap
        assert gap > 1e-3
        assert gap == pytest.approx(0.333068, abs=1e-5)

    def test_no_real_roots(self):
        assert all(abs(r.value.imag) > 0.1 for r in roots_of_f().roots)

    def test_conjugate_pairing(self):
        lr = roots_of_f()
        for i in range(1, 13):
            assert lr[i] == pytest.approx(lr[13 - i].conjugate(), abs=1e-12)

    def test_against_high_precision_reference(self):
        reference = _reference_roots_50_digits()
        for r in roots_of_f().roots:
            nearest = min(reference, key=lambda z: abs(z - r.value))
            assert abs(nearest - r.value) < 1e-12

    def test_getitem_by_label(self):
        lr = roots_of_f()
        assert lr[1] == lr.roots[0].value
        with pytest.raises(KeyError):
            lr[13]

    def test_offset_override_gives_same_roots(self):
        a = roots_of_f()
        b = roots_of_f(angular_offset=0.9)
        for i in range(1, 13):
            assert a[i] == pytest.approx(b[i], abs=1e-10)

    def test_scaled_roots_match_integer_model(self):
        scaled = sorted(
            (11 * r for r in roots_of_f().values), key=lambda z: (z.real, z.imag)
        )
        big = roots(ComplexPoly(scaled_integer_model()))
        for ours, theirs in zip(scaled, big):
            assert abs(ours - theirs) < 1e-8

    def test_to_json_list_shape(self):
        rows = roots_of_f().to_json_list()
        assert len(rows) == 12
        assert set(rows[0]) == {"label", "re", "im", "residual"}


class TestLabeledRootsValidation:
    def test_rejects_wrong_count(self):
        row = LabeledRoot(label=1, value=1 + 1j, residual=0.0)
        with pytest.raises(ValueError):
            LabeledRoots((row,))

    def test_rejects_bad_residual(self):
        base = roots_of_f().roots
        rows = tuple(
            LabeledRoot(r.label, r.value, 1e-3 if r.label == 5 else r.residual)
            for r in base
        )
        with pytest.raises(ValueError):
            LabeledRoots(rows)
