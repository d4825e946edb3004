"""Kernel tests: scalars, polynomials, roots and partial fractions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from armaforms.errors import NotASquare, RootsNotExpressible
from armaforms.exact import (
    GaussianRational,
    Poly,
    RationalFunction,
    chebyshev_t,
    partial_fractions,
    pole_term,
    poly_cos_to_y,
    poly_from_roots,
    poly_gcd,
    power_term,
    recombine_partial_fractions,
    roots_exact,
    solve_linear_system,
    sqrt_exact,
    sqrt_rational,
    symmetric_laurent_to_cos,
)

F = Fraction
G = GaussianRational


# -- strategies

small_fractions = st.builds(
    F,
    st.integers(min_value=-12, max_value=12),
    st.integers(min_value=1, max_value=10),
)
gaussians = st.builds(G, small_fractions, small_fractions)
nonzero_gaussians = gaussians.filter(lambda z: not z.is_zero)


class TestGaussianRational:
    def test_basic_arithmetic_is_exact(self):
        z = G(F(1, 3), F(1, 2))
        w = G(F(2, 5), F(-3, 7))
        assert z + w == G(F(11, 15), F(1, 14))
        assert z - w == G(F(-1, 15), F(13, 14))
        assert (z * w) / w == z
        assert z * (1 / z) == 1

    def test_division_by_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            G(1) / G(0)

    def test_conjugation_is_involution(self):
        z = G(F(2, 3), F(-5, 4))
        assert z.conjugate().conjugate() == z
        assert (z * z.conjugate()).real_exact() == z.abs2()

    @given(gaussians, gaussians)
    @settings(max_examples=80)
    def test_abs2_is_multiplicative(self, z, w):
        assert (z * w).abs2() == z.abs2() * w.abs2()

    def test_integer_powers(self):
        z = G(F(1, 2), F(-1, 2))
        assert z**0 == 1
        assert z**3 == z * z * z
        assert z**-2 == 1 / (z * z)

    def test_string_forms(self):
        assert str(G(F(4, 5))) == "4/5"
        assert str(G(0, F(3, 2))) == "3/2i"
        assert str(G(F(1, 2), F(-1, 6))) == "1/2-1/6i"


class TestSquareRoots:
    def test_negative_real_gives_imaginary_root(self):
        # discriminant of the quadratic 5*t**2 - 12*t + 8 is -16
        root = sqrt_exact(-16)
        assert root == G(0, 4)
        assert root * root == G(-16)

    def test_zero(self):
        assert sqrt_exact(0) == G(0)

    def test_two_is_not_a_square(self):
        with pytest.raises(NotASquare):
            sqrt_exact(2)

    def test_complex_square_root(self):
        assert sqrt_exact(G(0, 2)) == G(1, 1)
        assert sqrt_exact(G(F(-3, 4), 1)) == G(F(1, 2), 1)

    @given(nonzero_gaussians)
    @settings(max_examples=80)
    def test_round_trip_and_canonical_branch(self, z):
        root = sqrt_exact(z * z)
        assert root * root == z * z
        assert root.re > 0 or (root.re == 0 and root.im >= 0)

    def test_not_a_square_iff_no_root_exists(self):
        # dense small-height sweep: compare against brute-force squaring
        values = [F(n, d) for n in range(-4, 5) for d in (1, 2, 3)]
        candidates = [G(a, b) for a in values for b in values]
        squares = {c * c for c in candidates}
        for a in values:
            for b in values:
                z = G(a, b)
                try:
                    root = sqrt_exact(z)
                except NotASquare:
                    assert z not in squares
                else:
                    assert root * root == z

    def test_sqrt_rational(self):
        assert sqrt_rational(F(9, 4)) == F(3, 2)
        assert sqrt_rational(F(2)) is None
        assert sqrt_rational(F(-1)) is None


class TestPoly:
    def test_trims_trailing_zeros(self):
        assert Poly((1, 2, 0, 0)).degree == 1
        assert Poly((0,)).is_zero

    def test_evaluation_and_arithmetic(self):
        p = Poly((F(-2, 5), F(49, 30), F(-133, 60), 1))
        assert p(F(2, 3)) == 0
        assert p(F(3, 4)) == 0
        assert p(F(4, 5)) == 0
        assert p(0) == G(F(-2, 5))
        q = Poly((1, 1))
        assert (p * q) % q == Poly()
        assert (p * q) // q == p

    def test_divmod(self):
        num = Poly((2, 0, 1))  # y^2 + 2
        den = Poly((-1, 1))    # y - 1
        quot, rem = divmod(num, den)
        assert quot * den + rem == num
        assert rem.degree < den.degree

    def test_shifted_and_scaled(self):
        p = Poly((1, 2, 3))
        a = G(F(1, 2), F(1, 3))
        x = G(F(-2, 7), F(5, 3))
        assert p.shifted(a)(x) == p(x + a)
        assert p.scaled_arg(a)(x) == p(a * x)

    def test_reversed(self):
        p = Poly((1, 2, 3))
        assert p.reversed_() == Poly((3, 2, 1))
        assert p.reversed_(4) == Poly((0, 0, 3, 2, 1))

    def test_gcd(self):
        a = poly_from_roots([F(1, 2), F(1, 2), 2])
        b = poly_from_roots([F(1, 2), 3]) * 7
        assert poly_gcd(a, b) == poly_from_roots([F(1, 2)])


class TestPolyFromRoots:
    def test_three_rational_roots(self):
        p = poly_from_roots([F(2, 3), F(3, 4), F(4, 5)])
        assert p == Poly((F(-2, 5), F(49, 30), F(-133, 60), 1))

    def test_conjugate_pair(self):
        p = poly_from_roots([G(1, -1), G(1, 1)])
        assert p == Poly((2, -2, 1))

    def test_empty_gives_one(self):
        assert poly_from_roots([]) == Poly((1,))


class TestRootsExact:
    def test_conjugate_pair_quadratic(self):
        roots = roots_exact(Poly((5, -4, 1)))
        assert roots == [(G(2, -1), 1), (G(2, 1), 1)]

    def test_triple_root(self):
        p = Poly((F(-1, 8), F(3, 4), F(-3, 2), 1))
        assert roots_exact(p) == [(G(F(1, 2)), 3)]

    def test_linear(self):
        assert roots_exact(Poly((-1, 1))) == [(G(1), 1)]

    def test_zero_and_constant_inputs_rejected(self):
        with pytest.raises(ValueError):
            roots_exact(Poly())
        with pytest.raises(ValueError):
            roots_exact(Poly((3,)))

    def test_irrational_roots_flagged(self):
        with pytest.raises(RootsNotExpressible):
            roots_exact(Poly((-2, 0, 1)))  # y^2 - 2

    def test_inexpressible_cubic(self):
        with pytest.raises(RootsNotExpressible):
            roots_exact(Poly((-2, 0, 0, 1)))  # y^3 - 2

    def test_mixed_height_complex_roots(self):
        roots = [G(F(1, 2), 3), G(F(1, 2), -3), G(F(1, 4), 5), G(F(1, 4), -5),
                 G(F(1, 3), 7), G(F(1, 3), -7)]
        p = poly_from_roots(roots) * F(6, 35)
        assert dict(roots_exact(p)) == {r: 1 for r in roots}

    @given(st.lists(st.builds(G,
                              st.builds(F, st.integers(-8, 8), st.integers(1, 8)),
                              st.builds(F, st.integers(-8, 8), st.integers(1, 8))),
                    min_size=1, max_size=6),
           st.builds(F, st.integers(1, 9), st.integers(1, 9)))
    @settings(max_examples=60, deadline=None)
    def test_recovers_random_linear_factors(self, roots, scale):
        p = poly_from_roots(roots) * scale
        recovered = roots_exact(p)
        expected = {}
        for r in roots:
            expected[r] = expected.get(r, 0) + 1
        assert dict(recovered) == expected
        # exact reconstruction, including leading coefficient
        product = poly_from_roots([r for r, m in recovered for _ in range(m)])
        assert product * p.leading == p


class TestPartialFractions:
    def test_two_simple_poles(self):
        f = RationalFunction(Poly((1,)), Poly((0, -1, 1)))  # 1 / (y (y - 1))
        terms = partial_fractions(f)
        assert terms == [power_term(-1, -1), pole_term(1, 1, 1)]

    def test_simple_pole_spectrum(self):
        # 2016/113 * (8 - 12 c + 5 c^2) / (13325 - 38092 c + 36288 c^2 - 11520 c^3)
        # with c = (y + 1/y)/2
        num_c = Poly((8, -12, 5)) * F(2016, 113)
        den_c = Poly((13325, -38092, 36288, -11520))
        omega_y = RationalFunction(poly_cos_to_y(num_c) * Poly((0, 0, 0, 1)),
                                   poly_cos_to_y(den_c) * Poly((0, 0, 1)))
        terms = partial_fractions(omega_y)
        expected = {
            (G(F(2, 3)), 1): G(F(100, 113)),
            (G(F(3, 4)), 1): G(F(-4797, 904)),
            (G(F(4, 5)), 1): G(F(610, 113)),
            (G(F(5, 4)), 1): G(F(-7625, 904)),
            (G(F(4, 3)), 1): G(F(1066, 113)),
            (G(F(3, 2)), 1): G(F(-225, 113)),
        }
        got = {(t.lam, t.ell): t.c for t in terms if t.kind == "pole"}
        assert got == expected
        assert all(t.kind == "pole" for t in terms)

    def test_triple_pole_spectrum(self):
        # 81/11 * (5 - 12 c + 8 c^2) / (5 - 4 c)^3 with c = (y + 1/y)/2
        num_c = Poly((5, -12, 8)) * F(81, 11)
        den_c = Poly((5, -4)) ** 3
        omega_y = RationalFunction(poly_cos_to_y(num_c) * Poly((0, 0, 0, 1)),
                                   poly_cos_to_y(den_c) * Poly((0, 0, 1)))
        got = {(t.lam, t.ell): t.c for t in partial_fractions(omega_y) if t.kind == "pole"}
        assert got[(G(F(1, 2)), 3)] == G(F(15, 176))
        assert got[(G(F(1, 2)), 2)] == G(F(12, 44))
        assert got[(G(F(1, 2)), 1)] == G(F(31, 44))
        assert got[(G(2), 1)] == G(F(-28, 11))
        assert got[(G(2), 2)] == G(F(-42, 11))
        assert got[(G(2), 3)] == G(F(-60, 11))

    def test_polynomial_and_negative_power_parts(self):
        # (y^4 + 1) / y^2 = y^2 + y^-2
        f = RationalFunction(Poly((1, 0, 0, 0, 1)), Poly((0, 0, 1)))
        assert partial_fractions(f) == [power_term(1, -2), power_term(1, 2)]

    @given(st.lists(st.builds(G,
                              st.builds(F, st.integers(-6, 6), st.integers(1, 5)),
                              st.builds(F, st.integers(-6, 6), st.integers(1, 5))),
                    min_size=1, max_size=4),
           st.lists(st.builds(F, st.integers(-9, 9), st.integers(1, 6)),
                    min_size=1, max_size=5))
    @settings(max_examples=50, deadline=None)
    def test_recombination_identity(self, den_roots, num_coeffs):
        den = poly_from_roots(den_roots)
        num = Poly(num_coeffs)
        if num.is_zero:
            return
        f = RationalFunction(num, den)
        assert recombine_partial_fractions(partial_fractions(f)) == f


class TestLinearSolver:
    def test_small_system(self):
        sol = solve_linear_system([[2, 1], [1, -1]], [F(7, 2), F(1, 2)])
        assert sol == [G(F(4, 3)), G(F(5, 6))]

    def test_singular_raises(self):
        with pytest.raises(ValueError):
            solve_linear_system([[1, 1], [2, 2]], [1, 2])


class TestTrigBasis:
    def test_chebyshev_values(self):
        assert chebyshev_t(0) == Poly((1,))
        assert chebyshev_t(1) == Poly((0, 1))
        assert chebyshev_t(2) == Poly((-1, 0, 2))
        assert chebyshev_t(3) == Poly((0, -3, 0, 4))

    def test_cos_to_y_and_back(self):
        p = Poly((F(5), F(-12), F(8)))
        lifted = poly_cos_to_y(p)
        assert lifted.is_palindromic()
        assert symmetric_laurent_to_cos(lifted) == p

    @given(st.lists(st.builds(F, st.integers(-9, 9), st.integers(1, 6)),
                    min_size=1, max_size=5))
    @settings(max_examples=50)
    def test_round_trip_random(self, coeffs):
        p = Poly(coeffs)
        if p.is_zero:
            return
        assert symmetric_laurent_to_cos(poly_cos_to_y(p)) == p

    def test_substitution_consistency(self):
        # p((y + 1/y)/2) * y^deg == poly_cos_to_y(p) at sample points
        p = Poly((1, -2, 3))
        y = G(F(2, 3), F(1, 5))
        c = (y + 1 / y) / 2
        assert poly_cos_to_y(p)(y) == p(c) * y**p.degree
