import random
from fractions import Fraction

import mpmath
import pytest

from boxball.core import ExtRational, INF
from boxball.errors import DomainError, PrecisionError
from boxball.puiseux import (
    PuiPoly,
    NumericSettings,
    PuiseuxTrunc,
    facet_roots,
    initial_form,
    newton_polygon,
    puiseux_roots,
    v_p,
    val_at_root,
)
from boxball.puiseux import numbers
from boxball.puiseux import roots as roots_module
from boxball.puiseux.upoly import rational_roots, upoly_squarefree
from boxball.spectral import to_puipoly


def poly(terms):
    return PuiPoly.from_terms(terms)


def numeric_valuations(terms, q_exponent=-20):
    """Valuations of the nonzero roots of a polynomial specialised at q = 10^q_exponent."""
    with mpmath.workdps(120):
        q = mpmath.mpf(10) ** q_exponent
        low = min(n for _, n in terms)
        degree = max(n for _, n in terms) - low
        coeffs = [mpmath.mpf(0)] * (degree + 1)
        for (qe, n), c in terms.items():
            coeffs[n - low] += c * q ** qe
        roots = mpmath.polyroots(coeffs[::-1], maxsteps=500, extraprec=400)
        return sorted(float(mpmath.log10(abs(r)) / q_exponent) for r in roots)


def test_v_p_monomial():
    assert v_p(poly({(1, 1): 1}), 1) == 2


def test_v_p_zero_polynomial():
    assert v_p(PuiPoly([]), 1) == INF


def test_v_p_and_initial_form_with_negative_exponents():
    f = poly({(-1, 1): 1, (0, 2): 2, (-2, 2): 3})
    assert v_p(f, 1) == 0
    assert initial_form(f, 1) == {1: 1, 2: 3}


@pytest.mark.parametrize("terms, p, expected", [
    ({(0, 1): 1}, 0, {1: 1}),
    ({(1, 0): 1, (0, 1): 1}, 1, {0: 1, 1: 1}),
])
def test_initial_form(terms, p, expected):
    assert initial_form(poly(terms), p) == expected


def test_initial_form_of_zero_polynomial():
    with pytest.raises(DomainError):
        initial_form(PuiPoly([]), 0)


def test_newton_polygon_single_slope():
    assert newton_polygon(poly({(2, 0): 1, (0, 1): 1})) == [(2, 1)]


def test_newton_polygon_two_slopes():
    assert newton_polygon(poly({(3, 0): 1, (1, 1): 1, (0, 3): 1})) == [(2, 1), (Fraction(1, 2), 2)]


def test_newton_polygon_monomial():
    with pytest.raises(DomainError, match="no nonzero roots"):
        newton_polygon(poly({(1, 1): 1}))


@pytest.mark.parametrize("terms", [
    {(3, 0): 1, (1, 1): 1, (0, 3): 1},
    {(4, 0): 2, (1, 1): -3, (0, 2): 1, (2, 3): 5},
    {(0, 0): 1, (2, 1): 7, (1, 2): 1},
])
def test_newton_polygon_matches_numeric_roots(terms):
    expected = sorted(float(v) for v, m in newton_polygon(poly(terms)) for _ in range(m))
    found = numeric_valuations(terms)
    assert len(found) == len(expected)
    for a, b in zip(found, expected):
        assert a == pytest.approx(b, rel=0.1, abs=0.1)


def test_newton_polygon_of_lax_entry_matches_numeric_roots(example_matrix):
    terms = {(qd, yd): c for (qd, yd), c in example_matrix.a21.terms.items()}
    slopes = newton_polygon(to_puipoly(example_matrix.a21))
    assert 1 in dict(slopes)
    expected = sorted(float(v) for v, m in slopes for _ in range(m))
    found = numeric_valuations(terms)
    assert len(found) == sum(m for _, m in slopes)
    for a, b in zip(found, expected):
        assert a == pytest.approx(b, rel=0.1, abs=0.1)


def test_puiseux_root_linear():
    (root,) = puiseux_roots(poly({(2, 0): 1, (0, 1): 1}), 2, depth=1)
    assert root.val == 2
    assert complex(root.leading_coefficient) == pytest.approx(-1)


def test_puiseux_root_leading_term_of_cubic():
    (root,) = puiseux_roots(poly({(3, 0): 1, (1, 1): 1, (0, 3): 1}), 2, depth=1)
    assert root.val == 2
    assert complex(root.leading_coefficient) == pytest.approx(-1)


def test_puiseux_roots_of_product():
    # (y - q)(y - 2q) = y² - 3qy + 2q²
    roots = puiseux_roots(poly({(0, 2): 1, (1, 1): -3, (2, 0): 2}), 1, depth=1)
    assert sorted(complex(r.leading_coefficient).real for r in roots) == pytest.approx([1, 2])


def test_puiseux_roots_rejects_non_slopes():
    with pytest.raises(DomainError):
        puiseux_roots(poly({(2, 0): 1, (0, 1): 1}), 1)


def test_val_at_root_fast_path():
    assert val_at_root(poly({(0, 1): 1}), PuiseuxTrunc.monomial(1, 2)) == 2


def test_val_at_root_exact_cancellation():
    assert val_at_root(poly({(0, 1): 1, (1, 0): -1}), PuiseuxTrunc.monomial(1, 1)) == INF


def test_val_at_root_refuses_unresolved_cancellation():
    truncated = PuiseuxTrunc(((Fraction(1), 1),), order=2)
    with pytest.raises(PrecisionError, match="increase depth"):
        val_at_root(poly({(0, 1): 1, (1, 0): -1}), truncated)


def test_val_at_root_resolves_below_truncation():
    # g = y - q - q^3 at y* = q + O(q^5): g(y*) = -q^3 + O(q^5)
    truncated = PuiseuxTrunc(((Fraction(1), 1),), order=5)
    assert val_at_root(poly({(0, 1): 1, (1, 0): -1, (3, 0): -1}), truncated) == 3


def test_val_at_root_on_lax_matrix(example_matrix):
    a11 = to_puipoly(example_matrix.a11)
    values = {val_at_root(a11, r) for r in puiseux_roots(to_puipoly(example_matrix.a21), 1)}
    assert values == {2, 5}


def test_magnitude_is_always_an_mpf():
    assert numbers.magnitude(Fraction(-3, 2)) == mpmath.mpf("1.5")
    assert isinstance(numbers.magnitude(Fraction(1)), mpmath.mpf)
    assert isinstance(numbers.magnitude(mpmath.mpc(3, 4)), mpmath.mpf)


def test_series_mixes_exact_and_floating_coefficients():
    cancelled = PuiseuxTrunc(((0, Fraction(1)), (0, mpmath.mpc(-1)), (1, Fraction(2))))
    assert cancelled.terms[0][0] == 1
    assert cancelled.val == 1
    assert (PuiseuxTrunc.monomial(Fraction(1, 3)) + PuiseuxTrunc.monomial(mpmath.mpc(2))).val == 0


def test_facet_roots_split_repeated_rational_roots():
    # (u - 1)²(u + 2)
    assert facet_roots({0: Fraction(2), 1: Fraction(-3), 3: Fraction(1)}) == [(-2, 1), (1, 2)]


def test_facet_roots_keep_irrational_roots_numeric():
    # (u - 2)(u² - 2)³
    form = {n: Fraction(c) for n, c in enumerate([16, -8, -24, 12, 12, -6, -2, 1]) if c}
    roots = facet_roots(form)
    assert (Fraction(2), 1) in roots
    numeric = sorted(complex(r).real for r, m in roots if m == 3)
    assert numeric == pytest.approx([-2 ** 0.5, 2 ** 0.5])


def test_facet_roots_report_nonconvergence(monkeypatch):
    monkeypatch.setattr(roots_module, "POLYROOTS_STEPS", (1,))
    form = {0: mpmath.mpc(2), 1: mpmath.mpc(-1, 1), 2: mpmath.mpc(3), 3: mpmath.mpc(1)}
    with pytest.raises(PrecisionError, match="did not converge"):
        facet_roots(form)


def test_exact_branches_stay_exact():
    # (y - q)² (y - 2q): both roots rational, the lifting ends exactly
    f = poly({(0, 3): 1, (1, 2): -4, (2, 1): 5, (3, 0): -2})
    branches = puiseux_roots(f, 1)
    assert sorted(b.terms for b in branches) == [((1, 1),), ((1, 1),), ((1, 2),)]
    assert all(b.is_exact for b in branches)


def test_squarefree_decomposition():
    # (u - 1)³ (u + 1)
    a = [Fraction(c) for c in (-1, 2, 0, -2, 1)]
    assert upoly_squarefree(a) == [([1, 1], 1), ([-1, 1], 3)]
    assert rational_roots([Fraction(-6), Fraction(1), Fraction(1)]) == [-3, 2]


def test_valuation_hashes_agree_with_equality():
    assert hash(ExtRational(3)) == hash(3)
    assert hash(ExtRational(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert {ExtRational(2), ExtRational(5)} == {2, 5}
    assert INF != float("inf")


def test_numeric_settings_are_scoped():
    before = numbers.active()
    custom = NumericSettings(precision=80, epsilon_exponent=30)
    with numbers.using(custom):
        assert numbers.active() is custom
        assert mpmath.mp.dps == 80
    assert numbers.active() is before


@pytest.mark.parametrize("p", [0, 1, Fraction(1, 2), 3])
def test_v_p_is_multiplicative(p):
    f = poly({(1, 0): 2, (0, 1): 1, (3, 2): 1})
    g = poly({(0, 0): 1, (2, 1): 3})
    assert v_p(f * g, p) == v_p(f, p) + v_p(g, p)


@pytest.mark.parametrize("p", [0, 1, Fraction(1, 3), 2])
def test_v_p_of_positive_sums(p):
    # no cancellation with positive coefficients: v_p(f + g) = min(v_p(f), v_p(g))
    f = poly({(2, 0): 1, (0, 2): 4})
    g = poly({(1, 1): 2, (3, 0): 1})
    assert v_p(f + g, p) == min(v_p(f, p), v_p(g, p))


@pytest.mark.acceptance
def test_newton_polygon_matches_numeric_roots_for_random_polynomials():
    rng = random.Random(9)
    for _ in range(100):
        terms = {}
        for n in range(rng.randrange(2, 6)):
            if n == 0 or rng.random() < 0.8:
                terms[(rng.randrange(0, 5), n)] = rng.choice([-1, 1])
        if len({n for _, n in terms}) < 2:
            continue
        expected = sorted(float(v) for v, m in newton_polygon(poly(terms)) for _ in range(m))
        found = numeric_valuations(terms, q_exponent=-3)
        assert len(found) == len(expected)
        for a, b in zip(found, expected):
            assert a == pytest.approx(b, rel=0.1, abs=0.1), terms
