import json
import random
from fractions import Fraction

import pytest

from boxball.curve import (
    CurvePointRef,
    GAMMA_MINUS,
    GAMMA_PLUS,
    ORIGIN,
    SIGMA,
    THETA,
    abel_jacobi,
    assign_points,
    build_curve,
    candidate_assignments,
    canonical_path,
    corner_locus,
    curve_document,
    curve_json,
    curve_locus,
    curve_svg,
    cycle_path,
    gram_matrix,
    locate,
    mu_omega,
    pairing,
    period_matrix,
    reverse_path,
    riemann_constant,
)
from boxball.core import exact_cholesky, reduce_mod_lattice, vec_scale
from boxball.errors import DomainError


def random_content(rng):
    solitons = sorted(rng.randrange(1, 5) for _ in range(rng.randrange(1, 5)))
    L = 2 * sum(solitons) + rng.randrange(1, 12)
    return solitons, L


def test_build_curve_segments(example_curve):
    assert example_curve.A == (2, 3)
    assert example_curve.theta(1, 0) == (2, 1)
    assert example_curve.theta(1, example_curve.theta_length(1)) == (8, 1)
    assert example_curve.theta(2, 0) == (3, 2)
    assert example_curve.theta(2, example_curve.theta_length(2)) == (7, 2)


def test_theta_edges_meet_gamma_branches(example_curve):
    for i, s in enumerate(example_curve.solitons, start=1):
        assert example_curve.theta(i, 0) == example_curve.gamma_plus(s)
        assert example_curve.theta(i, example_curve.theta_length(i)) == example_curve.gamma_minus(s)


def test_graph_has_cycle_rank_genus():
    rng = random.Random(1)
    for _ in range(20):
        solitons, L = random_content(rng)
        assert build_curve(solitons, L).cycle_rank() == len(solitons)


def test_build_curve_single_soliton():
    curve = build_curve([1], 4)
    assert curve.genus == 1
    assert period_matrix(curve) == ((4,),)


def test_build_curve_genus_zero():
    curve = build_curve([], 7)
    assert curve.genus == 0
    with pytest.raises(DomainError):
        period_matrix(curve)


def test_build_curve_rejects_dense_content():
    with pytest.raises(DomainError, match="system size too small"):
        build_curve([1, 2], 6)


def test_pairing_of_cycles(example_curve):
    b1, b2 = cycle_path(example_curve, 1), cycle_path(example_curve, 2)
    assert pairing(b1, b1, example_curve) == 8
    assert pairing(b1, b2, example_curve) == 2
    assert pairing(b1, reverse_path(b1), example_curve) == -8


@pytest.mark.parametrize("solitons, L, expected", [
    ([1, 2], 10, ((8, 2), (2, 8))),
    ([1], 4, ((4,),)),
    ([2, 2], 12, ((8, 4), (4, 8))),
])
def test_period_matrix(solitons, L, expected):
    assert period_matrix(build_curve(solitons, L)) == expected


def test_period_matrix_matches_pairing_and_is_positive_definite():
    rng = random.Random(2)
    for _ in range(30):
        solitons, L = random_content(rng)
        curve = build_curve(solitons, L)
        B = period_matrix(curve)
        assert B == gram_matrix(curve)
        exact_cholesky(B)


def test_abel_jacobi_examples(example_curve):
    assert abel_jacobi(CurvePointRef(THETA, 1, Fraction(3)), example_curve) == (4, 1)
    assert abel_jacobi(CurvePointRef(GAMMA_PLUS, None, Fraction(1)), example_curve) == (1, 1)
    assert abel_jacobi(CurvePointRef(ORIGIN, None, Fraction(0)), example_curve) == (0, 0)


def test_abel_jacobi_strict_branch_cut(example_curve):
    q1 = example_curve.half_point(1)
    assert q1 == CurvePointRef(THETA, 1, Fraction(3))
    with pytest.raises(DomainError, match="branch cut"):
        abel_jacobi(q1, example_curve, strict=True)


def test_abel_jacobi_closed_forms():
    rng = random.Random(4)
    for _ in range(20):
        solitons, L = random_content(rng)
        curve = build_curve(solitons, L)
        g = curve.genus
        for t in (Fraction(1, 2), Fraction(1), Fraction(solitons[-1])):
            expected = tuple(min(s, t) for s in solitons)
            assert abel_jacobi(CurvePointRef(GAMMA_PLUS, None, t), curve) == expected
            assert abel_jacobi(CurvePointRef(GAMMA_MINUS, None, t), curve) == tuple(-x for x in expected)
        for i in range(1, g + 1):
            s_i = solitons[i - 1]
            cut = Fraction(L, 2) - curve.A[i - 1]
            for t in (cut / 3, cut / 2, cut):
                expected = tuple(min(s_i, s) + (t if j == i - 1 else 0) for j, s in enumerate(solitons))
                assert abel_jacobi(CurvePointRef(THETA, i, t), curve) == expected
            t = cut + (curve.theta_length(i) - cut) / 2
            expected = tuple(
                -min(s_i, s) + ((t - curve.theta_length(i)) if j == i - 1 else 0) for j, s in enumerate(solitons)
            )
            assert abel_jacobi(CurvePointRef(THETA, i, t), curve) == expected


def test_abel_jacobi_on_rays(example_curve):
    assert abel_jacobi(CurvePointRef(SIGMA, 1, Fraction(5)), example_curve) == (0, 0)
    assert abel_jacobi(CurvePointRef(SIGMA, 3, Fraction(2)), example_curve) == (1, 2)
    assert abel_jacobi(CurvePointRef(SIGMA, 4, Fraction(2)), example_curve) == (-1, -2)


def test_canonical_paths_avoid_the_cut(example_curve):
    path = canonical_path(CurvePointRef(THETA, 1, Fraction(5)), example_curve)
    assert path[0].segment == GAMMA_MINUS


@pytest.mark.parametrize("solitons, L, mu, omega", [
    ([1, 2], 10, (1, 1), (-1, -2)),
    ([1], 4, (1,), (-1,)),
])
def test_mu_omega(solitons, L, mu, omega):
    assert mu_omega(build_curve(solitons, L)) == (mu, omega)


def test_periodic_boundary_condition():
    rng = random.Random(6)
    for _ in range(20):
        solitons, L = random_content(rng)
        curve = build_curve(solitons, L)
        mu, _ = mu_omega(curve)
        reduced, _ = reduce_mod_lattice(vec_scale(L, mu), period_matrix(curve))
        assert reduced == tuple(0 for _ in solitons)


def test_riemann_constant():
    assert riemann_constant(build_curve([1, 2], 10)) == (5, 5)
    assert riemann_constant(build_curve([1], 4)) == (2,)
    assert riemann_constant(build_curve([1], 5)) == (Fraction(5, 2),)


def test_locate_examples(example_curve):
    assert locate(2, 1, example_curve)[0] == CurvePointRef(GAMMA_PLUS, None, Fraction(1))
    assert locate(5, 1, example_curve) == [CurvePointRef(THETA, 1, Fraction(3))]
    assert locate(0, 0, example_curve) == [CurvePointRef(ORIGIN, None, Fraction(0))]
    assert locate(-5, -1, example_curve) == [CurvePointRef(SIGMA, 1, Fraction(1, 2))]
    assert locate(9, 1, example_curve)[0].segment == SIGMA


def test_locate_off_curve(example_curve):
    with pytest.raises(DomainError, match="distance 1"):
        locate(1, 1, example_curve)


def test_locate_equal_solitons():
    curve = build_curve([2, 2], 12)
    found = locate(6, 2, curve)
    assert {(r.segment, r.index) for r in found} == {(THETA, 1), (THETA, 2)}


def test_locate_round_trips_segment_points():
    curve = build_curve([1, 2, 2], 14)
    for ref in (
        CurvePointRef(GAMMA_PLUS, None, Fraction(3, 2)),
        CurvePointRef(GAMMA_MINUS, None, Fraction(1, 3)),
        CurvePointRef(THETA, 1, Fraction(2)),
        CurvePointRef(SIGMA, 2, Fraction(4)),
        CurvePointRef(SIGMA, 4, Fraction(1)),
    ):
        assert ref in locate(*curve.point(ref), curve)


def test_corner_locus_tropical_line():
    locus = corner_locus([(0, (1, 0)), (0, (0, 1)), (0, (0, 0))])
    assert locus.vertices == {(0, 0)}
    assert {e.direction for e in locus.edges} == {(-1, -1), (0, 1), (1, 0)}
    assert all(e.is_ray for e in locus.edges)


def test_corner_locus_single_monomial():
    locus = corner_locus([(0, (2, 0))])
    assert not locus.vertices and not locus.edges


def test_corner_locus_matches_curve_for_random_states():
    from boxball.automata import soliton_content
    from boxball.spectral import build_matrix, char_poly

    from test_automata import random_state

    rng = random.Random(8)
    for _ in range(15):
        state = random_state(rng, rng.randrange(3, 18))
        content = soliton_content(state)
        if not content:
            continue
        curve = build_curve(content, state.L)
        found = corner_locus(char_poly(build_matrix(state)))
        assert found.edge_keys() == curve_locus(curve).edge_keys()
        assert found.vertices == curve_locus(curve).vertices


def test_theta_edge_weights_count_equal_solitons():
    locus = curve_locus(build_curve([2, 2, 3], 20))
    weights = {e.start[1]: e.weight for e in locus.edges if not e.is_ray and e.direction == (1, 0)}
    assert weights == {2: 2, 3: 1}


def test_curve_document(example_curve):
    doc = json.loads(curve_json(example_curve))
    assert doc["B"] == [["8/1", "2/1"], ["2/1", "8/1"]]
    assert doc["mu"] == ["1/1", "1/1"]
    assert doc["omega"] == ["-1/1", "-2/1"]
    assert doc["kappa"] == ["5/1", "5/1"]
    assert ["0/1", "0/1"] in doc["vertices"]
    assert set(doc) == set(curve_document(example_curve))


def test_curve_svg(example_curve):
    svg = curve_svg(example_curve)
    assert svg.lstrip().startswith("<?xml")
    assert "<svg" in svg


def test_curve_locus_of_vacuum():
    locus = curve_locus(build_curve([], 1))
    origin, corner = (0, 0), (1, 1)
    assert locus.edge_keys() == {
        ("segment", origin, corner),
        ("ray", origin, (0, 1)),
        ("ray", origin, (-1, -2)),
        ("ray", corner, (0, 1)),
        ("ray", corner, (1, 0)),
    }
    assert locus.vertices == {origin, corner}


@pytest.mark.parametrize("L", [1, 2, 3])
def test_curve_locus_of_vacuum_matches_corner_locus(L):
    from boxball.spectral import build_matrix, char_poly

    found = corner_locus(char_poly(build_matrix("." * L)))
    expected = curve_locus(build_curve([], L))
    assert found.edge_keys() == expected.edge_keys()
    assert found.vertices == expected.vertices


def test_candidate_assignments_of_equal_solitons():
    from boxball.spectral import DivisorPoint

    curve = build_curve([1, 1, 1], 13)
    points = [DivisorPoint(4, 1), DivisorPoint(5, 1), DivisorPoint(7, 1)]
    candidates = list(candidate_assignments(points, curve))
    # set partitions of three points: 1 + 3 + 1
    assert len(candidates) == 5
    assert [(r.index, r.t) for r in candidates[0]] == [(1, 1), (2, 2), (3, 4)]
    assert assign_points(points, curve) == candidates[0]
    assert all(r.segment == THETA for refs in candidates for r in refs)
    assert len({tuple(r.index for r in refs) for refs in candidates}) == 5


def test_candidate_assignments_without_shared_edges(example_curve):
    from boxball.spectral import DivisorPoint

    points = [DivisorPoint(2, 1), DivisorPoint(5, 1)]
    assert list(candidate_assignments(points, example_curve)) == [
        [CurvePointRef(GAMMA_PLUS, None, Fraction(1)), CurvePointRef(THETA, 1, Fraction(3))],
    ]


def test_candidate_assignments_fewer_edges_than_points():
    from boxball.spectral import DivisorPoint

    curve = build_curve([1, 1, 3], 20)
    points = [DivisorPoint(5, 1), DivisorPoint(6, 1), DivisorPoint(9, 1)]
    candidates = list(candidate_assignments(points, curve))
    assert len(candidates) == 4
    assert [r.index for r in candidates[0]] == [1, 2, 1]


@pytest.mark.acceptance
def test_closed_forms_match_gram_matrix_and_corner_locus():
    from boxball.automata import PBBSState, soliton_content
    from boxball.spectral import build_matrix, char_poly

    rng = random.Random(9)
    for _ in range(50):
        solitons, L = random_content(rng)
        cells = "".join("1" * s + "." * s for s in solitons)
        state = PBBSState.parse(cells + "." * (L - len(cells)))
        assert sorted(soliton_content(state)) == solitons
        curve = build_curve(solitons, L)
        assert period_matrix(curve) == gram_matrix(curve)
        expected = curve_locus(curve)
        found = corner_locus(char_poly(build_matrix(state)))
        assert found.edge_keys() == expected.edge_keys(), f"{state}"
        assert found.vertices == expected.vertices
