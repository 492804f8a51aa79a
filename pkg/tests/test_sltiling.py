import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from friezekit import coxeter as cx
from friezekit import sltiling as sl
from friezekit.errors import InvalidInput, NotCoprime, NotSuperperiodic, PreconditionFailed, RankOutOfRange

import oracles as O

SHAPES = [(1, 2), (2, 2), (2, 3), (3, 2), (1, 4), (2, 1), (3, 1), (3, 3)]


@st.composite
def friezes(draw, shapes=SHAPES):
    k, w = draw(st.sampled_from(shapes))
    return sl.random_frieze(k, w, random.Random(draw(st.integers(0, 10 ** 6))))


@pytest.fixture(scope="module")
def pattern():
    return sl.from_coxeter(cx.frieze_from_first_row(O.PATTERN_QUIDDITY))


def test_boundary_and_shift(pattern):
    n = pattern.n
    for i in range(-n, n):
        assert pattern(i, i - 1) == 1 and pattern(i, i + pattern.w) == 1
        assert pattern(i, i - 2) == 0
        for j in range(i - 3, i + n):
            assert pattern(i + n, j + n) == pattern(i, j)


def test_k1_extension_matches_coxeter(pattern):
    F = cx.frieze_from_first_row(O.PATTERN_QUIDDITY)
    for i in range(-7, 7):
        for j in range(i - 1, i + 12):
            assert pattern(i, j) == F.entry(i, j)
    # one period further along a row the pattern comes back negated
    assert pattern(1, 1 + 7) == -4 and pattern(1, 1 + 8) == -pattern(1, 2)


@settings(max_examples=30)
@given(friezes())
def test_random_friezes_are_valid_and_periodic(F):
    assert sl.validate(F).ok
    assert sl.is_periodic(F)


def test_validate_detects_perturbation():
    F = sl.random_frieze(2, 2, random.Random(1))
    band = [list(r) for r in F.band]
    band[1][0] += 1
    rep = sl.validate(sl.SLFrieze.make(2, band))
    assert not rep.unimodular
    assert sl.validate(F).as_dict() == {"unit_minors": True, "tame": True}


def test_shape_checks():
    with pytest.raises(InvalidInput):
        sl.SLFrieze(2, 2, ((1, 1),))
    with pytest.raises(InvalidInput):
        sl.SLFrieze.from_json({"kind": "coxeter"})


def test_derived_arrays(pattern):
    F = sl.random_frieze(2, 3, random.Random(4))
    d1 = sl.derived_array(F, 1)
    assert all(d1(i, j) == F(i, j) for i in range(7) for j in range(i - 3, i + 7))
    with pytest.raises(RankOutOfRange):
        sl.derived_array(F, 4)
    with pytest.raises(RankOutOfRange):
        sl.derived_array(F, 0)
    assert sl.projective_dual(pattern) == pattern


@settings(max_examples=25)
@given(friezes())
def test_duality_relations(F):
    assert sl.check_duality(F)
    assert sl.check_double_dual(F)
    assert sl.validate(sl.projective_dual(F)).ok


@settings(max_examples=25)
@given(friezes())
def test_equation_properties(F):
    E = sl.equation_of(F)
    assert all(E.a(i, 1) == F(i, i) for i in range(F.n))
    assert sl.coefficient_identity(F)
    assert sl.equation_residual_ok(F)
    assert sl.is_superperiodic(E)
    assert sl.frieze_of_equation(E) == F
    assert sl.dual_equation_ok(F)


def test_k1_equation_matches_coxeter(pattern):
    E = sl.equation_of(pattern)
    C = cx.equation_of(cx.frieze_from_first_row(O.PATTERN_QUIDDITY))
    assert all(E.a(i, 1) == C.a(i) for i in range(-7, 14))


def test_constant_equations():
    zero = sl.DifferenceEqK.make(2, [[0, 0]] * 6)
    # V_i = V_{i-3}: period 3, and 6 = 2 * 3 gives V_{i+6} = V_i as required for k = 2
    assert sl.is_superperiodic(zero)
    assert not sl.is_superperiodic(sl.DifferenceEqK.make(2, [[0, 0]] * 5))
    with pytest.raises(NotSuperperiodic):
        sl.frieze_of_equation(sl.DifferenceEqK.make(2, [[1, 1]] * 7))


@settings(max_examples=25)
@given(friezes())
def test_gale_duality(F):
    G = sl.gale_dual(F)
    assert (G.k, G.w) == (F.w, F.k)
    assert sl.validate(G).ok
    assert sl.gale_triangle_ok(F)
    assert sl.gale_plane_ok(F)


@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_gale_dual_of_coxeter_frieze(m, seed):
    rng = random.Random(seed)
    F = cx.frieze_from_diagonal([Fraction(rng.randint(1, 6), rng.randint(1, 3)) for _ in range(m)])
    G = sl.gale_dual(sl.from_coxeter(F))
    assert (G.k, G.w) == (m, 1)
    assert sl.validate(G).ok


def test_width_one_count_equality():
    assert len(sl.census(3, 1, 20)) == 14 == len(sl.census(1, 3, 20))


def test_tbox_k1(pattern):
    box = sl.tsystem_box(pattern)
    assert box.boundary_ok()
    assert box.max_abs_residual() == 0
    assert {a for a, _, _ in box.values} == {0, 1, 2}


@settings(max_examples=15)
@given(friezes())
def test_tbox_residuals_vanish(F):
    box = sl.tsystem_box(F)
    assert box.boundary_ok()
    assert all(r == 0 for _, r in box.residuals())


def test_grassmann(pattern):
    G = sl.grassmann_matrix(pattern)
    assert len(G) == 2 and len(G[0]) == 7
    assert G[0][:2] == [1, 4]
    assert sl.grassmann_minors(pattern) == [1] * 7


@settings(max_examples=15)
@given(friezes())
def test_grassmann_minors_random(F):
    G = sl.grassmann_matrix(F)
    lead = [[G[r][c] for c in range(F.k + 1)] for r in range(F.k + 1)]
    assert all(lead[r][c] == (1 if r == c else 0) for r in range(F.k + 1) for c in range(r + 1))
    assert all(x == 1 for x in sl.grassmann_minors(F))


def test_operator_commutation():
    rng = random.Random(11)
    cox = sl.equation_of(sl.from_coxeter(cx.frieze_from_first_row((1, 2, 2, 1, 3))))
    assert sl.operators_commute(cox)
    E = sl.equation_of(sl.random_frieze(2, 3, rng))
    assert sl.operators_commute(E)
    with pytest.raises(NotCoprime):
        sl.operators_commute(sl.equation_of(sl.random_frieze(2, 2, rng)))


@settings(max_examples=10)
@given(friezes([(1, 2), (1, 4), (2, 3), (3, 2), (3, 4)]))
def test_operator_commutation_random(F):
    assert sl.operators_commute(sl.equation_of(F))


def test_block_example():
    B = sl.antiperiodic_sl2_block(O.BLOCK_Q, O.BLOCK_QP, O.BLOCK_M)
    assert tuple(map(tuple, B.block)) == O.BLOCK
    assert B.entry(1, 0) == 7
    assert B.minors_ok()
    data = B.to_json()
    assert data == {"kind": "sl2_block", "rows": 4, "cols": 5, "block": [list(r) for r in O.BLOCK]}


def test_block_preconditions():
    with pytest.raises(PreconditionFailed):
        sl.antiperiodic_sl2_block(O.BLOCK_Q, O.BLOCK_QP, ((2, 5), (7, 17)))
    with pytest.raises(PreconditionFailed):
        sl.antiperiodic_sl2_block((3, 1, 2, 2, 1), O.BLOCK_QP, O.BLOCK_M)
    with pytest.raises(PreconditionFailed):
        sl.antiperiodic_sl2_block(O.BLOCK_Q, (4, 1, 2, 1, 2, 1, 3)[:4], O.BLOCK_M)


def test_small_sl3_censuses():
    # the constant band of ones is not an SL_3 frieze: its top-left 3-minor vanishes
    ones = sl.SLFrieze.make(2, [[1, 1]] * 6)
    assert not sl.validate(ones).unimodular
    assert [len(sl.census(2, 2, b)) for b in (1, 2, 3, 4)] == [0, 1, 1, 7]


def test_census_results_are_valid():
    for F in sl.census(2, 2, 4):
        assert sl.validate(F).ok and sl.is_periodic(F)
        assert all(1 <= x <= 4 for r in F.band for x in r)


def test_census_k1_is_catalan():
    assert [len(sl.census(1, w, 15)) for w in range(1, 5)] == list(O.CATALAN_WIDTHS[1:5])


def test_json_and_csv():
    F = sl.random_frieze(2, 2, random.Random(3))
    assert sl.SLFrieze.from_json(F.to_json()) == F
    E = sl.equation_of(F)
    assert E.to_json()["kind"] == "sl_equation"
    text = sl.to_csv([["i\\j", 0, 1], [0, Fraction(1, 2), 3]])
    assert text == "i\\j,0,1\n0,1/2,3\n"
