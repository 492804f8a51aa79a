from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from friezekit import coxeter as cx
from friezekit import polygon as P
from friezekit.errors import InvalidDissection, InvalidTriangulation, NotAQuiddity, OutOfRange

import oracles as O


def as_ints(M):
    return tuple(tuple(int(x) for x in row) for row in M.rows)


@pytest.fixture(scope="module")
def heptagon():
    return P.triangulation_of_quiddity(O.PATTERN_QUIDDITY)


@pytest.mark.parametrize("n", range(3, 11))
def test_catalan_count(n):
    Ts = P.enumerate_triangulations(n)
    assert len(Ts) == P.catalan(n - 2)
    assert len(set(Ts)) == len(Ts)
    assert Ts == sorted(Ts, key=lambda T: T.diagonals)


def test_enumeration_bounds():
    with pytest.raises(OutOfRange):
        P.enumerate_triangulations(2)
    with pytest.raises(OutOfRange):
        P.enumerate_triangulations(13)


def test_small_examples():
    assert P.quiddity_of_triangulation(P.Triangulation.make(3)) == (1, 1, 1)
    assert P.quiddity_of_triangulation(P.fan(5)) == (3, 1, 2, 2, 1)
    assert P.triangulation_of_quiddity((3, 1, 2, 2, 1)) == P.fan(5)
    assert P.triangulation_of_quiddity((1, 1, 1)).diagonals == ()
    with pytest.raises(NotAQuiddity):
        P.triangulation_of_quiddity((2, 2, 2, 2))
    with pytest.raises(NotAQuiddity):
        P.triangulation_of_quiddity((1, 0, 1))


def test_invalid_triangulations():
    with pytest.raises(InvalidTriangulation):
        P.Triangulation.make(5, [(1, 3), (2, 4)])
    with pytest.raises(InvalidTriangulation):
        P.Triangulation.make(5, [(1, 3)])
    with pytest.raises(InvalidTriangulation):
        P.Triangulation.make(5, [(1, 2), (1, 3)])
    with pytest.raises(InvalidDissection):
        P.Dissection.make(6, [(1, 4), (2, 5)])


def test_heptagon_roundtrip(heptagon):
    assert P.quiddity_of_triangulation(heptagon) == O.PATTERN_QUIDDITY


@pytest.mark.parametrize("n", range(3, 10))
def test_bijection_roundtrips(n):
    for T in P.enumerate_triangulations(n):
        q = P.quiddity_of_triangulation(T)
        assert P.triangulation_of_quiddity(q) == T


@pytest.mark.parametrize("n", range(4, 10))
def test_three_interpretations_agree_with_the_frieze(n):
    for T in P.enumerate_triangulations(n):
        F = cx.frieze_from_first_row(P.quiddity_of_triangulation(T))
        L = P.ptolemy_lengths(T)
        for i in range(1, n + 1):
            tags = P.vertex_tags(T, i)
            for j in range(i + 1, i + n + 1):
                assert tags[(j - 1) % n] == F.entry(i + 1, j - 1)
            for j in range(i - 1, i + n - 3):
                e = F.entry(i, j)
                assert P.admissible_paths(T, i, j) == e
                assert P.chord_length(L, i - 1, j + 1, n) == e


def test_ptolemy_lengths_are_one_exactly_on_edges(heptagon):
    L = P.ptolemy_lengths(heptagon)
    ones = {e for e, v in L.items() if v == 1}
    assert ones == set(heptagon.edges())
    sq = P.ptolemy_lengths(P.Triangulation.make(4, [(1, 3)]))
    assert sq[(2, 4)] == 2


def test_reference_path_count(heptagon):
    # from v_7 to v_3 means entries e(1, 2)
    assert P.admissible_paths(heptagon, 1, 2) == 7
    assert P.admissible_paths(heptagon, 3, 2) == 1


def test_path_counts_do_not_depend_on_orientation(heptagon):
    n = heptagon.n
    M = P.bci_matrix(heptagon)
    assert all(M.rows[a][b] == M.rows[b][a] for a in range(n) for b in range(n))


def test_bci_examples(heptagon):
    tri = P.bci_matrix(P.Triangulation.make(3))
    assert as_ints(tri) == ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    assert P.matrix_determinant(tri) == 2
    M = P.bci_matrix(heptagon)
    assert as_ints(M) == O.BCI_HEPTAGON
    assert P.matrix_determinant(M) == O.BCI_HEPTAGON_DET == P.bci_determinant_formula(7)


@pytest.mark.parametrize("n", range(3, 10))
def test_bci_determinant_theorem(n):
    for T in P.enumerate_triangulations(n):
        assert P.matrix_determinant(P.bci_matrix(T)) == P.bci_determinant_formula(n)


@pytest.mark.parametrize("n", range(3, 8))
def test_dissection_matrix_specialises(n):
    for T in P.enumerate_triangulations(n):
        assert P.dissection_matrix(T.as_dissection()) == P.bci_matrix(T)


def test_dissection_examples():
    sq = P.Dissection.make(4)
    assert P.admissible_dpaths(sq, 1, 3) == 1
    assert P.admissible_dpaths(sq, 1, 2) == 1
    M = P.dissection_matrix(sq)
    assert as_ints(M) == tuple(tuple(int(i != j) for j in range(4)) for i in range(4))
    assert P.matrix_determinant(M) == -3
    two = P.Dissection.make(6, [(1, 4)])
    assert two.sizes == (4, 4)
    assert P.matrix_determinant(P.dissection_matrix(two)) == -9


@pytest.mark.parametrize("n", range(3, 9))
def test_dissection_determinant_theorem(n):
    Ds = P.enumerate_dissections(n)
    for D in Ds:
        assert P.matrix_determinant(P.dissection_matrix(D)) == P.dissection_determinant_formula(D)


def test_dissection_counts():
    # little Schroeder numbers
    assert [len(P.enumerate_dissections(n)) for n in range(3, 9)] == [1, 3, 11, 45, 197, 903]


def test_reference_dissection_matrices():
    A = O.DISSECTION_A
    assert all(A[i][j] == A[j][i] for i in range(10) for j in range(10))
    assert P.matrix_determinant(P.Matrix.of(A)) == O.DISSECTION_A_DET
    B = [list(r) for r in O.DISSECTION_B]
    asym = [(i, j) for i in range(10) for j in range(i + 1, 10) if B[i][j] != B[j][i]]
    assert asym == list(O.DISSECTION_B_TYPO)
    assert P.matrix_determinant(P.Matrix.of(B)) == O.DISSECTION_B_DET
    for i, j in asym:
        B[i][j] = B[j][i]
    assert P.matrix_determinant(P.Matrix.of(B)) == O.DISSECTION_B_DET


def test_reconstructed_dissections():
    DA = P.Dissection.make(10, O.DISSECTION_A_DIAGONALS)
    DB = P.Dissection.make(10, O.DISSECTION_B_DIAGONALS)
    assert sorted(DA.sizes) == [4, 4, 4, 4]
    assert sorted(DB.sizes) == [3, 3, 4, 4, 4]
    assert as_ints(P.dissection_matrix(DA)) == O.DISSECTION_A
    MB = as_ints(P.dissection_matrix(DB))
    diff = [(i, j) for i in range(10) for j in range(10) if MB[i][j] != O.DISSECTION_B[i][j]]
    assert diff == list(O.DISSECTION_B_TYPO)
    assert P.dissection_determinant_formula(DA) == -81
    assert P.dissection_determinant_formula(DB) == -108


def test_from_cells_roundtrip():
    D = P.Dissection.make(10, O.DISSECTION_B_DIAGONALS)
    assert P.Dissection.from_cells(10, D.cells) == D
    with pytest.raises(InvalidDissection):
        P.Dissection.from_cells(6, [(1, 2, 3), (1, 3, 4, 5)])


@given(st.integers(4, 9).flatmap(lambda n: st.sampled_from(P.enumerate_triangulations(n))))
def test_json_roundtrip(T):
    assert P.Triangulation.from_json(T.to_json()) == T


@given(st.integers(3, 9).flatmap(lambda n: st.sampled_from(P.enumerate_triangulations(n))))
def test_quiddity_friezes_are_positive_integral(T):
    F = cx.frieze_from_first_row(P.quiddity_of_triangulation(T))
    rep = cx.validate(F)
    assert rep.ok and rep.positive_integral
    assert sum(P.quiddity_of_triangulation(T)) == 3 * T.n - 6
