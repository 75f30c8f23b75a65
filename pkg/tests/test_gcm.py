from itertools import permutations

import pytest

from kacmoody import (AFFINE, FINITE, INDEFINITE, GCM, bilinear, classify_subdiagram,
                      components, has_affine_subdiagram, symmetrize, validate_gcm)
from kacmoody.errors import (AxiomC1Violated, AxiomC2Violated, AxiomC3Violated, DimensionMismatch,
                             EmptySubset, NotSquare, NotSymmetrisable)
from kacmoody.linalg import nullspace

from conftest import AFFINE as AFF, RANK3


def test_valid_matrices():
    assert validate_gcm([[2, -1], [-1, 2]]).n == 2
    assert validate_gcm(RANK3).rows() == RANK3


@pytest.mark.parametrize("matrix, error", [
    ([[2, -1]], NotSquare),
    ([[2, -1], [-1, 3]], AxiomC1Violated),
    ([[2, 1], [-1, 2]], AxiomC2Violated),
    ([[2, -1], [0, 2]], AxiomC3Violated),
])
def test_axiom_violations(matrix, error):
    with pytest.raises(error):
        validate_gcm(matrix)


def test_c3_error_names_entry():
    with pytest.raises(AxiomC3Violated) as info:
        validate_gcm([[2, -1], [0, 2]])
    assert "1" in str(info.value) and "2" in str(info.value)


def test_symmetric_matrix_is_its_own_form():
    s = symmetrize(GCM(RANK3))
    assert s.d == (1, 1, 1)
    assert [list(r) for r in s.b] == RANK3


def test_symmetrize_rank2_nonsymmetric():
    # solve d_i b_ij = a_ij along the single edge, then normalise min d to 1
    s = symmetrize(GCM([[2, -4], [-1, 2]]))
    assert s.to_dict() == {"d": ["4", "1"], "b": [["1/2", "-1"], ["-1", "2"]]}


def test_not_symmetrisable_cycle():
    with pytest.raises(NotSymmetrisable):
        symmetrize(GCM([[2, -1, -1], [-2, 2, -1], [-1, -2, 2]]))


def test_symmetrisation_identity_and_per_component_normalisation():
    a = GCM([[2, -1, 0, 0], [-3, 2, 0, 0], [0, 0, 2, -2], [0, 0, -1, 2]])
    s = symmetrize(a)
    for i in range(4):
        for j in range(4):
            assert s.d[i] * s.b[i][j] == a[i, j]
            assert s.b[i][j] == s.b[j][i]
    for comp in components(a):
        assert min(s.d[i - 1] for i in comp) == 1


def test_classify_subdiagram_examples():
    assert classify_subdiagram(GCM([[2]])) == [([1], FINITE)]
    assert classify_subdiagram(GCM(AFF)) == [([1, 2], AFFINE)]
    assert classify_subdiagram(GCM([[2, -3], [-3, 2]])) == [([1, 2], INDEFINITE)]


def test_classify_subset_of_rank3():
    a = GCM(RANK3)
    assert classify_subdiagram(a, [1, 2]) == [([1, 2], AFFINE)]
    assert classify_subdiagram(a, [1, 3]) == [([1, 3], FINITE)]
    assert has_affine_subdiagram(a)
    assert not has_affine_subdiagram(GCM([[2, -3], [-3, 2]]))
    with pytest.raises(EmptySubset):
        classify_subdiagram(a, [])


def _permute(rows, p):
    return [[rows[p[i]][p[j]] for j in range(len(p))] for i in range(len(p))]


@pytest.mark.parametrize("rows", [RANK3, [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
                                  [[2, -2, 0], [-1, 2, -1], [0, -1, 2]]])
def test_classification_is_permutation_invariant(rows):
    base = sorted(t for _, t in classify_subdiagram(GCM(rows)))
    for p in permutations(range(3)):
        assert sorted(t for _, t in classify_subdiagram(GCM(_permute(rows, p)))) == base


@pytest.mark.parametrize("rows", [AFF, [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],
                                  [[2, -4], [-1, 2]], [[2, -1], [-1, 2]], [[2, -3], [-3, 2]]])
def test_affine_iff_positive_null_vector(rows):
    # independent oracle: an indecomposable GCM is affine iff it has a positive null vector
    a = GCM(rows)
    null = nullspace(rows)
    positive = len(null) == 1 and (all(c > 0 for c in null[0]) or all(c < 0 for c in null[0]))
    assert (classify_subdiagram(a)[0][1] == AFFINE) == positive


def test_bilinear_examples():
    assert bilinear(symmetrize(GCM(AFF)), (1, 1), (1, 1)) == 0
    s = symmetrize(GCM(RANK3))
    assert bilinear(s, (1, 0, 0), (1, 0, 0)) == 2
    assert bilinear(s, (1, 1, 1), (1, 1, 1)) == -2
    with pytest.raises(DimensionMismatch):
        bilinear(s, (1, 1), (1, 1, 1))


def test_coroot_normalisation_consistency():
    a = GCM([[2, -4], [-1, 2]])
    s = symmetrize(a)
    e = [(1, 0), (0, 1)]
    for i in range(2):
        for j in range(2):
            # <alpha_j, alpha_i^vee> = 2 (alpha_i|alpha_j) / (alpha_i|alpha_i)
            assert 2 * bilinear(s, e[i], e[j]) / bilinear(s, e[i], e[i]) == a[i, j]
