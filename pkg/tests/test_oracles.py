import pytest

from kacmoody import GCM, PetersonOracle, peterson_mult, symmetrize
from kacmoody import roots as R
from kacmoody.errors import NotSignPure
from kacmoody.serre import serre_dim

from conftest import A2, AFFINE, HYPERBOLIC, RANK3, algebra


def test_peterson_seed_and_affine():
    a = GCM(AFFINE)
    s = symmetrize(a)
    assert peterson_mult(a, s, (1, 0)) == 1
    assert [peterson_mult(a, s, (n, n)) for n in range(1, 5)] == [1, 1, 1, 1]
    assert peterson_mult(a, s, (3, 1)) == 0
    with pytest.raises(NotSignPure):
        peterson_mult(a, s, (1, -1))


@pytest.mark.parametrize("rows", [A2, AFFINE, HYPERBOLIC])
def test_engine_agrees_with_peterson(rows):
    g = algebra(rows, 8)
    oracle = PetersonOracle(g.gcm, g.symm)
    for h in range(1, 9):
        for beta in R.nonnegative_vectors(g.n, h):
            assert g.mult(beta) == oracle.mult(beta), beta


def test_serre_quotient_agrees_at_small_height():
    for rows in (A2, AFFINE, HYPERBOLIC, RANK3):
        g = algebra(rows, 5)
        for h in range(1, 6):
            for beta in R.nonnegative_vectors(g.n, h):
                assert g.mult(beta) == serre_dim(g.gcm, beta), beta


def test_peterson_nonsymmetric():
    a = GCM([[2, -4], [-1, 2]])
    g = algebra(a.rows(), 6)
    oracle = PetersonOracle(a, symmetrize(a))
    for h in range(1, 7):
        for beta in R.nonnegative_vectors(2, h):
            assert g.mult(beta) == oracle.mult(beta)
