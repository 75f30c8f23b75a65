import pytest

from kacmoody import subalgebra as S
from kacmoody.errors import NotAbelian, NotInNimPlus, NotRealRoot
from kacmoody.verify import HEISENBERG_X, psi_degrees

from conftest import A2, AFFINE, HYPERBOLIC, RANK3, algebra, fixture_path, load_fixture


@pytest.fixture(scope="module")
def heis():
    return S.subalgebra_from_fixture(algebra(RANK3, 6), load_fixture("heisenberg.json"))


@pytest.fixture(scope="module")
def affine_L():
    return S.subalgebra_from_fixture(algebra(AFFINE, 10), load_fixture("affine_L.json"))


@pytest.fixture(scope="module")
def affine_Lhat():
    return S.subalgebra_from_fixture(algebra(AFFINE, 10), str(fixture_path("affine_Lhat.json")))


@pytest.fixture(scope="module")
def sl2():
    return S.subalgebra_from_fixture(algebra(AFFINE, 4), load_fixture("sl2.json"))


# -- closure -------------------------------------------------------------------

def test_single_generator_closure():
    g = algebra(RANK3, 6)
    L = S.span_closure(g, [g.e(1)])
    assert L.profile() == {(1, 0, 0): 1} and L.complete and L.certified


def test_heisenberg_closure(heis):
    g = heis.g
    assert heis.total_dim() == 3 and heis.complete and heis.certified
    assert heis.contains(g.e(1).scale(-24))
    assert heis.contains(g.parse(HEISENBERG_X))


def test_truncated_pattern_closure(affine_L):
    H = affine_L.g.H
    want = {(1, 1): 1}
    want.update({d: 1 for d in psi_degrees(0, H)})
    assert affine_L.profile() == want
    assert affine_L.certified


# -- decomposition and closed sets ---------------------------------------------------

def test_decompose_single_and_heisenberg(heis):
    g = algebra(RANK3, 6)
    dec = S.decompose(S.span_closure(g, [g.e(1)]))
    assert dec.psi == [(1, 0, 0)] and not dec.im_plus and not dec.im_minus and not dec.cartan
    dec = S.decompose(heis)
    assert dec.psi == [(1, 0, 0)]
    assert dec.im_plus == {(2, 1, 1): 1}
    assert dec.im_minus == {(-1, -1, -1): 1}
    assert dec.cartan == [] and dec.dims_add_up


def test_decompose_lhat(affine_Lhat):
    dec = S.decompose(affine_Lhat)
    assert len(dec.cartan) == 1
    assert dec.im_plus == {(1, 1): 1}
    assert dec.psi == sorted(psi_degrees(0, 10), key=sum)


def test_psi_analysis_examples():
    g = algebra(A2, 3)
    p = S.psi_analysis(g, [(1, 0)])
    assert p.psi_s == [] and p.psi_n == [(1, 0)] and p.closed
    p = S.psi_analysis(g, [(1, 0), (-1, 0)])
    assert p.psi_s == [(-1, 0), (1, 0)] and p.closed and len(p.h_s) == 1
    p = S.psi_analysis(g, [(1, 0), (0, 1)])
    assert not p.closed and p.witness == ((0, 1), (1, 0))
    with pytest.raises(NotRealRoot):
        S.psi_analysis(algebra(AFFINE, 4), [(1, 1)])


# -- structure ---------------------------------------------------------------------

def test_structure_heisenberg(heis):
    rep = S.check_locally_finite_structure(heis)
    assert rep.passed is True
    assert all(c.passed is True for c in rep.checks)


def test_structure_lhat_fails_commutation(affine_Lhat):
    rep = S.check_locally_finite_structure(affine_Lhat)
    assert rep.check("psi_commutes_with_im").passed is False
    assert rep.passed is False


def test_structure_vacuous():
    g = algebra(RANK3, 6)
    rep = S.check_locally_finite_structure(S.span_closure(g, [g.e(1)]))
    assert rep.passed is True


# -- series --------------------------------------------------------------------------

def test_abelian_lower_central():
    g = algebra(RANK3, 6)
    rep = S.series(S.span_closure(g, [g.e(1)]), S.LOWER_CENTRAL)
    assert rep.verdict == S.TERMINATES and rep.step == 1


def test_heisenberg_series(heis):
    lc = S.series(heis, S.LOWER_CENTRAL)
    assert (lc.verdict, lc.step) == (S.TERMINATES, 2)
    assert lc.steps[1] == {(1, 0, 0): 1}
    der = S.series(heis, S.DERIVED)
    assert (der.verdict, der.step) == (S.TERMINATES, 2)
    assert S.nilpotency_class(heis) == 2
    assert lc.to_dict()["verdict"] == "TerminatesAtStep(2)"


def test_lower_central_powers_of_L(affine_L):
    lc = S.series(affine_L, S.LOWER_CENTRAL, 5)
    for n in range(1, 5):
        assert lc.steps[n] == {d: 1 for d in psi_degrees(n, 10)}
    assert lc.verdict == S.NONZERO_AT_TRUNCATION


def test_derived_series_of_lhat(affine_Lhat):
    der = S.series(affine_Lhat, S.DERIVED, 5)
    assert der.steps[1] == {d: 1 for d in [(1, 1)] + psi_degrees(1, 10)}
    assert der.steps[2] == {d: 1 for d in psi_degrees(2, 10)}
    assert (der.verdict, der.step) == (S.TERMINATES, 3)
    assert not S.series(affine_Lhat, S.LOWER_CENTRAL, 5).terminates


def test_sl2_derived_series_stabilises(sl2):
    der = S.series(sl2, S.DERIVED)
    assert der.verdict == S.STABILISES and der.step == 1


# -- solvability ---------------------------------------------------------------------

def _consistent(report):
    return report.consistency and all(report.consistency.values())


def test_solvability_heisenberg(heis):
    sv = S.solvability_verdict(heis)
    assert sv.solvable is True and sv.second_derived_nilpotent is True
    assert sv.cartan_condition is True
    assert _consistent(sv)


def test_solvability_lhat(affine_Lhat):
    sv = S.solvability_verdict(affine_Lhat)
    assert sv.solvable is True and sv.second_derived_nilpotent is True
    assert _consistent(sv)


def test_solvability_sl2(sl2):
    sv = S.solvability_verdict(sl2)
    assert sv.solvable is False and sv.second_derived_nilpotent is False
    assert _consistent(sv)


# -- abelian canonical form -------------------------------------------------------------

def test_canonical_form_anisotropic_line():
    g = algebra(RANK3, 6)
    L = S.span_closure(g, [g.parse(HEISENBERG_X)])
    form = S.abelian_canonical_form(g, L, transform=True)
    assert form.word == (1,)
    assert form.anisotropic == [((2, 1, 1), (1, 1, 1))]
    assert form.transformed[0].degree == (1, 1, 1)


def test_canonical_form_isotropic_block():
    g = algebra(AFFINE, 8)
    L = S.span_closure(g, [g.parse("[e1,e2]"), g.basis((2, 2))[0]])
    form = S.abelian_canonical_form(g, L)
    assert len(form.isotropic) == 1 and form.anisotropic == []
    ray, rep, dims = form.isotropic[0]
    assert ray == (1, 1) and dims == {(1, 1): 1, (2, 2): 1}


def test_canonical_form_errors():
    g = algebra(HYPERBOLIC, 8)
    with pytest.raises(NotInNimPlus):
        S.abelian_canonical_form(g, S.span_closure(g, [g.e(1)]))
    L = S.span_closure(g, [g.parse("[e1,e2]"), g.basis((2, 2))[0]], max_dim=50)
    with pytest.raises((NotAbelian, NotInNimPlus)):
        S.abelian_canonical_form(g, L)
    # an explicit non-closed space: the two lines with negative pairing do not commute
    space = S.GradedSpace(g)
    space.add_vector((1, 1), (1,))
    space.add_vector((2, 2), (1,))
    with pytest.raises(NotAbelian):
        S.abelian_canonical_form(g, space)
