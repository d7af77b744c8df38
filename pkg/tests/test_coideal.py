import random
from math import comb

import pytest

from spindual.ring import GaussRat, ONE, QQ, qint, Q
from spindual.linalg import (SparseMatrix, algebra_closure_dim,
                             commutant_dimension, random_point,
                             verify_spectrum)
from spindual.coideal import (CoidealRep, check_coideal_relations,
                              residuals_zero, so3_classical_rep,
                              so3_nonclassical_rep, twist_so3, tl_generators,
                              tl_braid_rep, tl_measured_constant, duality_rep,
                              classical_duality_rep)
from spindual.intertwiner import quantum_spectrum_candidates


@pytest.mark.parametrize("N", range(1, 8))
def test_so3_classical(N):
    rep = so3_classical_rep(N)
    assert rep.dim == N + 1
    assert residuals_zero(check_coideal_relations(rep))


def test_so3_classical_B1_spectrum():
    rep = so3_classical_rep(1)
    assert rep.B[0] == SparseMatrix.diagonal([qint((1, 2)), qint((-1, 2))])


@pytest.mark.parametrize("N", [1, 3, 5, 7])
@pytest.mark.parametrize("sign", [1, -1])
def test_so3_nonclassical(N, sign):
    rep = so3_nonclassical_rep(N, sign)
    assert rep.dim == (N + 1) // 2
    assert residuals_zero(check_coideal_relations(rep))


def test_nonclassical_needs_odd_N():
    with pytest.raises(ValueError):
        so3_nonclassical_rep(4)


def test_twist_relations_and_involution():
    for N in (2, 3, 4, 5):
        rep = so3_classical_rep(N)
        tw = twist_so3(rep)
        assert tw.param == -rep.param
        assert residuals_zero(check_coideal_relations(tw))
        assert twist_so3(tw).B[0] == rep.B[0]
        # squares agree: the signs cancel
        assert tw.B[0] * tw.B[0] == rep.B[0] * rep.B[0]


@pytest.mark.parametrize("N,expect", [(2, 1), (3, 2), (4, 1), (5, 2)])
def test_twist_commutant_dimension(N, expect):
    tw = twist_so3(so3_classical_rep(N))
    v0 = random_point(random.Random(17))
    gens = [b.specialize(v0) for b in tw.B]
    assert commutant_dimension(gens, tw.dim) == expect


def test_tl_idempotents_and_far_commutation():
    es = tl_generators(4)
    for e in es:
        assert (e * e - e).is_zero()
    assert es[0] * es[2] == es[2] * es[0]


def test_tl_measured_constant():
    c = tl_measured_constant()
    assert c == (qint(2, QQ) ** 2).inv()    # 1/(q+q^-1)^2
    # and explicitly not the two displayed conventions
    assert c != (QQ ** 2 + QQ ** -2).inv()
    assert c != ((QQ ** 2 + QQ ** -2) ** 2).inv()


@pytest.mark.parametrize("n", [3, 4])
def test_tl_coideal_images(n):
    assert residuals_zero(check_coideal_relations(tl_braid_rep(n)))


def test_tl_closure_is_catalan():
    for n in (2, 3, 4):
        dim = algebra_closure_dim(tl_generators(n), 2 ** n)
        assert dim == comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("N,n", [(3, 3), (3, 4), (5, 3), (4, 3), (4, 4)])
def test_duality_rep_relations(N, n):
    rep = duality_rep(N, n)
    assert residuals_zero(check_coideal_relations(rep))
    assert (rep.F is not None) == (N % 2 == 0)


def test_duality_rep_eigenvalues_in_candidate_set():
    rep = duality_rep(5, 3)
    cands = quantum_spectrum_candidates(5)
    for B in rep.B:
        assert verify_spectrum(B, cands).annihilates


def test_classical_duality_rep():
    for N, n in ((3, 3), (4, 3), (5, 3)):
        rep = classical_duality_rep(N, n)
        assert residuals_zero(check_coideal_relations(rep))


def test_f_conjugation_flips_C():
    # (f (x) 1) C (f (x) 1) = -C is what makes the F-relations work
    from spindual import clifford as cl
    from spindual.intertwiner import build_C_quantum
    k = 2
    f1 = cl.parity(k, k).kron(SparseMatrix.identity(1 << k))
    C = build_C_quantum(4)
    assert f1 * C * f1 == -C


def test_n2_relations_vacuous():
    rep = CoidealRep(2, QQ, [SparseMatrix.identity(2)])
    assert residuals_zero(check_coideal_relations(rep))
