import random

import pytest

from conftest import ALL_IDS, joint_centralizer, pipeline
from hermatlas.cartan import (AlgElement, Subspace, base_point, bracket, centralizer, complex_structure,
                              j0_commutator_sign, trace_form)
from hermatlas.covers import GroupAction, load_explicit_action, symplectic_form
from hermatlas.cyclotomic import CycMatrix, CycNum, imag_unit, permutation_matrix
from hermatlas.decomp import is_iota_stable
from hermatlas.errors import NotBlockDiagonalError, WrongPartError


def _random_element(space: Subspace, rng: random.Random) -> AlgElement:
    return space.combine([CycNum.from_rational(space.conductor, rng.randint(-5, 5)) for _ in space.basis])


def test_trivial_genus_one_base_point():
    a = load_explicit_action([CycMatrix.identity(1, 4)])
    bp = base_point(a)
    i = imag_unit(4)
    assert bp.J0 == CycMatrix.diag([i, -i], 4)
    zk, zp = centralizer(a)
    assert (zk.real_dim, zp.real_dim) == (1, 2)


def test_generator_not_commuting_with_j0():
    n = 4
    i = imag_unit(n)
    zero = CycNum.from_rational(n, 0)
    # preserves Q but exchanges the holomorphic and antiholomorphic halves
    A = CycMatrix([[zero, i], [i, zero]], n)
    assert A.T @ symplectic_form(1, n) @ A == symplectic_form(1, n)
    bad = GroupAction(1, (CycMatrix.identity(1, n),), (A,))
    with pytest.raises(NotBlockDiagonalError):
        base_point(bad)


def test_family_8_shape():
    zp = pipeline("(8)").zp
    assert zp.complex_dim == 2
    for b in zp.basis:
        D = b.D
        assert D[0, 0].is_zero() and D[0, 1].is_zero() and D[1, 1].is_zero() and D[2, 2].is_zero()


def test_family_2_all_symmetric():
    assert pipeline("(2)").zp.complex_dim == 3


def test_family_27_diagonal():
    zp = pipeline("(27)").zp
    assert zp.complex_dim == 3
    assert all(b.D.is_diagonal() for b in zp.basis)


def test_family_14_dimension():
    assert pipeline("(14)").zp.complex_dim == 2


def test_complex_structure_examples():
    n = 12
    x = AlgElement.from_p(CycMatrix.identity(3, n))
    assert complex_structure(x).D == CycMatrix.identity(3, n).scale(-imag_unit(n))
    with pytest.raises(WrongPartError):
        complex_structure(pipeline("(10)").zk.basis[0])
    zp = pipeline("(10)").zp
    rng = random.Random(0)
    for _ in range(20):
        v = _random_element(zp, rng)
        assert complex_structure(complex_structure(v)) == -v
        assert zp.contains(complex_structure(v))
    w = Subspace.span([pipeline("(27)").zp.basis[0]], 3, pipeline("(27)").zp.conductor, part="p")
    line = Subspace.span([w.basis[0], complex_structure(w.basis[0])], 3, w.conductor, part="p")
    assert line.complex_dim == 1 and is_iota_stable(line)


@pytest.mark.parametrize("fid", ALL_IDS)
def test_direct_sum_law(fid):
    p = pipeline(fid)
    zg = joint_centralizer(fid)
    assert zg.real_dim == p.zk.real_dim + p.zp.real_dim
    for u in zg.basis:
        assert p.zk.contains(u.k_part()) and p.zp.contains(u.p_part())


@pytest.mark.parametrize("fid", ALL_IDS)
def test_j0_commutation_and_iota_stability(fid):
    p = pipeline(fid)
    assert all(j0_commutator_sign(x, p.bp) == 1 for x in p.zk.basis)
    assert all(j0_commutator_sign(x, p.bp) == -1 for x in p.zp.basis)
    assert p.zp.real_dim % 2 == 0 and is_iota_stable(p.zp)


@pytest.mark.parametrize("fid", ALL_IDS)
def test_basis_lies_in_sp(fid):
    p = pipeline(fid)
    Q = p.bp.Q
    for x in p.zk.basis + p.zp.basis:
        U = x.matrix()
        assert (U.T @ Q + Q @ U).is_zero()
        for A in p.action.symplectic_generators:
            assert U @ A == A @ U


@pytest.mark.parametrize("fid", ["(2)", "(6)", "(8)", "(14)", "(2e)", "(27)"])
def test_conjugation_invariance(fid):
    p = pipeline(fid)
    g, n = p.action.genus, p.action.conductor
    P = permutation_matrix([(j + 1) % g for j in range(g)], n)
    conj = load_explicit_action([P @ A @ P.T for A in p.action.generators])
    zk, zp = centralizer(conj)
    assert (zk.real_dim, zp.real_dim) == (p.zk.real_dim, p.zp.real_dim)


def test_bracket_and_trace_form_on_p():
    zp = pipeline("(8)").zp
    for x in zp.basis:
        assert trace_form(x, x).sign() > 0
        assert bracket(x, x).is_zero()


def test_alg_element_rejects_bad_blocks():
    n = 4
    one = CycNum.from_rational(n, 1)
    zero = CycNum.from_rational(n, 0)
    with pytest.raises(ValueError):
        AlgElement(CycMatrix([[one]], n), CycMatrix([[zero]], n))
    with pytest.raises(ValueError):
        AlgElement(CycMatrix.zeros(2, 2, n), CycMatrix([[zero, one], [zero, zero]], n))
