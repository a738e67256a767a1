import itertools

import pytest

from conftest import ALL_IDS, ELLIPTIC_IDS, pipeline
from hermatlas.cartan import AlgElement, Subspace, bracket, centralizer, trace_form
from hermatlas.covers import load_explicit_action
from hermatlas.cyclotomic import CycMatrix, CycNum, imag_unit
from hermatlas.decomp import (ad_action, commutant, derived_k, factor_rank, invariant_factors, is_ad_stable,
                              is_iota_stable, orthogonal_complement, prym_split, vector_closure)
from hermatlas.decomp import _eigen_split
from hermatlas.errors import NotEllipticError, UnsplittableOverFieldError, WrongPartError


def _rat(n, x):
    return CycNum.from_rational(n, x)


@pytest.mark.parametrize("fid,expected", [("(10)", 9), ("(8)", 4), ("(27)", 3)])
def test_derived_k_examples(fid, expected):
    assert pipeline(fid).k.real_dim == expected


def test_derived_k_of_zero():
    a = load_explicit_action([CycMatrix.diag([CycNum.zeta(3)], 3)])
    _, zp = centralizer(a)
    assert zp.real_dim == 0 and derived_k(zp).real_dim == 0


def test_family_8_k_is_u2_with_trace_corner():
    k = pipeline("(8)").k
    for c in k.basis:
        C = c.C
        assert C[2, 2] == C[0, 0] + C[1, 1]
        assert C[0, 2].is_zero() and C[1, 2].is_zero()


def test_ad_action_diagonal_example():
    n = 12
    i = imag_unit(n)
    lam = [1, 2, 3]
    d = [CycNum.zeta(n, 1), _rat(n, 2), CycNum.zeta(n, 5)]
    C = CycMatrix.diag([i * x for x in lam], n)
    D = CycMatrix.diag(d, n)
    out = ad_action(AlgElement.from_k(C), AlgElement.from_p(D))
    assert out.D == CycMatrix.diag([i * (-2 * x) * y for x, y in zip(lam, d)], n)
    zero_c = AlgElement.from_k(CycMatrix.zeros(3, 3, n))
    assert ad_action(zero_c, AlgElement.from_p(D)).is_zero()


def test_ad_action_wrong_parts():
    p = pipeline("(8)")
    with pytest.raises(WrongPartError):
        ad_action(p.zp.basis[0], p.zp.basis[0])
    with pytest.raises(WrongPartError):
        ad_action(p.k.basis[0], p.k.basis[0])


def test_family_6e_ad_corner():
    # upper-left entry is -2 i lambda d1 where C[0, 0] = i lambda
    p = pipeline("(6e)")
    for c in p.k.basis:
        for x in p.zp.basis:
            assert ad_action(c, x).D[0, 0] == c.C[0, 0] * (-2) * x.D[0, 0]


@pytest.mark.parametrize("fid", ALL_IDS)
def test_trace_form_is_ad_invariant(fid):
    p = pipeline(fid)
    for c in p.k.basis:
        for x, y in itertools.product(p.zp.basis, repeat=2):
            assert (trace_form(ad_action(c, x), y) + trace_form(x, ad_action(c, y))).is_zero()


@pytest.mark.parametrize("fid,dims", [("(27)", [1, 1, 1]), ("(8)", [2]), ("(2e)", [1, 3]), ("(10)", [3])])
def test_invariant_factor_examples(fid, dims):
    assert [f.complex_dim for f in pipeline(fid).factors] == dims


def test_family_27_factors_are_coordinate_lines():
    for f in pipeline("(27)").factors:
        support = {j for b in f.space.basis for j in range(3) if not b.D[j, j].is_zero()}
        assert len(support) == 1


@pytest.mark.parametrize("fid,rank", [("(8)", 1), ("(2)", 2), ("(27)", 1)])
def test_factor_rank_examples(fid, rank):
    assert all(factor_rank(f) == rank for f in pipeline(fid).factors)


@pytest.mark.parametrize("fid", ALL_IDS)
def test_factor_properties(fid):
    p = pipeline(fid)
    assert sum(f.space.real_dim for f in p.factors) == p.zp.real_dim
    for f in p.factors:
        W = f.space
        assert p.zp.contains_subspace(W)
        assert is_ad_stable(W, p.k) and is_iota_stable(W) and W.real_dim % 2 == 0
        assert f.k_part.real_dim > 0  # no euclidean factor
        assert f.commutant_real_dim == 2 and f.irreducible
        assert len(commutant(W, p.k)) == 2
        for b in W.basis:
            assert vector_closure(b, W, p.k) == W
    for f1, f2 in itertools.combinations(p.factors, 2):
        assert all(trace_form(x, y).is_zero() for x in f1.space.basis for y in f2.space.basis)


@pytest.mark.parametrize("fid", ALL_IDS)
def test_closure_properties(fid):
    p = pipeline(fid)
    for x, y in itertools.combinations(p.k.basis, 2):
        assert p.k.contains(bracket(x, y))
    for x in p.zp.basis:
        assert trace_form(x, x).sign() > 0
    for f in p.factors:
        comp = orthogonal_complement(f.space, p.zp)
        assert comp.real_dim == p.zp.real_dim - f.space.real_dim
        assert is_ad_stable(comp, p.k)


@pytest.mark.parametrize("fid,w2", list(zip(ELLIPTIC_IDS, (1, 3, 1, 1, 2))))
def test_prym_split(fid, w2):
    p = pipeline(fid)
    split = prym_split(p.zp, p.dims, p.k)
    assert split.W1.complex_dim == 1 and split.W2.complex_dim == w2
    assert split.W1_stable and split.W2_stable
    assert is_ad_stable(orthogonal_complement(split.W1, p.zp), p.k)
    # the split groups the irreducible factors by trivial-isotypic support
    inside = [f.space for f in p.factors if split.W1.contains_subspace(f.space)]
    outside = [f.space for f in p.factors if split.W2.contains_subspace(f.space)]
    assert len(inside) + len(outside) == len(p.factors)
    assert sum(w.real_dim for w in inside) == split.W1.real_dim


def test_prym_split_family_1e_shape():
    p = pipeline("(1e)")
    split = prym_split(p.zp, p.dims)
    assert all(b.D[1, 1].is_zero() and b.D[0, 1].is_zero() for b in split.W1.basis)
    assert all(b.D[0, 0].is_zero() and b.D[0, 1].is_zero() for b in split.W2.basis)


def test_prym_split_needs_elliptic_base():
    p = pipeline("(27)")
    with pytest.raises(NotEllipticError):
        prym_split(p.zp, p.dims)


def _line(n):
    one = CycMatrix.identity(1, n)
    return Subspace.span([AlgElement.from_p(one), AlgElement.from_p(one.scale(imag_unit(n)))], 1, n, part="p")


def test_eigen_split_uses_real_cyclotomic_eigenvalues():
    n = 8
    S = [(_rat(n, 0), _rat(n, 1)), (_rat(n, 2), _rat(n, 0))]
    lam, vecs = _eigen_split(S, _line(n))
    assert lam * lam == 2 and len(vecs) == 1


def test_eigen_split_outside_field_is_an_error():
    n = 4
    S = [(_rat(n, 0), _rat(n, 1)), (_rat(n, 2), _rat(n, 0))]
    with pytest.raises(UnsplittableOverFieldError):
        _eigen_split(S, _line(n))


def test_reducible_module_splits_into_lines():
    # a diagonal action with three distinct real characters gives three lines
    a = load_explicit_action([CycMatrix.diag([_rat(4, 1), _rat(4, -1)], 4),
                              CycMatrix.diag([_rat(4, -1), _rat(4, -1)], 4)])
    _, zp = centralizer(a)
    fs = invariant_factors(zp, derived_k(zp))
    assert [f.complex_dim for f in fs] == [1, 1]
