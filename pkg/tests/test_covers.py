import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermatlas.covers import (AbelianGroup, CoverSpec, build_action, eigenspace_dims, load_explicit_action,
                              monodromy_search, riemann_hurwitz_genus, symplectic_form)
from hermatlas.cyclotomic import CycMatrix, CycNum
from hermatlas.errors import (ConductorMismatchError, DisconnectedCoverError, InconsistentMonodromyError,
                              NotUnitaryError)

GROUPS = [(2,), (3,), (4,), (5,), (6,), (7,), (8,), (2, 2), (2, 4), (3, 3)]


def random_cover(rng: random.Random, groups=GROUPS, genera=(0, 1, 2)) -> CoverSpec:
    while True:
        grp = AbelianGroup(rng.choice(groups))
        g0 = rng.choice(genera)
        nonid = [a for a in grp.elements() if a != grp.identity]
        branch = [rng.choice(nonid) for _ in range(rng.randint(1, 6))]
        total = grp.identity
        for a in branch:
            total = grp.add(total, a)
        if total != grp.identity:
            branch.append(grp.normalize(tuple(-x for x in total)))
        try:
            return CoverSpec(grp, g0, tuple(branch))
        except (InconsistentMonodromyError, DisconnectedCoverError):
            continue


def moonen_dims(m: int, branch) -> dict:
    """Cyclic cover of P^1: dim of the zeta^n eigenspace is -1 + sum [n a_i]_m / m."""
    out = {0: 0}
    for n in range(1, m):
        out[n] = -1 + sum(Fraction((n * a) % m, m) for a in branch)
    return out


def test_spec_examples():
    z2, z3 = AbelianGroup((2,)), AbelianGroup((3,))
    assert eigenspace_dims(CoverSpec(z2, 1, ((1,), (1,)))).dims == {(0,): 1, (1,): 1}
    d = eigenspace_dims(CoverSpec(z2, 1, ((1,),) * 4))
    assert d.dims == {(0,): 1, (1,): 2} and d.genus == 3
    d = eigenspace_dims(CoverSpec(z3, 1, ((1,),) * 3))
    assert d.dims == {(0,): 1, (1,): 1, (2,): 2} and d.genus == 4
    v4 = AbelianGroup((2, 2))
    d = eigenspace_dims(CoverSpec(v4, 0, ((1, 0), (1, 0), (0, 1), (0, 1), (1, 1), (1, 1))))
    assert d.dims == {(0, 0): 0, (0, 1): 1, (1, 0): 1, (1, 1): 1}
    d = eigenspace_dims(CoverSpec(z3, 0, ((1,), (1,), (2,), (2,))))
    assert d.dims == {(0,): 0, (1,): 1, (2,): 1} and d.genus == 2


def test_moonen_oracle_on_random_cyclic_covers():
    rng = random.Random(1)
    for _ in range(100):
        spec = random_cover(rng, groups=[(m,) for m in range(2, 10)], genera=(0,))
        m = spec.group.invariant_factors[0]
        dims = eigenspace_dims(spec).dims
        expect = moonen_dims(m, [a[0] for a in spec.branch])
        assert {n: dims[(n,)] for n in range(m)} == expect


def test_riemann_hurwitz_on_random_covers():
    rng = random.Random(2)
    for _ in range(100):
        spec = random_cover(rng)
        n = spec.group.order
        two_g_minus_2 = n * (2 * spec.base_genus - 2) + sum(
            n - Fraction(n, spec.group.element_order(a)) for a in spec.branch)
        d = eigenspace_dims(spec)
        assert 2 * d.genus - 2 == two_g_minus_2 == 2 * riemann_hurwitz_genus(spec) - 2
        assert d.trivial == spec.base_genus


@given(st.randoms(use_true_random=False))
def test_dims_invariant_under_branch_permutation(rnd):
    spec = random_cover(rnd)
    shuffled = list(spec.branch)
    rnd.shuffle(shuffled)
    assert eigenspace_dims(CoverSpec(spec.group, spec.base_genus, tuple(shuffled))).dims == \
        eigenspace_dims(spec).dims


def test_monodromy_errors():
    z3 = AbelianGroup((3,))
    with pytest.raises(InconsistentMonodromyError):
        CoverSpec(z3, 1, ((1,), (1,), (2,), (2,), (1,)))
    with pytest.raises(InconsistentMonodromyError):
        CoverSpec(z3, 1, ((0,), (0,)))
    with pytest.raises(DisconnectedCoverError):
        CoverSpec(AbelianGroup((2, 2)), 0, ((1, 0), (1, 0)))


def test_build_action_examples():
    z4 = AbelianGroup((4,))
    dims = eigenspace_dims(CoverSpec(z4, 0, ((1,), (1,), (2,), (2,), (2,))))
    assert dims.nonzero() == {(1,): 1, (3,): 2}
    a = build_action(dims)
    # ordering differs from the printed diag(z^3, z^3, z) by a permutation only
    assert sorted(map(str, a.generators[0].diagonal())) == ["z4", "z4^3", "z4^3"]
    v4 = AbelianGroup((2, 2))
    a = build_action(eigenspace_dims(CoverSpec(v4, 0, ((1, 0), (1, 0), (0, 1), (0, 1), (1, 1), (1, 1)))))
    assert [g.to_text() for g in a.generators] == ["diag(1,-1,-1)", "diag(-1,1,-1)"]


@settings(max_examples=25)
@given(st.randoms(use_true_random=False))
def test_actions_are_symplectic_and_commuting(rnd):
    spec = random_cover(rnd)
    dims = eigenspace_dims(spec)
    if dims.genus == 0:
        return
    a = build_action(dims)
    Q = symplectic_form(a.genus, a.conductor)
    for A in a.symplectic_generators:
        assert A.T @ Q @ A == Q
        assert A.H @ A == CycMatrix.identity(2 * a.genus, a.conductor)
    for A in a.generators:
        for B in a.generators:
            assert A @ B == B @ A


def test_explicit_action_errors():
    with pytest.raises(NotUnitaryError):
        load_explicit_action([CycMatrix.diag([CycNum.from_rational(4, 2)], 4)])
    with pytest.raises(ConductorMismatchError):
        load_explicit_action([CycMatrix.diag([CycNum.zeta(3)], 3), CycMatrix.diag([CycNum.zeta(5)], 5)])
    a = load_explicit_action([CycMatrix.diag([CycNum.zeta(5, k) for k in (4, 4, 4, 3, 3, 2)], 5)])
    assert a.conductor == 20 and a.genus == 6


def test_restriction_recovers_elliptic_action():
    v4 = AbelianGroup((2, 2))
    d = eigenspace_dims(CoverSpec(v4, 0, ((0, 1), (1, 0), (1, 0), (1, 0), (1, 1))))
    assert d.restrict((0, 1)) == {0: 1, 1: 1}


def test_monodromy_search_reproduces_printed_multiplicities():
    found = monodromy_search(AbelianGroup((4,)), 0, {(3,): 2, (1,): 1})
    assert ((1,), (1,), (2,), (2,), (2,)) in found
