"""Compact part k' = [p', p'] and the decomposition of p' into irreducible factors.

p' is a module over k' (through ad) carrying the complex structure iota.
Factors are certified irreducible by their commutant: the real algebra of
endomorphisms commuting with ad(k') and iota has real dimension 2 exactly
when the complex module is irreducible.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .cartan import AlgElement, Subspace, _layout, bracket, complex_structure, n_params, trace_form
from .covers import IsotypicDims
from .cyclotomic import CycNum, inverse, kernel_over_real_subfield, matmul
from .errors import NotEllipticError, RankUndecidedError, UnsplittableOverFieldError, WrongPartError

__all__ = [
    "Factor",
    "PrymSplit",
    "derived_k",
    "ad_action",
    "invariant_factors",
    "factor_rank",
    "prym_split",
    "commutant",
    "orthogonal_complement",
    "is_ad_stable",
    "is_iota_stable",
    "vector_closure",
]


def derived_k(zp: Subspace) -> Subspace:
    """Span of all brackets of pairs of basis elements of zp."""
    g, n = zp.genus, zp.conductor
    if zp.part not in ("p",) and zp.real_dim:
        raise WrongPartError("derived_k expects a p-part subspace")
    brackets = [bracket(x, y) for x, y in itertools.combinations(zp.basis, 2)]
    k = Subspace.span(brackets, g, n, part="k")
    if any(not b.D.is_zero() for b in k.basis):
        raise AssertionError("[p', p'] has a component outside k")
    for c in k.basis:
        for x in zp.basis:
            if not zp.contains(bracket(c, x)):
                raise AssertionError("[[p', p'], p'] is not contained in p'")
    return k


def ad_action(c: AlgElement, d: AlgElement) -> AlgElement:
    """p-part of [c, d] for c in k, d in p: D -> conj(C) D - D C."""
    if not c.D.is_zero():
        raise WrongPartError("first argument must lie in k")
    if not d.C.is_zero():
        raise WrongPartError("second argument must lie in p")
    C, D = c.C, d.D
    return AlgElement.from_p(C.conj() @ D - D @ C)


# -- linear algebra on subspaces ---------------------------------------


def _matrix_of(op, W: Subspace) -> list[tuple]:
    """Matrix (rows) of the real-linear map op restricted to W, in W's basis."""
    cols = [W.coordinates(op(b)) for b in W.basis]
    return [tuple(col[i] for col in cols) for i in range(W.real_dim)]


def _gram(W: Subspace) -> list[tuple]:
    return [tuple(trace_form(a, b) for b in W.basis) for a in W.basis]


def _zero(n: int) -> CycNum:
    return CycNum.from_rational(n, 0)


def _identity(dim: int, n: int) -> list[tuple]:
    one, zero = CycNum.from_rational(n, 1), _zero(n)
    return [tuple(one if i == j else zero for j in range(dim)) for i in range(dim)]


def _sub(a, b):
    return [tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b)]


def _add(a, b):
    return [tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b)]


def _transpose(a):
    return [tuple(c) for c in zip(*a)]


def _is_real_scalar(a) -> bool:
    d = a[0][0]
    return all((x == d) if i == j else not x for i, r in enumerate(a) for j, x in enumerate(r))


def _vectors_to_subspace(vectors, W: Subspace) -> Subspace:
    elems = [W.combine(v) for v in vectors]
    return Subspace.span(elems, W.genus, W.conductor, part="p")


def orthogonal_complement(W: Subspace, V: Subspace) -> Subspace:
    """Trace-form orthogonal complement of W inside V."""
    n = V.conductor
    if W.real_dim == 0:
        return V
    system = [tuple(trace_form(w, v) for v in V.basis) for w in W.basis]
    ker = kernel_over_real_subfield(system, V.real_dim, n)
    return _vectors_to_subspace(ker.vectors, V)


def is_ad_stable(W: Subspace, k: Subspace) -> bool:
    return all(W.contains(ad_action(c, x)) for c in k.basis for x in W.basis)


def is_iota_stable(W: Subspace) -> bool:
    return all(W.contains(complex_structure(x)) for x in W.basis)


def commutant(W: Subspace, k: Subspace) -> list[list[tuple]]:
    """Basis of {T in End_R(W): T ad_c = ad_c T for c in k, T iota = iota T}."""
    dim, n = W.real_dim, W.conductor
    if dim == 0:
        return []
    ops = [_matrix_of(lambda x, c=c: ad_action(c, x), W) for c in k.basis]
    ops.append(_matrix_of(complex_structure, W))
    zero = _zero(n)
    rows = []
    for M in ops:
        # (T M - M T)[r][s] = sum_t T[r][t] M[t][s] - M[r][t] T[t][s]
        for r in range(dim):
            for s in range(dim):
                row = [zero] * (dim * dim)
                for t in range(dim):
                    if M[t][s]:
                        row[r * dim + t] = row[r * dim + t] + M[t][s]
                    if M[r][t]:
                        row[t * dim + s] = row[t * dim + s] - M[r][t]
                if any(row):
                    rows.append(tuple(row))
    ker = kernel_over_real_subfield(rows, dim * dim, n)
    return [[tuple(v[r * dim:(r + 1) * dim]) for r in range(dim)] for v in ker.vectors]


def vector_closure(v: AlgElement, W: Subspace, k: Subspace) -> Subspace:
    """Smallest ad(k)- and iota-stable subspace containing v."""
    g, n = W.genus, W.conductor
    current = Subspace.span([v], g, n, part="p")
    while True:
        images = list(current.basis)
        for x in current.basis:
            images.append(complex_structure(x))
            images.extend(ad_action(c, x) for c in k.basis)
        nxt = Subspace.span(images, g, n, part="p")
        if nxt.real_dim == current.real_dim:
            return current
        current = nxt


# -- eigenvalues of self-adjoint commutant elements ----------------------


def _kernel_of(S, W: Subspace, lam) -> list[tuple]:
    dim, n = W.real_dim, W.conductor
    shifted = _sub(S, [tuple(lam if i == j else _zero(n) for j in range(dim)) for i in range(dim)])
    return list(kernel_over_real_subfield(shifted, dim, n).vectors)


def _real_subfield_basis(n: int, dps: int):
    """Powers of 2cos(2 pi / n): a Q-basis of Q(zeta_n)^+."""
    from .cyclotomic import euler_phi

    d = max(1, euler_phi(n) // 2)
    with mpmath.workdps(dps):
        c = 2 * mpmath.cos(2 * mpmath.pi / n)
        return [c**j for j in range(d)]


def _eigen_split(S, W: Subspace):
    """Return (lambda, kernel vectors) for an eigenvalue of S found in the field."""
    dim, n = W.real_dim, W.conductor
    rational = all(x.is_rational() for r in S for x in r)
    if rational:
        numeric = np.linalg.eigvals(np.array([[float(x.coeffs[0]) for x in r] for r in S]))
        seen = set()
        for ev in sorted(numeric.real):
            lam = Fraction(ev).limit_denominator(10**6)
            if lam in seen:
                continue
            seen.add(lam)
            vecs = _kernel_of(S, W, CycNum.from_rational(n, lam))
            if 0 < len(vecs) < dim:
                return CycNum.from_rational(n, lam), vecs
    dps = 60
    with mpmath.workdps(dps):
        A = mpmath.matrix([[x.embed_mp(dps).real for x in r] for r in S])
        evs = mpmath.eig(A, left=False, right=False)
        basis = _real_subfield_basis(n, dps)
        for ev in evs:
            rel = mpmath.pslq([mpmath.re(ev)] + basis, maxcoeff=10**8, maxsteps=10**5)
            if not rel or rel[0] == 0:
                continue
            c = CycNum.zeta(n, 1) + CycNum.zeta(n, n - 1)
            lam = CycNum.from_rational(n, 0)
            power = CycNum.from_rational(n, 1)
            for coef in rel[1:]:
                lam = lam + power * Fraction(-coef, rel[0])
                power = power * c
            vecs = _kernel_of(S, W, lam)
            if 0 < len(vecs) < dim:
                return lam, vecs
    raise UnsplittableOverFieldError(
        f"commutant element on a {dim}-dimensional module has no eigenvalue in Q(zeta_{n})^+")


def _self_adjoint_candidates(T, W: Subspace, G, Ginv, iota):
    n = W.conductor
    # adjoint with respect to the trace form: T^dagger = G^-1 T^t G
    Tdag = matmul(Ginv, matmul(_transpose(T), G, n), n)
    yield _add(T, Tdag)
    yield matmul(iota, _sub(T, Tdag), n)


# -- factors ----------------------------------------------------------


@dataclass
class Factor:
    space: Subspace
    k_part: Subspace
    complex_dim: int
    k_real_dim: int
    rank: int
    commutant_real_dim: int
    irreducible: bool
    rank_sample: tuple | None = None


def _split(W: Subspace, k: Subspace) -> list[Subspace]:
    comm = commutant(W, k)
    if len(comm) <= 2:
        return [W]
    n = W.conductor
    G = _gram(W)
    Ginv = inverse(G, n)
    iota = _matrix_of(complex_structure, W)
    for T in comm:
        for S in _self_adjoint_candidates(T, W, G, Ginv, iota):
            if _is_real_scalar(S):
                continue
            _, vecs = _eigen_split(S, W)
            W1 = _vectors_to_subspace(vecs, W)
            W2 = orthogonal_complement(W1, W)
            return _split(W1, k) + _split(W2, k)
    raise AssertionError("commutant larger than C but every self-adjoint element is scalar")


def invariant_factors(zp: Subspace, k: Subspace) -> list[Factor]:
    """Irreducible, pairwise orthogonal, ad(k)- and iota-stable factors of zp."""
    if zp.real_dim == 0:
        return []
    spaces = _split(zp, k)
    spaces.sort(key=lambda s: (s.real_dim, s.pivots))
    factors = []
    for W in spaces:
        kW = Subspace.span([bracket(x, y) for x, y in itertools.combinations(W.basis, 2)],
                           W.genus, W.conductor, part="k")
        comm_dim = len(commutant(W, k))
        f = Factor(space=W, k_part=kW, complex_dim=W.real_dim // 2, k_real_dim=kW.real_dim,
                   rank=0, commutant_real_dim=comm_dim, irreducible=comm_dim == 2)
        f.rank, f.rank_sample = _rank_with_sample(W)
        factors.append(f)
    return factors


def _centralizer_in(X: AlgElement, W: Subspace) -> Subspace:
    images = [bracket(X, b).coords() for b in W.basis]
    rows = [tuple(img[i] for img in images) for i in range(len(images[0]))]
    rows = [r for r in rows if any(r)]
    ker = kernel_over_real_subfield(rows, W.real_dim, W.conductor)
    return _vectors_to_subspace(ker.vectors, W)


def _is_abelian(A: Subspace) -> bool:
    return all(bracket(x, y).is_zero() for x, y in itertools.combinations(A.basis, 2))


def rank_samples(dim: int, seed: int = 0, n_random: int = 24):
    """Deterministic integer samples first, then seeded random rationals."""
    yield tuple(j + 1 for j in range(dim))
    yield tuple((j + 1) ** 2 for j in range(dim))
    yield tuple((-1) ** j * (j + 2) for j in range(dim))
    rng = random.Random(seed)
    for _ in range(n_random):
        yield tuple(Fraction(rng.randint(-20, 20), rng.randint(1, 7)) for _ in range(dim))


def _rank_with_sample(W: Subspace):
    accepted = []
    for i, coeffs in enumerate(rank_samples(W.real_dim)):
        X = W.combine([CycNum.from_rational(W.conductor, c) for c in coeffs])
        if X.is_zero():
            continue
        Z = _centralizer_in(X, W)
        if _is_abelian(Z):
            accepted.append((Z.real_dim, coeffs))
        if accepted and i >= 2:
            break
    if not accepted:
        raise RankUndecidedError(f"no sampled centralizer in a {W.real_dim}-dimensional factor was abelian")
    return min(accepted)


def factor_rank(w: Factor) -> int:
    if not w.irreducible:
        raise ValueError("rank is only certified for irreducible factors")
    return _rank_with_sample(w.space)[0]


# -- Prym split -------------------------------------------------------


@dataclass
class PrymSplit:
    W1: Subspace
    W2: Subspace
    W1_stable: bool
    W2_stable: bool


def prym_split(zp: Subspace, dims: IsotypicDims, k: Subspace | None = None) -> PrymSplit:
    """p' = W1 + W2 with W1 the symmetric square of the invariant forms' dual."""
    t = dims.trivial
    if t != 1:
        raise NotEllipticError(f"cover is over a base of genus {t}, not an elliptic curve")
    g, n = zp.genus, zp.conductor
    if k is None:
        k = derived_k(zp)
    # coordinates outside the top-left t x t block of D must vanish
    outside = []
    for idx, (block, _, j, kk) in enumerate(_layout(g)):
        if block == "C" or not (j < t and kk < t):
            outside.append(idx)
    system = [tuple(b.coords()[idx] for b in zp.basis) for idx in outside]
    system = [r for r in system if any(r)]
    ker = kernel_over_real_subfield(system, zp.real_dim, n)
    W1 = _vectors_to_subspace(ker.vectors, zp)
    W2 = orthogonal_complement(W1, zp)
    return PrymSplit(W1, W2, is_ad_stable(W1, k), is_ad_stable(W2, k))
