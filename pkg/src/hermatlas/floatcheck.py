"""Floating-point recomputation of every dimension the exact pipeline reports.

This route shares no linear algebra with the exact backend. It builds
sp(2g, R) inside gl(2g, C) from its defining equations, finds kernels and
ranks by singular values, and only borrows the exact factor subspaces so that
per-factor quantities can be compared one by one.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .covers import GroupAction, symplectic_form

__all__ = ["TOL", "numeric_rank", "FloatDims", "float_dimensions", "compare"]

TOL = 1e-8


def numeric_rank(m: np.ndarray, tol: float = TOL) -> int:
    """Number of singular values above ``tol`` relative to the largest one."""
    if m.size == 0:
        return 0
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > tol * max(1.0, s[0])))


def _null_space(m: np.ndarray, n: int, tol: float = TOL) -> np.ndarray:
    """Orthonormal basis (columns) of the real kernel of an (r, n) matrix."""
    if m.shape[0] == 0:
        return np.eye(n)
    _, s, vt = np.linalg.svd(m)
    scale = max(1.0, s[0]) if s.size else 1.0
    r = int(np.sum(s > tol * scale))
    return vt[r:].T


def _to_real(v: np.ndarray) -> np.ndarray:
    v = v.reshape(-1)
    return np.concatenate([v.real, v.imag])


def _from_real(x: np.ndarray, size: int) -> np.ndarray:
    half = size * size
    return (x[:half] + 1j * x[half:]).reshape(size, size)


def _linear_rows(fn, size: int) -> np.ndarray:
    """Real matrix of the R-linear map U -> fn(U) on complex size x size matrices."""
    cols = []
    for k in range(2 * size * size):
        e = np.zeros(2 * size * size)
        e[k] = 1.0
        cols.append(_to_real(fn(_from_real(e, size))))
    return np.array(cols).T


@dataclass
class FloatDims:
    zg: int
    zk: int
    zp: int
    k_derived: int
    factors: list = field(default_factory=list)
    prym: tuple | None = None

    def as_dict(self) -> dict:
        return {
            "zg_real_dim": self.zg,
            "zk_real_dim": self.zk,
            "zp_real_dim": self.zp,
            "k_real_dim": self.k_derived,
            "factors": [dict(f) for f in self.factors],
            "prym": None if self.prym is None else {"W1_real_dim": self.prym[0], "W2_real_dim": self.prym[1]},
        }


def _lie_algebra(action: GroupAction):
    """Real basis (list of matrices) of the centralizer of the action in sp(2g, R)."""
    g = action.genus
    n = 2 * g
    Q = symplectic_form(g, action.conductor).to_numpy()
    swap = np.block([[np.zeros((g, g)), np.eye(g)], [np.eye(g), np.zeros((g, g))]])
    gens = [A.to_numpy() for A in action.symplectic_generators]
    blocks = [
        _linear_rows(lambda U: U.T @ Q + Q @ U, n),
        # real structure: complex conjugation swaps omega and conj(omega)
        _linear_rows(lambda U: U - swap @ U.conj() @ swap, n),
    ]
    blocks += [_linear_rows(lambda U, A=A: U @ A - A @ U, n) for A in gens]
    ker = _null_space(np.vstack(blocks), 2 * n * n)
    return [_from_real(ker[:, j], n) for j in range(ker.shape[1])]


def _span_dim(mats) -> int:
    if not mats:
        return 0
    return numeric_rank(np.array([_to_real(m) for m in mats]))


def _restricted(basis, fn):
    """Basis of {sum x_j B_j : fn(sum x_j B_j) = 0}."""
    if not basis:
        return []
    m = np.array([_to_real(fn(b)) for b in basis]).T
    ker = _null_space(m, len(basis))
    return [sum(ker[j, c] * basis[j] for j in range(len(basis))) for c in range(ker.shape[1])]


def _coords(mats, basis) -> np.ndarray:
    B = np.array([_to_real(b) for b in basis]).T
    X = np.array([_to_real(m) for m in mats]).T
    sol, *_ = np.linalg.lstsq(B, X, rcond=None)
    return sol


def _commutant_dim(W, kbasis, J0) -> int:
    m = len(W)
    ops = [_coords([c @ w - w @ c for w in W], W) for c in kbasis]
    # the complex structure on p is 1/2 [J0, .]
    ops.append(_coords([0.5 * (J0 @ w - w @ J0) for w in W], W))
    eye = np.eye(m)
    rows = [np.kron(eye, L) - np.kron(L.T, eye) for L in ops]
    return m * m - numeric_rank(np.vstack(rows))


def float_dimensions(action: GroupAction, factors=(), trivial_dim: int | None = None) -> FloatDims:
    """Recompute centralizer, derived algebra, factor and Prym dimensions numerically.

    ``factors`` are exact factors; their bases and certifying rank samples are
    converted to floating point and every dimension is recomputed from them.
    """
    g = action.genus
    J0 = np.diag([1j] * g + [-1j] * g)
    zg = _lie_algebra(action)
    zk = _restricted(zg, lambda U: U @ J0 - J0 @ U)
    zp = _restricted(zg, lambda U: U @ J0 + J0 @ U)
    kder = [x @ y - y @ x for x, y in itertools.combinations(zp, 2)]
    k_dim = _span_dim(kder)
    # orthonormal basis of [p', p'] for the commutant
    kbasis = []
    if kder:
        u, s, _ = np.linalg.svd(np.array([_to_real(m) for m in kder]).T, full_matrices=False)
        kbasis = [_from_real(u[:, j], 2 * g) for j in range(numeric_rank(np.diag(s)))]
    out = FloatDims(len(zg), len(zk), len(zp), k_dim)
    for f in factors:
        W = [b.matrix().to_numpy() for b in f.space.basis]
        brackets = [x @ y - y @ x for x, y in itertools.combinations(W, 2)]
        entry = {
            "real_dim": _span_dim(W),
            "k_real_dim": _span_dim(brackets),
            "commutant_real_dim": _commutant_dim(W, kbasis, J0),
        }
        if f.rank_sample is not None:
            X = sum(float(c) * w for c, w in zip(f.rank_sample, W))
            entry["rank"] = len(_restricted(W, lambda U: X @ U - U @ X))
        out.factors.append(entry)
    if trivial_dim is not None:
        t = trivial_dim

        def outside(U):
            D = U[g:, :g].copy()
            D[:t, :t] = 0
            return np.concatenate([U[:g, :g].reshape(-1), D.reshape(-1)])

        w1 = len(_restricted(zp, outside))
        out.prym = (w1, len(zp) - w1)
    return out


def compare(exact: dict, numeric: dict, path: str = "") -> list[str]:
    """Itemized disagreements between two nested records of integers."""
    problems = []
    if isinstance(exact, dict):
        for key in exact:
            if key in numeric:
                problems += compare(exact[key], numeric[key], f"{path}.{key}" if path else key)
    elif isinstance(exact, list):
        if len(exact) != len(numeric):
            problems.append(f"{path}: {len(exact)} entries exact, {len(numeric)} float")
        for j, (a, b) in enumerate(zip(exact, numeric)):
            problems += compare(a, b, f"{path}[{j}]")
    elif exact != numeric:
        problems.append(f"{path}: exact {exact}, float {numeric}")
    return problems
