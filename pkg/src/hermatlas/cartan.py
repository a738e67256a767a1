"""sp(2g, R) in (C, D)-block coordinates and centralizers of a finite action.

In the basis {omega_1..omega_g, conj(omega_1)..conj(omega_g)} of H^1(C, C) a
real element of sp(2g, R) is ``U = [[C, conj(D)], [D, conj(C)]]`` with C
skew-hermitian and D symmetric. ``(C, 0)`` is the compact part k and
``(0, D)`` the tangent part p at the base point J0 = diag(iI, -iI).

Real coordinates of an element list the independent real parameters, C
before D, row-major over the upper triangle: Im C_jj, then (Re, Im) of
C_jk for j < k; (Re, Im) of D_jk for j <= k.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .covers import GroupAction, symplectic_form
from .cyclotomic import (CycMatrix, CycNum, cyc_conj, im_part, imag_unit, kernel_over_real_subfield,
                         re_part, real_rows, rref)
from .errors import NotBlockDiagonalError, WrongPartError

__all__ = [
    "AlgElement",
    "Subspace",
    "BasePoint",
    "base_point",
    "centralizer",
    "full_centralizer",
    "complex_structure",
    "bracket",
    "trace_form",
]


@lru_cache(maxsize=None)
def _layout(g: int):
    """Parameter slots: (block, kind, j, k) with block in 'CD', kind in ('re', 'im')."""
    slots = []
    for j in range(g):
        for k in range(j, g):
            if j == k:
                slots.append(("C", "im", j, k))
            else:
                slots.append(("C", "re", j, k))
                slots.append(("C", "im", j, k))
    for j in range(g):
        for k in range(j, g):
            slots.append(("D", "re", j, k))
            slots.append(("D", "im", j, k))
    return tuple(slots)


def n_params(g: int) -> tuple[int, int]:
    return g * g, g * (g + 1)


@dataclass(frozen=True, eq=False)
class AlgElement:
    """U = [[C, conj D], [D, conj C]] with C skew-hermitian, D symmetric."""

    C: CycMatrix
    D: CycMatrix

    def __post_init__(self):
        if self.C.shape != self.D.shape or not self.C.is_square():
            raise ValueError("C and D must be square of equal size")
        if self.C.conductor != self.D.conductor:
            object.__setattr__(self, "D", self.D.lift(self.C.conductor))
        if self.C.H != -self.C:
            raise ValueError("C is not skew-hermitian")
        if self.D.T != self.D:
            raise ValueError("D is not symmetric")

    @property
    def genus(self) -> int:
        return self.C.shape[0]

    @property
    def conductor(self) -> int:
        return self.C.conductor

    @property
    def part(self) -> str:
        if self.D.is_zero():
            return "k"
        if self.C.is_zero():
            return "p"
        return "mixed"

    def is_zero(self) -> bool:
        return self.C.is_zero() and self.D.is_zero()

    @classmethod
    def zero(cls, g: int, conductor: int) -> AlgElement:
        z = CycMatrix.zeros(g, g, conductor)
        return cls(z, z)

    @classmethod
    def from_p(cls, D: CycMatrix) -> AlgElement:
        return cls(CycMatrix.zeros(*D.shape, D.conductor), D)

    @classmethod
    def from_k(cls, C: CycMatrix) -> AlgElement:
        return cls(C, CycMatrix.zeros(*C.shape, C.conductor))

    def matrix(self) -> CycMatrix:
        return CycMatrix.block([[self.C, self.D.conj()], [self.D, self.C.conj()]])

    def k_part(self) -> AlgElement:
        return AlgElement.from_k(self.C)

    def p_part(self) -> AlgElement:
        return AlgElement.from_p(self.D)

    def coords(self) -> tuple[CycNum, ...]:
        out = []
        for block, kind, j, k in _layout(self.genus):
            x = (self.C if block == "C" else self.D)[j, k]
            out.append(re_part(x) if kind == "re" else im_part(x))
        return tuple(out)

    @classmethod
    def from_coords(cls, vec, g: int, conductor: int) -> AlgElement:
        i = imag_unit(conductor)
        zero = CycNum.from_rational(conductor, 0)
        C = [[zero] * g for _ in range(g)]
        D = [[zero] * g for _ in range(g)]
        for (block, kind, j, k), x in zip(_layout(g), vec):
            if not x:
                continue
            val = x if kind == "re" else x * i
            if block == "C":
                C[j][k] = C[j][k] + val
                if j != k:
                    C[k][j] = C[k][j] - cyc_conj(val)
            else:
                D[j][k] = D[j][k] + val
                if j != k:
                    D[k][j] = D[k][j] + val
        return cls(CycMatrix(C, conductor), CycMatrix(D, conductor))

    def __add__(self, other: AlgElement) -> AlgElement:
        return AlgElement(self.C + other.C, self.D + other.D)

    def __sub__(self, other: AlgElement) -> AlgElement:
        return AlgElement(self.C - other.C, self.D - other.D)

    def __neg__(self) -> AlgElement:
        return AlgElement(-self.C, -self.D)

    def scale(self, s) -> AlgElement:
        """Multiply by a real scalar."""
        if isinstance(s, CycNum) and not s.is_real():
            raise ValueError("scalars must be real")
        return AlgElement(self.C.scale(s), self.D.scale(s))

    def __eq__(self, other):
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.C == other.C and self.D == other.D

    def __hash__(self):
        return hash((self.C, self.D))

    def __repr__(self):
        return f"AlgElement(C={self.C.to_text()}, D={self.D.to_text()})"


def bracket(x: AlgElement, y: AlgElement) -> AlgElement:
    """[X, Y] = XY - YX computed blockwise."""
    C1, D1, C2, D2 = x.C, x.D, y.C, y.D
    cb1, cb2 = D1.conj(), D2.conj()
    C = (C1 @ C2) - (C2 @ C1) + (cb1 @ D2) - (cb2 @ D1)
    D = (D1 @ C2) + (C1.conj() @ D2) - (D2 @ C1) - (C2.conj() @ D1)
    return AlgElement(C, D)


def _trace_product(a: CycMatrix, b: CycMatrix) -> CycNum:
    n = a.shape[0]
    acc = CycNum.from_rational(a.conductor, 0)
    for j in range(n):
        for k in range(n):
            x = a[j, k]
            if x:
                y = b[k, j]
                if y:
                    acc = acc + x * y
    return acc


def trace_form(x: AlgElement, y: AlgElement) -> CycNum:
    """tr(U_x U_y); real, positive definite on p and negative definite on k."""
    z = _trace_product(x.C, y.C) + _trace_product(x.D.conj(), y.D)
    return z + cyc_conj(z)


class Subspace:
    """Real subspace of sp(2g, R) with a canonical (reduced echelon) basis."""

    def __init__(self, part: str, rows, pivots, g: int, conductor: int):
        self.part = part
        self.genus = g
        self.conductor = conductor
        self.rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)
        self.basis = tuple(AlgElement.from_coords(r, g, conductor) for r in self.rows)

    @classmethod
    def span(cls, elements, g: int, conductor: int, part: str | None = None) -> Subspace:
        vecs = [e.coords() for e in elements]
        vecs = [v for v in vecs if any(v)]
        nc, nd = n_params(g)
        rows, pivots = rref(vecs, nc + nd, conductor) if vecs else ([], [])
        sub = cls(part or "mixed", rows, pivots, g, conductor)
        if part is None:
            sub.part = sub._infer_part()
        return sub

    @classmethod
    def from_vectors(cls, vectors, g: int, conductor: int, part: str) -> Subspace:
        nc, nd = n_params(g)
        vectors = [v for v in vectors if any(v)]
        rows, pivots = rref(vectors, nc + nd, conductor) if vectors else ([], [])
        return cls(part, rows, pivots, g, conductor)

    def _infer_part(self) -> str:
        nc, _ = n_params(self.genus)
        if all(not any(r[nc:]) for r in self.rows):
            return "k"
        if all(not any(r[:nc]) for r in self.rows):
            return "p"
        return "mixed"

    @property
    def real_dim(self) -> int:
        return len(self.rows)

    @property
    def complex_dim(self) -> int | None:
        if self.part != "p":
            return None
        assert self.real_dim % 2 == 0
        return self.real_dim // 2

    def coordinates(self, x: AlgElement):
        """Coordinates of x in the basis; raises ValueError if x is not in the span."""
        v = x.coords()
        coeffs = [v[p] for p in self.pivots]
        recon = [CycNum.from_rational(self.conductor, 0)] * len(v)
        for c, row in zip(coeffs, self.rows):
            if c:
                recon = [a + c * b if b else a for a, b in zip(recon, row)]
        if tuple(recon) != v:
            raise ValueError("element does not lie in the subspace")
        return coeffs

    def contains(self, x: AlgElement) -> bool:
        try:
            self.coordinates(x)
        except ValueError:
            return False
        return True

    def combine(self, coeffs) -> AlgElement:
        nc, nd = n_params(self.genus)
        acc = [CycNum.from_rational(self.conductor, 0)] * (nc + nd)
        for c, row in zip(coeffs, self.rows):
            if c:
                acc = [a + c * b if b else a for a, b in zip(acc, row)]
        return AlgElement.from_coords(acc, self.genus, self.conductor)

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(b) for b in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.rows == other.rows

    def __repr__(self):
        return f"Subspace(part={self.part!r}, real_dim={self.real_dim})"


@dataclass(frozen=True)
class BasePoint:
    J0: CycMatrix
    Q: CycMatrix


def _real_span_vectors(g: int, conductor: int) -> list[CycMatrix]:
    """Columns (u, conj u) for u = e_k and u = i e_k."""
    i = imag_unit(conductor)
    out = []
    for scalar in (CycNum.from_rational(conductor, 1), i):
        for k in range(g):
            col = [CycNum.from_rational(conductor, 0)] * (2 * g)
            col[k] = scalar
            col[g + k] = cyc_conj(scalar)
            out.append(CycMatrix([[x] for x in col], conductor))
    return out


def _positive_definite(gram: list[list[CycNum]]) -> bool:
    # elimination without pivoting: all pivots positive <=> all leading minors positive
    m = [list(r) for r in gram]
    n = len(m)
    for c in range(n):
        p = m[c][c]
        if p.is_zero() or p.sign() <= 0:
            return False
        for r in range(c + 1, n):
            f = m[r][c] / p
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return True


def _is_real_operator(M: CycMatrix, g: int) -> bool:
    P = M.submatrix(0, g, 0, g)
    R = M.submatrix(g, 2 * g, 0, g)
    return M.submatrix(0, g, g, 2 * g) == R.conj() and M.submatrix(g, 2 * g, g, 2 * g) == P.conj()


def base_point(action: GroupAction) -> BasePoint:
    g, n = action.genus, action.conductor
    i = imag_unit(n)
    eye = CycMatrix.identity(g, n)
    zero = CycMatrix.zeros(g, g, n)
    J0 = CycMatrix.block([[eye.scale(i), zero], [zero, eye.scale(-i)]])
    Q = symplectic_form(g, n)
    big_eye = CycMatrix.identity(2 * g, n)
    if J0 @ J0 != -big_eye:
        raise AssertionError("J0^2 != -I")
    if J0.T @ Q @ J0 != Q:
        raise AssertionError("J0 does not preserve Q")
    if not _is_real_operator(J0, g):
        raise AssertionError("J0 is not a real operator")
    QJ = Q @ J0
    vecs = _real_span_vectors(g, n)
    gram = [[(u.T @ QJ @ v)[0, 0] for v in vecs] for u in vecs]
    if not _positive_definite(gram):
        raise AssertionError("Q(x, J0 x) is not positive definite")
    for k, A in enumerate(action.symplectic_generators):
        if A.T @ Q @ A != Q:
            raise ValueError(f"generator {k} does not preserve Q")
        if A @ J0 != J0 @ A:
            raise NotBlockDiagonalError(f"generator {k} does not commute with J0")
    return BasePoint(J0, Q)


def _param_matrices(g: int, conductor: int, block: str) -> list[CycMatrix]:
    nc, _ = n_params(g)
    total = sum(n_params(g))
    out = []
    zero = CycNum.from_rational(conductor, 0)
    one = CycNum.from_rational(conductor, 1)
    for idx, slot in enumerate(_layout(g)):
        if slot[0] != block:
            continue
        vec = [zero] * total
        vec[idx] = one
        e = AlgElement.from_coords(vec, g, conductor)
        out.append(e.C if block == "C" else e.D)
    return out


def _solve_block(action: GroupAction, block: str) -> Subspace:
    g, n = action.genus, action.conductor
    mats = _param_matrices(g, n, block)
    rows = []
    for A0 in action.generators:
        if block == "D":
            images = [E @ A0 - A0.conj() @ E for E in mats]
        else:
            images = [E @ A0 - A0 @ E for E in mats]
        for r in range(g):
            for s in range(g):
                rows.append(tuple(img[r, s] for img in images))
    system = real_rows(rows, n)
    ker = kernel_over_real_subfield(system, len(mats), n)
    nc, nd = n_params(g)
    zero = CycNum.from_rational(n, 0)
    vectors = []
    for v in ker.vectors:
        if block == "D":
            vectors.append((zero,) * nc + tuple(v))
        else:
            vectors.append(tuple(v) + (zero,) * nd)
    return Subspace.from_vectors(vectors, g, n, "p" if block == "D" else "k")


def centralizer(action: GroupAction) -> tuple[Subspace, Subspace]:
    """(Z_k(Gamma), Z_p(Gamma)) at the base point."""
    return _solve_block(action, "C"), _solve_block(action, "D")


def full_centralizer(action: GroupAction) -> Subspace:
    """Z_g(Gamma) solved jointly from UA = AU on the full 2g x 2g matrices."""
    g, n = action.genus, action.conductor
    nc, nd = n_params(g)
    zero = CycNum.from_rational(n, 0)
    one = CycNum.from_rational(n, 1)
    units = []
    for idx in range(nc + nd):
        vec = [zero] * (nc + nd)
        vec[idx] = one
        units.append(AlgElement.from_coords(vec, g, n).matrix())
    rows = []
    for A in action.symplectic_generators:
        images = [U @ A - A @ U for U in units]
        for r in range(2 * g):
            for s in range(2 * g):
                rows.append(tuple(img[r, s] for img in images))
    ker = kernel_over_real_subfield(real_rows(rows, n), nc + nd, n)
    return Subspace.from_vectors(ker.vectors, g, n, "mixed")


def complex_structure(x: AlgElement) -> AlgElement:
    """iota = left multiplication by J0 on p: D -> -iD."""
    if not x.C.is_zero():
        raise WrongPartError("complex structure is defined on p only (C must vanish)")
    return AlgElement.from_p(x.D.scale(-imag_unit(x.conductor)))


def j0_commutator_sign(x: AlgElement, bp: BasePoint) -> int:
    """+1 if x commutes with J0, -1 if it anticommutes, 0 otherwise."""
    U = x.matrix()
    if U @ bp.J0 == bp.J0 @ U:
        return 1
    if U @ bp.J0 == -(bp.J0 @ U):
        return -1
    return 0


