"""Exact row reduction and kernels over the maximal real subfield of Q(zeta_M).

Unknowns are real numbers. A linear system whose coefficients lie in a
subfield of R has the same solution dimension over that subfield as over R,
so every dimension returned here is a certified real dimension.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NotRealCoefficientError
from .field import CycNum, cyc_conj, imag_unit


def _all_rational(rows) -> bool:
    return all(x.is_rational() for r in rows for x in r)


def _rref_inplace(m: list[list], ncols: int) -> list[int]:
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            inv = 1 / p
            m[r] = [x * inv if x else x for x in m[r]]
        prow = m[r]
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(rows, ncols: int | None = None, conductor: int | None = None):
    """Reduced row echelon form over the cyclotomic field.

    Returns ``(nonzero_rows, pivot_columns)``; rows are tuples of CycNum.
    """
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if conductor is None:
        conductor = next((x.conductor for r in rows for x in r), 4)
    if not rows or ncols == 0:
        return [], []
    if _all_rational(rows):
        m = [[x.coeffs[0] for x in r] for r in rows]
        pivots = _rref_inplace(m, ncols)
        out = [tuple(CycNum.from_rational(conductor, x) for x in m[i]) for i in range(len(pivots))]
        return out, pivots
    m = rows
    pivots = _rref_inplace(m, ncols)
    return [tuple(m[i]) for i in range(len(pivots))], pivots


def rank(rows, ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


@dataclass(frozen=True)
class RationalKernelBasis:
    """Kernel of a real-subfield system; vectors are tuples of real CycNum."""

    dimension: int
    vectors: tuple
    unknowns: int
    conductor: int

    def rational_coordinates(self) -> list[list[Fraction]]:
        """Each vector with every scalar expanded to its rational coordinates."""
        return [[c for x in v for c in x.coeffs] for v in self.vectors]


def kernel_over_real_subfield(system, unknowns: int, conductor: int | None = None) -> RationalKernelBasis:
    """Exact kernel of ``system`` (rows of conjugation-fixed CycNum)."""
    system = [tuple(r) for r in system]
    if conductor is None:
        conductor = next((x.conductor for r in system for x in r), 4)
    for i, r in enumerate(system):
        if len(r) != unknowns:
            raise ValueError(f"row {i} has {len(r)} entries, expected {unknowns}")
        for j, x in enumerate(r):
            if not x.is_real():
                raise NotRealCoefficientError(f"entry ({i}, {j}) = {x} is not fixed by conjugation")
    red, pivots = rref(system, unknowns, conductor)
    zero = CycNum.from_rational(conductor, 0)
    one = CycNum.from_rational(conductor, 1)
    pivset = set(pivots)
    vectors = []
    for f in range(unknowns):
        if f in pivset:
            continue
        v = [zero] * unknowns
        v[f] = one
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        vectors.append(tuple(v))
    return RationalKernelBasis(len(vectors), tuple(vectors), unknowns, conductor)


def real_rows(complex_rows, conductor: int) -> list[tuple]:
    """Split rows with Q(zeta_M) coefficients acting on real unknowns.

    ``sum c_k x_k = 0`` with real x is equivalent to the pair of real-subfield
    equations ``sum Re(c_k) x_k = 0`` and ``sum Im(c_k) x_k = 0``.
    """
    i = imag_unit(conductor)
    half = Fraction(1, 2)
    out = []
    for r in complex_rows:
        if all(x.is_rational() for x in r):
            if any(r):
                out.append(tuple(r))
            continue
        conj = [cyc_conj(x) for x in r]
        re = tuple((x + y) * half for x, y in zip(r, conj))
        im = tuple((x - y) * (-i) * half for x, y in zip(r, conj))
        if any(re):
            out.append(re)
        if any(im):
            out.append(im)
    return out


def re_part(x: CycNum) -> CycNum:
    return (x + cyc_conj(x)) * Fraction(1, 2)


def im_part(x: CycNum) -> CycNum:
    return (x - cyc_conj(x)) * (-imag_unit(x.conductor)) * Fraction(1, 2)


def span_rref(vectors, ncols: int, conductor: int) -> list[tuple]:
    """Canonical (reduced echelon) basis of the span of ``vectors``."""
    vectors = [v for v in vectors if any(v)]
    if not vectors:
        return []
    return rref(vectors, ncols, conductor)[0]


def inverse(rows, conductor: int) -> list[tuple]:
    """Inverse of a square matrix over Q(zeta_M) given as rows of CycNum."""
    n = len(rows)
    one = CycNum.from_rational(conductor, 1)
    zero = CycNum.from_rational(conductor, 0)
    aug = [list(r) + [one if i == j else zero for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug, 2 * n, conductor)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return [tuple(r[n:]) for r in red[:n]]


def matmul(a, b, conductor: int) -> list[tuple]:
    zero = CycNum.from_rational(conductor, 0)
    cols = list(zip(*b))
    out = []
    for r in a:
        row = []
        for c in cols:
            acc = zero
            for x, y in zip(r, c):
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return out
