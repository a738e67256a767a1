"""Dense matrices over one ambient cyclotomic field."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..errors import ConductorMismatchError
from .field import CycNum, cyc_conj


class CycMatrix:
    """Immutable row-major matrix whose entries share one conductor."""

    __slots__ = ("_rows", "_n", "shape")

    def __init__(self, rows, conductor: int | None = None):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must be non-empty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix rows")
        conds = {x.conductor for r in rows for x in r if isinstance(x, CycNum)}
        if conductor is None:
            if len(conds) > 1:
                raise ConductorMismatchError(f"entries use conductors {sorted(conds)}")
            conductor = conds.pop() if conds else 4
        elif conds - {conductor}:
            raise ConductorMismatchError(
                f"entries use conductors {sorted(conds)}, expected {conductor}")
        self._n = conductor
        self._rows = tuple(
            tuple(x if isinstance(x, CycNum) else CycNum.from_rational(conductor, x) for x in r)
            for r in rows
        )
        self.shape = (len(rows), width)

    @classmethod
    def _wrap(cls, rows: tuple, conductor: int) -> CycMatrix:
        obj = object.__new__(cls)
        obj._rows = rows
        obj._n = conductor
        obj.shape = (len(rows), len(rows[0]))
        return obj

    @classmethod
    def zeros(cls, rows: int, cols: int, conductor: int) -> CycMatrix:
        z = CycNum.from_rational(conductor, 0)
        return cls._wrap(tuple((z,) * cols for _ in range(rows)), conductor)

    @classmethod
    def identity(cls, n: int, conductor: int) -> CycMatrix:
        return cls.diag([CycNum.from_rational(conductor, 1)] * n, conductor)

    @classmethod
    def diag(cls, entries, conductor: int | None = None) -> CycMatrix:
        entries = list(entries)
        if conductor is None:
            conductor = next((x.conductor for x in entries if isinstance(x, CycNum)), 4)
        z = CycNum.from_rational(conductor, 0)
        n = len(entries)
        rows = [[z] * n for _ in range(n)]
        for i, x in enumerate(entries):
            rows[i][i] = x
        return cls(rows, conductor)

    @classmethod
    def block(cls, blocks) -> CycMatrix:
        """Assemble from a 2D list of CycMatrix blocks."""
        conductor = blocks[0][0]._n
        rows = []
        for brow in blocks:
            for i in range(brow[0].shape[0]):
                row = []
                for b in brow:
                    row.extend(b._rows[i])
                rows.append(row)
        return cls(rows, conductor)

    # -- access -------------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple:
        return self._rows

    def __getitem__(self, ij) -> CycNum:
        i, j = ij
        return self._rows[i][j]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> CycMatrix:
        return CycMatrix._wrap(tuple(r[c0:c1] for r in self._rows[r0:r1]), self._n)

    def lift(self, conductor: int) -> CycMatrix:
        if conductor == self._n:
            return self
        return CycMatrix._wrap(tuple(tuple(x.lift(conductor) for x in r) for r in self._rows),
                               conductor)

    # -- algebra ------------------------------------------------------

    def _check(self, other: CycMatrix):
        if other._n != self._n:
            raise ConductorMismatchError(f"conductors {self._n} and {other._n} differ")

    def __add__(self, other: CycMatrix) -> CycMatrix:
        self._check(other)
        return CycMatrix._wrap(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self._n)

    def __sub__(self, other: CycMatrix) -> CycMatrix:
        self._check(other)
        return CycMatrix._wrap(
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self._n)

    def __neg__(self) -> CycMatrix:
        return CycMatrix._wrap(tuple(tuple(-a for a in r) for r in self._rows), self._n)

    def scale(self, s) -> CycMatrix:
        if isinstance(s, CycNum) and s.conductor != self._n:
            s = s.lift(self._n)
        return CycMatrix._wrap(tuple(tuple(a * s for a in r) for r in self._rows), self._n)

    def __matmul__(self, other: CycMatrix) -> CycMatrix:
        self._check(other)
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = CycNum.from_rational(self._n, 0)
        cols = list(zip(*other._rows))
        out = []
        for r in self._rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for col in cols:
                acc = zero
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return CycMatrix._wrap(tuple(out), self._n)

    def conj(self) -> CycMatrix:
        return CycMatrix._wrap(tuple(tuple(cyc_conj(a) for a in r) for r in self._rows), self._n)

    @property
    def T(self) -> CycMatrix:
        return CycMatrix._wrap(tuple(zip(*self._rows)), self._n)

    @property
    def H(self) -> CycMatrix:
        return self.conj().T

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not any(a for r in self._rows for a in r)

    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def is_diagonal(self) -> bool:
        return all(not a for i, r in enumerate(self._rows) for j, a in enumerate(r) if i != j)

    def is_unitary(self) -> bool:
        return self.is_square() and self.H @ self == CycMatrix.identity(self.shape[0], self._n)

    def diagonal(self) -> list[CycNum]:
        return [self._rows[i][i] for i in range(min(self.shape))]

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self._rows, other._rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash(self._rows)

    # -- numerics / display --------------------------------------------

    def to_numpy(self, k: int = 1) -> np.ndarray:
        return np.array([[a.embed(k) for a in r] for r in self._rows], dtype=complex)

    def to_text(self) -> str:
        from .render import format_cyc

        if self.is_square() and self.is_diagonal():
            return "diag(" + ",".join(format_cyc(a) for a in self.diagonal()) + ")"
        return "[" + ",".join("[" + ",".join(format_cyc(a) for a in r) + "]"
                              for r in self._rows) + "]"

    def __repr__(self):
        return f"CycMatrix({self.to_text()}, conductor={self._n})"


def permutation_matrix(perm, conductor: int) -> CycMatrix:
    """Matrix P with P e_j = e_perm[j]."""
    n = len(perm)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for j, i in enumerate(perm):
        rows[i][j] = Fraction(1)
    return CycMatrix(rows, conductor)
