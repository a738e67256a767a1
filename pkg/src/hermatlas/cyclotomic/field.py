"""Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored by their coordinates over the power basis
1, zeta, ..., zeta^(phi(N)-1) after reduction modulo the N-th cyclotomic
polynomial, so two elements are equal exactly when their coordinates are.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath

from ..errors import InvalidConductorError

__all__ = [
    "CycNum",
    "cyc_reduce",
    "cyc_conj",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity",
    "imag_unit",
]


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _mobius(n: int) -> int:
    result, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # den is monic; remainder must vanish
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first.

    Built from the divisor product prod_{d | n} (x^d - 1)^mu(n/d).
    """
    if n < 1:
        raise InvalidConductorError(f"conductor must be >= 1, got {n}")
    num, den = [1], [1]
    for d in _divisors(n):
        mu = _mobius(n // d)
        if mu == 0:
            continue
        factor = [-1] + [0] * (d - 1) + [1]
        if mu == 1:
            num = _poly_mul(num, factor)
        else:
            den = _poly_mul(den, factor)
    # den has leading coefficient 1 and constant term +-1; make it monic
    return tuple(_poly_divexact(num, den))


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds the coordinates of x^k mod Phi_n for k = 0..n-1."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by x and reduce by the monic phi
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


def _check_conductor(n) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidConductorError(f"conductor must be a positive integer, got {n!r}")
    return n


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {x!r} as an exact rational")


class CycNum:
    """Immutable element of Q(zeta_N) in canonical power-basis coordinates."""

    __slots__ = ("_n", "_c", "_hash")

    def __init__(self, conductor: int, coeffs=None):
        n = _check_conductor(conductor)
        deg = len(_power_table(n)[0])
        if coeffs is None:
            c = (Fraction(0),) * deg
        else:
            c = tuple(_as_fraction(x) for x in coeffs)
            if len(c) != deg:
                raise ValueError(f"expected {deg} coordinates for conductor {n}, got {len(c)}")
        self._n = n
        self._c = c
        self._hash = None

    # -- construction -------------------------------------------------

    @classmethod
    def _raw(cls, n: int, c: tuple) -> CycNum:
        obj = object.__new__(cls)
        obj._n = n
        obj._c = c
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, conductor: int, value) -> CycNum:
        n = _check_conductor(conductor)
        deg = len(_power_table(n)[0])
        return cls._raw(n, (_as_fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zeta(cls, conductor: int, power: int = 1) -> CycNum:
        n = _check_conductor(conductor)
        return cls._raw(n, tuple(Fraction(x) for x in _power_table(n)[power % n]))

    # -- accessors ----------------------------------------------------

    @property
    def conductor(self) -> int:
        return self._n

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    def is_zero(self) -> bool:
        return not any(self._c)

    def is_rational(self) -> bool:
        return not any(self._c[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._c[0]

    def is_real(self) -> bool:
        """True when fixed by complex conjugation (the maximal real subfield)."""
        return self.is_rational() or cyc_conj(self) == self

    # -- coercion -----------------------------------------------------

    def lift(self, conductor: int) -> CycNum:
        """Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N)."""
        m = _check_conductor(conductor)
        if m == self._n:
            return self
        if m % self._n:
            raise ValueError(f"cannot lift conductor {self._n} into {m}")
        step = m // self._n
        raw = [Fraction(0)] * m
        for k, c in enumerate(self._c):
            if c:
                raw[(k * step) % m] += c
        return cyc_reduce(m, raw)

    def _coerce(self, other):
        if isinstance(other, CycNum):
            if other._n == self._n:
                return self, other
            m = math.lcm(self._n, other._n)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Fraction, Rational)) and not isinstance(other, bool):
            return self, CycNum.from_rational(self._n, other)
        return None

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycNum._raw(a._n, tuple(x + y for x, y in zip(a._c, b._c)))

    __radd__ = __add__

    def __neg__(self):
        return CycNum._raw(self._n, tuple(-x for x in self._c))

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return CycNum._raw(a._n, tuple(x - y for x, y in zip(a._c, b._c)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycNum._raw(self._n, tuple(x * other for x in self._c))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if b.is_rational():
            s = b._c[0]
            return CycNum._raw(a._n, tuple(x * s for x in a._c))
        if a.is_rational():
            s = a._c[0]
            return CycNum._raw(a._n, tuple(x * s for x in b._c))
        n = a._n
        table = _power_table(n)
        deg = len(a._c)
        out = [Fraction(0)] * deg
        for i, x in enumerate(a._c):
            if not x:
                continue
            for j, y in enumerate(b._c):
                if not y:
                    continue
                xy = x * y
                k = i + j
                if k < deg:
                    out[k] += xy
                else:
                    for t, r in enumerate(table[k % n]):
                        if r:
                            out[t] += r * xy
        return CycNum._raw(n, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycNum.from_rational(self._n, 1 / self._c[0])
        return _inverse(self)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CycNum._raw(self._n, tuple(x / other for x in self._c))
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b * a.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = CycNum.from_rational(self._n, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> CycNum:
        return cyc_conj(self)

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycNum):
            if other._n == self._n:
                return self._c == other._c
            a, b = self._coerce(other)
            return a._c == b._c
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and self._c[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._c[0]) if self.is_rational() else hash((self._n, self._c))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    # -- numerics -----------------------------------------------------

    def embed(self, k: int = 1) -> complex:
        """Complex value under zeta -> exp(2 pi i k / N); k must be a unit mod N."""
        if math.gcd(k, self._n) != 1:
            raise ValueError(f"{k} is not a unit modulo {self._n}")
        w = cmath.exp(2j * math.pi * k / self._n)
        return sum((float(c) * w**j for j, c in enumerate(self._c) if c), 0j)

    def __complex__(self):
        return self.embed(1)

    def embed_mp(self, dps: int = 50):
        with mpmath.workdps(dps):
            w = mpmath.exp(2j * mpmath.pi / self._n)
            return mpmath.fsum(mpmath.mpf(c.numerator) / c.denominator * w**j
                               for j, c in enumerate(self._c) if c)

    def sign(self) -> int:
        """Sign of a real-subfield element under the standard embedding."""
        if self.is_rational():
            c = self._c[0]
            return (c > 0) - (c < 0)
        if not self.is_real():
            raise ValueError(f"{self} is not real")
        v = mpmath.re(self.embed_mp(80))
        if abs(v) < mpmath.mpf(10) ** -60:
            raise ArithmeticError(f"cannot certify the sign of {self}")
        return 1 if v > 0 else -1

    # -- display ------------------------------------------------------

    def root_of_unity_exponent(self):
        """Return k if this element equals zeta_N^k, else None."""
        for k in range(self._n):
            if self._c == _power_table(self._n)[k]:
                return k
        return None

    def __repr__(self):
        return f"CycNum({self._n}, {[str(c) for c in self._c]})"

    def __str__(self):
        from .render import format_cyc

        return format_cyc(self)


def cyc_reduce(conductor: int, raw_coeffs) -> CycNum:
    """Canonical element for sum_k raw_coeffs[k] * zeta^k (any number of powers)."""
    n = _check_conductor(conductor)
    table = _power_table(n)
    deg = len(table[0])
    out = [Fraction(0)] * deg
    for k, c in enumerate(raw_coeffs):
        c = _as_fraction(c)
        if not c:
            continue
        for t, r in enumerate(table[k % n]):
            if r:
                out[t] += r * c
    return CycNum._raw(n, tuple(out))


def cyc_conj(x: CycNum) -> CycNum:
    """Complex conjugation, the automorphism zeta -> zeta^(N-1)."""
    if x.is_rational():
        return x
    n = x.conductor
    raw = [Fraction(0)] * n
    for k, c in enumerate(x.coeffs):
        if c:
            raw[(-k) % n] += c
    return cyc_reduce(n, raw)


def root_of_unity(conductor: int, power: int = 1) -> CycNum:
    return CycNum.zeta(conductor, power)


def imag_unit(conductor: int) -> CycNum:
    if conductor % 4:
        raise ValueError(f"i is not in Q(zeta_{conductor})")
    return CycNum.zeta(conductor, conductor // 4)


def _inverse(x: CycNum) -> CycNum:
    # solve (multiplication-by-x matrix) * y = e_0 over Q
    n = x.conductor
    deg = len(x.coeffs)
    cols = []
    for j in range(deg):
        cols.append((x * CycNum.zeta(n, j)).coeffs)
    rows = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
    for col in range(deg):
        piv = next(r for r in range(col, deg) if rows[r][col])
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [v / p for v in rows[col]]
        for r in range(deg):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    return CycNum._raw(n, tuple(rows[i][deg] for i in range(deg)))
