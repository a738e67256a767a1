"""Text form of cyclotomic numbers: integer combinations of tokens ``zN^k``."""
from __future__ import annotations

import math
import re
from fractions import Fraction

from .field import CycNum

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<z>z(?P<n>\d+)(?:\^(?P<k>-?\d+))?)|(?P<i>i)|(?P<op>[-+*]))")


def _root_token(n: int, k: int) -> str:
    k %= n
    if k == 0:
        return "1"
    if 2 * k == n:
        return "-1"
    g = math.gcd(k, n)
    n, k = n // g, k // g
    return f"z{n}" if k == 1 else f"z{n}^{k}"


def format_cyc(x: CycNum) -> str:
    """Render x; roots of unity print as a single token in lowest terms."""
    n = x.conductor
    k = x.root_of_unity_exponent()
    if k is not None:
        return _root_token(n, k)
    if x.is_rational():
        return str(x.coeffs[0])
    parts = []
    for j, c in enumerate(x.coeffs):
        if not c:
            continue
        tok = "" if j == 0 else _root_token(n, j)
        mag = abs(c)
        if tok == "":
            body = str(mag)
        elif mag == 1:
            body = tok
        else:
            body = f"{mag}*{tok}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def parse_cyc(text: str, conductor: int | None = None) -> CycNum:
    """Parse an integer (or rational) combination of ``zN^k`` tokens.

    ``i`` is accepted as ``z4``. The result lives in the lcm of every
    conductor mentioned and ``conductor`` when given.
    """
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"unexpected character {text[pos]!r} in {text!r}")
        pos = m.end()
        if m.group("num"):
            tokens.append(("num", Fraction(m.group("num"))))
        elif m.group("z"):
            tokens.append(("z", (int(m.group("n")), int(m.group("k") or 1))))
        elif m.group("i"):
            tokens.append(("z", (4, 1)))
        else:
            tokens.append(("op", m.group("op")))
    if not tokens:
        raise ValueError("empty cyclotomic expression")

    # terms: list of (coefficient, (n, k) or None)
    terms = []
    sign = 1
    i = 0
    expect_term = True
    while i < len(tokens):
        kind, val = tokens[i]
        if kind == "op" and val in "+-":
            expect_term = True
            sign = sign * (-1 if val == "-" else 1)
            i += 1
            continue
        if not expect_term:
            raise ValueError(f"missing operator in {text!r}")
        coeff = Fraction(sign)
        root = None
        if kind == "num":
            coeff *= val
            i += 1
            if i < len(tokens) and tokens[i] == ("op", "*"):
                i += 1
                if i >= len(tokens) or tokens[i][0] != "z":
                    raise ValueError(f"expected zN^k after '*' in {text!r}")
                root = tokens[i][1]
                i += 1
            elif i < len(tokens) and tokens[i][0] == "z":
                root = tokens[i][1]
                i += 1
        elif kind == "z":
            root = val
            i += 1
        else:
            raise ValueError(f"unexpected {val!r} in {text!r}")
        if root is not None and root[0] < 1:
            raise ValueError(f"bad root-of-unity token in {text!r}")
        terms.append((coeff, root))
        sign = 1
        expect_term = False
    if expect_term:
        raise ValueError(f"dangling operator in {text!r}")

    m = conductor or 1
    for _, root in terms:
        if root is not None:
            m = math.lcm(m, root[0])
    total = CycNum.from_rational(m, 0)
    for coeff, root in terms:
        if root is None:
            total = total + coeff
        else:
            n, k = root
            total = total + CycNum.zeta(m, (k * (m // n)) % m) * coeff
    return total
