"""Catalogue of irreducible Hermitian symmetric spaces of non-compact type.

A factor is identified by the triple (complex dimension, real dimension of
its compact part, rank). Rows sharing a triple that are known to be
isomorphic are reported as one label with aliases; any other shared triple is
an error rather than a guess.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .errors import AmbiguousClassificationError, UnclassifiedError

__all__ = [
    "SpaceLabel",
    "CatalogueEntry",
    "CATALOGUE",
    "ISOMORPHISMS",
    "classify_factor",
    "compose_label",
    "catalogue_rows",
    "parse_label",
]

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_UNSUB = str.maketrans("₀₁₂₃₄₅₆₇₈₉", "0123456789")

FAMILY_ORDER = ("AIII", "CI", "BDI", "DIII", "EIII", "EVII")


@dataclass(frozen=True)
class CatalogueEntry:
    family: str
    dim_c: Callable[..., int]
    k_dim: Callable[..., int]
    rank: Callable[..., int]
    allowed: Callable[..., bool]
    params_for_dim: Callable[[int], Iterator[tuple]]


def _aiii_params(d: int):
    for p in range(1, math.isqrt(d) + 1):
        if d % p == 0:
            yield (p, d // p)


def _triangular(d: int, shift: int):
    # n with n(n + shift)/2 == d, shift = +1 (CI) or -1 (DIII)
    n = 1
    while n * (n + shift) // 2 <= d:
        if n * (n + shift) == 2 * d:
            yield (n,)
        n += 1


CATALOGUE: tuple[CatalogueEntry, ...] = (
    CatalogueEntry("AIII", lambda p, q: p * q, lambda p, q: p * p + q * q - 1, lambda p, q: min(p, q),
                   lambda p, q: 1 <= p <= q, _aiii_params),
    CatalogueEntry("CI", lambda n: n * (n + 1) // 2, lambda n: n * n, lambda n: n,
                   lambda n: n >= 1, lambda d: _triangular(d, 1)),
    # so(2, 2) is not simple
    CatalogueEntry("BDI", lambda p, q=2: p, lambda p, q=2: p * (p - 1) // 2 + 1, lambda p, q=2: min(p, 2),
                   lambda p, q=2: p >= 1 and p != 2, lambda d: iter([(d, 2)])),
    # so*(4) is not simple and acts non-effectively
    CatalogueEntry("DIII", lambda n: n * (n - 1) // 2, lambda n: n * n, lambda n: n // 2,
                   lambda n: n >= 3, lambda d: _triangular(d, -1)),
    CatalogueEntry("EIII", lambda: 16, lambda: 46, lambda: 2, lambda: True,
                   lambda d: iter([()] if d == 16 else [])),
    CatalogueEntry("EVII", lambda: 27, lambda: 79, lambda: 3, lambda: True,
                   lambda d: iter([()] if d == 27 else [])),
)

_BY_FAMILY = {e.family: e for e in CATALOGUE}

# Low-dimensional coincidences between catalogue rows (isomorphic Lie algebras).
ISOMORPHISMS: tuple[frozenset, ...] = (
    frozenset({("AIII", (1, 1)), ("CI", (1,)), ("BDI", (1, 2))}),
    frozenset({("AIII", (1, 3)), ("DIII", (3,))}),
    frozenset({("CI", (2,)), ("BDI", (3, 2))}),
    frozenset({("AIII", (2, 2)), ("BDI", (4, 2))}),
    frozenset({("BDI", (6, 2)), ("DIII", (4,))}),
)


@dataclass(frozen=True)
class SpaceLabel:
    family: str
    params: tuple[int, ...]
    aliases: tuple["SpaceLabel", ...] = field(default=(), compare=False)

    @property
    def entry(self) -> CatalogueEntry:
        return _BY_FAMILY[self.family]

    @property
    def dim_c(self) -> int:
        return self.entry.dim_c(*self.params)

    @property
    def k_dim(self) -> int:
        return self.entry.k_dim(*self.params)

    @property
    def rank(self) -> int:
        return self.entry.rank(*self.params)

    @property
    def name(self) -> str:
        if not self.params:
            return self.family
        return f"{self.family}(" + ",".join(map(str, self.params)) + ")"

    @property
    def display(self) -> str:
        if self.family == "AIII" and self.params[0] == 1:
            return f"B{str(self.params[1]).translate(_SUB)}(ℂ)"
        if self.family == "CI":
            return f"𝔖{str(self.params[0]).translate(_SUB)}"
        return self.name

    def sort_key(self):
        return (self.dim_c, FAMILY_ORDER.index(self.family), self.params)

    def __str__(self):
        return self.display


def catalogue_rows(dim_c: int) -> list[SpaceLabel]:
    """Every catalogue row of the given complex dimension."""
    rows = []
    for entry in CATALOGUE:
        for params in entry.params_for_dim(dim_c):
            if entry.allowed(*params) and entry.dim_c(*params) == dim_c:
                rows.append(SpaceLabel(entry.family, tuple(params)))
    return rows


def _primary_key(label: SpaceLabel):
    ball = label.family == "AIII" and label.params[0] == 1
    return (not ball, FAMILY_ORDER.index(label.family), label.params)


def classify_factor(dim_c: int, k_dim: int, rank: int) -> SpaceLabel:
    """Unique catalogue label for the invariant triple, with isomorphic aliases."""
    if dim_c < 1 or k_dim < 1 or rank < 1:
        raise UnclassifiedError((dim_c, k_dim, rank))
    matches = [r for r in catalogue_rows(dim_c) if r.k_dim == k_dim and r.rank == rank]
    if not matches:
        raise UnclassifiedError((dim_c, k_dim, rank))
    keys = {(m.family, m.params) for m in matches}
    if len(keys) > 1 and not any(keys <= iso for iso in ISOMORPHISMS):
        raise AmbiguousClassificationError((dim_c, k_dim, rank), sorted(m.name for m in matches))
    matches.sort(key=_primary_key)
    primary, *others = matches
    return SpaceLabel(primary.family, primary.params,
                      tuple(SpaceLabel(o.family, o.params, (SpaceLabel(primary.family, primary.params),)
                                       + tuple(x for x in others if x != o))
                            for o in others))


def compose_label(factors: list[SpaceLabel]) -> str:
    if not factors:
        raise ValueError("at least one factor is required")
    return "×".join(f.display for f in sorted(factors, key=SpaceLabel.sort_key))


def parse_label(text: str) -> list[SpaceLabel]:
    """Inverse of compose_label; also accepts "B1" / "B₁" without the "(ℂ)" suffix."""
    out = []
    for part in text.split("×"):
        part = part.strip().translate(_UNSUB)
        if part.startswith("B") and part[1:].replace("(ℂ)", "").isdigit():
            out.append(SpaceLabel("AIII", (1, int(part[1:].replace("(ℂ)", "")))))
        elif part.startswith("𝔖") and part[1:].isdigit():
            out.append(SpaceLabel("CI", (int(part[1:]),)))
        elif part in ("EIII", "EVII"):
            out.append(SpaceLabel(part, ()))
        else:
            head, _, rest = part.partition("(")
            if head not in _BY_FAMILY or not rest.endswith(")"):
                raise ValueError(f"cannot parse space label {part!r}")
            params = tuple(int(x) for x in rest[:-1].split(","))
            out.append(SpaceLabel(head, params))
    for lab in out:
        if not lab.entry.allowed(*lab.params):
            raise ValueError(f"{lab.name} violates the catalogue constraints")
    return out
