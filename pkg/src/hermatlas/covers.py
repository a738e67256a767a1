"""Isotypic decomposition of holomorphic 1-forms for abelian Galois covers.

For an abelian cover C -> C' with group G, base genus g' and local
monodromies a_i, a nontrivial character chi occurs in H^0(C, K_C) with
multiplicity ``(g' - 1) + sum_i <theta_i>`` where ``chi(a_i) = exp(2 pi i theta_i)``
and ``<.>`` is the fractional part; the trivial character occurs ``g'`` times.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import CycMatrix, CycNum
from .errors import (ConductorMismatchError, DisconnectedCoverError,
                     InconsistentMonodromyError, NotUnitaryError)

__all__ = [
    "AbelianGroup",
    "CoverSpec",
    "IsotypicDims",
    "GroupAction",
    "eigenspace_dims",
    "riemann_hurwitz_genus",
    "build_action",
    "load_explicit_action",
    "symplectic_form",
    "ambient_conductor",
]


@dataclass(frozen=True)
class AbelianGroup:
    """Z/m_1 x ... x Z/m_k; elements and characters are residue tuples."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(m) for m in self.invariant_factors)
        if not factors or any(m < 2 for m in factors):
            raise ValueError(f"invariant factors must be integers >= 2, got {self.invariant_factors}")
        object.__setattr__(self, "invariant_factors", factors)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.invariant_factors)

    def normalize(self, a) -> tuple[int, ...]:
        if isinstance(a, int):
            a = (a,)
        a = tuple(a)
        if len(a) != len(self.invariant_factors):
            raise ValueError(f"element {a} does not match group {self.invariant_factors}")
        return tuple(x % m for x, m in zip(a, self.invariant_factors))

    def add(self, a, b) -> tuple[int, ...]:
        return tuple((x + y) % m for x, y, m in zip(a, b, self.invariant_factors))

    def element_order(self, a) -> int:
        a = self.normalize(a)
        return math.lcm(*(m // math.gcd(x, m) for x, m in zip(a, self.invariant_factors)))

    def elements(self):
        return itertools.product(*(range(m) for m in self.invariant_factors))

    def characters(self) -> list[tuple[int, ...]]:
        """Dual group, in lexicographic order (the trivial character first)."""
        return list(self.elements())

    def generators(self) -> list[tuple[int, ...]]:
        k = len(self.invariant_factors)
        return [tuple(int(i == j) for i in range(k)) for j in range(k)]

    def pairing(self, chi, a) -> Fraction:
        """theta in [0, 1) with chi(a) = exp(2 pi i theta)."""
        t = sum(Fraction(n * x, m) for n, x, m in zip(chi, a, self.invariant_factors))
        return t - math.floor(t)

    def generated_subgroup(self, elems) -> set:
        seen = {self.identity}
        frontier = [self.identity]
        elems = [self.normalize(e) for e in elems]
        while frontier:
            x = frontier.pop()
            for e in elems:
                y = self.add(x, e)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return seen

    @property
    def exponent(self) -> int:
        return math.lcm(*self.invariant_factors)


@dataclass(frozen=True)
class CoverSpec:
    group: AbelianGroup
    base_genus: int
    branch: tuple[tuple[int, ...], ...]
    label: str | None = None

    def __post_init__(self):
        branch = tuple(self.group.normalize(a) for a in self.branch)
        object.__setattr__(self, "branch", branch)
        if self.base_genus < 0:
            raise ValueError("base genus must be non-negative")
        validate_cover(self)


def validate_cover(spec: CoverSpec) -> None:
    grp = spec.group
    for i, a in enumerate(spec.branch):
        if a == grp.identity:
            raise InconsistentMonodromyError(f"local monodromy {i} is the identity")
    total = grp.identity
    for a in spec.branch:
        total = grp.add(total, a)
    if total != grp.identity:
        raise InconsistentMonodromyError(f"local monodromies sum to {total}, not 0")
    if spec.base_genus == 0 and len(grp.generated_subgroup(spec.branch)) != grp.order:
        raise DisconnectedCoverError("local monodromies do not generate the group over P^1")


def riemann_hurwitz_genus(spec: CoverSpec) -> int:
    n = spec.group.order
    two_g_minus_2 = n * (2 * spec.base_genus - 2) + sum(
        n * (1 - Fraction(1, spec.group.element_order(a))) for a in spec.branch)
    g = (two_g_minus_2 + 2) / 2
    if g.denominator != 1:
        raise InconsistentMonodromyError(f"non-integral genus {g}")
    return int(g)


@dataclass(frozen=True)
class IsotypicDims:
    group: AbelianGroup
    dims: dict = field(hash=False)

    @property
    def genus(self) -> int:
        return sum(self.dims.values())

    @property
    def trivial(self) -> int:
        return self.dims.get(self.group.identity, 0)

    def nonzero(self) -> dict:
        return {chi: d for chi, d in self.dims.items() if d}

    def restrict(self, element) -> dict:
        """Multiplicities of the restriction to the cyclic subgroup <element>.

        Keys are exponents j of the character x -> exp(2 pi i j / ord).
        """
        element = self.group.normalize(element)
        order = self.group.element_order(element)
        out = {}
        for chi, d in self.dims.items():
            if d:
                j = int(self.group.pairing(chi, element) * order)
                out[j] = out.get(j, 0) + d
        return out


def eigenspace_dims(spec: CoverSpec) -> IsotypicDims:
    grp = spec.group
    dims = {}
    for chi in grp.characters():
        if chi == grp.identity:
            dims[chi] = spec.base_genus
        else:
            total = (spec.base_genus - 1) + sum(grp.pairing(chi, a) for a in spec.branch)
            assert total.denominator == 1 and total >= 0, (chi, total)
            dims[chi] = int(total)
    result = IsotypicDims(grp, dims)
    assert result.genus == riemann_hurwitz_genus(spec)
    return result


def ambient_conductor(*orders: int) -> int:
    return math.lcm(4, *orders)


def symplectic_form(genus: int, conductor: int) -> CycMatrix:
    """Q = [[0, iI], [-iI, 0]] in the basis {omega, conj(omega)}."""
    i = CycNum.zeta(conductor, conductor // 4)
    eye = CycMatrix.identity(genus, conductor)
    zero = CycMatrix.zeros(genus, genus, conductor)
    return CycMatrix.block([[zero, eye.scale(i)], [eye.scale(-i), zero]])


def symplectic_extension(a0: CycMatrix) -> CycMatrix:
    zero = CycMatrix.zeros(*a0.shape, a0.conductor)
    return CycMatrix.block([[a0, zero], [zero, a0.conj()]])


@dataclass(frozen=True)
class GroupAction:
    """Unitary generators A0 on H^0(K_C) and their extensions to H^1(C, C)."""

    genus: int
    generators: tuple[CycMatrix, ...]
    symplectic_generators: tuple[CycMatrix, ...]
    abelian: bool = True
    dims: IsotypicDims | None = None

    @property
    def conductor(self) -> int:
        return self.generators[0].conductor

    @classmethod
    def from_generators(cls, generators, *, abelian=None, dims=None) -> GroupAction:
        generators = tuple(generators)
        sym = tuple(symplectic_extension(a) for a in generators)
        if abelian is None:
            abelian = all(a @ b == b @ a for a, b in itertools.combinations(generators, 2))
        return cls(generators[0].shape[0], generators, sym, abelian, dims)


def build_action(dims: IsotypicDims, group: AbelianGroup | None = None) -> GroupAction:
    """Diagonal generators: trivial block first, then characters in lexicographic order."""
    group = group or dims.group
    conductor = ambient_conductor(*group.invariant_factors)
    order = [group.identity] + [c for c in group.characters() if c != group.identity]
    basis = [chi for chi in order for _ in range(dims.dims.get(chi, 0))]
    if not basis:
        raise ValueError("cover has genus 0; there is no action on 1-forms")
    gens = []
    for e in group.generators():
        entries = []
        for chi in basis:
            theta = group.pairing(chi, e)
            entries.append(CycNum.zeta(conductor, int(theta * conductor)))
        gens.append(CycMatrix.diag(entries, conductor))
    return GroupAction.from_generators(gens, abelian=True, dims=dims)


def load_explicit_action(matrices) -> GroupAction:
    matrices = list(matrices)
    if not matrices:
        raise ValueError("at least one generator is required")
    conds = {m.conductor for m in matrices}
    if len(conds) > 1:
        raise ConductorMismatchError(f"generators use conductors {sorted(conds)}")
    n = matrices[0].shape[0]
    for k, m in enumerate(matrices):
        if not m.is_square() or m.shape[0] != n:
            raise ValueError(f"generator {k} has shape {m.shape}, expected ({n}, {n})")
    conductor = ambient_conductor(conds.pop())
    matrices = [m.lift(conductor) for m in matrices]
    for k, m in enumerate(matrices):
        if not m.is_unitary():
            raise NotUnitaryError(f"generator {k} is not unitary")
    return GroupAction.from_generators(matrices)


def character_label(group: AbelianGroup, chi) -> str:
    """Display name: chi_n for cyclic groups, chi_(n1,n2,...) otherwise."""
    if len(group.invariant_factors) == 1:
        return f"chi_{chi[0]}"
    return "chi_(" + ",".join(str(x) for x in chi) + ")"


def monodromy_search(group: AbelianGroup, base_genus: int, target: dict, max_points: int = 8):
    """Smallest branch vectors (as sorted multisets) whose dims equal ``target``.

    ``target`` maps characters to multiplicities; absent characters mean 0.
    Used to attach monodromy metadata to families known only through A0.
    """
    nonid = [a for a in group.elements() if a != group.identity]
    want = {chi: target.get(chi, 0) for chi in group.characters()}
    for r in range(1, max_points + 1):
        found = []
        for combo in itertools.combinations_with_replacement(nonid, r):
            try:
                spec = CoverSpec(group, base_genus, combo)
            except (InconsistentMonodromyError, DisconnectedCoverError):
                continue
            if eigenspace_dims(spec).dims == want:
                found.append(combo)
        if found:
            return found
    return []
