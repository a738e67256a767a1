"""The thirteen families with published uniformizations, and what was printed about them."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..covers import AbelianGroup, CoverSpec
from ..errors import UnknownFixtureError

__all__ = ["Expected", "FamilyFixture", "FIXTURES", "fixture_ids", "get_fixture"]


@dataclass(frozen=True)
class Expected:
    """Values printed for a family. ``None`` means nothing usable was printed."""

    genus: int
    p_complex_dim: int
    label: str
    factor_dims: tuple[int, ...]
    k_dim: int | None = None
    decomposition: str | None = None
    prym: tuple[int, int] | None = None
    aliases: tuple[str, ...] = ()
    # a label printed elsewhere that disagrees with the one above
    table_label: str | None = None
    source: str = ""


@dataclass(frozen=True)
class FamilyFixture:
    id: str
    cover: CoverSpec | None = None
    generators: tuple[str, ...] | None = None
    expected: Expected | None = None
    # cover data attached to families given only by A0 (found by search)
    branch_metadata: CoverSpec | None = None
    # subgroup whose restriction is compared with ``expected.decomposition``
    restrict_to: tuple[int, ...] | None = None
    character_names: dict = field(default_factory=dict)
    notes: str = ""

    def __post_init__(self):
        if (self.cover is None) == (self.generators is None):
            raise ValueError(f"fixture {self.id}: exactly one of cover / generators is required")

    @property
    def dims_source(self) -> CoverSpec | None:
        return self.cover or self.branch_metadata


def _cyclic(m: int, base_genus: int, branch) -> CoverSpec:
    return CoverSpec(AbelianGroup((m,)), base_genus, tuple((a,) for a in branch))


_V4 = AbelianGroup((2, 2))

FIXTURES: tuple[FamilyFixture, ...] = (
    FamilyFixture(
        "(2)", generators=("diag(-1,-1)",),
        branch_metadata=_cyclic(2, 0, [1] * 6),
        expected=Expected(2, 3, "𝔖₂", (3,), k_dim=4,
                          source="uniformization table row (2); A0 = -I, fixed locus is all of Siegel space"),
    ),
    FamilyFixture(
        "(6)", generators=("diag(z3^2,z3^2,z3)",),
        branch_metadata=_cyclic(3, 0, [1, 1, 1, 1, 2]),
        expected=Expected(3, 2, "B₂(ℂ)", (2,), k_dim=4,
                          source="uniformization table row (6); printed A0 and k' = u(2)"),
    ),
    FamilyFixture(
        "(8)", generators=("diag(z4^3,z4^3,z4)",),
        branch_metadata=_cyclic(4, 0, [1, 1, 2, 2, 2]),
        expected=Expected(3, 2, "B₂(ℂ)", (2,), k_dim=4,
                          source="uniformization table row (8); printed A0, type AIII(1,2)"),
    ),
    FamilyFixture(
        "(10)", generators=("diag(z3^2,z3^2,z3^2,z3)",),
        branch_metadata=_cyclic(3, 0, [1] * 6),
        expected=Expected(4, 3, "B₃(ℂ)", (3,), k_dim=9,
                          source="uniformization table row (10); printed A0, dim k' = 9, type AIII(1,3)"),
    ),
    FamilyFixture(
        "(14)", generators=("diag(z6^5,z6^5,z6^2,z6)",),
        branch_metadata=_cyclic(6, 0, [2, 2, 2, 3, 3]),
        expected=Expected(4, 2, "B₂(ℂ)", (2,), k_dim=4,
                          source="uniformization table row (14); printed A0"),
    ),
    FamilyFixture(
        "(16)", generators=("diag(z5^4,z5^4,z5^4,z5^3,z5^3,z5^2)",),
        branch_metadata=_cyclic(5, 0, [1] * 5),
        expected=Expected(6, 2, "B₂(ℂ)", (2,), k_dim=4,
                          source="uniformization table row (16); printed A0 and k' = [p', p']"),
    ),
    FamilyFixture(
        "(26)/(1e)", cover=CoverSpec(_V4, 0, ((0, 1), (1, 0), (1, 0), (1, 0), (1, 1))),
        restrict_to=(0, 1),
        expected=Expected(2, 2, "B₁(ℂ)×B₁(ℂ)", (1, 1), k_dim=2, decomposition="χ₀+χ₁",
                          source="uniformization table row (26), identified with elliptic family (1e)"),
        notes="Klein four cover of P^1; the quotient by <(0,1)> is elliptic and the "
              "restricted action is the (1e) action",
    ),
    FamilyFixture(
        "(27)", cover=CoverSpec(_V4, 0, ((1, 0), (1, 0), (0, 1), (0, 1), (1, 1), (1, 1))),
        character_names={(0, 0): "χ₁", (0, 1): "χ₂", (1, 0): "χ₃", (1, 1): "χ₄"},
        expected=Expected(3, 3, "B₁(ℂ)×B₁(ℂ)×B₁(ℂ)", (1, 1, 1), k_dim=3, decomposition="χ₂+χ₃+χ₄",
                          source="uniformization table row (27); ramification (2^6)"),
    ),
    FamilyFixture(
        "(1e)", cover=_cyclic(2, 1, [1, 1]),
        expected=Expected(2, 2, "B₁(ℂ)×B₁(ℂ)", (1, 1), k_dim=2, decomposition="χ₀+χ₁", prym=(1, 1),
                          source="elliptic table row (1e); m = (2^2)"),
    ),
    FamilyFixture(
        "(2e)", cover=_cyclic(2, 1, [1, 1, 1, 1]),
        expected=Expected(3, 4, "B₁(ℂ)×𝔖₂", (1, 3), k_dim=5, decomposition="χ₀+2χ₁", prym=(1, 3),
                          aliases=("BDI(3,2)",), table_label="B₁(ℂ)×𝔖₃",
                          source="elliptic family (2e) worked example: AIII(1,1) × BDI(3,2); m = (2^4)"),
    ),
    FamilyFixture(
        "(3e)", cover=_cyclic(3, 1, [1, 2]),
        expected=Expected(3, 2, "B₁(ℂ)×B₁(ℂ)", (1, 1), decomposition="χ₀+χ₁+χ₂", prym=(1, 1),
                          source="elliptic table row (3e), identified with row (31)"),
        notes="printed k' is the full centralizer in k (dim 3); [p', p'] has dim 2",
    ),
    FamilyFixture(
        "(4e)", cover=_cyclic(4, 1, [2, 2]),
        expected=Expected(3, 2, "B₁(ℂ)×B₁(ℂ)", (1, 1), decomposition="χ₀+χ₁+χ₃", prym=(1, 1),
                          source="elliptic table row (4e), identified with row (32); m = (2^2)"),
        notes="printed k' has dim 3; [p', p'] has dim 2",
    ),
    FamilyFixture(
        "(6e)", cover=_cyclic(3, 1, [1, 1, 1]),
        expected=Expected(4, 3, "B₁(ℂ)×B₂(ℂ)", (1, 2), k_dim=5, decomposition="χ₀+χ₁+2χ₂", prym=(1, 2),
                          source="elliptic table row (6e); m = (3^3)"),
    ),
)

_BY_ID = {f.id: f for f in FIXTURES}


def fixture_ids() -> list[str]:
    return [f.id for f in FIXTURES]


def get_fixture(fid: str) -> FamilyFixture:
    try:
        return _BY_ID[fid]
    except KeyError:
        raise UnknownFixtureError(fid) from None
