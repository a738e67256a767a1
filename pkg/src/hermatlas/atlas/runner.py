"""Pipeline orchestration: action, centralizer, factors, labels, comparison."""
from __future__ import annotations

import time
from collections import Counter

from ..cartan import base_point, centralizer
from ..classify import classify_factor, compose_label, parse_label
from ..covers import CoverSpec, GroupAction, build_action, eigenspace_dims, load_explicit_action
from ..decomp import derived_k, invariant_factors, prym_split
from ..errors import AtlasError
from ..floatcheck import compare, float_dimensions
from .config import parse_matrix
from .fixtures import FIXTURES, FamilyFixture, get_fixture
from .report import Report, fraction_text, matrix_json

__all__ = ["BACKENDS", "FixtureRunError", "run_family", "run_all", "RunSummary", "decomposition_text", "fixture_action"]

BACKENDS = ("exact", "crosscheck")
_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


class FixtureRunError(AtlasError):
    """An upstream error, annotated with the fixture it came from."""

    def __init__(self, fixture_id: str, error: Exception):
        self.fixture_id = fixture_id
        self.error = error
        super().__init__(f"{fixture_id}: {type(error).__name__}: {error}")


def _char_name(group, chi, names: dict) -> str:
    if chi in names:
        return names[chi]
    if len(group.invariant_factors) == 1:
        return "χ" + str(chi[0]).translate(_SUB)
    return "χ(" + ",".join(map(str, chi)) + ")"


def decomposition_text(terms) -> str:
    """``[(name, mult), ...]`` -> "χ₀+2χ₁"; zero multiplicities are dropped."""
    parts = [(f"{m}{n}" if m > 1 else n) for n, m in terms if m]
    return "+".join(parts) if parts else "0"


def _diagonal_dims(action: GroupAction, cover: CoverSpec) -> dict:
    """Character multiplicities read off diagonal generators (one per group generator)."""
    grp = cover.group
    if len(action.generators) != len(grp.invariant_factors):
        raise ValueError("generator count does not match the group")
    counts = Counter()
    M = action.conductor
    for b in range(action.genus):
        chi = []
        for A, m in zip(action.generators, grp.invariant_factors):
            if not A.is_diagonal():
                raise ValueError("generators are not diagonal")
            k = A[b, b].root_of_unity_exponent()
            if k is None or (k * m) % M:
                raise ValueError(f"eigenvalue {A[b, b]} is not an {m}-th root of unity")
            chi.append(k * m // M)
        counts[tuple(chi)] += 1
    return {chi: counts.get(chi, 0) for chi in grp.characters()}


def fixture_action(fx: FamilyFixture):
    """``(action, isotypic dims or None, problems)`` for a fixture.

    For generator fixtures with attached monodromy, the multiplicities read
    off A0 are compared with the ones predicted from the branch data.
    """
    problems = []
    meta = fx.dims_source
    dims = eigenspace_dims(meta) if meta is not None else None
    if fx.cover is not None:
        return build_action(dims), dims, problems
    action = load_explicit_action([parse_matrix(t) for t in fx.generators])
    if dims is not None:
        try:
            seen = _diagonal_dims(action, meta)
        except ValueError as exc:
            problems.append(f"monodromy metadata: {exc}")
        else:
            if seen != dims.dims:
                problems.append(f"monodromy metadata: A0 multiplicities {seen} != {dims.dims}")
    return action, dims, problems


def _input_record(fx: FamilyFixture) -> dict:
    if fx.cover is not None:
        c = fx.cover
        return {"kind": "cover", "group": list(c.group.invariant_factors), "base_genus": c.base_genus,
                "branch": [list(a) for a in c.branch]}
    return {"kind": "generators", "generators": list(fx.generators)}


def _expectation_record(fx: FamilyFixture):
    e = fx.expected
    if e is None:
        return None
    return {
        "source": e.source,
        "genus": e.genus,
        "p_complex_dim": e.p_complex_dim,
        "label": e.label,
        "factor_dims": list(e.factor_dims),
        "k_real_dim": e.k_dim,
        "decomposition": e.decomposition,
        "prym": None if e.prym is None else {"W1_complex_dim": e.prym[0], "W2_complex_dim": e.prym[1]},
        "aliases": list(e.aliases),
        "table_label": e.table_label,
    }


def _canonical(label: str) -> str:
    return compose_label(parse_label(label))


def _inconsistencies(fx: FamilyFixture, label: str) -> list:
    e = fx.expected
    if e is None or e.table_label is None:
        return []
    printed = parse_label(e.table_label)
    computed = parse_label(label)
    total = sum(x.dim_c for x in printed)
    if total == e.p_complex_dim:
        return []
    lhs = " + ".join(str(x.dim_c) for x in printed)
    rhs = " + ".join(str(x.dim_c) for x in computed)
    return [{
        "field": "label",
        "printed": _canonical(e.table_label),
        "computed": label,
        "printed_dim": total,
        "family_dim": e.p_complex_dim,
        "check": f"{lhs} = {total} != {e.p_complex_dim}; computed {rhs} = "
                 f"{sum(x.dim_c for x in computed)}",
    }]


def _compare(fx: FamilyFixture, d: dict) -> list[str]:
    e = fx.expected
    out = []

    def check(name, want, got):
        if want is not None and want != got:
            out.append(f"{name}: expected {want}, got {got}")

    check("genus", e.genus, d["genus"])
    check("p_complex_dim", e.p_complex_dim, d["p_complex_dim"])
    check("k_real_dim", e.k_dim, d["k_real_dim"])
    check("label", _canonical(e.label), d["label"])
    check("factor_dims", sorted(e.factor_dims), sorted(f["complex_dim"] for f in d["factors"]))
    got_dec = d["restricted_decomposition"] if fx.restrict_to else d["decomposition"]
    check("decomposition", e.decomposition, got_dec)
    if e.prym is not None:
        p = d["prym"]
        got = None if p is None else (p["W1_complex_dim"], p["W2_complex_dim"])
        check("prym", tuple(e.prym), got)
        if p is not None and not (p["W1_stable"] and p["W2_stable"]):
            out.append("prym: split is not ad(k')-stable")
    names = {a for f in d["factors"] for a in f["aliases"]}
    for a in e.aliases:
        if a not in names:
            out.append(f"aliases: {a} not attached to any factor")
    return out


def run_family(fixture: FamilyFixture | str, backend: str = "exact") -> Report:
    """Run the full pipeline on one fixture and compare with its expectations."""
    if isinstance(fixture, str):
        fixture = get_fixture(fixture)
    if backend not in BACKENDS:
        raise ValueError(f"backend must be one of {BACKENDS}, got {backend!r}")
    try:
        return _run(fixture, backend)
    except AtlasError as exc:
        if isinstance(exc, FixtureRunError):
            raise
        raise FixtureRunError(fixture.id, exc) from exc


def _run(fx: FamilyFixture, backend: str) -> Report:
    t0 = time.perf_counter()
    timing = {}
    action, dims, problems = fixture_action(fx)
    base_point(action)
    timing["action"] = time.perf_counter() - t0

    t = time.perf_counter()
    zk, zp = centralizer(action)
    k = derived_k(zp)
    timing["centralizer"] = time.perf_counter() - t
    t = time.perf_counter()
    factors = invariant_factors(zp, k)
    timing["factors"] = time.perf_counter() - t

    labels = [classify_factor(f.complex_dim, f.k_real_dim, f.rank) for f in factors]
    label = compose_label(labels)
    prym = None
    if dims is not None and dims.trivial == 1:
        ps = prym_split(zp, dims, k)
        prym = {"W1_complex_dim": ps.W1.real_dim // 2, "W2_complex_dim": ps.W2.real_dim // 2,
                "W1_stable": ps.W1_stable, "W2_stable": ps.W2_stable}

    decomposition = restricted = None
    isotypic = []
    if dims is not None:
        grp = dims.group
        for chi in grp.characters():
            isotypic.append({"character": list(chi), "name": _char_name(grp, chi, fx.character_names),
                             "dim": dims.dims.get(chi, 0)})
        decomposition = decomposition_text((x["name"], x["dim"]) for x in isotypic)
        if fx.restrict_to is not None:
            res = dims.restrict(fx.restrict_to)
            restricted = decomposition_text(("χ" + str(j).translate(_SUB), res[j]) for j in sorted(res))

    d = {
        "fixture": fx.id,
        "input": _input_record(fx),
        "genus": action.genus,
        "isotypic": isotypic,
        "decomposition": decomposition,
        "restricted_decomposition": restricted,
        "generators": [matrix_json(A) for A in action.generators],
        "zk_real_dim": zk.real_dim,
        "p_complex_dim": zp.real_dim // 2,
        "k_real_dim": k.real_dim,
        "factors": [
            {
                "complex_dim": f.complex_dim,
                "k_real_dim": f.k_real_dim,
                "rank": f.rank,
                "commutant_real_dim": f.commutant_real_dim,
                "irreducible": f.irreducible,
                "label": lab.display,
                "name": lab.name,
                "aliases": [a.name for a in lab.aliases],
                "rank_sample": [fraction_text(c) for c in f.rank_sample],
            }
            for f, lab in zip(factors, labels)
        ],
        "label": label,
        "prym": prym,
        "crosscheck": None,
    }

    if backend == "crosscheck":
        t = time.perf_counter()
        fd = float_dimensions(action, factors, dims.trivial if prym is not None else None)
        exact = {
            "zg_real_dim": zk.real_dim + zp.real_dim,
            "zk_real_dim": zk.real_dim,
            "zp_real_dim": zp.real_dim,
            "k_real_dim": k.real_dim,
            "factors": [{"real_dim": f.space.real_dim, "k_real_dim": f.k_real_dim,
                         "commutant_real_dim": f.commutant_real_dim, "rank": f.rank} for f in factors],
        }
        if prym is not None:
            exact["prym"] = {"W1_real_dim": 2 * prym["W1_complex_dim"], "W2_real_dim": 2 * prym["W2_complex_dim"]}
        numeric = fd.as_dict()
        d["crosscheck"] = {"tolerance": "1e-08", "exact": exact, "float": numeric,
                           "disagreements": compare(exact, numeric)}
        timing["crosscheck"] = time.perf_counter() - t

    d["paper_expectation"] = _expectation_record(fx)
    d["inconsistencies"] = _inconsistencies(fx, label) if fx.expected else []
    mismatches = list(problems)
    if fx.expected is not None:
        mismatches += _compare(fx, d)
    if d["crosscheck"]:
        mismatches += [f"crosscheck: {m}" for m in d["crosscheck"]["disagreements"]]
    if not all(f["irreducible"] for f in d["factors"]):
        mismatches.append("a factor failed the irreducibility certificate")
    status = "fail" if mismatches else ("pass" if fx.expected is not None else "unchecked")
    d["comparison"] = {"status": status, "mismatches": mismatches}
    d["status"] = status
    timing["total"] = time.perf_counter() - t0
    d["timing"] = {k2: round(v, 4) for k2, v in timing.items()}
    return Report(d)


class RunSummary:
    def __init__(self, reports: list[Report]):
        self.reports = reports

    @property
    def failures(self) -> list[Report]:
        return [r for r in self.reports if not r.passed]

    @property
    def exit_code(self) -> int:
        return min(len(self.failures), 125)

    def __len__(self):
        return len(self.reports)

    def by_id(self) -> dict:
        return {r.fixture: r for r in self.reports}


def run_all(ids=None, backend: str = "exact") -> RunSummary:
    """Run every fixture (or the listed ones); output is in catalogue order."""
    if ids is None:
        selected = list(FIXTURES)
    else:
        ids = list(ids)
        selected_ids = set()
        for fid in ids:
            get_fixture(fid)
            selected_ids.add(fid)
        selected = [f for f in FIXTURES if f.id in selected_ids]
    return RunSummary([run_family(f, backend) for f in selected])

