"""Report records: deterministic JSON, a schema for it, and a text rendering."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import jsonschema

from ..cyclotomic import CycMatrix, CycNum

__all__ = ["Report", "report_schema", "validate_report", "cyc_json", "matrix_json", "fraction_text"]


def fraction_text(x) -> str:
    return str(Fraction(x))


def cyc_json(x: CycNum) -> list:
    """Nonzero power-basis terms as [exponent, "p/q"] pairs."""
    return [[j, fraction_text(c)] for j, c in enumerate(x.coeffs) if c]


def matrix_json(m: CycMatrix) -> dict:
    return {
        "text": m.to_text(),
        "conductor": m.conductor,
        "entries": [[cyc_json(m[i, j]) for j in range(m.shape[1])] for i in range(m.shape[0])],
    }


@lru_cache(maxsize=1)
def report_schema() -> dict:
    text = resources.files("hermatlas.atlas").joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def validate_report(data: dict) -> None:
    jsonschema.validate(data, report_schema())


@dataclass
class Report:
    data: dict

    @property
    def fixture(self) -> str:
        return self.data["fixture"]

    @property
    def passed(self) -> bool:
        return self.data["status"] != "fail"

    @property
    def label(self) -> str:
        return self.data["label"]

    def without_timing(self) -> dict:
        return {k: v for k, v in self.data.items() if k != "timing"}

    def to_json(self, timing: bool = True) -> str:
        data = self.data if timing else self.without_timing()
        return json.dumps(data, ensure_ascii=False, indent=2)

    def to_text(self) -> str:
        d = self.data
        lines = [f"family {d['fixture']}: {d['label']}  [{d['status']}]",
                 f"  genus {d['genus']}"]
        if d["decomposition"]:
            lines.append(f"  H^0(K) = {d['decomposition']}")
        if d["restricted_decomposition"]:
            lines.append(f"  restricted to a subgroup: {d['restricted_decomposition']}")
        for g in d["generators"]:
            lines.append(f"  A0 = {g['text']}")
        lines.append(f"  dim_R Z_k = {d['zk_real_dim']}, dim_C p' = {d['p_complex_dim']}, "
                     f"dim_R k' = {d['k_real_dim']}")
        for f in d["factors"]:
            alias = f" (= {', '.join(f['aliases'])})" if f["aliases"] else ""
            lines.append(f"  factor {f['label']}{alias}: dim_C {f['complex_dim']}, "
                         f"dim_R [W,W] {f['k_real_dim']}, rank {f['rank']}, commutant {f['commutant_real_dim']}")
        if d["prym"]:
            p = d["prym"]
            lines.append(f"  Prym split: dim_C W1 = {p['W1_complex_dim']}, dim_C W2 = {p['W2_complex_dim']}, "
                         f"stable {p['W1_stable'] and p['W2_stable']}")
        if d["crosscheck"]:
            bad = d["crosscheck"]["disagreements"]
            lines.append("  float crosscheck: " + ("agrees" if not bad else "; ".join(bad)))
        for item in d["inconsistencies"]:
            lines.append(f"  note: printed {item['printed']} inconsistent: {item['check']}")
        for m in d["comparison"]["mismatches"]:
            lines.append(f"  MISMATCH {m}")
        return "\n".join(lines)
