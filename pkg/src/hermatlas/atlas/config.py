"""Configuration documents: monodromy data or explicit generator matrices.

A document is a flat YAML mapping::

    group: [3]
    base_genus: 1
    branch: [1, 1, 1]
    label: "(6e)"

or, with explicit unitary generators on the holomorphic forms::

    generators: ["diag(z4^3,z4^3,z4)"]

Exactly one of ``branch`` and ``generators`` is allowed.
"""
from __future__ import annotations

import math

import yaml

from ..covers import AbelianGroup, CoverSpec
from ..cyclotomic import CycMatrix, parse_cyc
from ..errors import ParseError

__all__ = ["parse_cover_spec", "parse_document", "serialize_document", "parse_matrix", "split_top_level"]

_KEYS = ("group", "base_genus", "branch", "generators", "label")


def split_top_level(text: str) -> list[str]:
    """Split on commas that are not nested inside brackets or parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced brackets in {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ValueError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_matrix(text: str) -> CycMatrix:
    """``diag(a,b,...)`` or ``[[a,b],[c,d]]`` with cyclotomic entries."""
    s = text.strip()
    if s.startswith("diag(") and s.endswith(")"):
        entries = [parse_cyc(e) for e in split_top_level(s[5:-1])]
        n = math.lcm(*(e.conductor for e in entries))
        return CycMatrix.diag([e.lift(n) for e in entries], n)
    if s.startswith("[[") and s.endswith("]]"):
        rows = []
        for r in split_top_level(s[1:-1]):
            if not (r.startswith("[") and r.endswith("]")):
                raise ValueError(f"malformed matrix row {r!r}")
            rows.append([parse_cyc(e) for e in split_top_level(r[1:-1])])
        if len({len(r) for r in rows}) != 1:
            raise ValueError("matrix rows have different lengths")
        n = math.lcm(*(e.conductor for r in rows for e in r))
        return CycMatrix([[e.lift(n) for e in r] for r in rows], n)
    raise ValueError(f"matrix must be diag(...) or [[...],...], got {text!r}")


def _key_lines(text: str) -> dict:
    try:
        node = yaml.compose(text)
    except yaml.YAMLError:
        return {}
    if not isinstance(node, yaml.MappingNode):
        return {}
    return {k.value: k.start_mark.line + 1 for k, _ in node.value}


def _int(value, key, line) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"expected an integer, got {value!r}", key=key, line=line)
    return value


def parse_document(text: str) -> dict:
    """Validated contents: ``{"cover": CoverSpec}`` or ``{"generators": [...], "matrices": [...]}``.

    Both forms carry ``"label"`` (possibly None).
    """
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise ParseError(f"malformed document: {getattr(exc, 'problem', exc)}",
                         line=mark.line + 1 if mark else None) from None
    if not isinstance(data, dict):
        raise ParseError("document must be a mapping", line=1)
    lines = _key_lines(text)
    for key in data:
        if key not in _KEYS:
            raise ParseError("unknown key", key=key, line=lines.get(key))
    has_branch, has_gens = "branch" in data, "generators" in data
    if has_branch == has_gens:
        raise ParseError("exactly one of 'branch' and 'generators' is required",
                         key="branch" if has_branch else None, line=lines.get("generators"))
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise ParseError("label must be a string", key="label", line=lines.get("label"))

    if has_gens:
        for key in ("group", "base_genus"):
            if key in data:
                raise ParseError("not allowed together with 'generators'", key=key, line=lines.get(key))
        gens = data["generators"]
        line = lines.get("generators")
        if not isinstance(gens, list) or not gens or not all(isinstance(g, str) for g in gens):
            raise ParseError("expected a non-empty list of matrix strings", key="generators", line=line)
        try:
            mats = [parse_matrix(g) for g in gens]
        except ValueError as exc:
            raise ParseError(str(exc), key="generators", line=line) from None
        n = math.lcm(*(m.conductor for m in mats))
        return {"generators": list(gens), "matrices": [m.lift(n) for m in mats], "label": label}

    for key in ("group", "base_genus"):
        if key not in data:
            raise ParseError("missing required key", key=key)
    group = data["group"]
    if isinstance(group, int) and not isinstance(group, bool):
        group = [group]
    if not isinstance(group, list) or not group:
        raise ParseError("expected a list of invariant factors", key="group", line=lines.get("group"))
    factors = tuple(_int(m, "group", lines.get("group")) for m in group)
    if any(m < 2 for m in factors):
        raise ParseError("invariant factors must be at least 2", key="group", line=lines.get("group"))
    base_genus = _int(data["base_genus"], "base_genus", lines.get("base_genus"))
    branch = data["branch"]
    line = lines.get("branch")
    if not isinstance(branch, list):
        raise ParseError("expected a list of group elements", key="branch", line=line)
    elements = []
    for a in branch:
        if isinstance(a, int) and not isinstance(a, bool):
            a = [a]
        if not isinstance(a, list) or len(a) != len(factors):
            raise ParseError(f"element {a!r} does not have {len(factors)} coordinates", key="branch", line=line)
        elements.append(tuple(_int(x, "branch", line) for x in a))
    try:
        grp = AbelianGroup(factors)
    except ValueError as exc:
        raise ParseError(str(exc), key="group", line=lines.get("group")) from None
    if base_genus < 0:
        raise ParseError("base genus must be non-negative", key="base_genus", line=lines.get("base_genus"))
    # invariant violations surface as the covers-module error, unchanged
    cover = CoverSpec(grp, base_genus, tuple(elements), label=label)
    return {"cover": cover, "label": label}


def parse_cover_spec(text: str):
    """A CoverSpec, or the list of generator matrices for an explicit action."""
    doc = parse_document(text)
    return doc["cover"] if "cover" in doc else doc["matrices"]


def serialize_document(doc: dict) -> str:
    """Canonical text for a parsed document; parse(serialize(x)) == x."""
    out = {}
    if "cover" in doc:
        c = doc["cover"]
        cyclic = len(c.group.invariant_factors) == 1
        out["group"] = list(c.group.invariant_factors)
        out["base_genus"] = c.base_genus
        out["branch"] = [a[0] if cyclic else list(a) for a in c.branch]
    else:
        out["generators"] = [m.to_text() for m in doc["matrices"]]
    if doc.get("label") is not None:
        out["label"] = doc["label"]
    return yaml.safe_dump(out, sort_keys=False, allow_unicode=True, default_flow_style=None)
