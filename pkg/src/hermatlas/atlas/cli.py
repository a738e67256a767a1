"""Command line entry point: ``hermatlas run`` and ``hermatlas check``."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from ..errors import AtlasError
from .config import parse_document
from .fixtures import FamilyFixture, fixture_ids
from .runner import BACKENDS, run_all, run_family


def _fixture_from_file(path: str) -> FamilyFixture:
    text = Path(path).read_text(encoding="utf-8")
    doc = parse_document(text)
    fid = doc["label"] or Path(path).stem
    if "cover" in doc:
        return FamilyFixture(fid, cover=doc["cover"])
    return FamilyFixture(fid, generators=tuple(m.to_text() for m in doc["matrices"]))


def _emit(reports, fmt: str, out: str | None) -> None:
    if fmt == "json":
        payload = [r.data for r in reports]
        text = json.dumps(payload[0] if len(payload) == 1 else payload, ensure_ascii=False, indent=2)
    else:
        text = "\n\n".join(r.to_text() for r in reports)
    if out:
        Path(out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)


def _cmd_run(args) -> int:
    if args.input:
        reports = [run_family(_fixture_from_file(args.input), args.backend)]
    else:
        reports = run_all(args.family or None, args.backend).reports
    _emit(reports, args.emit, args.out)
    return min(sum(not r.passed for r in reports), 125)


def _cmd_check(args) -> int:
    summary = run_all(backend=args.backend)
    for r in summary.reports:
        mark = "ok  " if r.passed else "FAIL"
        print(f"{mark} {r.fixture:<10} {r.label}")
        for m in r.data["comparison"]["mismatches"]:
            print(f"       {m}")
    print(f"{len(summary) - len(summary.failures)}/{len(summary)} fixtures pass")
    return summary.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermatlas",
                                     description="Uniformizing symmetric spaces of families of Galois covers.")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run the pipeline on fixtures or an input document")
    src = run.add_mutually_exclusive_group()
    src.add_argument("--family", action="append", metavar="ID",
                     help=f"fixture id, repeatable (default: all of {', '.join(fixture_ids())})")
    src.add_argument("--input", metavar="PATH", help="configuration document (YAML)")
    run.add_argument("--backend", choices=BACKENDS, default="exact")
    run.add_argument("--emit", choices=("json", "text"), default="text")
    run.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    run.set_defaults(func=_cmd_run)

    check = sub.add_parser("check", help="regression run over every fixture; exit code = failures")
    check.add_argument("--backend", choices=BACKENDS, default="exact")
    check.set_defaults(func=_cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (AtlasError, OSError) as exc:
        print(f"hermatlas: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
