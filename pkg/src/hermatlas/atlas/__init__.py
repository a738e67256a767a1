"""Family fixtures, configuration documents, pipeline runs and reports."""
from .config import parse_cover_spec, parse_document, parse_matrix, serialize_document
from .fixtures import FIXTURES, Expected, FamilyFixture, fixture_ids, get_fixture
from .report import Report, report_schema, validate_report
from .runner import BACKENDS, FixtureRunError, RunSummary, run_all, run_family

__all__ = [
    "BACKENDS",
    "Expected",
    "FIXTURES",
    "FamilyFixture",
    "FixtureRunError",
    "Report",
    "RunSummary",
    "fixture_ids",
    "get_fixture",
    "parse_cover_spec",
    "parse_document",
    "parse_matrix",
    "report_schema",
    "run_all",
    "run_family",
    "serialize_document",
    "validate_report",
]
