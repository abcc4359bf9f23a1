#!/usr/bin/env python
"""Audit report rendering.

Human formats (``text``, ``markdown``) show the formatted durations;
machine formats (``json``, ``yaml``, ``csv``) also carry the exact values:
keyspaces as full decimal strings and durations as numerator/denominator
strings.  JSON reports are validated against ``data/report_schema.json``
before they're emitted.

Attributes:
    log (logging.Logger): the log object for the module.
    REPORT_SCHEMA_PATH (str): path to the audit report jsonschema.
    LARGE_KEYSPACE (int): keyspaces from here up print in scientific notation
        in the human formats.

"""
import csv
import io
import logging
import os
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

import jsonschema

from weakestlink.constants import OUTPUT_FORMATS, STATUSES
from weakestlink.duration import format_significant
from weakestlink.exceptions import ReportFormatError, WeakestLinkException
from weakestlink.stack import ComponentAssessment, WeakestLinkReport
from weakestlink.utils import format_json, format_yaml, load_json_or_yaml

log = logging.getLogger(__name__)

REPORT_SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "data", "report_schema.json")
LARGE_KEYSPACE = 10 ** 9

TABLE_FORMATS = ("text", "markdown", "csv")


def check_format(output_format: str, allowed: Sequence[str] = OUTPUT_FORMATS) -> str:
    """Return ``output_format`` if it's one of ``allowed``.

    Raises:
        ReportFormatError: otherwise.

    """
    if output_format not in allowed:
        raise ReportFormatError("Unknown output format {!r}; choose from {}".format(output_format, ", ".join(allowed)))
    return output_format


# validate_json_schema {{{1
def validate_json_schema(data: Dict[str, Any], schema: Dict[str, Any], name: str = "report") -> None:
    """Given data and a jsonschema, let's validate it.

    Args:
        data (dict): the json to validate.
        schema (dict): the jsonschema to validate against.
        name (str, optional): the name of the json, for exception messages.
            Defaults to "report".

    Raises:
        WeakestLinkException: on failure

    """
    try:
        jsonschema.validate(data, schema)
    except jsonschema.exceptions.ValidationError as exc:
        raise WeakestLinkException("Can't validate {} schema!\n{}".format(name, str(exc)))


def get_report_schema() -> Dict[str, Any]:
    """Load the audit report jsonschema."""
    return load_json_or_yaml(REPORT_SCHEMA_PATH, is_path=True, exception=WeakestLinkException)


# row rendering {{{1
def render_rows(header: Sequence[str], rows: Sequence[Sequence[Any]], output_format: str) -> str:
    """Render a header plus rows as an aligned text table, a markdown table or csv.

    Args:
        header (list): the column titles.
        rows (list): one sequence of cell values per row.
        output_format (str): ``text``, ``markdown`` or ``csv``.

    Returns:
        str: the rendered table, newline-terminated.

    """
    check_format(output_format, TABLE_FORMATS)
    cells = [[str(cell) for cell in header]] + [["" if cell is None else str(cell) for cell in row] for row in rows]
    if output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerows(cells)
        return buf.getvalue()
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    if output_format == "markdown":
        lines = ["| " + " | ".join(cell.ljust(width) for cell, width in zip(row, widths)) + " |" for row in cells]
        lines.insert(1, "|" + "|".join("-" * (width + 2) for width in widths) + "|")
    else:
        lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in cells]
        lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines) + "\n"


def fraction_to_dict(value: Fraction) -> Dict[str, str]:
    """Return the exact numerator/denominator strings of ``value``."""
    value = Fraction(value)
    return {"numerator": str(value.numerator), "denominator": str(value.denominator)}


def keyspace_text(keyspace: Optional[int]) -> str:
    """Format a keyspace for the human formats: exact below 10**9, scientific above."""
    if keyspace is None:
        return ""
    if keyspace < LARGE_KEYSPACE:
        return str(keyspace)
    return format_significant(keyspace, scientific=True)


def verdict_text(assessment: ComponentAssessment) -> str:
    """Return ``secure``, ``insecure`` or an empty string for descriptive components."""
    if assessment.secure is None:
        return ""
    return "secure" if assessment.secure else "insecure"


def report_status(report: WeakestLinkReport) -> int:
    """Return the process exit status for ``report``: 0 secure, 1 insecure."""
    return STATUSES["secure"] if report.overall_secure else STATUSES["insecure"]


# report_to_dict {{{1
def report_to_dict(report: WeakestLinkReport) -> Dict[str, Any]:
    """Convert a report to plain json-able data with exact values."""
    assessments = []
    rank = 0
    for assessment in report.assessments:
        if assessment.keyspace is not None:
            rank += 1
        assessments.append(
            {
                "component_id": assessment.component_id,
                "kind": assessment.kind,
                "label": assessment.label,
                "rank": rank if assessment.keyspace is not None else None,
                "keyspace": str(assessment.keyspace) if assessment.keyspace is not None else None,
                "duration": fraction_to_dict(assessment.duration) if assessment.duration is not None else None,
                "duration_text": assessment.duration_text,
                "secure": assessment.secure,
                "capped": assessment.capped,
            }
        )
    recommendation = report.recommendation
    return {
        "attack": {
            "rate_keys_per_second": str(report.attack.rate_keys_per_second),
            "description": report.attack.description,
        },
        "budget": {
            "years": fraction_to_dict(report.budget.years),
            "years_text": format_significant(report.budget.years),
            "seconds": fraction_to_dict(report.budget.seconds),
        },
        "assessments": assessments,
        "weakest_id": report.weakest_id,
        "overall_secure": report.overall_secure,
        "status": "secure" if report.overall_secure else "insecure",
        "recommendation": {
            "text": report.recommendation_text,
            "length": recommendation.length if recommendation else None,
            "real_value": format_significant(recommendation.real_value) if recommendation else None,
            "integer_ceiling": recommendation.integer_ceiling if recommendation else None,
            "named_set": recommendation.named_set.name if recommendation and recommendation.named_set else None,
        },
    }


def _human_rows(report: WeakestLinkReport) -> List[List[str]]:
    rows = []
    for assessment in report.assessments:
        marker = "*" if assessment.component_id == report.weakest_id else ""
        rows.append(
            [
                marker + assessment.component_id,
                assessment.kind,
                assessment.label,
                keyspace_text(assessment.keyspace) + (" (capped)" if assessment.capped else ""),
                assessment.duration_text,
                verdict_text(assessment),
            ]
        )
    return rows


HUMAN_HEADER = ("component", "kind", "description", "keyspace", "worst-case crack time", "verdict")
CSV_HEADER = ("component", "kind", "description", "keyspace", "duration_numerator", "duration_denominator", "duration_text", "verdict", "capped")


def _csv_rows(report: WeakestLinkReport) -> List[List[Any]]:
    rows = []
    for assessment in report.assessments:
        duration = fraction_to_dict(assessment.duration) if assessment.duration is not None else {"numerator": "", "denominator": ""}
        rows.append(
            [
                assessment.component_id,
                assessment.kind,
                assessment.label,
                "" if assessment.keyspace is None else str(assessment.keyspace),
                duration["numerator"],
                duration["denominator"],
                assessment.duration_text,
                verdict_text(assessment),
                str(assessment.capped).lower(),
            ]
        )
    return rows


# render_report {{{1
def render_report(report: WeakestLinkReport, output_format: str = "text") -> str:
    """Render a weakest-link report.

    Args:
        report (WeakestLinkReport): the ranked assessment.
        output_format (str, optional): one of ``OUTPUT_FORMATS``.  Defaults to ``text``.

    Returns:
        str: the document, newline-terminated.

    Raises:
        ReportFormatError: on an unknown format.
        WeakestLinkException: if the json report fails schema validation.

    """
    check_format(output_format)
    if output_format in ("json", "yaml"):
        data = report_to_dict(report)
        if output_format == "json":
            validate_json_schema(data, get_report_schema(), name="audit report")
            return format_json(data) + "\n"
        return format_yaml(data)
    if output_format == "csv":
        return render_rows(CSV_HEADER, _csv_rows(report), "csv")

    verdict = "SECURE" if report.overall_secure else "INSECURE"
    summary = [
        "Attack model: {} ({} keys/second)".format(report.attack.description, report.attack.rate_keys_per_second),
        "Lifetime budget: {} years".format(format_significant(report.budget.years)),
        "Weakest link: {} ({})".format(report.weakest_id, report.weakest.duration_text),
        "Overall verdict: {}".format(verdict),
    ]
    table = render_rows(HUMAN_HEADER, _human_rows(report), output_format)
    if output_format == "markdown":
        return "## Weakest-link audit\n\n{}\n\n{}\n{}\n".format("\n".join("- " + line for line in summary), table, report.recommendation_text)
    return "Weakest-link audit\n\n{}\n\n{}\n{}\n".format("\n".join(summary), table, report.recommendation_text)
