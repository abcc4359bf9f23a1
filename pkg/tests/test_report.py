#!/usr/bin/env python
# coding=utf-8
"""Test weakestlink.report
"""
import csv
import io
import json
from fractions import Fraction

import pytest
import yaml

from weakestlink.config import build_stack, parse_config
from weakestlink.exceptions import ReportFormatError, WeakestLinkException
from weakestlink.report import (
    get_report_schema,
    keyspace_text,
    render_report,
    render_rows,
    report_status,
    report_to_dict,
    validate_json_schema,
)
from weakestlink.stack import weakest_link

from . import WPA2_ALNUM8_CONFIG


@pytest.fixture(scope="function")
def report():
    config = parse_config(WPA2_ALNUM8_CONFIG + "descriptive_component = authentication:PEAP\n")
    return weakest_link(build_stack(config))


# report_to_dict {{{1
def test_report_to_dict_exact(report):
    data = report_to_dict(report)
    passphrase, cipher, peap = data["assessments"]
    assert passphrase["component_id"] == "passphrase"
    assert passphrase["rank"] == 1
    assert passphrase["keyspace"] == str(62 ** 8)
    assert Fraction(int(passphrase["duration"]["numerator"]), int(passphrase["duration"]["denominator"])) == Fraction(62 ** 8, 10 ** 12)
    assert passphrase["duration_text"] == "3.63900176 minutes"
    assert passphrase["secure"] is False
    assert cipher["keyspace"] == str(2 ** 256)
    assert cipher["rank"] == 2
    assert peap["rank"] is None
    assert peap["keyspace"] is None
    assert data["status"] == "insecure"
    assert data["budget"]["years_text"] == "89.78"
    assert data["attack"]["rate_keys_per_second"] == "1000000000000"
    assert data["recommendation"]["integer_ceiling"] == 481
    assert data["recommendation"]["named_set"] is None


def test_report_schema_accepts(report):
    validate_json_schema(report_to_dict(report), get_report_schema())


def test_report_schema_rejects(report):
    data = report_to_dict(report)
    data["assessments"][0]["keyspace"] = 12.5
    with pytest.raises(WeakestLinkException):
        validate_json_schema(data, get_report_schema())


# render_report {{{1
def test_render_json(report):
    data = json.loads(render_report(report, "json"))
    assert data["weakest_id"] == "passphrase"
    assert data["overall_secure"] is False


def test_render_yaml(report):
    data = yaml.safe_load(render_report(report, "yaml"))
    assert data["assessments"][0]["keyspace"] == str(62 ** 8)
    assert data == report_to_dict(report)


def test_render_csv(report):
    rows = list(csv.reader(io.StringIO(render_report(report, "csv"))))
    assert rows[0][0] == "component"
    assert rows[1][:2] == ["passphrase", "passphrase"]
    assert rows[1][3] == str(62 ** 8)
    assert rows[1][-2:] == ["insecure", "false"]
    assert rows[3][3] == ""


@pytest.mark.parametrize("output_format", ("text", "markdown"))
def test_render_human(report, output_format):
    document = render_report(report, output_format)
    assert "*passphrase" in document
    assert "3.63900176 minutes" in document
    assert "INSECURE" in document
    assert "generated completely randomly" in document
    assert "PEAP (authentication layer)" in document


def test_render_markdown_table(report):
    lines = render_report(report, "markdown").splitlines()
    assert lines[0] == "## Weakest-link audit"
    assert any(line.startswith("|--") for line in lines)


def test_render_deterministic(report):
    assert render_report(report, "json") == render_report(report, "json")


def test_render_unknown_format(report):
    with pytest.raises(ReportFormatError):
        render_report(report, "xml")


def test_report_status(report):
    assert report_status(report) == 1


# helpers {{{1
def test_render_rows_text():
    assert render_rows(["a", "bb"], [[1, None], ["ccc", 2]], "text") == "a    bb\n---  --\n1\nccc  2\n"


def test_render_rows_markdown():
    assert render_rows(["a", "b"], [[1, 2]], "markdown") == "| a | b |\n|---|---|\n| 1 | 2 |\n"


def test_render_rows_csv():
    assert render_rows(["a", "b"], [["x,y", 2]], "csv") == 'a,b\n"x,y",2\n'


def test_render_rows_bad_format():
    with pytest.raises(ReportFormatError):
        render_rows(["a"], [], "json")


@pytest.mark.parametrize("keyspace, expected", ((None, ""), (100000, "100000"), (2 ** 256, "1.15792089×10^77")))
def test_keyspace_text(keyspace, expected):
    assert keyspace_text(keyspace) == expected
