#!/usr/bin/env python
"""Regenerate the cipher, passphrase and minimum-charset strength tables.

Every cell is computed from the keyspace model on each call; nothing is
stored.  ``--which 1`` selects cipher key strength, ``2`` passphrase
strength by length and character set, ``3`` the minimum character-set
size per passphrase length.

Attributes:
    log (logging.Logger): the log object for the module.
    TABLE_NUMBERS (tuple): the tables ``render_tables`` knows.
    CIPHER_ROWS (tuple): (protocol, bits, where the key is typically found).
    PASSPHRASE_ROWS (tuple): (protocol, bits, length, variant) per passphrase-table row.
    PASSPHRASE_CHARSETS (tuple): the passphrase-table column sets, smallest first.
    MINIMUM_ROWS (tuple): (protocol, bits, length) per minimum-charset row.

"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

import mpmath

from weakestlink.constants import OUTPUT_FORMATS
from weakestlink.duration import format_significant
from weakestlink.exceptions import ReportFormatError
from weakestlink.keyspace import AttackModel, CharacterSet, LifetimeBudget, PassphrasePolicy, get_character_set
from weakestlink.report import check_format, fraction_to_dict, render_rows
from weakestlink.stack import ComponentAssessment, SecurityComponent, assess_component, cipher_spec_for, recommend_min_charset
from weakestlink.utils import format_json, format_yaml

log = logging.getLogger(__name__)

TABLE_NUMBERS = (1, 2, 3)

CIPHER_ROWS = (
    ("WEP", 40, "WEP (64-bit key)"),
    ("WEP", 104, "WEP (128-bit key)"),
    ("WPA2", 256, "WPA / WPA2"),
)

PASSPHRASE_ROWS = (
    ("WEP", 40, 5, None),
    ("WPA2", 256, 8, None),
    ("WEP", 104, 13, None),
    ("WPA2", 256, 16, None),
    ("WPA2", 256, 32, None),
    ("WPA2", 256, 63, "calculated"),
    ("WPA2", 256, 63, "practical"),
)

PASSPHRASE_CHARSETS = ("digits", "lowercase", "letters-one-case-plus-digits", "mixed-case-letters", "alphanumeric")

MINIMUM_ROWS = (
    ("WEP", 40, 5),
    ("WPA2", 256, 8),
    ("WEP", 104, 13),
    ("WPA2", 256, 16),
    ("WPA2", 256, 32),
    ("WPA2", 256, 63),
)

TITLES = {
    1: "Cipher key strength",
    2: "Passphrase strength by length and character set",
    3: "Smallest secure character set by passphrase length",
}


def _key_label(protocol: str, bits: int) -> str:
    if protocol == "WEP":
        return "{}-bit WEP".format(bits)
    return "{}-bit WPA/WPA2 PSK".format(bits)


# table rows {{{1
@dataclass(frozen=True)
class CipherRow:
    """One row of the cipher strength table."""

    key_bits: int
    found_in: str
    assessment: ComponentAssessment


@dataclass(frozen=True)
class PassphraseRow:
    """One row of the passphrase strength table; one cell per column set.

    ``variant`` is ``calculated`` for the uncapped 63-character row,
    ``practical`` for the capped one, None otherwise.

    """

    key_label: str
    length: int
    variant: Optional[str]
    cipher_keyspace: int
    cells: Tuple[ComponentAssessment, ...]


@dataclass(frozen=True)
class MinimumRow:
    """One row of the minimum character-set table."""

    key_label: str
    length: int
    real_value: mpmath.mpf
    integer_ceiling: int
    named_set: Optional[CharacterSet]


def cipher_strength_table(attack: Optional[AttackModel] = None, budget: Optional[LifetimeBudget] = None) -> Tuple[CipherRow, ...]:
    """Compute the cipher strength rows: 40-bit and 104-bit WEP, 256-bit WPA/WPA2."""
    attack = attack or AttackModel()
    budget = budget or LifetimeBudget()
    rows = []
    for protocol, bits, found_in in CIPHER_ROWS:
        component = SecurityComponent.cipher("{}-{}".format(protocol, bits), cipher_spec_for(protocol, bits))
        rows.append(CipherRow(key_bits=bits, found_in=found_in, assessment=assess_component(component, attack, budget)))
    return tuple(rows)


def passphrase_strength_table(attack: Optional[AttackModel] = None, budget: Optional[LifetimeBudget] = None) -> Tuple[PassphraseRow, ...]:
    """Compute the passphrase strength rows.

    Each cell is a passphrase component governed by the row's cipher, so it
    goes through the same capping as an audit.  The ``calculated`` row is
    left ungoverned to show the raw ``s ** L`` figure.

    """
    attack = attack or AttackModel()
    budget = budget or LifetimeBudget()
    charsets = [get_character_set(name) for name in PASSPHRASE_CHARSETS]
    rows = []
    for protocol, bits, length, variant in PASSPHRASE_ROWS:
        cipher = cipher_spec_for(protocol, bits)
        governing = None if variant == "calculated" else cipher
        cells = []
        for charset in charsets:
            component = SecurityComponent.passphrase("{}-{}".format(charset.name, length), PassphrasePolicy(charset=charset, length=length), governing=governing)
            cells.append(assess_component(component, attack, budget))
        rows.append(PassphraseRow(key_label=_key_label(protocol, bits), length=length, variant=variant, cipher_keyspace=cipher.keyspace, cells=tuple(cells)))
    return tuple(rows)


def minimum_charset_table(attack: Optional[AttackModel] = None, budget: Optional[LifetimeBudget] = None) -> Tuple[MinimumRow, ...]:
    """Compute the minimum character-set size for each passphrase length in MINIMUM_ROWS."""
    attack = attack or AttackModel()
    budget = budget or LifetimeBudget()
    rows = []
    for protocol, bits, length in MINIMUM_ROWS:
        recommendation = recommend_min_charset(length, budget, attack)
        rows.append(
            MinimumRow(
                key_label=_key_label(protocol, bits),
                length=length,
                real_value=recommendation.real_value,
                integer_ceiling=recommendation.integer_ceiling,
                named_set=recommendation.named_set,
            )
        )
    return tuple(rows)


# human rows {{{1
def _table_rows(number: int, attack: AttackModel, budget: LifetimeBudget) -> Tuple[List[str], List[List[Any]]]:
    if number == 1:
        header = ["key length (bits)", "typically found in", "keyspace", "duration of cracking"]
        return header, [[row.key_bits, row.found_in, "2^{}".format(row.key_bits), row.assessment.duration_text] for row in cipher_strength_table(attack, budget)]
    if number == 2:
        charsets = [get_character_set(name) for name in PASSPHRASE_CHARSETS]
        header = ["encryption key", "passphrase length"] + ["{} character set".format(charset.size) for charset in charsets]
        rows = []
        for row in passphrase_strength_table(attack, budget):
            length_text = "{} characters".format(row.length)
            cells = [_variant_cell_text(cell, row) for cell in row.cells]
            rows.append([row.key_label, length_text] + cells)
        return header, rows
    header = ["encryption key", "passphrase length", "minimum set size", "integer minimum", "smallest named set"]
    rows = []
    for minimum in minimum_charset_table(attack, budget):
        named = "{} ({})".format(minimum.named_set.name, minimum.named_set.size) if minimum.named_set else "none"
        rows.append([minimum.key_label, "{} characters".format(minimum.length), format_significant(minimum.real_value), minimum.integer_ceiling, named])
    return header, rows


def _variant_cell_text(cell: ComponentAssessment, row: PassphraseRow) -> str:
    """Mark cells of the 63-character rows whose value depends on capping."""
    assert cell.keyspace is not None
    if row.variant == "calculated" and cell.keyspace > row.cipher_keyspace:
        return "{} (calculated)".format(cell.duration_text)
    if row.variant == "practical" and cell.capped:
        return "{} (practical)".format(cell.duration_text)
    return cell.duration_text


# machine data {{{1
def _assessment_data(assessment: ComponentAssessment) -> Dict[str, Any]:
    assert assessment.keyspace is not None and assessment.duration is not None
    return {
        "keyspace": str(assessment.keyspace),
        "duration": fraction_to_dict(assessment.duration),
        "duration_text": assessment.duration_text,
        "secure": assessment.secure,
        "capped": assessment.capped,
    }


def tables_to_dict(which: Iterable[int] = TABLE_NUMBERS, attack: Optional[AttackModel] = None, budget: Optional[LifetimeBudget] = None) -> Dict[str, Any]:
    """Return the selected tables as json-able data with exact values."""
    attack = attack or AttackModel()
    budget = budget or LifetimeBudget()
    data: Dict[str, Any] = {}
    for number in check_tables(which):
        key = "table_{}".format(number)
        if number == 1:
            rows = [dict(key_bits=row.key_bits, found_in=row.found_in, **_assessment_data(row.assessment)) for row in cipher_strength_table(attack, budget)]
        elif number == 2:
            rows = [
                {
                    "key": row.key_label,
                    "length": row.length,
                    "variant": row.variant,
                    "cells": {name: _assessment_data(cell) for name, cell in zip(PASSPHRASE_CHARSETS, row.cells)},
                }
                for row in passphrase_strength_table(attack, budget)
            ]
        else:
            rows = [
                {
                    "key": row.key_label,
                    "length": row.length,
                    "real_value": format_significant(row.real_value, digits=20),
                    "real_text": format_significant(row.real_value),
                    "integer_ceiling": row.integer_ceiling,
                    "named_set": row.named_set.name if row.named_set else None,
                }
                for row in minimum_charset_table(attack, budget)
            ]
        data[key] = {"title": TITLES[number], "rows": rows}
    return data


def check_tables(which: Iterable[int]) -> Tuple[int, ...]:
    """Return the sorted, de-duplicated table numbers.

    Raises:
        ReportFormatError: on a table number other than 1, 2 or 3.

    """
    numbers = tuple(sorted(set(which)))
    unknown = [number for number in numbers if number not in TABLE_NUMBERS]
    if unknown or not numbers:
        raise ReportFormatError("Unknown tables {}; choose from {}".format(unknown or "(none)", TABLE_NUMBERS))
    return numbers


# render_tables {{{1
def render_tables(
    which: Iterable[int] = TABLE_NUMBERS, output_format: str = "text", attack: Optional[AttackModel] = None, budget: Optional[LifetimeBudget] = None
) -> str:
    """Regenerate the selected tables.

    Output is deterministic: the same tables, format, attack and budget
    give byte-identical documents.

    Args:
        which (iterable, optional): table numbers from 1, 2 and 3.  Defaults to all.
        output_format (str, optional): one of ``OUTPUT_FORMATS``.  Defaults to ``text``.
        attack (AttackModel, optional): defaults to 10**12 keys/second.
        budget (LifetimeBudget, optional): defaults to 89.78 years.

    Returns:
        str: the document.

    Raises:
        ReportFormatError: on an unknown format or table number.

    """
    check_format(output_format, OUTPUT_FORMATS)
    numbers = check_tables(which)
    attack = attack or AttackModel()
    budget = budget or LifetimeBudget()
    log.debug("Rendering tables {} as {}".format(numbers, output_format))
    if output_format == "json":
        return format_json(tables_to_dict(numbers, attack, budget)) + "\n"
    if output_format == "yaml":
        return format_yaml(tables_to_dict(numbers, attack, budget))
    sections = []
    for number in numbers:
        header, rows = _table_rows(number, attack, budget)
        table = render_rows(header, rows, output_format)
        if output_format == "markdown":
            sections.append("### {}\n\n{}".format(TITLES[number], table))
        elif output_format == "csv":
            sections.append(render_rows([TITLES[number]], [], "csv") + table)
        else:
            sections.append("{}\n\n{}".format(TITLES[number], table))
    return "\n".join(sections)
