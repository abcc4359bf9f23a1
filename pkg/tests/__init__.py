#!/usr/bin/env python
# coding=utf-8
"""Test base files
"""
import os
from fractions import Fraction

VERBOSE = os.environ.get("WEAKESTLINK_VERBOSE_TESTS", False)

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

# WPA2 keyed by an 8-character alphanumeric passphrase
WPA2_ALNUM8_CONFIG = """\
# office access point
wlan_protocol = WPA2
passphrase_length = 8
passphrase_charset = alphanumeric
"""


def read(path):
    """Return the contents of a file."""
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def write(path, contents):
    """Write ``contents`` to ``path``, overwriting it."""
    with open(path, "w", encoding="utf-8") as fh:
        print(contents, file=fh, end="")


def rel_close(actual, expected, tolerance):
    """True if ``actual`` is within relative ``tolerance`` of ``expected``, exactly."""
    actual, expected = Fraction(actual), Fraction(expected)
    return abs(actual - expected) <= abs(expected) * Fraction(tolerance)
