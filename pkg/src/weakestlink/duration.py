#!/usr/bin/env python
"""Duration formatting in the style of the crack-time tables.

Durations are scaled to the largest unit they reach (nanoseconds up to
365-day years) and printed with 9 significant digits, rounded half-even
from the exact Fraction.  Year counts of a billion or more switch to
scientific notation, e.g. ``1.51067952×10^9 years``.

Attributes:
    UNITS (tuple): (unit name, seconds per unit), smallest first.
    SCIENTIFIC_YEARS (int): year count from which scientific notation is used.

"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

import mpmath

from weakestlink.constants import SECONDS_PER_DAY, SECONDS_PER_YEAR, SIGNIFICANT_DIGITS
from weakestlink.exceptions import InvalidSpecError

UNITS: Tuple[Tuple[str, Fraction], ...] = (
    ("nanoseconds", Fraction(1, 10 ** 9)),
    ("microseconds", Fraction(1, 10 ** 6)),
    ("milliseconds", Fraction(1, 10 ** 3)),
    ("seconds", Fraction(1)),
    ("minutes", Fraction(60)),
    ("hours", Fraction(3600)),
    ("days", Fraction(SECONDS_PER_DAY)),
    ("years", Fraction(SECONDS_PER_YEAR)),
)
SCIENTIFIC_YEARS = 10 ** 9
TIMES_TEN = "×10^"

_DURATION_REGEX = re.compile(r"^\s*(?P<mantissa>\d+(?:\.\d+)?)(?:\s*(?:×|x|\*)\s*10\^(?P<exponent>-?\d+))?\s+(?P<unit>[A-Za-z-]+)\s*$")


@dataclass(frozen=True)
class FormattedDuration:
    """A duration ready for display.

    Attributes:
        value_text (str): decimal or scientific mantissa text.
        unit (str): one of the ``UNITS`` names.

    """

    value_text: str
    unit: str

    def __str__(self) -> str:
        """Return e.g. ``28.7170471 days``."""
        return "{} {}".format(self.value_text, self.unit)


def to_exact(value: Union[int, Fraction, mpmath.mpf]) -> Fraction:
    """Convert an int, Fraction or mpmath real to an exact Fraction."""
    if isinstance(value, mpmath.mpf):
        mantissa, exponent = int(value.man), int(value.exp)
        return Fraction(mantissa) * Fraction(2) ** exponent
    return Fraction(value)


def _floor_log10(value: Fraction) -> int:
    exponent = len(str(value.numerator)) - len(str(value.denominator))
    while Fraction(10) ** exponent > value:
        exponent -= 1
    while Fraction(10) ** (exponent + 1) <= value:
        exponent += 1
    return exponent


def round_significant(value: Fraction, digits: int) -> Tuple[str, int]:
    """Round a positive ``value`` to ``digits`` significant digits, half-even.

    Returns:
        tuple: (digit string of length ``digits``, decimal exponent of the
            leading digit).

    """
    exponent = _floor_log10(value)
    mantissa = round(value * Fraction(10) ** (digits - 1 - exponent))
    if mantissa == 10 ** digits:
        mantissa //= 10
        exponent += 1
    return str(mantissa), exponent


def _rounded(value: Fraction, digits: int) -> Fraction:
    if value == 0:
        return value
    mantissa, exponent = round_significant(value, digits)
    return Fraction(int(mantissa)) * Fraction(10) ** (exponent - digits + 1)


def format_significant(value: Union[int, Fraction, mpmath.mpf], digits: int = SIGNIFICANT_DIGITS, scientific: bool = False) -> str:
    """Format a non-negative number with ``digits`` significant digits.

    Trailing zeros after the decimal point are dropped, so 10**5 / 10**12
    seconds in nanoseconds prints as ``100``.

    Args:
        value: the number; Fractions are rounded exactly.
        digits (int, optional): significant digits.  Defaults to 9.
        scientific (bool, optional): print as ``m.mmm×10^e``.  Defaults to False.

    Returns:
        str: the formatted number.

    """
    exact = to_exact(value)
    if exact < 0:
        raise InvalidSpecError("Can't format negative value {}".format(value))
    if exact == 0:
        return "0"
    mantissa, exponent = round_significant(exact, digits)
    if scientific:
        fraction = mantissa[1:].rstrip("0")
        text = mantissa[0] + ("." + fraction if fraction else "")
        return "{}{}{}".format(text, TIMES_TEN, exponent)
    if exponent >= 0:
        whole = mantissa[: exponent + 1].ljust(exponent + 1, "0")
        fraction = mantissa[exponent + 1 :]
    else:
        whole = "0"
        fraction = "0" * (-exponent - 1) + mantissa
    fraction = fraction.rstrip("0")
    return whole + ("." + fraction if fraction else "")


def format_duration(duration: Union[int, Fraction], digits: int = SIGNIFICANT_DIGITS) -> FormattedDuration:
    """Scale an exact duration in seconds to its display unit.

    Units: below 1 μs nanoseconds, below 1 ms microseconds, below 1 s
    milliseconds, then seconds, minutes, hours, days and 365-day years.

    Args:
        duration (Fraction): seconds, >= 0.
        digits (int, optional): significant digits.  Defaults to 9.

    Returns:
        FormattedDuration: the scaled value and unit.

    """
    seconds = Fraction(duration)
    if seconds < 0:
        raise InvalidSpecError("Durations can't be negative: {}".format(duration))
    index = 0
    for position, (_, size) in enumerate(UNITS):
        if seconds >= size:
            index = position
    # a rounding carry can reach the next unit: 0.999999999999 s is 1 second, not 1000 milliseconds
    scaled = _rounded(seconds / UNITS[index][1], digits)
    while index + 1 < len(UNITS) and scaled * UNITS[index][1] >= UNITS[index + 1][1]:
        index += 1
        scaled = _rounded(seconds / UNITS[index][1], digits)
    unit = UNITS[index][0]
    scientific = unit == "years" and scaled >= SCIENTIFIC_YEARS
    return FormattedDuration(value_text=format_significant(scaled, digits=digits, scientific=scientific), unit=unit)


def parse_duration(text: str) -> Fraction:
    """Parse ``format_duration`` output back to exact seconds.

    The hyphenated unit spellings of the printed tables (``micro-seconds``)
    are accepted too.

    Raises:
        InvalidSpecError: if ``text`` isn't a formatted duration.

    """
    match = _DURATION_REGEX.match(text)
    if match is None:
        raise InvalidSpecError("Not a formatted duration: {!r}".format(text))
    unit = match.group("unit").replace("-", "").lower()
    if not unit.endswith("s"):
        unit += "s"
    sizes = dict(UNITS)
    if unit not in sizes:
        raise InvalidSpecError("Unknown duration unit in {!r}".format(text))
    value = Fraction(match.group("mantissa"))
    if match.group("exponent") is not None:
        value *= Fraction(10) ** int(match.group("exponent"))
    return value * sizes[unit]
