#!/usr/bin/env python
"""Desk-scale brute-force oracle.

Enumerates small passphrase spaces for real, to check the ``s ** L``
counting model and to measure how fast this machine walks a keyspace.
Measured throughput is advisory only; verdicts always come from the
analytic path in ``weakestlink.keyspace``.

Candidates come out in odometer order over the declared member order:
the rightmost position varies fastest, so ``000`` is candidate 1 and
``999`` candidate 1000 over the digits.

Attributes:
    log (logging.Logger): the log object for the module.
    SWEEP_MAX_SET_SIZE (int): largest registry set the equivalence sweep enumerates.
    SWEEP_LENGTHS (tuple): lengths swept for every small registry set.

"""
import itertools
import logging
import time
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Tuple, Union

import mpmath

from weakestlink.constants import DEFAULT_CONFIG
from weakestlink.exceptions import EnumerationCapError, InvalidSpecError
from weakestlink.keyspace import CHARACTER_SETS, BigCount, CharacterSet, get_character_set, passphrase_keyspace

log = logging.getLogger(__name__)

SWEEP_MAX_SET_SIZE = 16
SWEEP_LENGTHS = (1, 2, 3, 4)


@dataclass(frozen=True)
class EnumerationResult:
    """What an exhaustive enumeration counted and how long it took.

    ``distinct_count`` is only filled in when duplicates were tracked.

    """

    charset_name: str
    length: int
    enumerated_count: BigCount
    elapsed: float
    throughput_keys_per_second: float
    distinct_count: Optional[int] = None


@dataclass(frozen=True)
class SearchTrial:
    """A simulated brute-force search for one target."""

    target: Tuple[str, ...]
    tries_until_found: int


@dataclass(frozen=True)
class SweepRow:
    """One line of the oracle equivalence sweep."""

    result: EnumerationResult
    expected: BigCount

    @property
    def matches(self) -> bool:
        """bool: the enumerated (and distinct, if tracked) count equals ``s ** L``."""
        distinct = self.result.distinct_count
        return self.result.enumerated_count == self.expected and distinct in (None, self.expected)


def _members(charset: CharacterSet) -> Tuple[str, ...]:
    if charset.members is None:
        raise InvalidSpecError("Character set {} has no member list to enumerate".format(charset.name))
    return charset.members


def _check_space(charset: CharacterSet, length: int, cap: int) -> None:
    size = passphrase_keyspace(charset.size, length)
    if size > cap:
        raise EnumerationCapError(size, cap)


def iter_candidates(charset: CharacterSet, length: int) -> Iterator[Tuple[str, ...]]:
    """Yield every ``length``-symbol sequence over ``charset`` in odometer order."""
    return itertools.product(_members(charset), repeat=length)


def enumerate_keyspace(
    charset: CharacterSet, length: int, cap: int = DEFAULT_CONFIG["enumeration_cap"], track_duplicates: bool = False
) -> EnumerationResult:
    """Generate and count every passphrase of ``length`` over ``charset``.

    Args:
        charset (CharacterSet): must have explicit members.
        length (int): the passphrase length, >= 1.
        cap (int, optional): refuse spaces larger than this.  Defaults to 10**7.
        track_duplicates (bool, optional): remember every candidate so the
            result also reports how many were distinct.  Defaults to False.

    Returns:
        EnumerationResult: the count, the wall-clock time and the throughput.

    Raises:
        EnumerationCapError: if the space is above ``cap``.

    """
    _check_space(charset, length, cap)
    seen = set() if track_duplicates else None
    count = 0
    start = time.perf_counter()
    for candidate in iter_candidates(charset, length):
        count += 1
        if seen is not None:
            seen.add(candidate)
    elapsed = time.perf_counter() - start
    throughput = count / elapsed if elapsed > 0 else float("inf")
    log.debug("Enumerated {} candidates of {}^{} in {:.6f}s".format(count, charset.name, length, elapsed))
    return EnumerationResult(
        charset_name=charset.name,
        length=length,
        enumerated_count=count,
        elapsed=elapsed,
        throughput_keys_per_second=throughput,
        distinct_count=len(seen) if seen is not None else None,
    )


def find_target(charset: CharacterSet, length: int, target: Union[str, Sequence[str]], cap: int = DEFAULT_CONFIG["enumeration_cap"]) -> SearchTrial:
    """Brute-force ``target`` by walking the canonical order.

    Args:
        charset (CharacterSet): must have explicit members.
        length (int): the passphrase length.
        target (str or sequence): the passphrase to find.
        cap (int, optional): refuse spaces larger than this.

    Returns:
        SearchTrial: the 1-based position of ``target``.

    Raises:
        InvalidSpecError: if ``target`` isn't a ``length``-symbol sequence over ``charset``.

    """
    members = _members(charset)
    wanted = tuple(target)
    if len(wanted) != length:
        raise InvalidSpecError("Target {!r} is not {} symbols long".format(target, length))
    strangers = sorted(set(wanted) - set(members))
    if strangers:
        raise InvalidSpecError("Target {!r} uses symbols outside {}: {}".format(target, charset.name, strangers))
    _check_space(charset, length, cap)
    for tries, candidate in enumerate(iter_candidates(charset, length), start=1):
        if candidate == wanted:
            return SearchTrial(target=wanted, tries_until_found=tries)
    raise InvalidSpecError("Target {!r} not found in {}^{}".format(target, charset.name, length))  # pragma: no cover


def extrapolate_local_crack_time(measured: EnumerationResult, keyspace: BigCount) -> mpmath.mpf:
    """Estimate how long this machine would take to search ``keyspace``.

    This is the same worst-case model as ``crack_duration``, evaluated at the
    locally measured throughput instead of the ASIC rate.

    Raises:
        InvalidSpecError: if the measured throughput is zero.

    """
    if not measured.throughput_keys_per_second > 0:
        raise InvalidSpecError("Measured throughput must be > 0 keys/second")
    return mpmath.mpf(keyspace) / mpmath.mpf(measured.throughput_keys_per_second)


def sweep_charsets() -> Tuple[Tuple[CharacterSet, int], ...]:
    """Return the (charset, length) pairs the equivalence sweep covers."""
    pairs = [(charset, length) for charset in CHARACTER_SETS if charset.size <= SWEEP_MAX_SET_SIZE for length in SWEEP_LENGTHS]
    pairs.append((get_character_set("digits"), 5))
    return tuple(pairs)


def equivalence_sweep(max_space: int = 10 ** 5, cap: int = DEFAULT_CONFIG["enumeration_cap"]) -> Tuple[SweepRow, ...]:
    """Enumerate every sweep space up to ``max_space`` and compare against ``s ** L``."""
    rows = []
    for charset, length in sweep_charsets():
        expected = passphrase_keyspace(charset.size, length)
        if expected > max_space:
            log.info("Skipping {}^{}: {} candidates is above {}".format(charset.name, length, expected, max_space))
            continue
        result = enumerate_keyspace(charset, length, cap=cap, track_duplicates=True)
        row = SweepRow(result=result, expected=expected)
        if not row.matches:
            log.warning("{}^{}: enumerated {} ({} distinct), expected {}".format(charset.name, length, result.enumerated_count, result.distinct_count, expected))
        rows.append(row)
    return tuple(rows)
