#!/usr/bin/env python
"""Exact keyspace and crack-time arithmetic.

Keyspace sizes are plain python ints (arbitrary precision), durations are
``fractions.Fraction`` seconds in lowest terms.  Nothing in here rounds;
``min_charset_size`` is the one real-valued operation and it goes through
mpmath rather than floats.

Attributes:
    log (logging.Logger): the log object for the module.
    BigCount (type): alias for the exact key count type.
    ExactSeconds (type): alias for the exact duration type.
    CHARACTER_SETS (tuple): the named character set registry.
    ROOT_DPS (int): decimal digits of working precision for the charset root.

"""
import logging
import math
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from typing import Any, Optional, Tuple, Union

import mpmath

from weakestlink.constants import CHARACTER_SET_MEMBERS, DEFAULT_CONFIG, SECONDS_PER_YEAR
from weakestlink.exceptions import InvalidSpecError
from weakestlink.utils import lookup_by_name

log = logging.getLogger(__name__)

BigCount = int
ExactSeconds = Fraction

ROOT_DPS = 30


def _check_positive(name: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidSpecError("{} must be an integer, not {!r}".format(name, value))
    if value < 1:
        raise InvalidSpecError("{} must be >= 1, got {}".format(name, value))
    return value


def to_fraction(value: Union[int, str, float, Decimal, Fraction]) -> Fraction:
    """Convert a decimal-ish value to an exact Fraction.

    Floats go through their shortest repr, so ``89.78`` becomes exactly
    4489/50 rather than the nearest binary fraction.

    Raises:
        InvalidSpecError: if ``value`` isn't a number.

    """
    if isinstance(value, bool):
        raise InvalidSpecError("Not a decimal number: {!r}".format(value))
    try:
        if isinstance(value, float):
            return Fraction(repr(value))
        if isinstance(value, str):
            return Fraction(value.strip())
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InvalidSpecError("Not a decimal number: {!r}".format(value))


# AttackModel {{{1
@dataclass(frozen=True)
class AttackModel:
    """How fast the attacker tries candidate keys.

    Attributes:
        rate_keys_per_second (int): candidate keys tested per second, >= 1.
        description (str): free text describing the attack setup.

    """

    rate_keys_per_second: BigCount = DEFAULT_CONFIG["attack_rate_keys_per_second"]
    description: str = DEFAULT_CONFIG["attack_description"]

    def __post_init__(self) -> None:
        """Reject non-positive rates."""
        _check_positive("rate_keys_per_second", self.rate_keys_per_second)


# LifetimeBudget {{{1
@dataclass(frozen=True)
class LifetimeBudget:
    """The crack time a component has to exceed to count as secure.

    Attributes:
        years (Fraction): exact, non-negative.

    """

    years: Fraction = field(default_factory=lambda: Fraction(DEFAULT_CONFIG["lifetime_budget_years"]))

    def __post_init__(self) -> None:
        """Coerce ``years`` to an exact Fraction and reject negative budgets."""
        years = to_fraction(self.years)
        if years < 0:
            raise InvalidSpecError("lifetime budget must be >= 0 years, got {}".format(self.years))
        object.__setattr__(self, "years", years)

    @property
    def seconds(self) -> ExactSeconds:
        """Fraction: the budget in seconds, using 365-day years."""
        return self.years * SECONDS_PER_YEAR


# CharacterSet {{{1
@dataclass(frozen=True)
class CharacterSet:
    """An alphabet passphrases are drawn from.

    ``members`` is only needed for enumeration; sets given by size alone
    still support all the analytic operations.

    """

    name: str
    size: int
    members: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        """Check members against size."""
        _check_positive("character set size", self.size)
        if self.members is not None:
            members = tuple(self.members)
            if len(members) != self.size:
                raise InvalidSpecError("Character set {} declares size {} but has {} members".format(self.name, self.size, len(members)))
            if len(set(members)) != len(members):
                raise InvalidSpecError("Character set {} has duplicate members".format(self.name))
            object.__setattr__(self, "members", members)

    @classmethod
    def from_members(cls, name: str, members: Any) -> "CharacterSet":
        """Build a set whose size is its member count."""
        members = tuple(members)
        return cls(name=name, size=len(members), members=members)


# PassphrasePolicy {{{1
@dataclass(frozen=True)
class PassphrasePolicy:
    """A character set plus a passphrase length."""

    charset: CharacterSet
    length: int

    def __post_init__(self) -> None:
        """Reject zero-length passphrases."""
        _check_positive("passphrase length", self.length)

    @property
    def keyspace(self) -> BigCount:
        """int: charset.size ** length."""
        return passphrase_keyspace(self.charset.size, self.length)


# CipherSpec {{{1
@dataclass(frozen=True)
class CipherSpec:
    """A cipher key of a given effective size.

    Use ``weakestlink.stack.cipher_spec_for`` to build one from the protocol
    registry; direct construction takes any positive bit count.

    """

    protocol_label: str
    effective_key_bits: int

    def __post_init__(self) -> None:
        """Reject zero-bit keys."""
        _check_positive("effective_key_bits", self.effective_key_bits)

    @property
    def keyspace(self) -> BigCount:
        """int: 2 ** effective_key_bits."""
        return cipher_keyspace(self.effective_key_bits)


# keyspace operations {{{1
def cipher_keyspace(bits: int) -> BigCount:
    """Return the number of keys of a ``bits``-bit cipher, exactly ``2 ** bits``.

    Raises:
        InvalidSpecError: if ``bits`` < 1.

    """
    _check_positive("bits", bits)
    return 2 ** bits


def passphrase_keyspace(set_size: int, length: int) -> BigCount:
    """Return the number of passphrases, exactly ``set_size ** length``.

    Raises:
        InvalidSpecError: on zero or negative arguments.

    """
    _check_positive("set_size", set_size)
    _check_positive("length", length)
    return set_size ** length


def effective_keyspace(passphrase_ks: BigCount, cipher_ks: Optional[BigCount] = None) -> BigCount:
    """Cap a passphrase keyspace by the keyspace of the cipher it feeds.

    A passphrase space bigger than the cipher's key space adds nothing: the
    attacker searches the keys instead.

    Args:
        passphrase_ks (int): the passphrase keyspace, >= 1.
        cipher_ks (int, optional): the governing cipher keyspace, >= 1.

    Returns:
        int: ``min(passphrase_ks, cipher_ks)``, or ``passphrase_ks`` with no cipher.

    """
    _check_positive("passphrase keyspace", passphrase_ks)
    if cipher_ks is None:
        return passphrase_ks
    _check_positive("cipher keyspace", cipher_ks)
    return min(passphrase_ks, cipher_ks)


def crack_duration(keyspace: BigCount, attack: AttackModel) -> ExactSeconds:
    """Worst-case exhaustive search time: the whole keyspace at the attack rate.

    Args:
        keyspace (int): number of candidates, >= 0.
        attack (AttackModel): the attack rate.

    Returns:
        Fraction: ``keyspace / rate`` seconds, in lowest terms.

    """
    if isinstance(keyspace, bool) or not isinstance(keyspace, int) or keyspace < 0:
        raise InvalidSpecError("keyspace must be a non-negative integer, got {!r}".format(keyspace))
    rate = _check_positive("rate_keys_per_second", attack.rate_keys_per_second)
    return Fraction(keyspace, rate)


def is_secure(duration: ExactSeconds, budget: LifetimeBudget) -> bool:
    """Return True iff ``duration`` is strictly longer than the budget."""
    return Fraction(duration) > budget.seconds


def _radicand(budget: LifetimeBudget, attack: AttackModel) -> Fraction:
    radicand = budget.seconds * _check_positive("rate_keys_per_second", attack.rate_keys_per_second)
    if radicand <= 0:
        raise InvalidSpecError("lifetime budget must be > 0 years to size a character set")
    return radicand


def min_charset_size(length: int, budget: LifetimeBudget, attack: AttackModel) -> mpmath.mpf:
    """Return the real character-set size whose ``length``-th power just fills the budget.

    This is ``(budget.seconds * rate) ** (1 / length)``, evaluated with
    ``ROOT_DPS`` decimal digits.

    Args:
        length (int): the passphrase length, >= 1.
        budget (LifetimeBudget): must be > 0.
        attack (AttackModel): the attack rate.

    Returns:
        mpmath.mpf: the minimum set size, as a real.

    """
    _check_positive("length", length)
    radicand = _radicand(budget, attack)
    with mpmath.workdps(ROOT_DPS):
        value = mpmath.mpf(radicand.numerator) / radicand.denominator
        if length == 1:
            return +value
        root = mpmath.root(value, length)
    log.debug("min_charset_size({}) = {}".format(length, mpmath.nstr(root, 15)))
    return root


def min_integer_charset_size(length: int, budget: LifetimeBudget, attack: AttackModel) -> int:
    """Return the smallest integer s with ``s ** length / rate`` strictly over the budget.

    The real root only seeds the search; the answer is pinned down with
    exact integer comparisons.

    """
    radicand = _radicand(budget, attack)
    if length == 1:
        return math.floor(radicand) + 1
    candidate = max(1, int(mpmath.ceil(min_charset_size(length, budget, attack))))
    while candidate > 1 and (candidate - 1) ** length > radicand:
        candidate -= 1
    while candidate ** length <= radicand:
        candidate += 1
    return candidate


def min_passphrase_length(set_size: int, budget: LifetimeBudget, attack: AttackModel) -> int:
    """Return the shortest passphrase over ``set_size`` symbols that clears the budget.

    Raises:
        InvalidSpecError: if ``set_size`` < 2, since no length ever helps.

    """
    _check_positive("set_size", set_size)
    if set_size < 2:
        raise InvalidSpecError("A single-symbol character set never clears a budget")
    radicand = budget.seconds * _check_positive("rate_keys_per_second", attack.rate_keys_per_second)
    # start just below the estimate, then walk up exactly
    length = max(1, int(math.log(max(math.floor(radicand), 1), set_size)) - 1)
    while length > 1 and set_size ** (length - 1) > radicand:
        length -= 1
    while set_size ** length <= radicand:
        length += 1
    return length


def keyspace_bits(keyspace: BigCount) -> float:
    """Return log2 of ``keyspace``: the equivalent cipher key size in bits."""
    _check_positive("keyspace", keyspace)
    return math.log2(keyspace)


# character set registry {{{1
CHARACTER_SETS: Tuple[CharacterSet, ...] = tuple(CharacterSet.from_members(name, members) for name, members in CHARACTER_SET_MEMBERS.items())


def get_character_set(name_or_size: Union[str, int]) -> CharacterSet:
    """Resolve a registry name or an explicit size to a CharacterSet.

    Explicit sizes (an int, or a string of digits) give a member-less set
    named ``custom-<size>``; the oracle can't enumerate those.

    Raises:
        RegistryError: on an unknown name.
        InvalidSpecError: on a size < 1.

    """
    if isinstance(name_or_size, int) and not isinstance(name_or_size, bool):
        return CharacterSet(name="custom-{}".format(name_or_size), size=name_or_size)
    token = str(name_or_size).strip()
    if token.isdigit():
        return get_character_set(int(token))
    return lookup_by_name(CHARACTER_SETS, token, "character set", "sets")


def smallest_named_set(min_size: int) -> Optional[CharacterSet]:
    """Return the smallest registry set with at least ``min_size`` symbols, or None."""
    candidates = [charset for charset in CHARACTER_SETS if charset.size >= min_size]
    if not candidates:
        return None
    return min(candidates, key=lambda charset: charset.size)
