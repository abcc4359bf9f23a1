#!/usr/bin/env python
"""Wireless security stack model and weakest-link ranking.

A stack is an ordered list of components.  Ciphers and passphrases are
assessable: they have a keyspace, a crack duration and a verdict.
Access-control and authentication protocols are descriptive only; they're
carried through reports but never ranked.

Attributes:
    log (logging.Logger): the log object for the module.
    COMPONENT_KINDS (tuple): the valid ``SecurityComponent.kind`` values.

"""
import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

import mpmath

from weakestlink.constants import LAYERS, PROTOCOLS
from weakestlink.duration import format_duration
from weakestlink.exceptions import InvalidSpecError
from weakestlink.keyspace import (
    AttackModel,
    BigCount,
    CharacterSet,
    CipherSpec,
    ExactSeconds,
    LifetimeBudget,
    PassphrasePolicy,
    crack_duration,
    effective_keyspace,
    is_secure,
    min_charset_size,
    min_integer_charset_size,
    min_passphrase_length,
    smallest_named_set,
)
from weakestlink.utils import lookup_by_name

log = logging.getLogger(__name__)

COMPONENT_KINDS = ("cipher", "passphrase", "descriptive")


# protocol registry {{{1
@dataclass(frozen=True)
class ProtocolInfo:
    """One entry of the protocol survey.

    ``effective_key_bits`` is empty for access-control and authentication
    protocols, which have no keyspace model.

    """

    name: str
    layer: str
    effective_key_bits: Tuple[int, ...]
    default_key_bits: Optional[int]
    notes: str


_PROTOCOLS = tuple(ProtocolInfo(**entry) for entry in PROTOCOLS)


def protocol_registry() -> Tuple[ProtocolInfo, ...]:
    """Return the protocol survey, wlan layer first."""
    return _PROTOCOLS


def get_protocol(name: str) -> ProtocolInfo:
    """Look up a protocol by case-insensitive name.

    Raises:
        RegistryError: naming the token, if the protocol is unknown.

    """
    return lookup_by_name(_PROTOCOLS, name, "protocol", "protocols")


def cipher_spec_for(protocol: str, bits: Optional[int] = None) -> CipherSpec:
    """Build a CipherSpec for a registry protocol.

    Args:
        protocol (str): a wlan-layer protocol name.
        bits (int, optional): one of the protocol's registered key sizes.
            Defaults to the protocol's default size.

    Raises:
        RegistryError: on an unknown protocol.
        InvalidSpecError: for a protocol without a keyspace, or unregistered bits.

    """
    info = get_protocol(protocol)
    if not info.effective_key_bits:
        raise InvalidSpecError("{} is a {} protocol with no cipher key".format(info.name, info.layer))
    if bits is None:
        bits = info.default_key_bits
    if bits not in info.effective_key_bits:
        raise InvalidSpecError("{} has no {}-bit key; registered sizes are {}".format(info.name, bits, info.effective_key_bits))
    return CipherSpec(protocol_label=info.name, effective_key_bits=bits)


# SecurityComponent {{{1
@dataclass(frozen=True)
class SecurityComponent:
    """One component of a security stack.

    Use the ``cipher``, ``passphrase`` and ``descriptive`` constructors
    rather than filling the fields by hand.

    """

    id: str
    kind: str
    cipher_spec: Optional[CipherSpec] = None
    policy: Optional[PassphrasePolicy] = None
    layer: Optional[str] = None
    protocol_name: Optional[str] = None

    def __post_init__(self) -> None:
        """Check that the fields match ``kind``."""
        if not self.id:
            raise InvalidSpecError("component id must be non-empty")
        if self.kind not in COMPONENT_KINDS:
            raise InvalidSpecError("Unknown component kind {!r}".format(self.kind))
        if self.kind == "cipher" and (self.cipher_spec is None or self.policy is not None):
            raise InvalidSpecError("cipher component {} needs exactly a CipherSpec".format(self.id))
        if self.kind == "passphrase" and self.policy is None:
            raise InvalidSpecError("passphrase component {} needs a PassphrasePolicy".format(self.id))
        if self.kind == "descriptive":
            if self.cipher_spec is not None or self.policy is not None:
                raise InvalidSpecError("descriptive component {} can't carry a keyspace".format(self.id))
            if self.layer not in LAYERS:
                raise InvalidSpecError("descriptive component {} has unknown layer {!r}".format(self.id, self.layer))

    @classmethod
    def cipher(cls, id: str, spec: CipherSpec) -> "SecurityComponent":
        """Build a cipher component."""
        return cls(id=id, kind="cipher", cipher_spec=spec, layer="wlan", protocol_name=spec.protocol_label)

    @classmethod
    def passphrase(cls, id: str, policy: PassphrasePolicy, governing: Optional[CipherSpec] = None) -> "SecurityComponent":
        """Build a passphrase component, optionally capped by the cipher it keys."""
        protocol_name = governing.protocol_label if governing is not None else None
        return cls(id=id, kind="passphrase", cipher_spec=governing, policy=policy, layer="wlan", protocol_name=protocol_name)

    @classmethod
    def descriptive(cls, id: str, layer: str, protocol_name: str) -> "SecurityComponent":
        """Build an unranked, documentation-only component."""
        return cls(id=id, kind="descriptive", layer=layer, protocol_name=protocol_name)

    @property
    def assessable(self) -> bool:
        """bool: True for ciphers and passphrases."""
        return self.kind != "descriptive"

    @property
    def label(self) -> str:
        """str: a short human description of the component."""
        if self.kind == "cipher":
            assert self.cipher_spec is not None
            return "{}-bit {} cipher key".format(self.cipher_spec.effective_key_bits, self.cipher_spec.protocol_label)
        if self.kind == "passphrase":
            assert self.policy is not None
            text = "{}-character passphrase over {} ({} symbols)".format(self.policy.length, self.policy.charset.name, self.policy.charset.size)
            if self.cipher_spec is not None:
                text += " keying {}-bit {}".format(self.cipher_spec.effective_key_bits, self.cipher_spec.protocol_label)
            return text
        return "{} ({} layer)".format(self.protocol_name, self.layer)


# SecurityStack {{{1
@dataclass(frozen=True)
class SecurityStack:
    """An ordered set of components assessed under one attack model and budget."""

    components: Tuple[SecurityComponent, ...]
    attack: AttackModel = field(default_factory=AttackModel)
    budget: LifetimeBudget = field(default_factory=LifetimeBudget)

    def __post_init__(self) -> None:
        """Freeze the component list and require unique ids."""
        components = tuple(self.components)
        seen = set()
        for component in components:
            if component.id in seen:
                raise InvalidSpecError("Duplicate component id {!r}".format(component.id))
            seen.add(component.id)
        object.__setattr__(self, "components", components)


# assessments {{{1
@dataclass(frozen=True)
class ComponentAssessment:
    """The numbers behind one component.

    ``keyspace``, ``duration`` and ``secure`` are None for descriptive
    components.  ``capped`` is True when a passphrase space was cut down to
    its governing cipher's keyspace.

    """

    component_id: str
    kind: str
    label: str
    keyspace: Optional[BigCount]
    duration: Optional[ExactSeconds]
    duration_text: str
    secure: Optional[bool]
    capped: bool = False


@dataclass(frozen=True)
class Recommendation:
    """Minimum character-set size for a passphrase length.

    Attributes:
        length (int): the passphrase length.
        real_value (mpmath.mpf): the real root.
        integer_ceiling (int): smallest integer set size that clears the budget.
        named_set (CharacterSet): smallest registry set at least that big, or None.

    """

    length: int
    real_value: mpmath.mpf
    integer_ceiling: int
    named_set: Optional[CharacterSet]


@dataclass(frozen=True)
class WeakestLinkReport:
    """The ranked result of ``weakest_link``."""

    assessments: Tuple[ComponentAssessment, ...]
    weakest_id: str
    overall_secure: bool
    recommendation_text: str
    recommendation: Optional[Recommendation] = None
    attack: AttackModel = field(default_factory=AttackModel)
    budget: LifetimeBudget = field(default_factory=LifetimeBudget)

    @property
    def weakest(self) -> ComponentAssessment:
        """ComponentAssessment: the entry for ``weakest_id``."""
        return next(a for a in self.assessments if a.component_id == self.weakest_id)


def assess_component(component: SecurityComponent, attack: AttackModel, budget: LifetimeBudget) -> ComponentAssessment:
    """Compute keyspace, duration and verdict for one component.

    Ciphers get ``2 ** bits``; passphrases get ``size ** length``, capped by
    their governing cipher; descriptive components get no numbers.

    """
    if not component.assessable:
        return ComponentAssessment(
            component_id=component.id, kind=component.kind, label=component.label, keyspace=None, duration=None, duration_text="", secure=None
        )
    capped = False
    if component.kind == "cipher":
        assert component.cipher_spec is not None
        keyspace = component.cipher_spec.keyspace
    else:
        assert component.policy is not None
        raw = component.policy.keyspace
        cap = component.cipher_spec.keyspace if component.cipher_spec is not None else None
        keyspace = effective_keyspace(raw, cap)
        capped = keyspace < raw
    duration = crack_duration(keyspace, attack)
    secure = is_secure(duration, budget)
    log.debug("{}: keyspace {} duration {}s secure={}".format(component.id, keyspace, float(duration), secure))
    return ComponentAssessment(
        component_id=component.id,
        kind=component.kind,
        label=component.label,
        keyspace=keyspace,
        duration=duration,
        duration_text=str(format_duration(duration)),
        secure=secure,
        capped=capped,
    )


def recommend_min_charset(length: int, budget: LifetimeBudget, attack: AttackModel) -> Recommendation:
    """Recommend the minimum character-set size for ``length``-character passphrases.

    Args:
        length (int): passphrase length, >= 1.
        budget (LifetimeBudget): the security threshold.
        attack (AttackModel): the attack rate.

    Returns:
        Recommendation: the real root, its exact integer ceiling and the
            smallest named set that covers it.

    """
    real_value = min_charset_size(length, budget, attack)
    ceiling = min_integer_charset_size(length, budget, attack)
    return Recommendation(length=length, real_value=real_value, integer_ceiling=ceiling, named_set=smallest_named_set(ceiling))


def _recommendation_text(weakest: SecurityComponent, assessment: ComponentAssessment, stack: SecurityStack) -> Tuple[str, Optional[Recommendation]]:
    if weakest.kind == "cipher":
        assert weakest.cipher_spec is not None
        text = "The {} is the weakest link ({}). Choose a protocol with a longer effective key.".format(weakest.label, assessment.duration_text)
        return text, None
    assert weakest.policy is not None
    policy = weakest.policy
    if stack.budget.seconds == 0:
        text = "The {} is the weakest link ({}). Any non-empty keyspace outlasts a zero lifetime budget.".format(weakest.label, assessment.duration_text)
        return text, None
    recommendation = recommend_min_charset(policy.length, stack.budget, stack.attack)
    lines = [
        "The {} is the weakest link ({}).".format(weakest.label, assessment.duration_text),
        "Passphrases must be generated completely randomly.",
    ]
    if recommendation.named_set is not None:
        lines.append(
            "At {} characters use a character set of at least {} symbols, e.g. {} ({}).".format(
                policy.length, recommendation.integer_ceiling, recommendation.named_set.name, recommendation.named_set.size
            )
        )
    else:
        lines.append("At {} characters no named set has the {} symbols needed; use a longer passphrase.".format(policy.length, recommendation.integer_ceiling))
    if policy.charset.size >= 2:
        lines.append(
            "With the {} set use at least {} characters.".format(policy.charset.name, min_passphrase_length(policy.charset.size, stack.budget, stack.attack))
        )
    return " ".join(lines), recommendation


def weakest_link(stack: SecurityStack) -> WeakestLinkReport:
    """Rank a stack's assessable components and name the weakest.

    Assessable components are sorted ascending by exact duration, ties in
    declaration order; descriptive components follow, unranked.  The stack
    is secure only if every assessable component is.

    Raises:
        InvalidSpecError: if the stack has no cipher or passphrase component.

    """
    assessable = [component for component in stack.components if component.assessable]
    if not assessable:
        raise InvalidSpecError("Stack has no cipher or passphrase component to assess")
    by_id = {component.id: component for component in stack.components}
    ranked = sorted((assess_component(c, stack.attack, stack.budget) for c in assessable), key=lambda a: a.duration)
    descriptive = [assess_component(c, stack.attack, stack.budget) for c in stack.components if not c.assessable]
    weakest = ranked[0]
    overall_secure = all(a.secure for a in ranked)
    text, recommendation = _recommendation_text(by_id[weakest.component_id], weakest, stack)
    log.info("Weakest link is {} ({}); stack is {}".format(weakest.component_id, weakest.duration_text, "secure" if overall_secure else "insecure"))
    return WeakestLinkReport(
        assessments=tuple(ranked + descriptive),
        weakest_id=weakest.component_id,
        overall_secure=overall_secure,
        recommendation_text=text,
        recommendation=recommendation,
        attack=stack.attack,
        budget=stack.budget,
    )

