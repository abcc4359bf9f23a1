#!/usr/bin/env python
# coding=utf-8
"""Test weakestlink.stack
"""
from fractions import Fraction

import pytest

from weakestlink.exceptions import InvalidSpecError, RegistryError
from weakestlink.keyspace import AttackModel, LifetimeBudget, PassphrasePolicy, get_character_set
from weakestlink.stack import (
    SecurityComponent,
    SecurityStack,
    assess_component,
    cipher_spec_for,
    get_protocol,
    protocol_registry,
    recommend_min_charset,
    weakest_link,
)

from . import rel_close


def passphrase(id, charset, length, governing=None):
    return SecurityComponent.passphrase(id, PassphrasePolicy(charset=get_character_set(charset), length=length), governing=governing)


# protocol registry {{{1
def test_protocol_registry():
    names = [info.name for info in protocol_registry()]
    assert names == ["WEP", "WPA", "WPA2", "802.1X", "RADIUS", "EAP", "TLS", "Kerberos", "LEAP", "PEAP"]


@pytest.mark.parametrize(
    "name, layer, bits",
    (
        ("WPA2", "wlan", (256,)),
        ("wep", "wlan", (40, 104)),
        ("802.1x", "access-control", ()),
        ("Kerberos", "authentication", ()),
    ),
)
def test_get_protocol(name, layer, bits):
    info = get_protocol(name)
    assert info.layer == layer
    assert info.effective_key_bits == bits


def test_get_protocol_leap_note():
    assert "MS-CHAPv1" in get_protocol("LEAP").notes


def test_get_protocol_unknown():
    with pytest.raises(RegistryError) as excinfo:
        get_protocol("WEP3")
    assert excinfo.value.token == "WEP3"
    assert "WEP3" in str(excinfo.value)


@pytest.mark.parametrize("protocol, bits, expected", (("WEP", None, 104), ("WEP", 40, 40), ("WPA", None, 256), ("wpa2", 256, 256)))
def test_cipher_spec_for(protocol, bits, expected):
    assert cipher_spec_for(protocol, bits).effective_key_bits == expected


@pytest.mark.parametrize("protocol, bits", (("WEP", 64), ("WPA2", 152), ("RADIUS", None)))
def test_cipher_spec_for_invalid(protocol, bits):
    with pytest.raises(InvalidSpecError):
        cipher_spec_for(protocol, bits)


# SecurityComponent {{{1
def test_component_invalid():
    with pytest.raises(InvalidSpecError):
        SecurityComponent(id="", kind="cipher", cipher_spec=cipher_spec_for("WEP"))
    with pytest.raises(InvalidSpecError):
        SecurityComponent(id="x", kind="magic")
    with pytest.raises(InvalidSpecError):
        SecurityComponent(id="x", kind="cipher")
    with pytest.raises(InvalidSpecError):
        SecurityComponent(id="x", kind="passphrase")
    with pytest.raises(InvalidSpecError):
        SecurityComponent.descriptive("x", "transport", "TLS")


def test_component_labels():
    assert SecurityComponent.cipher("c", cipher_spec_for("WEP", 40)).label == "40-bit WEP cipher key"
    label = passphrase("p", "alphanumeric", 8, governing=cipher_spec_for("WPA2")).label
    assert label == "8-character passphrase over alphanumeric (62 symbols) keying 256-bit WPA2"
    assert SecurityComponent.descriptive("d", "authentication", "TLS").label == "TLS (authentication layer)"


def test_duplicate_ids():
    cipher = SecurityComponent.cipher("same", cipher_spec_for("WEP"))
    with pytest.raises(InvalidSpecError):
        SecurityStack(components=(cipher, passphrase("same", "digits", 5)))


# assess_component {{{1
def test_assess_cipher_wep40(attack, budget):
    assessment = assess_component(SecurityComponent.cipher("wep", cipher_spec_for("WEP", 40)), attack, budget)
    assert assessment.keyspace == 2 ** 40
    assert assessment.duration == Fraction(2 ** 40, 10 ** 12)
    assert assessment.duration_text == "1.09951163 seconds"
    assert assessment.secure is False
    assert assessment.capped is False


def test_assess_passphrase_alnum8(attack, budget):
    assessment = assess_component(passphrase("p", "alphanumeric", 8, governing=cipher_spec_for("WPA2")), attack, budget)
    assert assessment.keyspace == 62 ** 8
    assert assessment.duration_text == "3.63900176 minutes"
    assert assessment.secure is False


def test_assess_passphrase_capped(attack, budget):
    assessment = assess_component(passphrase("p", "lowercase", 63, governing=cipher_spec_for("WPA2")), attack, budget)
    assert assessment.keyspace == 2 ** 256
    assert assessment.capped is True
    assert assessment.secure is True
    years = assessment.duration / (365 * 86400)
    assert rel_close(years, Fraction("3.67174306e57"), Fraction(1, 10 ** 8))


def test_assess_passphrase_uncapped(attack, budget):
    assessment = assess_component(passphrase("p", "digits", 63, governing=cipher_spec_for("WPA2")), attack, budget)
    assert assessment.keyspace == 10 ** 63
    assert assessment.capped is False


def test_assess_descriptive(attack, budget):
    assessment = assess_component(SecurityComponent.descriptive("radius", "access-control", "RADIUS"), attack, budget)
    assert assessment.keyspace is None
    assert assessment.duration is None
    assert assessment.secure is None
    assert assessment.duration_text == ""


# weakest_link {{{1
def test_weakest_link_passphrase():
    stack = SecurityStack(
        components=(
            SecurityComponent.cipher("wpa2", cipher_spec_for("WPA2")),
            passphrase("passphrase", "alphanumeric", 8, governing=cipher_spec_for("WPA2")),
            SecurityComponent.descriptive("802.1X", "access-control", "802.1X"),
        )
    )
    report = weakest_link(stack)
    assert report.weakest_id == "passphrase"
    assert report.overall_secure is False
    assert [a.component_id for a in report.assessments] == ["passphrase", "wpa2", "802.1X"]
    assert report.weakest.duration_text == "3.63900176 minutes"
    assert report.recommendation.length == 8
    assert report.recommendation.integer_ceiling == 481
    assert report.recommendation.named_set is None
    assert "generated completely randomly" in report.recommendation_text
    assert "use at least 12 characters" in report.recommendation_text


def test_weakest_link_cipher():
    stack = SecurityStack(components=(passphrase("pin", "digits", 13), SecurityComponent.cipher("wep", cipher_spec_for("WEP", 40))))
    report = weakest_link(stack)
    assert report.weakest_id == "wep"
    assert report.recommendation is None
    assert "longer effective key" in report.recommendation_text


def test_weakest_link_secure():
    stack = SecurityStack(
        components=(
            SecurityComponent.cipher("wpa2", cipher_spec_for("WPA2")),
            passphrase("passphrase", "lowercase", 63, governing=cipher_spec_for("WPA2")),
        )
    )
    report = weakest_link(stack)
    assert report.overall_secure is True
    # equal keyspaces keep declaration order
    assert report.weakest_id == "wpa2"


def test_weakest_link_ties_stable():
    hex_passphrase = passphrase("hex", "hexadecimal", 10)
    cipher = SecurityComponent.cipher("wep", cipher_spec_for("WEP", 40))
    assert weakest_link(SecurityStack(components=(hex_passphrase, cipher))).weakest_id == "hex"
    assert weakest_link(SecurityStack(components=(cipher, hex_passphrase))).weakest_id == "wep"


def test_weakest_link_no_assessable():
    stack = SecurityStack(components=(SecurityComponent.descriptive("tls", "authentication", "TLS"),))
    with pytest.raises(InvalidSpecError):
        weakest_link(stack)


def test_weakest_link_zero_budget():
    stack = SecurityStack(components=(passphrase("pin", "digits", 5),), budget=LifetimeBudget(years=0))
    report = weakest_link(stack)
    assert report.weakest_id == "pin"
    assert report.overall_secure is True
    assert report.recommendation is None
    assert "zero lifetime budget" in report.recommendation_text


def test_weakest_link_custom_attack():
    stack = SecurityStack(
        components=(SecurityComponent.cipher("wep", cipher_spec_for("WEP", 40)),),
        attack=AttackModel(rate_keys_per_second=1),
        budget=LifetimeBudget(years=1),
    )
    report = weakest_link(stack)
    assert report.overall_secure is True
    assert report.attack.rate_keys_per_second == 1


# recommend_min_charset {{{1
@pytest.mark.parametrize(
    "length, real, ceiling, named",
    (
        (16, "21.9153867", 22, "lowercase"),
        (8, "480.284174", 481, None),
        (63, "2.19032075", 3, "digits"),
    ),
)
def test_recommend_min_charset(attack, budget, length, real, ceiling, named):
    recommendation = recommend_min_charset(length, budget, attack)
    assert abs(float(recommendation.real_value) / float(real) - 1) < 1e-3
    assert recommendation.integer_ceiling == ceiling
    assert (recommendation.named_set.name if recommendation.named_set else None) == named


def test_recommendation_text_named_set():
    stack = SecurityStack(components=(passphrase("p", "digits", 16, governing=cipher_spec_for("WPA2")),))
    text = weakest_link(stack).recommendation_text
    assert "at least 22 symbols" in text
    assert "lowercase" in text
    assert "With the digits set use at least 22 characters." in text
