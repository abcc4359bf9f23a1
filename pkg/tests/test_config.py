#!/usr/bin/env python
# coding=utf-8
"""Test weakestlink.config
"""
import os
from fractions import Fraction

import pytest
from immutabledict import immutabledict

from weakestlink.config import (
    AuditConfig,
    build_stack,
    check_settings,
    create_settings,
    get_frozen_copy,
    get_unfrozen_copy,
    load_audit_config,
    parse_config,
    parse_rate,
)
from weakestlink.constants import DEFAULT_CONFIG
from weakestlink.exceptions import ConfigError

from . import WPA2_ALNUM8_CONFIG, write


# frozen copies {{{1
def test_get_frozen_copy():
    frozen = get_frozen_copy({"a": [1, {"b": [2]}]})
    assert isinstance(frozen, immutabledict)
    assert frozen["a"] == (1, immutabledict({"b": (2,)}))
    assert get_unfrozen_copy(frozen) == {"a": [1, {"b": [2]}]}


# settings {{{1
def test_create_settings_defaults():
    settings = create_settings(environ={})
    assert settings == DEFAULT_CONFIG
    assert isinstance(settings, immutabledict)


def test_create_settings_file(tmpdir):
    path = os.path.join(tmpdir, "settings.yaml")
    write(path, "attack_rate_keys_per_second: 1000000\nlifetime_budget_years: 50\nverbose: true\n")
    settings = create_settings(path)
    assert settings["attack_rate_keys_per_second"] == 10 ** 6
    assert settings["lifetime_budget_years"] == "50"
    assert settings["verbose"] is True
    assert settings["enumeration_cap"] == DEFAULT_CONFIG["enumeration_cap"]


def test_create_settings_environment(tmpdir):
    path = os.path.join(tmpdir, "settings.json")
    write(path, '{"max_concurrent_audits": 2}')
    settings = create_settings(environ={"WEAKESTLINK_SETTINGS": path})
    assert settings["max_concurrent_audits"] == 2


@pytest.mark.parametrize(
    "contents, message",
    (
        ("unknown_key: 1\n", "Unknown key unknown_key"),
        ("attack_rate_keys_per_second: fast\n", "attack_rate_keys_per_second: type"),
        ("attack_rate_keys_per_second: 0\n", "must be >= 1"),
        ("lifetime_budget_years: -3\n", "must be > 0"),
        ("lifetime_budget_years: soon\n", "is not a decimal number"),
        ("verbose: ~\n", "needs to be defined"),
        ("- a\n- b\n", "must be a mapping"),
        ("{unbalanced\n", "Can't load settings"),
    ),
)
def test_create_settings_invalid(tmpdir, contents, message):
    path = os.path.join(tmpdir, "settings.yaml")
    write(path, contents)
    with pytest.raises(ConfigError) as excinfo:
        create_settings(path)
    assert message in str(excinfo.value)


def test_create_settings_missing_file(tmpdir):
    with pytest.raises(ConfigError):
        create_settings(os.path.join(tmpdir, "nope.yaml"))


def test_check_settings_lists_all():
    messages = check_settings(dict(DEFAULT_CONFIG, foo=1, verbose="yes"), "settings.yaml")
    assert len(messages) == 2


# parse_rate {{{1
@pytest.mark.parametrize("value, expected", (("10^12", 10 ** 12), ("10**9", 10 ** 9), ("1_000_000", 10 ** 6), (" 42 ", 42), ("0", 0)))
def test_parse_rate(value, expected):
    assert parse_rate(value) == expected


@pytest.mark.parametrize("value", ("1e12", "fast", "1,000", "-5", "10^"))
def test_parse_rate_invalid(value):
    with pytest.raises(ValueError):
        parse_rate(value)


# parse_config {{{1
def test_parse_config_defaults():
    config = parse_config("wlan_protocol = WPA2\npassphrase_length = 8\n")
    assert config == AuditConfig(wlan_protocol="WPA2", passphrase_length=8)
    assert config.attack_rate_keys_per_second == 10 ** 12
    assert config.lifetime_budget_years == Fraction("89.78")
    assert config.passphrase_charset == "alphanumeric"


def test_parse_config_full():
    text = """\
# lab network
WLAN_Protocol = wep
effective_key_bits = 40
passphrase_length = 5
passphrase_charset = Lowercase
attack_rate_keys_per_second = 10^9
lifetime_budget_years = 10.5
descriptive_component = access-control:802.1x
descriptive_component = authentication:LEAP
"""
    config = parse_config(text, path="lab.conf")
    assert config.wlan_protocol == "WEP"
    assert config.effective_key_bits == 40
    assert config.passphrase_length == 5
    assert config.passphrase_charset == "lowercase"
    assert config.attack_rate_keys_per_second == 10 ** 9
    assert config.lifetime_budget_years == Fraction(21, 2)
    assert config.descriptive_components == (("access-control", "802.1X"), ("authentication", "LEAP"))
    assert config.path == "lab.conf"


def test_parse_config_explicit_size():
    config = parse_config("wlan_protocol = WPA2\npassphrase_length = 8\npassphrase_charset = 36\n")
    assert config.passphrase_charset == 36
    stack = build_stack(config)
    assert stack.components[1].policy.charset.members is None
    assert stack.components[1].policy.charset.size == 36


def test_parse_config_settings_defaults():
    settings = dict(DEFAULT_CONFIG, attack_rate_keys_per_second=5, lifetime_budget_years="1")
    config = parse_config("wlan_protocol = WPA\n", settings=settings)
    assert config.attack_rate_keys_per_second == 5
    assert config.lifetime_budget_years == 1
    assert config.passphrase_length is None


def test_parse_config_hash_in_value():
    with pytest.raises(ConfigError) as excinfo:
        parse_config("wlan_protocol = WPA2 # home\n")
    assert "WPA2 # home" in str(excinfo.value)


@pytest.mark.parametrize(
    "text, line, fragment",
    (
        ("wlan_protocol = WEP3\n", 1, "WEP3"),
        ("wlan_protocol = WPA2\nwlan_protocol = WEP\n", 2, "duplicate key 'wlan_protocol'"),
        ("wlan_protocol = WPA2\ncolour = blue\n", 2, "unknown key 'colour'"),
        ("wlan_protocol = WPA2\njust some words\n", 2, "expected 'key = value'"),
        ("wlan_protocol = WPA2\npassphrase_length =\n", 2, "has no value"),
        ("wlan_protocol = WPA2\nattack_rate_keys_per_second = 0\n", 2, "attack_rate_keys_per_second"),
        ("wlan_protocol = WPA2\nattack_rate_keys_per_second = fast\n", 2, "attack_rate_keys_per_second"),
        ("wlan_protocol = WPA2\npassphrase_length = 0\n", 2, "passphrase_length"),
        ("wlan_protocol = WPA2\npassphrase_length = eight\n", 2, "passphrase_length"),
        ("wlan_protocol = WPA2\npassphrase_charset = digits\n", 2, "needs passphrase_length"),
        ("wlan_protocol = WPA2\npassphrase_length = 8\npassphrase_charset = emoji\n", 3, "emoji"),
        ("wlan_protocol = WPA2\neffective_key_bits = 128\n", 2, "effective_key_bits"),
        ("wlan_protocol = RADIUS\n", 1, "not a wlan protocol"),
        ("wlan_protocol = WPA2\nlifetime_budget_years = 0\n", 2, "must be > 0"),
        ("wlan_protocol = WPA2\nlifetime_budget_years = forever\n", 2, "lifetime_budget_years"),
        ("wlan_protocol = WPA2\ndescriptive_component = RADIUS\n", 2, "layer:name"),
        ("wlan_protocol = WPA2\ndescriptive_component = transport:RADIUS\n", 2, "unknown layer"),
        ("wlan_protocol = WPA2\ndescriptive_component = authentication:RADIUS\n", 2, "not authentication"),
        ("wlan_protocol = WPA2\ndescriptive_component = access-control:CHAP\n", 2, "CHAP"),
        ("wlan_protocol = WPA2\ndescriptive_component = access-control:EAP\ndescriptive_component = access-control:eap\n", 3, "duplicate"),
    ),
)
def test_parse_config_errors(text, line, fragment):
    with pytest.raises(ConfigError) as excinfo:
        parse_config(text, path="bad.conf")
    assert excinfo.value.line == line
    assert str(excinfo.value).startswith("bad.conf:{}: ".format(line))
    assert fragment in str(excinfo.value)
    assert excinfo.value.exit_code == 2


def test_parse_config_missing_protocol():
    with pytest.raises(ConfigError) as excinfo:
        parse_config("# nothing here\n\npassphrase_length = 8\n")
    assert excinfo.value.line is None
    assert "wlan_protocol is required" in str(excinfo.value)


def test_parse_config_long_psk_warns(caplog):
    parse_config("wlan_protocol = WPA2\npassphrase_length = 64\n")
    assert "at most 63 characters" in caplog.text


def test_load_audit_config(tmpdir):
    path = os.path.join(tmpdir, "office.conf")
    write(path, WPA2_ALNUM8_CONFIG)
    config = load_audit_config(path)
    assert config.path == path
    assert config.passphrase_length == 8


def test_load_audit_config_missing(tmpdir):
    with pytest.raises(ConfigError):
        load_audit_config(os.path.join(tmpdir, "missing.conf"))


# build_stack {{{1
def test_build_stack():
    config = parse_config(WPA2_ALNUM8_CONFIG + "descriptive_component = authentication:TLS\n")
    stack = build_stack(config)
    assert [component.id for component in stack.components] == ["WPA2-256", "passphrase", "TLS"]
    assert [component.kind for component in stack.components] == ["cipher", "passphrase", "descriptive"]
    assert stack.components[1].cipher_spec.effective_key_bits == 256
    assert stack.attack.rate_keys_per_second == 10 ** 12
    assert stack.budget.years == Fraction("89.78")


def test_build_stack_cipher_only():
    stack = build_stack(parse_config("wlan_protocol = WEP\n"))
    assert len(stack.components) == 1
    assert stack.components[0].cipher_spec.effective_key_bits == 104
