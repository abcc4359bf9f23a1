#!/usr/bin/env python
"""Runtime settings and audit configs for weakestlink.

Runtime settings are DEFAULT_CONFIG overlaid with an optional YAML or JSON
settings file, validated and frozen.  Audit configs describe one wireless
stack in ``key = value`` lines::

    # office access point
    wlan_protocol = WPA2
    passphrase_length = 8
    passphrase_charset = alphanumeric
    descriptive_component = access-control:802.1X

Keys are case-insensitive.  A ``#`` starts a comment only at the start of
a line, so values may contain it.

Attributes:
    log (logging.Logger): the log object for the module.
    AUDIT_CONFIG_KEYS (tuple): the keys an audit config may use.
    REPEATABLE_KEYS (tuple): keys that may appear more than once.
    SETTINGS_ENV_VAR (str): environment variable naming a settings file.

"""
import logging
import os
import re
from copy import deepcopy
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from immutabledict import immutabledict

from weakestlink.constants import DEFAULT_CONFIG, LAYERS, MAX_PSK_PASSPHRASE_LENGTH
from weakestlink.exceptions import ConfigError, WeakestLinkException
from weakestlink.keyspace import AttackModel, LifetimeBudget, PassphrasePolicy, get_character_set, to_fraction
from weakestlink.stack import SecurityComponent, SecurityStack, cipher_spec_for, get_protocol
from weakestlink.utils import load_json_or_yaml, read_from_file

log = logging.getLogger(__name__)

AUDIT_CONFIG_KEYS = (
    "wlan_protocol",
    "effective_key_bits",
    "passphrase_length",
    "passphrase_charset",
    "attack_rate_keys_per_second",
    "lifetime_budget_years",
    "descriptive_component",
)
REPEATABLE_KEYS = ("descriptive_component",)
SETTINGS_ENV_VAR = "WEAKESTLINK_SETTINGS"

_POWER_REGEX = re.compile(r"^(?P<base>\d+)\s*(?:\^|\*\*)\s*(?P<exponent>\d+)$")
_INTEGER_REGEX = re.compile(r"^\d+(?:_\d+)*$")
_VALUE_UNDEFINED_MESSAGE = "{path} {key} needs to be defined!"


# frozen copies {{{1
def get_frozen_copy(values: Any) -> Any:
    """Convert `values`'s list values into tuples, and dicts into immutabledicts.

    A recursive function(bottom-up conversion)

    Args:
        values (dict/list): the values/list to be converted.

    """
    if isinstance(values, (immutabledict, dict)):
        return immutabledict({key: get_frozen_copy(value) for key, value in values.items()})
    elif isinstance(values, (list, tuple)):
        return tuple([get_frozen_copy(value) for value in values])
    return values


def get_unfrozen_copy(values: Any) -> Any:
    """Recursively convert `value`'s tuple values into lists, and immutabledicts into dicts.

    Args:
        values (immutabledict/tuple): the immutabledict/tuple.

    Returns:
        values (dict/list): the unfrozen copy.

    """
    if isinstance(values, (immutabledict, dict)):
        return {key: get_unfrozen_copy(value) for key, value in values.items()}
    elif isinstance(values, (list, tuple)):
        return [get_unfrozen_copy(value) for value in values]
    return values


# check_settings {{{1
def check_settings(settings: Mapping[str, Any], path: str) -> List[str]:
    """Validate the running settings against DEFAULT_CONFIG.

    Any unknown keys, wrong types or out-of-range values will add error messages.

    Args:
        settings (dict): the running settings.
        path (str): the path to the settings file, used in error messages.

    Returns:
        list: the error messages found when validating the settings.

    """
    messages = []
    for key, value in settings.items():
        if key not in DEFAULT_CONFIG:
            messages.append("Unknown key {} in {}!".format(key, path))
            continue
        if value is None:
            messages.append(_VALUE_UNDEFINED_MESSAGE.format(path=path, key=key))
            continue
        default_type = type(DEFAULT_CONFIG[key])
        if type(value) is not default_type:
            messages.append("{} {}: type {} is not {}!".format(path, key, type(value), default_type))
            continue
        if key in ("attack_rate_keys_per_second", "enumeration_cap", "max_concurrent_audits") and value < 1:
            messages.append("{} {}: {} must be >= 1!".format(path, key, value))
        if key == "lifetime_budget_years":
            try:
                if to_fraction(value) <= 0:
                    messages.append("{} {}: {} must be > 0!".format(path, key, value))
            except WeakestLinkException:
                messages.append("{} {}: {!r} is not a decimal number!".format(path, key, value))
    return messages


# create_settings {{{1
def create_settings(path: Optional[str] = None, environ: Optional[Mapping[str, str]] = None) -> immutabledict:
    """Create the running settings from DEFAULT_CONFIG and an optional settings file.

    Then validate them and freeze them.

    Args:
        path (str, optional): a YAML or JSON settings file.  Falls back to
            ``$WEAKESTLINK_SETTINGS``; with neither, the defaults are used.
        environ (dict, optional): the environment.  Defaults to ``os.environ``.

    Returns:
        immutabledict: the frozen settings.

    Raises:
        ConfigError: on an unreadable file or invalid settings.

    """
    environ = os.environ if environ is None else environ
    path = path or environ.get(SETTINGS_ENV_VAR)
    settings = dict(deepcopy(get_unfrozen_copy(DEFAULT_CONFIG)))
    if path:
        contents = load_json_or_yaml(path, is_path=True, file_type="yaml", exception=ConfigError, message="Can't load settings %(file_type)s: %(exc)s")
        if contents is None:
            contents = {}
        if not isinstance(contents, dict):
            raise ConfigError("settings must be a mapping, not {}".format(type(contents).__name__), path=path)
        # yaml reads a bare 89.78 as a float
        if isinstance(contents.get("lifetime_budget_years"), (int, float)) and not isinstance(contents["lifetime_budget_years"], bool):
            contents["lifetime_budget_years"] = repr(contents["lifetime_budget_years"])
        settings.update(contents)
        messages = check_settings(settings, path)
        if messages:
            raise ConfigError("\n".join(messages), path=path)
        log.debug("Loaded settings from {}".format(path))
    return get_frozen_copy(settings)


def attack_from_settings(settings: Mapping[str, Any]) -> AttackModel:
    """Build the default AttackModel of the running settings."""
    return AttackModel(rate_keys_per_second=settings["attack_rate_keys_per_second"], description=settings["attack_description"])


def budget_from_settings(settings: Mapping[str, Any]) -> LifetimeBudget:
    """Build the default LifetimeBudget of the running settings."""
    return LifetimeBudget(years=to_fraction(settings["lifetime_budget_years"]))


# AuditConfig {{{1
@dataclass(frozen=True)
class AuditConfig:
    """One parsed audit config.

    ``passphrase_length`` None means a cipher-only stack.
    ``passphrase_charset`` is a registry name or an explicit integer size.

    """

    wlan_protocol: str
    effective_key_bits: Optional[int] = None
    passphrase_length: Optional[int] = None
    passphrase_charset: Union[str, int] = "alphanumeric"
    attack_rate_keys_per_second: int = DEFAULT_CONFIG["attack_rate_keys_per_second"]
    lifetime_budget_years: Fraction = field(default_factory=lambda: Fraction(DEFAULT_CONFIG["lifetime_budget_years"]))
    descriptive_components: Tuple[Tuple[str, str], ...] = ()
    attack_description: str = DEFAULT_CONFIG["attack_description"]
    path: str = "<string>"


def parse_rate(value: str) -> int:
    """Parse a keys-per-second rate: ``1000000``, ``1_000_000``, ``10^12`` or ``10**12``.

    Raises:
        ValueError: on anything else.

    """
    value = value.strip()
    match = _POWER_REGEX.match(value)
    if match:
        return int(match.group("base")) ** int(match.group("exponent"))
    if _INTEGER_REGEX.match(value):
        return int(value.replace("_", ""))
    raise ValueError("not an integer rate: {!r}".format(value))


def _parse_int(value: str) -> int:
    value = value.strip()
    if not _INTEGER_REGEX.match(value):
        raise ValueError("not a non-negative integer: {!r}".format(value))
    return int(value.replace("_", ""))


def _split_lines(text: str, path: str) -> Dict[str, List[Tuple[int, str]]]:
    entries: Dict[str, List[Tuple[int, str]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key = key.strip().lower()
        value = value.strip()
        if not sep or not key:
            raise ConfigError("expected 'key = value', got {!r}".format(line), path=path, line=lineno)
        if key not in AUDIT_CONFIG_KEYS:
            raise ConfigError("unknown key {!r}; known keys: {}".format(key, ", ".join(AUDIT_CONFIG_KEYS)), path=path, line=lineno)
        if not value:
            raise ConfigError("{} has no value".format(key), path=path, line=lineno)
        if key in entries and key not in REPEATABLE_KEYS:
            raise ConfigError("duplicate key {!r} (first set on line {})".format(key, entries[key][0][0]), path=path, line=lineno)
        entries.setdefault(key, []).append((lineno, value))
    return entries


# parse_config {{{1
def parse_config(text: str, path: str = "<string>", settings: Mapping[str, Any] = DEFAULT_CONFIG) -> AuditConfig:
    """Parse and validate an audit config.

    Missing rate and budget come from ``settings``.  Every problem found
    raises a ConfigError naming the file, the line and the offending key
    or token.

    Args:
        text (str): the config body.
        path (str, optional): the config path, for error messages.
        settings (dict, optional): the running settings.  Defaults to DEFAULT_CONFIG.

    Returns:
        AuditConfig: the validated config.

    Raises:
        ConfigError: on duplicate, unknown or malformed entries, and on
            names the registries don't know.

    """
    entries = _split_lines(text, path)

    def single(key: str) -> Optional[Tuple[int, str]]:
        return entries[key][0] if key in entries else None

    def fail(msg: str, lineno: Optional[int]) -> ConfigError:
        return ConfigError(msg, path=path, line=lineno)

    protocol_entry = single("wlan_protocol")
    if protocol_entry is None:
        raise ConfigError("wlan_protocol is required", path=path)
    lineno, token = protocol_entry
    try:
        protocol = get_protocol(token)
    except WeakestLinkException as exc:
        raise fail(str(exc), lineno) from exc
    if protocol.layer != "wlan":
        raise fail("{} is a {} protocol, not a wlan protocol".format(protocol.name, protocol.layer), lineno)

    bits = None
    bits_entry = single("effective_key_bits")
    if bits_entry is not None:
        lineno, value = bits_entry
        try:
            bits = _parse_int(value)
            cipher_spec_for(protocol.name, bits)
        except (ValueError, WeakestLinkException) as exc:
            raise fail("effective_key_bits: {}".format(exc), lineno) from exc

    length = None
    length_entry = single("passphrase_length")
    if length_entry is not None:
        lineno, value = length_entry
        try:
            length = _parse_int(value)
            if length < 1:
                raise ValueError("must be >= 1, got {}".format(length))
        except ValueError as exc:
            raise fail("passphrase_length: {}".format(exc), lineno) from exc
        if length > MAX_PSK_PASSPHRASE_LENGTH and protocol.name in ("WPA", "WPA2"):
            log.warning("{}:{}: {} PSK passphrases are at most {} characters".format(path, lineno, protocol.name, MAX_PSK_PASSPHRASE_LENGTH))

    charset: Union[str, int] = "alphanumeric"
    charset_entry = single("passphrase_charset")
    if charset_entry is not None:
        lineno, value = charset_entry
        if length is None:
            raise fail("passphrase_charset needs passphrase_length", lineno)
        try:
            resolved = get_character_set(value)
        except WeakestLinkException as exc:
            raise fail("passphrase_charset: {}".format(exc), lineno) from exc
        charset = resolved.size if resolved.members is None else resolved.name

    rate = settings["attack_rate_keys_per_second"]
    description = settings["attack_description"]
    rate_entry = single("attack_rate_keys_per_second")
    if rate_entry is not None:
        lineno, value = rate_entry
        try:
            rate = parse_rate(value)
            AttackModel(rate_keys_per_second=rate)
        except (ValueError, WeakestLinkException) as exc:
            raise fail("attack_rate_keys_per_second: {}".format(exc), lineno) from exc
        description = "{} keys/second".format(rate)

    years = to_fraction(settings["lifetime_budget_years"])
    budget_entry = single("lifetime_budget_years")
    if budget_entry is not None:
        lineno, value = budget_entry
        try:
            years = to_fraction(value)
        except WeakestLinkException as exc:
            raise fail("lifetime_budget_years: {}".format(exc), lineno) from exc
        if years <= 0:
            raise fail("lifetime_budget_years must be > 0, got {}".format(value), lineno)

    descriptive = []
    for lineno, value in entries.get("descriptive_component", []):
        layer, sep, name = value.partition(":")
        layer = layer.strip().lower()
        if not sep or not name.strip():
            raise fail("descriptive_component must be 'layer:name', got {!r}".format(value), lineno)
        if layer not in LAYERS:
            raise fail("unknown layer {!r}; known layers: {}".format(layer, ", ".join(LAYERS)), lineno)
        try:
            info = get_protocol(name)
        except WeakestLinkException as exc:
            raise fail(str(exc), lineno) from exc
        if info.layer != layer:
            raise fail("{} is a {} protocol, not {}".format(info.name, info.layer, layer), lineno)
        if (layer, info.name) in descriptive:
            raise fail("duplicate descriptive_component {}:{}".format(layer, info.name), lineno)
        descriptive.append((layer, info.name))

    return AuditConfig(
        wlan_protocol=protocol.name,
        effective_key_bits=bits,
        passphrase_length=length,
        passphrase_charset=charset,
        attack_rate_keys_per_second=rate,
        lifetime_budget_years=years,
        descriptive_components=tuple(descriptive),
        attack_description=description,
        path=path,
    )


def load_audit_config(path: str, settings: Mapping[str, Any] = DEFAULT_CONFIG) -> AuditConfig:
    """Read and parse the audit config at ``path``."""
    return parse_config(read_from_file(path, exception=ConfigError), path=path, settings=settings)


# build_stack {{{1
def build_stack(config: AuditConfig) -> SecurityStack:
    """Turn an audit config into a SecurityStack.

    The stack holds the wlan cipher, the passphrase keying it (if any) and
    the descriptive components, in that order.

    """
    spec = cipher_spec_for(config.wlan_protocol, config.effective_key_bits)
    components = [SecurityComponent.cipher("{}-{}".format(spec.protocol_label, spec.effective_key_bits), spec)]
    if config.passphrase_length is not None:
        policy = PassphrasePolicy(charset=get_character_set(config.passphrase_charset), length=config.passphrase_length)
        components.append(SecurityComponent.passphrase("passphrase", policy, governing=spec))
    for layer, name in config.descriptive_components:
        components.append(SecurityComponent.descriptive(name, layer, name))
    return SecurityStack(
        components=tuple(components),
        attack=AttackModel(rate_keys_per_second=config.attack_rate_keys_per_second, description=config.attack_description),
        budget=LifetimeBudget(years=config.lifetime_budget_years),
    )
