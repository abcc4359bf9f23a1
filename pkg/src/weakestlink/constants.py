#!/usr/bin/env python
"""weakestlink constants.

Attributes:
    DEFAULT_CONFIG (immutabledict): the default runtime settings.  Settings
        files are validated against this.
    STATUSES (dict): maps audit outcome (string) to exit code (int).
    SECONDS_PER_DAY (int): 86400.
    SECONDS_PER_YEAR (int): a 365-day year, in seconds.
    CHARACTER_SET_MEMBERS (immutabledict): registry name -> ordered member string.
    PROTOCOLS (tuple): the protocol survey, one immutabledict per protocol.
    LAYERS (tuple): the security layers a protocol can belong to.

"""
import string
from typing import Any

from immutabledict import immutabledict

STATUSES = {
    "secure": 0,
    "insecure": 1,
    "usage-error": 2,
}

SECONDS_PER_DAY = 86400
SECONDS_PER_YEAR = 365 * SECONDS_PER_DAY

# DEFAULT_CONFIG {{{1
# When adding new complex config, make sure all `list`s are `tuple`s, and all
# `dict`s are `immutabledict`s!
DEFAULT_CONFIG: immutabledict[str, Any] = immutabledict(
    {
        # 10,000 ASICs at 100 MHz, one key per cycle
        "attack_rate_keys_per_second": 10 ** 12,
        "attack_description": "10,000 ASIC chips at 100 MHz (10^12 keys/second)",
        # decimal string so it stays exact
        "lifetime_budget_years": "89.78",
        "enumeration_cap": 10 ** 7,
        "max_concurrent_audits": 4,
        # Logging settings
        "verbose": False,
        "log_datefmt": "%Y-%m-%dT%H:%M:%S",
        "log_fmt": "%(asctime)s %(levelname)8s - %(message)s",
        "log_dir": "",
        "log_max_bytes": 0,
        "log_max_backups": 10,
        "watch_log_file": False,
    }
)

# Character sets {{{1
# Registry order matters: lookups for "smallest set of at least N symbols"
# take the first of equal-sized sets.
CHARACTER_SET_MEMBERS: immutabledict[str, str] = immutabledict(
    {
        "digits": string.digits,
        "hexadecimal": string.digits + "abcdef",
        "lowercase": string.ascii_lowercase,
        "uppercase": string.ascii_uppercase,
        "letters-one-case-plus-digits": string.digits + string.ascii_lowercase,
        "mixed-case-letters": string.ascii_lowercase + string.ascii_uppercase,
        "alphanumeric": string.digits + string.ascii_lowercase + string.ascii_uppercase,
    }
)

# Protocols {{{1
LAYERS = ("wlan", "access-control", "authentication")

PROTOCOLS = (
    immutabledict(
        {
            "name": "WEP",
            "layer": "wlan",
            "effective_key_bits": (40, 104),
            "default_key_bits": 104,
            "notes": "RC4 with a 24-bit IV; 64/128-bit keys carry 40/104 effective bits",
        }
    ),
    immutabledict(
        {
            "name": "WPA",
            "layer": "wlan",
            "effective_key_bits": (256,),
            "default_key_bits": 256,
            "notes": "RC4 with doubled IV; the survey quotes key lengths up to 152 bits, assessed at 256",
        }
    ),
    immutabledict(
        {
            "name": "WPA2",
            "layer": "wlan",
            "effective_key_bits": (256,),
            "default_key_bits": 256,
            "notes": "AES block cipher; PSK mode derives the key from an 8-63 character passphrase",
        }
    ),
    immutabledict(
        {
            "name": "802.1X",
            "layer": "access-control",
            "effective_key_bits": (),
            "default_key_bits": None,
            "notes": "port-based access control; asks an authentication server, typically RADIUS",
        }
    ),
    immutabledict(
        {
            "name": "RADIUS",
            "layer": "access-control",
            "effective_key_bits": (),
            "default_key_bits": None,
            "notes": "central database of users, passwords and attributes such as VLAN ID",
        }
    ),
    immutabledict(
        {
            "name": "EAP",
            "layer": "access-control",
            "effective_key_bits": (),
            "default_key_bits": None,
            "notes": "extensible intermediary between access control and authentication",
        }
    ),
    immutabledict(
        {
            "name": "TLS",
            "layer": "authentication",
            "effective_key_bits": (),
            "default_key_bits": None,
            "notes": "certificates plus symmetric/asymmetric ciphers; required by the Wi-Fi Alliance",
        }
    ),
    immutabledict(
        {
            "name": "Kerberos",
            "layer": "authentication",
            "effective_key_bits": (),
            "default_key_bits": None,
            "notes": "ticket granting with symmetric ciphers",
        }
    ),
    immutabledict(
        {
            "name": "LEAP",
            "layer": "authentication",
            "effective_key_bits": (),
            "default_key_bits": None,
            "notes": "based on MS-CHAPv1, considered an unsecure protocol",
        }
    ),
    immutabledict(
        {
            "name": "PEAP",
            "layer": "authentication",
            "effective_key_bits": (),
            "default_key_bits": None,
            "notes": "protects the EAP session and its credentials",
        }
    ),
)

# Significant digits of every formatted duration.
SIGNIFICANT_DIGITS = 9

# Longest passphrase WPA/WPA2 PSK mode accepts.
MAX_PSK_PASSPHRASE_LENGTH = 63

OUTPUT_FORMATS = ("text", "markdown", "csv", "json", "yaml")
