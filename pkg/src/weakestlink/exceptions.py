#!/usr/bin/env python
"""weakestlink exceptions."""

from typing import Any, Optional

from weakestlink.constants import STATUSES


class WeakestLinkException(Exception):
    """The base exception in weakestlink.

    The command line exits with ``self.exit_code`` when one of these escapes.

    Attributes:
        exit_code (int): this is set to 2 (usage-error).

    """

    exit_code = STATUSES["usage-error"]


class InvalidSpecError(WeakestLinkException, ValueError):
    """A keyspace, policy or stack violates its preconditions.

    Raised for zero key bits, zero passphrase length, a zero attack rate,
    duplicate component ids and the like.

    """


class RegistryError(WeakestLinkException, LookupError):
    """An unknown protocol or character set name.

    Attributes:
        token (str): the name that didn't resolve.

    """

    def __init__(self, msg: str, token: Optional[str] = None):
        """Initialize RegistryError.

        Args:
            msg (str): the error message
            token (str, optional): the offending name.

        """
        self.token = token
        super(RegistryError, self).__init__(msg)

    def __str__(self) -> str:
        """Avoid the quoted repr LookupError subclasses would otherwise get."""
        return str(self.args[0])


class ConfigError(WeakestLinkException):
    """Invalid audit config or runtime settings.

    Attributes:
        line (int): 1-based line number of the offending entry, if known.
        path (str): the config path or ``<string>``.

    """

    def __init__(self, msg: str, *args: Any, path: str = "<string>", line: Optional[int] = None):
        """Initialize ConfigError.

        Args:
            msg (str): the error message, without location.
            *args: passed on via super().
            path (str, optional): the config path.  Defaults to ``<string>``.
            line (int, optional): the line number.  Defaults to None.

        """
        self.path = path
        self.line = line
        if line is None:
            location = "{}: ".format(path)
        else:
            location = "{}:{}: ".format(path, line)
        super(ConfigError, self).__init__(location + msg, *args)


class EnumerationCapError(WeakestLinkException):
    """The oracle refused to enumerate a space above its cap."""

    def __init__(self, size: int, cap: int):
        """Initialize EnumerationCapError.

        Args:
            size (int): the keyspace size requested.
            cap (int): the configured enumeration cap.

        """
        self.size = size
        self.cap = cap
        super(EnumerationCapError, self).__init__("Keyspace of {} exceeds the enumeration cap {}; use the analytic path".format(size, cap))


class ReportFormatError(WeakestLinkException, ValueError):
    """Unknown output format."""
