#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""weakestlink version, and the version.json that setup.py reads.

Run as a script to refresh version.json at the repo root.

Attributes:
  __version__ (tuple): major, minor and patch ints, plus an optional pre-release label.
  __version_string__ (str): ``__version__`` joined with dots.

"""
import os
from typing import Optional, Tuple, Union

from weakestlink.utils import write_to_file

VersionType = Union[Tuple[int, int, int], Tuple[int, int, int, str]]

VERSION_JSON = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))), "version.json")


def get_version_string(version: VersionType) -> str:
    """Join a 3- or 4-part version tuple with dots, e.g. ``(9, 2, 0, "alpha")`` -> ``9.2.0.alpha``.

    Raises:
      ValueError: on any other length.
      TypeError: if the first three parts aren't ints.

    """
    if len(version) not in (3, 4):
        raise ValueError("Version tuple is non-semver-compliant {} length!".format(len(version)))
    if not all(isinstance(part, int) for part in version[:3]):
        raise TypeError("Version {} needs integer major, minor and patch".format(version))
    return ".".join(str(part) for part in version)


__version__ = (1, 0, 0)
__version_string__ = get_version_string(__version__)


def write_version(name: Optional[str] = None, path: Optional[str] = None) -> None:
    """Dump the version to ``path`` (default VERSION_JSON), only when run directly."""
    if name not in (None, "__main__"):
        return
    write_to_file(path or VERSION_JSON, {"version": list(__version__), "version_string": __version_string__}, file_type="json")


write_version(name=__name__)
