#!/usr/bin/env python
"""File, registry and concurrency helpers shared by the weakestlink modules.

Attributes:
    log (logging.Logger): the log object for the module
    SERIALIZERS (dict): ``file_type`` to the function that renders data for it.

"""
import asyncio
import json
import logging
import os
from typing import Any, Awaitable, Callable, Iterable, List, Optional, Sequence, Type, TypeVar

import yaml

from weakestlink.exceptions import ConfigError, RegistryError, WeakestLinkException

log = logging.getLogger(__name__)

T = TypeVar("T")


# makedirs {{{1
def makedirs(path: Optional[str]) -> None:
    """Create ``path`` and its parents; an empty path is a no-op.

    Raises:
        WeakestLinkException: if ``path`` resolves to something other than a directory.

    """
    if not path:
        return
    if os.path.exists(path) and not os.path.isdir(os.path.realpath(path)):
        raise WeakestLinkException("makedirs: {} already exists and is not a directory!".format(path))
    log.debug("Ensuring report directory {}".format(path))
    os.makedirs(path, exist_ok=True)


# serializers {{{1
def format_json(data: Any) -> str:
    """Render report data as key-sorted json with 2-space indents."""
    return json.dumps(data, indent=2, sort_keys=True)


def format_yaml(data: Any) -> str:
    """Render report data as key-sorted block yaml, keeping ``×`` and other non-ascii text."""
    return yaml.safe_dump(data, default_flow_style=False, sort_keys=True, allow_unicode=True)


SERIALIZERS = {
    "text": str,
    "json": format_json,
    "yaml": format_yaml,
}  # type: dict


# load_json_or_yaml {{{1
def load_json_or_yaml(
    string: str,
    is_path: bool = False,
    file_type: str = "json",
    exception: Optional[Type[BaseException]] = ConfigError,
    message: str = "Failed to load %(file_type)s: %(exc)s",
) -> Any:
    """Parse a settings file or the bundled report schema.

    ``yaml`` is parsed with ``yaml.safe_load``; anything else is treated as json.

    Args:
        string (str): the document, or a path to it when ``is_path`` is set.
        is_path (bool, optional): read ``string`` as a path. Defaults to False.
        file_type (str, optional): ``json`` or ``yaml``. Defaults to ``json``.
        exception (exception, optional): raised with ``message`` on failure; with
            None, failures return None instead. Defaults to ConfigError.
        message (str, optional): %-formatted with ``exc`` and ``file_type``.

    Returns:
        the parsed document, or None on a swallowed failure.

    """
    parse = yaml.safe_load if file_type == "yaml" else json.loads  # type: Callable[[str], Any]
    try:
        if is_path:
            with open(string, "r", encoding="utf-8") as fh:
                string = fh.read()
        return parse(string)
    except (OSError, ValueError, yaml.YAMLError) as exc:
        if exception is None:
            log.debug("Ignoring unparseable {}: {}".format(file_type, exc))
            return None
        raise exception(message % {"exc": str(exc), "file_type": file_type})


# write_to_file / read_from_file {{{1
def write_to_file(path: str, contents: Any, file_type: str = "text") -> None:
    """Write ``contents`` to ``path`` through the ``file_type`` serializer, without a trailing newline.

    Raises:
        WeakestLinkException: with a ``file_type`` outside ``SERIALIZERS``.

    """
    serialize = SERIALIZERS.get(file_type)
    if serialize is None:
        raise WeakestLinkException("Unknown file_type {} not in {}!".format(file_type, tuple(sorted(SERIALIZERS))))
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(contents))


def read_from_file(path: str, exception: Type[BaseException] = ConfigError) -> str:
    """Return the utf-8 text of an audit config, raising ``exception`` if it can't be read."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise exception("Can't read_from_file {}: {}".format(path, str(exc)))


# lookup_by_name {{{1
def lookup_by_name(registry: Iterable[T], token: str, kind: str, plural: str, name: Callable[[T], str] = lambda entry: getattr(entry, "name")) -> T:
    """Find the registry entry whose name matches ``token``, ignoring case and padding.

    Args:
        registry (iterable): protocols or character sets, in display order.
        token (str): the name the user gave.
        kind (str): what an entry is, for the error message (``protocol``).
        plural (str): the heading for the list of known names (``protocols``).
        name (callable, optional): extracts an entry's name. Defaults to ``entry.name``.

    Raises:
        RegistryError: carrying ``token``, listing every known name, if nothing matches.

    """
    entries = list(registry)
    wanted = token.strip().lower()
    for entry in entries:
        if name(entry).lower() == wanted:
            return entry
    raise RegistryError(
        "Unknown {} {!r}; known {}: {}".format(kind, token.strip(), plural, ", ".join(name(entry) for entry in entries)),
        token=token.strip(),
    )


# raise_future_exceptions {{{1
async def raise_future_exceptions(tasks: Sequence["asyncio.Future[T]"]) -> List[T]:
    """Wait for every audit task, then re-raise the first failure in task order.

    Returns:
        list: the task results, in the order of ``tasks``.

    """
    if not tasks:
        return []
    outcomes = await asyncio.gather(*tasks, return_exceptions=True)
    for outcome in outcomes:
        if isinstance(outcome, BaseException):
            raise outcome
    return list(outcomes)


async def semaphore_wrapper(semaphore: asyncio.Semaphore, coro: Awaitable[T]) -> T:
    """Run ``coro`` while holding ``semaphore``; bounds concurrent audits."""
    async with semaphore:
        return await coro
