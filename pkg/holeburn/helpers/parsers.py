"""Parsing utilities for holeburn."""

from __future__ import annotations

import re

from ..exceptions import InvalidParameterError

_SWEEP_REGEX = re.compile(
    r"^\s*(?P<name>[A-Za-z_]+)\s*=\s*(?P<start>[^:]+):(?P<stop>[^:]+):(?P<count>\d+)"
    r"(?::(?P<spacing>lin|log))?\s*$"
)

# Short names accepted on the command line
_ALIASES = {"alpha": "alpha_mag", "M": "m"}


def parse_sweep(text: str) -> dict[str, str | float | int | bool]:
    """Parse NAME=START:STOP:COUNT[:lin|log] into grid fields."""
    match = _SWEEP_REGEX.match(text)
    if match is None:
        raise InvalidParameterError(
            f"sweep must look like NAME=START:STOP:COUNT[:lin|log], got {text!r}"
        )
    try:
        start = float(match["start"])
        stop = float(match["stop"])
    except ValueError as err:
        raise InvalidParameterError(f"sweep bounds must be numbers: {text!r}") from err
    name = match["name"]
    return {
        "name": _ALIASES.get(name, name),
        "start": start,
        "stop": stop,
        "count": int(match["count"]),
        "linear": match["spacing"] != "log",
    }
