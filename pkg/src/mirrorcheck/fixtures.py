"""Bundled input fixtures.

Each fixture is one JSON file under ``data/`` holding the input slots
(polytope, partition parts, fibration, gram matrix, ...) that the CLI
subcommands consume through ``--fixture <name>``.
"""

from __future__ import annotations

import json
from importlib import resources

from .errors import InputError

_PACKAGE = "mirrorcheck.data"


def fixture_names() -> list[str]:
    names = []
    for entry in resources.files(_PACKAGE).iterdir():
        if entry.name.endswith(".json"):
            names.append(entry.name[:-5])
    return sorted(names)


def load_fixture(name: str) -> dict:
    try:
        path = resources.files(_PACKAGE) / f"{name}.json"
        with path.open("r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(
            f"unknown fixture {name!r}; available: {', '.join(fixture_names())}")
