"""Locating the bundled diagram fixtures.

The spun lens diagrams for small p ship both as package data and as
plain files under the repository's fixtures/ directory.  The
TRISECT_FIXTURES environment variable overrides the lookup directory.
"""

import os
from importlib import resources
from pathlib import Path

from .diagram import TrisectionDiagram
import json

SPUN_LENS_NAMES = {p: f"spun_l{p}_1.json" for p in (2, 3, 4, 5)}


def fixture_path(name):
    """Resolve a fixture file name to a path."""
    override = os.environ.get("TRISECT_FIXTURES")
    if override:
        return Path(override) / name
    return resources.files("trisect.data") / name


def load_fixture(name):
    path = fixture_path(name)
    with path.open("r", encoding="utf-8") as fp:
        return TrisectionDiagram.from_json(json.load(fp))
