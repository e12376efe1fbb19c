"""Bundled example documents.

``QUIVALG_FIXTURES`` overrides the directory the documents are read from,
which lets a deployment swap in its own corpus without reinstalling.
"""

from __future__ import annotations

import os
from pathlib import Path

_HERE = Path(__file__).resolve().parent

CORPUS = ("gamma1_1", "gamma1_2", "gamma1_3", "gamma2",
          "lambda1", "lambda2", "lambda3", "lambda4")


def fixtures_dir() -> Path:
    override = os.environ.get("QUIVALG_FIXTURES")
    return Path(override) if override else _HERE


def fixture_path(filename: str) -> Path:
    path = fixtures_dir() / filename
    if not path.is_file():
        raise FileNotFoundError(f"no fixture {filename!r} in {fixtures_dir()}")
    return path


def read_fixture(filename: str) -> str:
    return fixture_path(filename).read_text(encoding="utf-8")
