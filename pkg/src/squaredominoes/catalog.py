"""Access to the tileset, rules and scripts shipped with the package."""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .core import TileSet
from .formats import parse_tileset
from .substitution import RuleSet, load_rules

TILESET_ENV = "SQUAREDOMINOES_TILESET"


def data_path(name: str) -> Path:
    return Path(str(resources.files("squaredominoes") / "data" / name))


def default_tileset_path() -> Path:
    env = os.environ.get(TILESET_ENV)
    return Path(env) if env else data_path("a7.tileset")


def a7_tileset() -> TileSet:
    path = data_path("a7.tileset")
    return parse_tileset(path.read_text(), str(path))


def a7_rules(ts: TileSet | None = None) -> RuleSet:
    path = data_path("a7.rules")
    return load_rules(path.read_text(), ts or a7_tileset(), source=str(path))
