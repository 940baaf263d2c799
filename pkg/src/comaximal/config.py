"""Sweep configuration: one JSON file, caps overridable from the environment.

Keys (all optional, defaults shown)::

    {
      "max_factors": 4,
      "max_proper_ideals": 5,
      "zmod_list": [12, 30, 60, 64, 210, 720],
      "graph_vertex_cap": 20000,
      "witness_cap": 64,
      "search_budget": 1000000,
      "max_order": 4096,
      "workers": 1,
      "atlas_path": "atlas.jsonl"
    }

``COMAXIMAL_MAX_ORDER`` and ``COMAXIMAL_WORKERS`` override the file.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from pathlib import Path

from .theorems import Caps


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    max_factors: int = 4
    max_proper_ideals: int = 5
    zmod_list: tuple[int, ...] = (12, 30, 60, 64, 210, 720)
    graph_vertex_cap: int = 20_000
    witness_cap: int = 64
    search_budget: int = 1_000_000
    max_order: int = 4096
    workers: int = 1
    atlas_path: str = "atlas.jsonl"

    def __post_init__(self) -> None:
        for name in ("max_factors", "max_proper_ideals", "graph_vertex_cap", "witness_cap",
                     "search_budget", "max_order", "workers"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if any(not isinstance(z, int) or isinstance(z, bool) or z < 2 for z in self.zmod_list):
            raise ConfigError(f"zmod_list entries must be integers >= 2, got {list(self.zmod_list)}")

    @property
    def caps(self) -> Caps:
        return Caps(
            graph_vertex_cap=self.graph_vertex_cap,
            witness_cap=self.witness_cap,
            search_budget=self.search_budget,
            max_order=self.max_order,
        )


_KEYS = {f.name for f in fields(SweepConfig)}


def config_from_dict(data: dict) -> SweepConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(data) - _KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    data = dict(data)
    if "zmod_list" in data:
        if not isinstance(data["zmod_list"], list):
            raise ConfigError("zmod_list must be a list")
        data["zmod_list"] = tuple(data["zmod_list"])
    for env, key in (("COMAXIMAL_MAX_ORDER", "max_order"), ("COMAXIMAL_WORKERS", "workers")):
        raw = os.environ.get(env)
        if raw is not None:
            try:
                data[key] = int(raw)
            except ValueError:
                raise ConfigError(f"{env} must be an integer, got {raw!r}") from None
    try:
        return SweepConfig(**data)
    except TypeError as exc:
        raise ConfigError(str(exc)) from None


def load_config(path: str | Path | None) -> SweepConfig:
    if path is None:
        return config_from_dict({})
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from None
    return config_from_dict(data)
