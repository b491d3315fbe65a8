"""Run configuration shared by the CLI and the experiment scripts."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .canon import CANON_VERTEX_CAP, MAX_CORE_EDGES

FORMATS = ("json", "csv", "dot", "g6", "text")
HARD_MAX_EDGES = 12
HARD_MAX_N = 64


@dataclass
class Config:
    threads: int = 1
    max_vertices: int = CANON_VERTEX_CAP
    max_edges: int = MAX_CORE_EDGES
    max_n: Optional[int] = None
    format: str = "json"
    out: Optional[str] = None
    seed: int = 0

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if not 1 <= self.max_edges <= HARD_MAX_EDGES:
            raise ValueError(f"max_edges must be in [1, {HARD_MAX_EDGES}]")
        if self.max_n is not None and not 1 <= self.max_n <= HARD_MAX_N:
            raise ValueError(f"max_n must be in [1, {HARD_MAX_N}]")
        if self.threads < 1:
            raise ValueError("threads must be positive")

    @classmethod
    def from_env(cls, **overrides) -> "Config":
        threads = overrides.pop("threads", None)
        if threads is None:
            threads = int(os.environ.get("WSAT_THREADS", "1") or 1)
        return cls(threads=threads, **{k: v for k, v in overrides.items() if v is not None})
