"""Exact w-sat(n, F) by exhaustive sweeps over cores, and limit estimates
for trees.

A sweep at m tests every m-edge core with at most n vertices, padded with
isolated vertices to n.  Since adding edges to a weakly saturated
non-complete graph keeps it weakly saturated, one failing sweep at m rules
out every m' <= m; the search exploits this in both directions.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from .canon import MAX_CORE_EDGES, enumerate_cores
from .formulas import wsat_formulas
from .graph import Graph
from .pattern import Pattern
from .percolation import HostTooSmall, percolates


@dataclass
class SweepResult:
    m: int
    tested: int
    witness: Optional[Graph]  # first saturating core (padded), canonical order
    seconds: float = 0.0

    @property
    def success(self) -> bool:
        return self.witness is not None


@dataclass
class ExactResult:
    n: int
    pattern: Pattern
    value: Optional[int]  # None when nothing saturates up to the cap
    witness: Optional[Graph]
    minimality: int  # cores tested in the exhaustive sweep at value - 1
    lower_bound: int  # certified: every graph with fewer edges fails
    m_cap: int
    sweeps: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.value is not None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern.graph.to_graph6(),
            "value": self.value,
            "lower_bound": self.lower_bound,
            "m_cap": self.m_cap,
            "witness": None if self.witness is None else self.witness.to_graph6(),
            "minimality": self.minimality,
            "sweeps": [{"m": s.m, "tested": s.tested, "success": s.success} for s in self.sweeps],
        }


def _worker_count(threads: Optional[int]) -> int:
    if threads is None:
        threads = int(os.environ.get("WSAT_THREADS", "1") or 1)
    return max(1, threads)


def _check(args) -> bool:
    core, n, pattern = args
    return percolates(core.padded(n), pattern)


def sweep(n: int, pattern: Pattern, m: int, threads: Optional[int] = 1,
          stop_at_first: bool = True) -> SweepResult:
    """Test all m-edge cores on at most n vertices.  The witness is the
    first saturating core in canonical order whatever the worker count."""
    t0 = time.perf_counter()
    if m > comb(n, 2):
        return SweepResult(m, 0, None, 0.0)
    cores = enumerate_cores(m, max_vertices=n, max_edges=max(m, MAX_CORE_EDGES))
    workers = _worker_count(threads)
    witness = None
    tested = 0
    if workers == 1:
        for c in cores:
            tested += 1
            if _check((c, n, pattern)):
                witness = c.padded(n)
                if stop_at_first:
                    break
    else:
        chunk = 8 * workers
        with ProcessPoolExecutor(workers) as pool:
            for start in range(0, len(cores), chunk):
                block = cores[start:start + chunk]
                results = list(pool.map(_check, [(c, n, pattern) for c in block]))
                for c, ok in zip(block, results):
                    tested += 1
                    if ok and witness is None:
                        witness = c.padded(n)
                        if stop_at_first:
                            break
                if witness is not None and stop_at_first:
                    break
    return SweepResult(m, tested, witness, time.perf_counter() - t0)


def default_cap(n: int, pattern: Pattern, max_edges: int = MAX_CORE_EDGES) -> int:
    rec = wsat_formulas(pattern, None if pattern.is_tree else n)
    generous = pattern.m - 1 + comb(pattern.max_degree, 2)
    up = rec.upper.value if rec.upper is not None else generous
    return min(max(up, generous), comb(n, 2), max_edges)


def wsat_exact(n: int, pattern: Pattern, m_cap: Optional[int] = None,
               lower_hint: Optional[int] = None, threads: Optional[int] = 1,
               max_edges: int = MAX_CORE_EDGES) -> ExactResult:
    """Smallest m such that some m-edge n-vertex graph is weakly saturated.

    Sweeps ascend from max(e(F) - 1, lower_hint).  After the first success at
    m*, the sweep at m* - 1 is always run (descending further if a wrong hint
    skipped values), so the result is certified by an exhaustive failure."""
    if n < pattern.n:
        raise HostTooSmall(f"host has {n} vertices, pattern needs {pattern.n}")
    if m_cap is None:
        m_cap = default_cap(n, pattern, max_edges)
    m_cap = min(m_cap, comb(n, 2), max_edges)
    trivial = pattern.m - 1
    start = max(trivial, lower_hint or 0)
    sweeps: list[SweepResult] = []

    if start > m_cap:
        # hint above the cap: only the cap itself can be checked
        start = m_cap
    m = start
    hit = None
    while m <= m_cap:
        s = sweep(n, pattern, m, threads)
        sweeps.append(s)
        if s.success:
            hit = s
            break
        m += 1
    if hit is None:
        return ExactResult(n, pattern, None, None, 0, m_cap + 1, m_cap, sweeps)

    value, witness = hit.m, hit.witness
    minimality = 0
    while value > 0:
        below = next((s for s in sweeps if s.m == value - 1), None)
        if below is None:
            below = sweep(n, pattern, value - 1, threads)
            sweeps.append(below)
        if below.success:
            value, witness = below.m, below.witness
            continue
        minimality = below.tested
        break
    sweeps.sort(key=lambda s: s.m)
    return ExactResult(n, pattern, value, witness, minimality, value, m_cap, sweeps)


# ----------------------------------------------------------------------
# limits

@dataclass
class LimitEstimate:
    value: Optional[int]
    stabilized: bool
    n_used: int
    certified: bool  # value equals a valid lower bound or the formula limit
    rule: Optional[str]
    series: list  # (n, value or None, lower_bound)

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "stabilized": self.stabilized,
            "n_used": self.n_used,
            "certified": self.certified,
            "rule": self.rule,
            "series": [{"n": n, "value": v, "lower_bound": lb} for n, v, lb in self.series],
        }


def wsat_limit_estimate(tree: Pattern, window: int = 2, max_n: Optional[int] = None,
                        threads: Optional[int] = 1, max_edges: int = MAX_CORE_EDGES) -> LimitEstimate:
    """Run wsat_exact for n = v(T), v(T) + 1, ... until `window` consecutive
    values agree or n reaches max_n (default v(T) + 6).

    Values are non-increasing in n, so each value caps the next search and a
    value equal to the formula's limit (or a lower bound valid at every n)
    is the limit itself."""
    if not tree.is_tree:
        raise ValueError("limit estimates need a tree pattern")
    if window < 2:
        raise ValueError("window must be at least 2")
    max_n = max_n if max_n is not None else tree.n + 6
    rec = wsat_formulas(tree)
    lower = rec.lower
    target = rec.exact
    series = []
    cap = None
    run = 0
    last = None
    n = tree.n
    certified = False
    rule = None
    if lower is not None and lower.value > max_edges:
        # every sweep would stop at the cap without a witness
        return LimitEstimate(None, False, tree.n, False, None, [])
    while n <= max_n:
        res = wsat_exact(n, tree, m_cap=cap, lower_hint=lower.value if lower else None,
                         threads=threads, max_edges=max_edges)
        series.append((n, res.value, res.lower_bound))
        if res.value is not None:
            cap = res.value
            run = run + 1 if res.value == last else 1
            last = res.value
            for b in (target, lower):
                if b is not None and b.value == res.value:
                    certified, rule = True, b.rule
                    break
            if run >= window:
                break
        n += 1
    n_used = series[-1][0] if series else tree.n
    return LimitEstimate(last, run >= window, n_used, certified, rule, series)


# ----------------------------------------------------------------------
# emitters

def table_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def result_json(res: ExactResult) -> str:
    return json.dumps(res.as_dict(), sort_keys=False)
