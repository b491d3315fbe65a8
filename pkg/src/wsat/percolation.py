"""F-bootstrap percolation: anchored embedding search, addable edges,
closure with certificates, and search-free certificate replay."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .graph import Graph, from_graph6, iter_bits, norm
from .pattern import Pattern

Edge = tuple[int, int]

# number of backtracking searches started, by caller; tests use it to check
# that replay never searches
search_stats: Counter = Counter()


class HostTooSmall(ValueError):
    pass


# ----------------------------------------------------------------------
# search plans

@dataclass
class _Step:
    vertex: int
    parents: tuple
    need: int


def _plan_from(pattern: Pattern, seeds: Sequence[int]) -> list[_Step]:
    """BFS placement order after the seeds; each step lists the already
    placed pattern neighbours of the vertex."""
    g = pattern.graph
    deg = pattern.degrees
    placed = {v: i for i, v in enumerate(seeds)}
    order = list(seeds)
    head = 0
    while len(order) < g.n:
        if head == len(order):
            # next component: start from the highest-degree unplaced vertex
            v = max((u for u in range(g.n) if u not in placed), key=lambda u: (deg[u], -u))
            placed[v] = len(order)
            order.append(v)
        v = order[head]
        head += 1
        fresh = [w for w in iter_bits(g.adj[v]) if w not in placed]
        fresh.sort(key=lambda w: (-deg[w], w))
        for w in fresh:
            placed[w] = len(order)
            order.append(w)
    steps = []
    for i, v in enumerate(order):
        if i < len(seeds):
            continue
        parents = tuple(w for w in order[:i] if g.adj[v] >> w & 1)
        steps.append(_Step(v, parents, deg[v]))
    return steps


def _extend(steps, i, img, used, adj, hdeg, allowed) -> bool:
    if i == len(steps):
        return True
    st = steps[i]
    if st.parents:
        cand = adj[img[st.parents[0]]]
        for p in st.parents[1:]:
            cand &= adj[img[p]]
        cand &= allowed & ~used
    else:
        cand = allowed & ~used
    need = st.need
    extra = need - len(st.parents)
    while cand:
        low = cand & -cand
        cand ^= low
        c = low.bit_length() - 1
        if hdeg[c] < need:
            continue
        if extra > 0 and (adj[c] & ~used & ~low).bit_count() < extra:
            continue
        img[st.vertex] = c
        if _extend(steps, i + 1, img, used | low, adj, hdeg, allowed):
            return True
    img[st.vertex] = -1
    return False


class Embedder:
    """Anchored embedding search for one pattern; plans are built once."""

    def __init__(self, pattern: Pattern):
        self.pattern = pattern
        self.k = pattern.n
        self.deg = pattern.degrees
        self.anchored_plans = [
            ((p, q), _plan_from(pattern, (p, q))) for p, q in pattern.edge_orbits
        ]

    def anchored(self, adj: Sequence[int], hdeg: Sequence[int], x: int, y: int,
                 allowed: Optional[int] = None) -> Optional[list[int]]:
        """Embedding with some pattern edge sent onto host edge xy (which must
        be present in adj), or None."""
        search_stats["anchored"] += 1
        if allowed is None:
            allowed = (1 << len(adj)) - 1
        deg = self.deg
        for (p, q), steps in self.anchored_plans:
            if hdeg[x] < deg[p] or hdeg[y] < deg[q]:
                continue
            img = [-1] * self.k
            img[p], img[q] = x, y
            if _extend(steps, 0, img, (1 << x) | (1 << y), adj, hdeg, allowed):
                return img
        return None


def find_embedding(pattern: Pattern, host: Graph, fixed: Optional[dict] = None,
                   allowed: Optional[Iterable[int]] = None) -> Optional[list[int]]:
    """Any embedding (injective edge-preserving map) of the pattern into the
    host extending ``fixed``, using only ``allowed`` host vertices."""
    search_stats["free"] += 1
    fixed = dict(fixed or {})
    seeds = list(fixed)
    steps = _plan_from(pattern, seeds)
    img = [-1] * pattern.n
    used = 0
    for p, h in fixed.items():
        img[p] = h
        used |= 1 << h
    for p, h in fixed.items():
        for q, hq in fixed.items():
            if pattern.graph.has_edge(p, q) and not host.has_edge(h, hq):
                return None
    mask = (1 << host.n) - 1
    if allowed is not None:
        mask = 0
        for v in allowed:
            mask |= 1 << v
    if _extend(steps, 0, img, used, host.adj, host.degrees(), mask):
        return img
    return None


def anchored_embedding(pattern: Pattern, host: Graph, edge: Edge) -> Optional[list[int]]:
    """Embedding of the pattern into host whose image has ``edge`` as the
    image of a pattern edge; None when there is none (including a pattern
    larger than the host)."""
    x, y = edge
    if not host.has_edge(x, y):
        raise ValueError(f"anchor {x}-{y} is not an edge of the host")
    if pattern.n > host.n:
        return None
    return Embedder(pattern).anchored(host.adj, host.degrees(), x, y)


# ----------------------------------------------------------------------
# percolation state

class _State:
    def __init__(self, g: Graph):
        self.n = g.n
        self.adj = list(g.adj)
        self.deg = g.degrees()
        self.m = g.m

    def add(self, u: int, v: int) -> None:
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        self.deg[u] += 1
        self.deg[v] += 1
        self.m += 1

    def remove(self, u: int, v: int) -> None:
        self.adj[u] &= ~(1 << v)
        self.adj[v] &= ~(1 << u)
        self.deg[u] -= 1
        self.deg[v] -= 1
        self.m -= 1

    def non_edges_touching(self, mask: int) -> list[Edge]:
        full = (1 << self.n) - 1
        out = set()
        for u in iter_bits(mask):
            for v in iter_bits(~self.adj[u] & full & ~(1 << u)):
                out.add(norm(u, v))
        return list(out)

    def all_non_edges(self) -> list[Edge]:
        full = (1 << self.n) - 1
        out = []
        for u in range(self.n):
            out.extend((u, v) for v in iter_bits(~self.adj[u] & full & ~((1 << (u + 1)) - 1)))
        return out

    def ball(self, v: int, radius: int) -> int:
        seen = 1 << v
        frontier = seen
        for _ in range(radius):
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= self.adj[w]
            frontier = nxt & ~seen
            if not frontier:
                break
            seen |= frontier
        return seen

    def complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def graph(self) -> Graph:
        return Graph.from_adj(self.adj)


def _test(state: _State, emb: Embedder, u: int, v: int) -> Optional[list[int]]:
    state.add(u, v)
    try:
        return emb.anchored(state.adj, state.deg, u, v)
    finally:
        state.remove(u, v)


def addable_edges(g: Graph, pattern: Pattern) -> set[Edge]:
    """Non-edges e of g such that g + e has a copy of the pattern through e."""
    if pattern.n > g.n:
        return set()
    state = _State(g)
    if pattern.m == 1:
        return set(state.all_non_edges())
    emb = Embedder(pattern)
    return {e for e in state.all_non_edges() if _test(state, emb, *e) is not None}


# ----------------------------------------------------------------------
# certificates

@dataclass
class Certificate:
    pattern: Pattern
    n: int
    initial: list  # sorted edge list
    steps: list = field(default_factory=list)  # (edge, map)
    saturating: bool = False

    def final_graph(self) -> Graph:
        return Graph(self.n, list(self.initial) + [e for e, _ in self.steps])

    def start_graph(self) -> Graph:
        return Graph(self.n, self.initial)

    def to_dict(self) -> dict:
        return {
            "pattern": self.pattern.graph.to_graph6(),
            "n": self.n,
            "initial": [[u, v] for u, v in self.initial],
            "steps": [{"edge": [e[0], e[1]], "map": list(mp)} for e, mp in self.steps],
            "saturating": self.saturating,
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        pattern = Pattern(from_graph6(d["pattern"]))
        return cls(
            pattern=pattern,
            n=int(d["n"]),
            initial=[(int(u), int(v)) for u, v in d["initial"]],
            steps=[((int(s["edge"][0]), int(s["edge"][1])), tuple(int(x) for x in s["map"]))
                   for s in d["steps"]],
            saturating=bool(d.get("saturating", False)),
        )

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


@dataclass
class Verification:
    ok: bool
    failed_step: Optional[int] = None
    reason: str = ""
    final_edges: int = 0

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(cert: Certificate, require_complete: Optional[bool] = None) -> Verification:
    """Replay a certificate without any search.

    Every step edge must be absent when added, and its map must be an
    injective edge-preserving map of the pattern into the current graph that
    sends some pattern edge onto the step edge.  When the certificate claims
    saturation (or ``require_complete``), the final graph must be complete."""
    n = cert.n
    pg = cert.pattern.graph
    k = pg.n
    pedges = pg.edges
    mat = bytearray(n * n)
    count = 0
    for u, v in cert.initial:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            return Verification(False, None, f"initial edge {u}-{v} invalid")
        if mat[u * n + v]:
            return Verification(False, None, f"initial edge {u}-{v} repeated")
        mat[u * n + v] = mat[v * n + u] = 1
        count += 1
    for i, ((u, v), mp) in enumerate(cert.steps):
        if not (0 <= u < n and 0 <= v < n) or u == v:
            return Verification(False, i, f"edge {u}-{v} invalid")
        if mat[u * n + v]:
            return Verification(False, i, f"edge {u}-{v} already present")
        if len(mp) != k:
            return Verification(False, i, f"map has {len(mp)} entries, pattern has {k} vertices")
        if len(set(mp)) != k or min(mp) < 0 or max(mp) >= n:
            return Verification(False, i, "map is not an injection into the host")
        mat[u * n + v] = mat[v * n + u] = 1
        count += 1
        for a, b in pedges:
            if not mat[mp[a] * n + mp[b]]:
                return Verification(False, i, f"pattern edge {a}-{b} maps to non-edge {mp[a]}-{mp[b]}")
        try:
            pu, pv = mp.index(u), mp.index(v)
        except ValueError:
            return Verification(False, i, f"edge {u}-{v} not in the image")
        if not pg.has_edge(pu, pv):
            return Verification(False, i, f"edge {u}-{v} is not the image of a pattern edge")
    want = cert.saturating if require_complete is None else require_complete
    if want and count != n * (n - 1) // 2:
        return Verification(False, None, f"final graph has {count} of {n * (n - 1) // 2} edges", count)
    return Verification(True, None, "", count)


# ----------------------------------------------------------------------
# closure

def closure(g: Graph, pattern: Pattern, order: Optional[Callable[[Edge], object]] = None,
            record: bool = True) -> tuple[Graph, Optional[Certificate]]:
    """Percolate until no non-edge is addable.

    At every step the addable edge with the smallest ``order`` key (default:
    lexicographic) is added.  After an addition only non-edges within the
    pattern's diameter of the new edge are re-tested; a full sweep confirms
    the fixed point before returning."""
    key = order or (lambda e: e)
    state = _State(g)
    cert = Certificate(pattern, g.n, list(g.edges)) if record else None
    if pattern.n > g.n:
        return g, cert
    if pattern.m == 1:
        for e in sorted(state.all_non_edges(), key=key):
            state.add(*e)
            if record:
                cert.steps.append((e, (e[0], e[1])))
        if record:
            cert.saturating = True
        return state.graph(), cert
    emb = Embedder(pattern)
    radius = pattern.diameter
    addable: dict[Edge, list[int]] = {}
    for e in state.all_non_edges():
        mp = _test(state, emb, *e)
        if mp is not None:
            addable[e] = mp
    swept_clean = True
    while True:
        if not addable:
            if swept_clean or state.complete():
                break
            for e in state.all_non_edges():
                mp = _test(state, emb, *e)
                if mp is not None:
                    addable[e] = mp
            swept_clean = True
            continue
        e = min(addable, key=key)
        mp = addable.pop(e)
        state.add(*e)
        swept_clean = False
        if record:
            cert.steps.append((e, tuple(mp)))
        near = state.ball(e[0], radius) | state.ball(e[1], radius)
        for f in state.non_edges_touching(near):
            if f in addable:
                continue
            mp = _test(state, emb, *f)
            if mp is not None:
                addable[f] = mp
    if record:
        cert.saturating = state.complete()
    return state.graph(), cert


def percolates(g: Graph, pattern: Pattern) -> bool:
    """True iff the closure of g is complete (no certificate kept)."""
    final, _ = closure(g, pattern, record=False)
    return final.is_complete()


def is_weakly_saturated(g: Graph, pattern: Pattern) -> bool:
    if g.n < pattern.n:
        raise HostTooSmall(f"host has {g.n} vertices, pattern needs {pattern.n}")
    return percolates(g, pattern)
