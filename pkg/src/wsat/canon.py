"""Canonical forms and isomorphism-free enumeration of small trees and cores.

Canonical labelling is individualisation-refinement: equitable colour
refinement, then branching on the first non-singleton cell.  Branches on two
vertices with identical neighbourhoods (twins) give the same leaves, so only
one of them is explored.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .graph import Graph, iter_bits

CANON_VERTEX_CAP = 16
MAX_TREE_ORDER = 12
MAX_CORE_EDGES = 10


class CapExceeded(ValueError):
    pass


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for c in cells:
            mask = 0
            for v in c:
                mask |= 1 << v
            masks.append(mask)
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in c:
                a = adj[v]
                sig = tuple((a & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
            else:
                new_cells.append(c)
        cells = new_cells
        if not changed:
            return cells


def _twins(adj: Sequence[int], x: int, y: int) -> bool:
    return adj[x] & ~(1 << y) == adj[y] & ~(1 << x)


def _certificate(adj: Sequence[int], order: list[int]) -> tuple[int, ...]:
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for w in iter_bits(adj[v]):
            row |= 1 << pos[w]
        rows.append(row)
    return tuple(rows)


def _search(adj: Sequence[int], cells: list[list[int]]):
    cells = _refine(adj, cells)
    for idx, c in enumerate(cells):
        if len(c) > 1:
            break
    else:
        order = [c[0] for c in cells]
        return _certificate(adj, order), order
    target = cells[idx]
    best = None
    tried: list[int] = []
    for v in target:
        if any(_twins(adj, v, t) for t in tried):
            continue
        tried.append(v)
        rest = [w for w in target if w != v]
        branch = cells[:idx] + [[v], rest] + cells[idx + 1:]
        cand = _search(adj, branch)
        if best is None or cand[0] > best[0]:
            best = cand
    return best


def canonical_order(g: Graph, colors: Sequence[int] | None = None) -> tuple[tuple[int, ...], list[int]]:
    """(certificate, order) for the whole graph; order[i] is the vertex labelled i.

    With ``colors`` the labelling respects the colouring (colour classes are
    laid out in ascending colour order)."""
    if g.n == 0:
        return (), []
    if colors is None:
        cells = [list(range(g.n))]
    else:
        by_color: dict[int, list[int]] = {}
        for v in range(g.n):
            by_color.setdefault(colors[v], []).append(v)
        cells = [by_color[c] for c in sorted(by_color)]
    cert, order = _search(g.adj, cells)
    if colors is not None:
        cert = (tuple(sorted(colors)),) + cert
    return cert, order


def canonical_labeling(g: Graph, cap: int = CANON_VERTEX_CAP) -> list[int]:
    """Permutation perm with g.relabel(perm) canonical; components are
    canonised separately and laid out by (size, certificate)."""
    if g.n > cap:
        raise CapExceeded(f"canonical form supports at most {cap} vertices, got {g.n}")
    parts = []
    for comp in g.components():
        sub = g.induced(comp)
        cert, order = canonical_order(sub)
        parts.append(((len(comp), cert), [comp[i] for i in order]))
    parts.sort(key=lambda p: p[0])
    perm = [0] * g.n
    label = 0
    for _, verts in parts:
        for v in verts:
            perm[v] = label
            label += 1
    return perm


def canonical_graph(g: Graph, cap: int = CANON_VERTEX_CAP) -> Graph:
    return g.relabel(canonical_labeling(g, cap))


def canonical_form(g: Graph, cap: int = CANON_VERTEX_CAP) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    return canonical_graph(g, cap).to_graph6().encode("ascii")


# ----------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    seen: dict[bytes, Graph] = {}
    for t in _trees(n - 1):
        for v in range(t.n):
            bigger = Graph(n, list(t.edges) + [(v, n - 1)])
            key = canonical_form(bigger)
            if key not in seen:
                seen[key] = canonical_graph(bigger)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_trees(n: int) -> list[Graph]:
    """One tree per isomorphism class on n vertices, in canonical-form order."""
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree order must be in [1, {MAX_TREE_ORDER}], got {n}")
    return list(_trees(n))


@lru_cache(maxsize=None)
def _cores(m: int, max_vertices: int) -> tuple[Graph, ...]:
    if m == 0:
        return (Graph(0),)
    cap = max(2 * m, CANON_VERTEX_CAP)
    seen: dict[bytes, Graph] = {}

    def offer(h: Graph) -> None:
        key = canonical_form(h, cap)
        if key not in seen:
            seen[key] = canonical_graph(h, cap)

    for c in _cores(m - 1, min(max_vertices, 2 * (m - 1))):
        k = c.n
        for u, v in c.non_edges():
            offer(c.add_edges([(u, v)]))
        if k + 1 <= max_vertices:
            base = c.padded(k + 1)
            for v in range(k):
                offer(base.add_edges([(v, k)]))
        if k + 2 <= max_vertices:
            offer(c.padded(k + 2).add_edges([(k, k + 1)]))
    return tuple(seen[key] for key in sorted(seen))


def enumerate_cores(m: int, max_vertices: int | None = None, max_edges: int = MAX_CORE_EDGES) -> list[Graph]:
    """Graphs with exactly m edges and no isolated vertices, one per
    isomorphism class, in canonical-form order.  ``max_vertices`` restricts
    to cores on at most that many vertices."""
    if m == 0:
        return [Graph(0)]
    if not 1 <= m <= max_edges:
        raise ValueError(f"edge count must be in [1, {max_edges}], got {m}")
    limit = 2 * m if max_vertices is None else min(max_vertices, 2 * m)
    return list(_cores(m, limit))
