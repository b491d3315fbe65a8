"""Patterns (the graph F being percolated) and tree features: leaves,
end-stars, parity colouring, internal tree, caterpillar structure."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional

from .canon import CANON_VERTEX_CAP, canonical_order
from .graph import Graph, iter_bits


class NotATree(ValueError):
    pass


def end_stars(g: Graph) -> list[tuple[int, int]]:
    """(center, s) for every end-star: the center has degree s + 1 and at
    least s leaf neighbours, i.e. an induced K_{1,s} with one outside edge."""
    deg = g.degrees()
    out = []
    for c in range(g.n):
        d = deg[c]
        if d < 2:
            continue
        leaves = sum(1 for w in iter_bits(g.adj[c]) if deg[w] == 1)
        if leaves >= d - 1:
            out.append((c, d - 1))
    return out


def min_end_degree(g: Graph) -> Optional[int]:
    """Smallest pendant count s over end-stars; None when there is none.

    This is the quantity the end-star bounds are stated in: a leaf hanging
    off a degree-2 vertex gives 1, a double star with two leaves per side 2.
    """
    stars = end_stars(g)
    return min((s for _, s in stars), default=None)


def _rooted_code(g: Graph, root: int, parent: int) -> str:
    """AHU code of the subtree at root when entered from parent."""
    kids = sorted(_rooted_code(g, w, root) for w in iter_bits(g.adj[root]) if w != parent)
    return "(" + "".join(kids) + ")"


def directed_edge_orbits(g: Graph) -> list[tuple[int, int]]:
    """One representative (p, q) per automorphism orbit of directed edges.

    Exact for trees (AHU codes of the two sides) and for graphs up to the
    canonical-form cap (colour the endpoints and canonise); larger non-trees
    fall back to listing every directed edge, which is never too coarse."""
    directed = [(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges]
    directed.sort()
    if g.is_tree():
        keyfn = lambda e: (_rooted_code(g, e[0], e[1]), _rooted_code(g, e[1], e[0]))
    elif g.n <= CANON_VERTEX_CAP:
        def keyfn(e):
            colors = [0] * g.n
            colors[e[0]], colors[e[1]] = 1, 2
            return canonical_order(g, colors)[0]
    else:
        return directed
    reps: dict = {}
    for e in directed:
        reps.setdefault(keyfn(e), e)
    return sorted(reps.values())


@dataclass(frozen=True, eq=False)
class Pattern:
    """A connected graph F with at least one edge, plus cached degree data."""

    graph: Graph
    name: str = ""

    def __post_init__(self):
        g = self.graph
        if g.m < 1:
            raise ValueError("pattern needs at least one edge")
        if not g.is_connected():
            raise ValueError("pattern must be connected")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @cached_property
    def degrees(self) -> list[int]:
        return self.graph.degrees()

    @property
    def max_degree(self) -> int:
        return max(self.degrees)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @cached_property
    def leaves(self) -> frozenset[int]:
        return frozenset(v for v, d in enumerate(self.degrees) if d == 1)

    @cached_property
    def end_stars(self) -> list[tuple[int, int]]:
        return end_stars(self.graph)

    @cached_property
    def min_end_degree(self) -> Optional[int]:
        return min((s for _, s in self.end_stars), default=None)

    @cached_property
    def edge_orbits(self) -> list[tuple[int, int]]:
        return directed_edge_orbits(self.graph)

    @cached_property
    def diameter(self) -> int:
        return self.graph.diameter()

    @cached_property
    def is_tree(self) -> bool:
        return self.graph.is_tree()

    @cached_property
    def is_clique(self) -> bool:
        return self.graph.is_complete()

    def pendant_edge(self) -> tuple[int, int]:
        """(leaf, neighbour) for the smallest leaf."""
        leaf = min(self.leaves)
        return leaf, self.graph.neighbors(leaf)[0]

    def __repr__(self) -> str:
        return f"Pattern({self.name or self.graph.to_graph6()})"


# ----------------------------------------------------------------------
# tree features

@dataclass
class TreeFeatures:
    leaves: frozenset
    degrees: list
    diameter: int
    parity_ok: bool
    has_p2_leaf: bool
    internal_vertices: list
    internal_tree: Graph
    leaf_neighbors: frozenset  # U: vertices adjacent to a leaf
    leaf_counts: dict  # d_l(v) for v in U
    d: Optional[int]
    end_stars: list
    min_end_degree: Optional[int]
    red: Optional[frozenset] = None
    blue: Optional[frozenset] = None
    extra: dict = field(default_factory=dict)

    @property
    def red_count(self) -> Optional[int]:
        return None if self.red is None else len(self.red)

    @property
    def blue_count(self) -> Optional[int]:
        return None if self.blue is None else len(self.blue)


def tree_features(t: Graph) -> TreeFeatures:
    if t.n < 2:
        raise NotATree("tree features need at least two vertices")
    if not t.is_tree():
        raise NotATree("input is not a tree (disconnected or has a cycle)")
    deg = t.degrees()
    leaves = frozenset(v for v in range(t.n) if deg[v] == 1)
    internal = [v for v in range(t.n) if deg[v] > 1]
    has_p2 = any(deg[t.neighbors(x)[0]] == 2 for x in leaves)
    # parity colouring rooted at a leaf: all leaves must share its colour class
    root = min(leaves)
    dist = t.distances_from(root)
    parity_ok = all(dist[x] % 2 == 0 for x in leaves)
    red = blue = None
    if parity_ok:
        red = frozenset(v for v in range(t.n) if dist[v] % 2 == 0)
        blue = frozenset(v for v in range(t.n) if dist[v] % 2 == 1)
    counts = {}
    for x in leaves:
        c = t.neighbors(x)[0]
        counts[c] = counts.get(c, 0) + 1
    stars = end_stars(t)
    return TreeFeatures(
        leaves=leaves,
        degrees=deg,
        diameter=t.diameter(),
        parity_ok=parity_ok,
        has_p2_leaf=has_p2,
        internal_vertices=internal,
        internal_tree=t.induced(internal),
        leaf_neighbors=frozenset(counts),
        leaf_counts=counts,
        d=min(counts.values()) if counts else None,
        end_stars=stars,
        min_end_degree=min((s for _, s in stars), default=None),
        red=red,
        blue=blue,
    )


# ----------------------------------------------------------------------
# caterpillars

@dataclass(frozen=True)
class CaterpillarSpec:
    a: tuple

    def __post_init__(self):
        if len(self.a) < 1:
            raise ValueError("spine length must be >= 1")
        if any(x < 0 for x in self.a):
            raise ValueError("pendant counts must be non-negative")

    @property
    def ell(self) -> int:
        return len(self.a)

    @property
    def order(self) -> int:
        return self.ell + sum(self.a)

    @property
    def nondegenerate(self) -> bool:
        return all(x > 0 for x in self.a)

    @property
    def min_pendants(self) -> int:
        return min(self.a)

    def graph(self) -> Graph:
        from .graph import caterpillar
        return caterpillar(self.a)


def caterpillar_spine(t: Graph) -> Optional[list[int]]:
    """Internal vertices in path order if the internal tree is a path, else None.

    Stars give a one-vertex spine; a single edge has no internal vertex."""
    if not t.is_tree() or t.n < 3:
        return None
    deg = t.degrees()
    internal = [v for v in range(t.n) if deg[v] > 1]
    inner = t.induced(internal)
    ideg = inner.degrees()
    if any(d > 2 for d in ideg):
        return None
    if len(internal) == 1:
        return internal
    start = min(i for i in range(len(internal)) if ideg[i] == 1)
    order = [start]
    prev = -1
    while len(order) < len(internal):
        cur = order[-1]
        nxt = [w for w in inner.neighbors(cur) if w != prev]
        prev = cur
        order.append(nxt[0])
    return [internal[i] for i in order]


def caterpillar_of(t: Graph) -> Optional[CaterpillarSpec]:
    """Pendant counts along the internal path, read in the lexicographically
    smaller of the two directions; None when t is not a caterpillar."""
    spine = caterpillar_spine(t)
    if spine is None:
        return None
    deg = t.degrees()
    a = [sum(1 for w in iter_bits(t.adj[v]) if deg[w] == 1) for v in spine]
    return CaterpillarSpec(tuple(min(a, a[::-1])))
