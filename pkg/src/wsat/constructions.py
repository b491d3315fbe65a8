"""Explicit weakly saturated graphs with full certificates.

Every construction returns the starting graph together with an ordered
list of edge additions, each carrying the vertex map of the copy it
creates, so an upper bound is checked by replay alone.  Host vertices of
the pattern copy keep the pattern's own labels; auxiliary vertices (the
set U, cliques, isolated padding) are numbered after them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from .formulas import (ADJACENT_PAIR, ENDSTAR, EVEN_PATH, P2_LEAF, SIX_VERTEX, BAD_CATERPILLAR,
                       GOOD_CATERPILLAR, endd_mind_sets)
from .graph import Graph, norm, path_graph
from .pattern import CaterpillarSpec, Pattern, end_stars
from .percolation import Certificate, Embedder, closure, find_embedding
from .structures import find_even_path, find_p2_leaf, find_six_vertex


class ConstructionError(ValueError):
    pass


@dataclass
class ConstructionOutput:
    start: Graph
    certificate: Certificate
    claimed_edges: int
    rule: str
    n_threshold: int
    details: dict = field(default_factory=dict)

    def header(self) -> dict:
        return {
            "rule": self.rule,
            "n_threshold": self.n_threshold,
            "claimed_edges": self.claimed_edges,
            "details": self.details,
        }

    def to_dict(self) -> dict:
        return {"header": self.header(), "certificate": self.certificate.to_dict()}


class _Run:
    """Current host graph plus the recorded steps."""

    def __init__(self, pattern: Pattern, start: Graph):
        self.pattern = pattern
        self.n = start.n
        self.adj = list(start.adj)
        self.start = start
        self.steps: list = []

    def has(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def add(self, u: int, v: int, mp: Sequence[int]) -> None:
        if u == v or self.has(u, v):
            raise ConstructionError(f"edge {u}-{v} cannot be added")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u
        self.steps.append((norm(u, v), tuple(mp)))

    def add_if_absent(self, u: int, v: int, mp: Sequence[int]) -> None:
        if not self.has(u, v):
            self.add(u, v, mp)

    def complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.adj[v] | (1 << v) == full for v in range(self.n))

    def certificate(self) -> Certificate:
        return Certificate(self.pattern, self.n, list(self.start.edges), self.steps,
                           saturating=self.complete())


def _remap(base: Sequence[int], pairs: dict) -> tuple:
    mp = list(base)
    for p, h in pairs.items():
        mp[p] = h
    return tuple(mp)


# ----------------------------------------------------------------------
# completion from a large enough clique

def _pendant(g: Graph) -> tuple[int, int]:
    deg = g.degrees()
    leaf = min((v for v in range(g.n) if deg[v] == 1), default=None)
    if leaf is None:
        raise ConstructionError("pattern has minimum degree above 1; a pendant edge is required")
    return leaf, g.neighbors(leaf)[0]


def _complete_from_clique(run: _Run, clique: Sequence[int]) -> None:
    """Finish to K_n once the host contains a clique on >= v(F) - 1 vertices.

    A pendant edge x_F y_F of F is mapped onto each new edge: first from
    the clique's first k vertices H to everything outside, then between
    outside vertices, which by then see all of H."""
    f = run.pattern.graph
    k = f.n - 1
    x, y = _pendant(f)
    others = [v for v in range(f.n) if v not in (x, y)]
    H = sorted(clique)[:k]
    if len(H) < k:
        raise ConstructionError(f"clique of size {len(clique)} is below {k}")
    in_h = set(H)
    outside = [v for v in range(run.n) if v not in in_h]
    mp = [0] * f.n
    for v in H:
        rest = [h for h in H if h != v]
        for w in outside:
            if run.has(v, w):
                continue
            mp[y], mp[x] = v, w
            for p, h in zip(others, rest):
                mp[p] = h
            run.add(v, w, mp)
    base = H[:k - 1]
    for i, a in enumerate(outside):
        for b in outside[i + 1:]:
            if run.has(a, b):
                continue
            mp[y], mp[x] = a, b
            for p, h in zip(others, base):
                mp[p] = h
            run.add(a, b, mp)


def min_degree_completion(g: Graph, h_vertices: Sequence[int], pattern: Pattern) -> Certificate:
    """Certificate completing g to K_n when g has an induced subgraph H on
    v(F) - 1 vertices with minimum degree at least Delta(F), F having a
    pendant edge."""
    f = pattern.graph
    k = f.n - 1
    hv = sorted(set(h_vertices))
    if min(pattern.degrees) != 1:
        raise ConstructionError("pattern must have minimum degree 1")
    if len(hv) != k:
        raise ConstructionError(f"H must have {k} vertices, got {len(hv)}")
    if g.n < f.n:
        raise ConstructionError(f"host has {g.n} vertices, needs at least {f.n}")
    if any(not 0 <= v < g.n for v in hv):
        raise ConstructionError("H vertex out of range")
    sub = g.induced(hv)
    for i, v in enumerate(hv):
        if sub.degree(i) < pattern.max_degree:
            raise ConstructionError(
                f"vertex {v} has degree {sub.degree(i)} in H, below max degree {pattern.max_degree}")
    run = _Run(pattern, g)
    if sub.is_complete():
        _complete_from_clique(run, hv)
        return run.certificate()

    x, y = _pendant(f)
    keep = [v for v in range(f.n) if v != x]
    minus = Pattern(f.induced(keep)) if f.m > 1 else None
    pos_y = keep.index(y)
    in_h = set(hv)
    outside = [v for v in range(g.n) if v not in in_h]
    phi = None
    for v in hv:
        if minus is None:
            emb = {y: v}
        else:
            host = Graph.from_adj(run.adj)
            found = find_embedding(minus, host, fixed={pos_y: v}, allowed=hv)
            if found is None:
                raise ConstructionError(f"no copy of F minus a leaf in H rooted at {v}")
            emb = {keep[i]: found[i] for i in range(len(keep))}
        if phi is None:
            phi = emb
        for w in outside:
            if run.has(v, w):
                continue
            mp = [0] * f.n
            for p, h in emb.items():
                mp[p] = h
            mp[x] = w
            run.add(v, w, mp)
    for i, a in enumerate(outside):
        for b in outside[i + 1:]:
            if run.has(a, b):
                continue
            mp = [0] * f.n
            for p, h in phi.items():
                mp[p] = h
            mp[y], mp[x] = a, b
            run.add(a, b, mp)
    emb = Embedder(pattern)
    for a in hv:
        for b in hv:
            if a < b and not run.has(a, b):
                run.adj[a] |= 1 << b
                run.adj[b] |= 1 << a
                deg = [m.bit_count() for m in run.adj]
                found = emb.anchored(run.adj, deg, a, b)
                run.adj[a] &= ~(1 << b)
                run.adj[b] &= ~(1 << a)
                if found is None:
                    raise ConstructionError(f"no copy of F through {a}-{b}")
                run.add(a, b, found)
    return run.certificate()


# ----------------------------------------------------------------------
# end-star constructions

def _min_end_star(g: Graph) -> tuple[int, int, list[int]]:
    """(center, s, leaves) of the end-star with the fewest pendants, smallest center."""
    stars = end_stars(g)
    if not stars:
        raise ConstructionError("pattern has no end-star")
    c, s = min(stars, key=lambda cs: (cs[1], cs[0]))
    deg = g.degrees()
    leaves = sorted(w for w in g.neighbors(c) if deg[w] == 1)
    return c, s, leaves


def _star_split(g: Graph, c: int, s: int, leaves: list[int]) -> tuple[list[int], int]:
    """The s pendants of the end-star and the remaining neighbour v_2."""
    deg = g.degrees()
    nonleaf = [w for w in g.neighbors(c) if deg[w] > 1]
    if nonleaf:
        return leaves[:s], nonleaf[0]
    # star: every neighbour is a leaf; one of them plays v_2
    return leaves[:s], leaves[s]


def _endstar_tail(run: _Run, v1: int, v2: int, pend: list[int], U: list[int], pads: list[int]) -> None:
    """Steps that grow a clique out of U, the padding and v_2, then finish."""
    ident = list(range(run.pattern.n))
    s = len(pend)
    # v_1 joined to U: a pendant of v_1 moves to u_i
    for u in U:
        run.add_if_absent(v1, u, _remap(ident, {pend[0]: u}))
    # v_2 joined to U: v_1 moves to u_i, its pendants to v_1 and the other u's
    for i, u in enumerate(U):
        others = [x for x in U if x != u]
        run.add_if_absent(v2, u, _remap(ident, {v1: u, **dict(zip(pend, [v1] + others))}))
    # padding joined to U
    for p in pads:
        for i, u in enumerate(U):
            others = [x for x in U if x != u]
            run.add_if_absent(p, u, _remap(ident, {v1: u, **dict(zip(pend, [p] + others))}))
    # padding joined to v_2 (p plays v_1 with U as its pendants)
    for p in pads:
        run.add_if_absent(p, v2, _remap(ident, {v1: p, **dict(zip(pend, U))}))
    # padding pairs
    for i, p1 in enumerate(pads):
        for p2 in pads[i + 1:]:
            fill = [p2] + U[:s - 1]
            run.add_if_absent(p1, p2, _remap(ident, {v1: p1, **dict(zip(pend, fill))}))
    _complete_from_clique(run, list(U) + list(pads) + [v2])


def endstar_saturator(pattern: Pattern, n: int, threshold: Optional[int] = None,
                      rule: str = ENDSTAR) -> ConstructionOutput:
    """Start from F minus a pendant edge at its smallest end-star, a clique
    on delta_e new vertices and isolated padding; claimed size
    e(F) - 1 + C(delta_e, 2)."""
    g = pattern.graph
    k = g.n - 1
    v1, s, leaves = _min_end_star(g)
    pend, v2 = _star_split(g, v1, s, leaves)
    need = threshold if threshold is not None else 3 * k + s + 1
    if n < need:
        raise ConstructionError(f"n = {n} is below the threshold {need}")
    U = list(range(g.n, g.n + s))
    pads = list(range(g.n + s, n))
    e = norm(v1, pend[0])
    start = Graph(n, [x for x in g.edges if x != e] + [(a, b) for i, a in enumerate(U) for b in U[i + 1:]])
    run = _Run(pattern, start)
    run.add(*e, range(g.n))
    _endstar_tail(run, v1, v2, pend, U, pads)
    claimed = g.m - 1 + comb(s, 2)
    return ConstructionOutput(start, run.certificate(), claimed, rule, need,
                              {"v1": v1, "v2": v2, "delta_e": s, "U": U})


def endd_mind_saturator(pattern: Pattern, u: int, w: int, n: int) -> ConstructionOutput:
    """The U-S bipartite construction for an adjacent pair (u, w) of
    non-pendant vertices; claimed size e(F) - 1 + |S| delta_e."""
    g = pattern.graph
    k = g.n - 1
    deg = g.degrees()
    if not (0 <= u < g.n and 0 <= w < g.n) or not g.has_edge(u, w):
        raise ConstructionError(f"{u} and {w} are not adjacent")
    if deg[u] < 2 or deg[w] < 2:
        raise ConstructionError(f"{u if deg[u] < 2 else w} is a pendant vertex")
    v1, s, leaves = _min_end_star(g)
    nonleaf = [x for x in g.neighbors(v1) if deg[x] > 1]
    if not nonleaf:
        raise ConstructionError("end-star center has no non-leaf neighbour")
    pend, v2 = leaves[:s], nonleaf[0]
    need = 3 * k + s + 1
    if n < need:
        raise ConstructionError(f"n = {n} is below the threshold {need}")
    S = sorted(next(sset for a, b, sset in endd_mind_sets(g) if {a, b} == {u, w}))
    U = list(range(g.n, g.n + s))
    pads = list(range(g.n + s, n))
    e = norm(v1, pend[0])
    start = Graph(n, [x for x in g.edges if x != e] + [(a, b) for a in U for b in S])
    run = _Run(pattern, start)
    ident = list(range(g.n))
    run.add(*e, ident)
    # neighbours of u, w carrying a leaf get joined to U, the leaf moving to u_i
    leafy = sorted(x for x in set(g.neighbors(u)) | set(g.neighbors(w))
                   if x not in (u, w) and any(deg[y] == 1 for y in g.neighbors(x)))
    for x in leafy:
        leaf = min(y for y in g.neighbors(x) if deg[y] == 1)
        for ui in U:
            run.add_if_absent(x, ui, _remap(ident, {leaf: ui}))
    # U becomes a clique: u_i u_j plays u w
    for i, a in enumerate(U):
        for b in U[i + 1:]:
            run.add_if_absent(a, b, _remap(ident, {u: a, w: b}))
    _endstar_tail(run, v1, v2, pend, U, pads)
    claimed = g.m - 1 + len(S) * s
    return ConstructionOutput(start, run.certificate(), claimed, ADJACENT_PAIR, need,
                              {"u": u, "w": w, "S": S, "v1": v1, "v2": v2, "delta_e": s, "U": U})


# ----------------------------------------------------------------------
# caterpillars

def _cat_layout(spec: CaterpillarSpec) -> tuple[Graph, list[list[int]]]:
    g = spec.graph()
    leaves_of = [sorted(x for x in g.neighbors(t) if x >= spec.ell) for t in range(spec.ell)]
    return g, leaves_of


def _good_caterpillar(spec: CaterpillarSpec, n: int) -> ConstructionOutput:
    g, leaves_of = _cat_layout(spec)
    pattern = Pattern(g, f"cat:{','.join(map(str, spec.a))}")
    ell, k = spec.ell, g.n - 1
    need = (ell + 1) * k + 1
    if n < need:
        raise ConstructionError(f"n = {n} is below the threshold {need}")
    spine = list(range(ell))
    e = norm(0, leaves_of[0][0])
    start = Graph(n, [x for x in g.edges if x != e])
    run = _Run(pattern, start)
    ident = list(range(g.n))
    run.add(*e, ident)
    pads = list(range(g.n, n))
    owner = {x: t for t in range(ell) for x in leaves_of[t]}
    # padding to every spine vertex, a pendant of v_i moving there
    for p in pads:
        for i in spine:
            run.add_if_absent(p, i, _remap(ident, {leaves_of[i][0]: p}))
    # tree leaves to the other spine vertices; the leaf's own slot goes to padding
    z = pads[0]
    for x in sorted(owner):
        for i in spine:
            if run.has(x, i):
                continue
            run.add(x, i, _remap(ident, {leaves_of[i][0]: x, x: z}))
    # the spine percolates under P_ell; each path copy extends to a copy of T
    non_spine = [v for v in range(n) if v >= ell]
    if ell >= 3:
        _, pcert = closure(path_graph(ell), Pattern(path_graph(ell)))
        for (a, b), pmap in pcert.steps:
            mp = [0] * g.n
            pool = iter(non_spine)
            for t in spine:
                mp[t] = pmap[t]
                for x in leaves_of[t]:
                    mp[x] = next(pool)
            run.add(a, b, mp)
    # pairs outside the spine: v_j moves to w, w' (and u_j) become its leaves
    j = min(t for t in spine if spec.a[t] <= 2)
    for i, w in enumerate(non_spine):
        for w2 in non_spine[i + 1:]:
            if run.has(w, w2):
                continue
            mp = [0] * g.n
            for t in spine:
                mp[t] = t
            mp[j] = w
            own = [w2] + ([j] if spec.a[j] == 2 else [])
            for x, h in zip(leaves_of[j], own):
                mp[x] = h
            pool = iter(v for v in non_spine if v not in (w, w2))
            for t in spine:
                if t != j:
                    for x in leaves_of[t]:
                        mp[x] = next(pool)
            run.add(w, w2, mp)
    return ConstructionOutput(start, run.certificate(), k - 1, GOOD_CATERPILLAR, need,
                              {"a": list(spec.a), "j": j})


def _bad_caterpillar(spec: CaterpillarSpec, n: int) -> ConstructionOutput:
    g, leaves_of = _cat_layout(spec)
    pattern = Pattern(g, f"cat:{','.join(map(str, spec.a))}")
    ell, k, a = spec.ell, g.n - 1, spec.min_pendants
    need = 3 * k + 4
    if n < need:
        raise ConstructionError(f"n = {n} is below the threshold {need}")
    U = list(range(g.n, g.n + a - 1))
    pads = list(range(g.n + a - 1, n))
    e = norm(0, leaves_of[0][0])
    start = Graph(n, [x for x in g.edges if x != e] + [(x, y) for i, x in enumerate(U) for y in U[i + 1:]])
    run = _Run(pattern, start)
    ident = list(range(g.n))
    run.add(*e, ident)
    j = min(t for t in range(ell) if spec.a[t] == a)
    for i in range(ell):
        for w in U + pads:
            run.add_if_absent(w, i, _remap(ident, {leaves_of[i][0]: w}))
    for ui in U:
        rest = [x for x in U if x != ui]
        for w in pads:
            run.add(w, ui, _remap(ident, {j: ui, **dict(zip(leaves_of[j], [w, j] + rest))}))
    for i, w1 in enumerate(pads):
        for w2 in pads[i + 1:]:
            run.add(w1, w2, _remap(ident, {j: w1, **dict(zip(leaves_of[j], [w2] + U))}))
    _complete_from_clique(run, U + pads)
    return ConstructionOutput(start, run.certificate(), k - 1 + comb(a - 1, 2), BAD_CATERPILLAR, need,
                              {"a": list(spec.a), "j": j, "U": U})


def caterpillar_saturator(spec: CaterpillarSpec, n: int) -> ConstructionOutput:
    if not spec.nondegenerate:
        raise ConstructionError(f"caterpillar {list(spec.a)} has an empty spine vertex")
    if spec.min_pendants <= 2:
        return _good_caterpillar(spec, n)
    return _bad_caterpillar(spec, n)


# ----------------------------------------------------------------------
# local structures of good trees

def _six_vertex(pattern: Pattern, roles: dict, n: int) -> ConstructionOutput:
    g = pattern.graph
    k = g.n - 1
    need = 2 * k + 1
    if n < need:
        raise ConstructionError(f"n = {n} is below the threshold {need}")
    r = roles
    e = norm(r[1], r[3])
    start = Graph(n, [x for x in g.edges if x != e])
    run = _Run(pattern, start)
    ident = list(range(g.n))
    run.add(*e, ident)
    pads = list(range(g.n, n))
    for p in pads:
        run.add(p, r[3], _remap(ident, {r[1]: p}))
        run.add(p, r[4], _remap(ident, {r[2]: p}))
    for p in pads:
        run.add(p, r[5], _remap(ident, {r[3]: p, r[4]: r[4], r[1]: r[3]}))
        run.add(p, r[6], _remap(ident, {r[4]: p, r[3]: r[3], r[2]: r[4]}))
    for i, p1 in enumerate(pads):
        for p2 in pads[i + 1:]:
            run.add(p1, p2, _remap(ident, {r[1]: r[3], r[2]: r[4], r[3]: p1, r[4]: p2}))
    _complete_from_clique(run, pads)
    return ConstructionOutput(start, run.certificate(), g.m - 1, SIX_VERTEX, need,
                              {"structure": "six-vertex", "roles": {str(i): v for i, v in r.items()}})


def _even_path(pattern: Pattern, path: list[int], n: int) -> ConstructionOutput:
    g = pattern.graph
    deg = g.degrees()
    need = 2 * g.n + 1
    if n < need:
        raise ConstructionError(f"n = {n} is below the threshold {need}")
    first, last = path[0], path[-1]
    leaf1 = min(x for x in g.neighbors(first) if deg[x] == 1)
    leaf2 = min(x for x in g.neighbors(last) if deg[x] == 1)
    e = norm(first, leaf1)
    start = Graph(n, [x for x in g.edges if x != e])
    run = _Run(pattern, start)
    ident = list(range(g.n))
    run.add(*e, ident)
    pads = list(range(g.n, n))
    for p in pads:
        run.add(p, first, _remap(ident, {leaf1: p}))
    # p joined to every other path vertex, p playing the vertex between
    for idx in range(2, len(path) - 2, 2):
        for p in pads:
            run.add(p, path[idx], _remap(ident, {path[idx - 1]: p}))
    for p in pads:
        run.add(p, last, _remap(ident, {leaf2: p}))
    a, b = path[-3], path[-2]
    for i, p1 in enumerate(pads):
        for p2 in pads[i + 1:]:
            run.add(p1, p2, _remap(ident, {a: p1, b: p2}))
    _complete_from_clique(run, pads)
    return ConstructionOutput(start, run.certificate(), g.m - 1, EVEN_PATH, need,
                              {"structure": "even-path", "path": list(path)})


STRUCTURES = ("six-vertex", "even-path", "p2")


def local_structure_saturator(tree: Pattern, n: int, structure: Optional[str] = None) -> ConstructionOutput:
    """Goodness certificate from the first matching local structure (or the
    one requested): six-vertex, even path, then a leaf on a degree-2 vertex."""
    g = tree.graph
    if not tree.is_tree:
        raise ConstructionError("local structures apply to trees only")
    order = STRUCTURES if structure is None else (structure,)
    for name in order:
        if name == "six-vertex":
            roles = find_six_vertex(g)
            if roles is not None and g.n >= 6:
                return _six_vertex(tree, roles, n)
        elif name == "even-path":
            path = find_even_path(g)
            if path is not None:
                return _even_path(tree, path, n)
        elif name == "p2":
            hit = find_p2_leaf(g)
            if hit is not None:
                out = endstar_saturator(tree, n, threshold=2 * g.n + 1, rule=P2_LEAF)
                out.details["structure"] = "p2"
                out.details["leaf"] = hit[0]
                return out
        else:
            raise ConstructionError(f"unknown structure {name!r}")
    raise ConstructionError("no local structure matches")


# ----------------------------------------------------------------------
# named trees

def high_degree_good_tree(N: int) -> tuple[Graph, tuple[int, int]]:
    """Five levels below a root (N + 1 children at the root, N at every
    other internal vertex), then one extra pendant on every non-leaf except
    v_1 (first root child) and v_2 (its first child).  BFS numbering."""
    if N < 1:
        raise ValueError("N must be positive")
    edges = []
    levels = [[0]]
    nxt = 1
    for depth in range(5):
        layer = []
        for v in levels[-1]:
            for _ in range(N + 1 if depth == 0 else N):
                edges.append((v, nxt))
                layer.append(nxt)
                nxt += 1
        levels.append(layer)
    v1 = levels[1][0]
    v2 = levels[2][0]
    for level in levels[:5]:
        for v in level:
            if v in (v1, v2):
                continue
            edges.append((v, nxt))
            nxt += 1
    return Graph(nxt, edges), (v1, v2)


def counterexample_tree() -> Graph:
    """Seven vertices: a degree-2 root with two children, each carrying two leaves."""
    return Graph(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)])
