"""Simple undirected graphs on vertices 0..n-1, with graph6/DOT I/O and the
graph-spec mini-language used on the command line."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphSpecError(ValueError):
    """A graph spec string or graph6 payload could not be parsed."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message if token is None else f"{message}: {token!r}")
        self.token = token


def norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph stored as one adjacency bitmask per vertex."""

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError(f"negative vertex count {n}")
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._edges = None

    @classmethod
    def from_adj(cls, adj: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g._edges = None
        return g

    # -- basic queries -------------------------------------------------
    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges as sorted (u, v) pairs with u < v."""
        if self._edges is None:
            out = []
            for u in range(self.n):
                for v in iter_bits(self.adj[u] >> (u + 1)):
                    out.append((u, u + 1 + v))
            self._edges = tuple(out)
        return self._edges

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def non_edges(self) -> list[Edge]:
        full = (1 << self.n) - 1
        out = []
        for u in range(self.n):
            missing = ~self.adj[u] & full & ~((1 << (u + 1)) - 1)
            out.extend((u, v) for v in iter_bits(missing))
        return out

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    # -- derived graphs ------------------------------------------------
    def add_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph.from_adj(adj)

    def remove_edges(self, edges: Iterable[Sequence[int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph.from_adj(adj)

    def padded(self, n: int) -> "Graph":
        """Same edges with isolated vertices appended up to n vertices."""
        if n < self.n:
            raise ValueError(f"cannot pad {self.n} vertices down to {n}")
        return Graph.from_adj(list(self.adj) + [0] * (n - self.n))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex v becomes perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; vertices[i] becomes vertex i."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            [(index[u], index[v]) for u, v in self.edges if u in index and v in index],
        )

    def union(self, other: "Graph") -> "Graph":
        """Disjoint union; the other graph's vertices are shifted by self.n."""
        s = self.n
        return Graph(self.n + other.n, list(self.edges) + [(u + s, v + s) for u, v in other.edges])

    # -- structure -----------------------------------------------------
    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp_mask = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp_mask
                comp_mask |= nxt
            seen |= comp_mask
            comps.append(list(iter_bits(comp_mask)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def distances_from(self, source: int) -> list[int]:
        """BFS distances; -1 for unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for w in iter_bits(self.adj[v]):
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def diameter(self) -> int:
        """Largest finite distance (0 for graphs without edges)."""
        best = 0
        for v in range(self.n):
            best = max(best, max(self.distances_from(v)))
        return best

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    def core(self) -> "Graph":
        """Drop isolated vertices (relabelling the rest in order)."""
        return self.induced([v for v in range(self.n) if self.adj[v]])

    # -- dunder --------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    # -- serialization -------------------------------------------------
    def to_graph6(self) -> str:
        return to_graph6(self)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in self.isolated_vertices()]
        lines += [f"  {u} -- {v};" for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ----------------------------------------------------------------------
# family generators

def path_graph(length: int) -> Graph:
    return Graph(length, [(i, i + 1) for i in range(length - 1)])


def star_graph(order: int) -> Graph:
    """S_order: one center joined to order-1 leaves."""
    if order < 1:
        raise ValueError("star needs at least one vertex")
    return Graph(order, [(0, i) for i in range(1, order)])


def complete_graph(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def caterpillar(a: Sequence[int]) -> Graph:
    """C_{a_1..a_l}: spine 0..l-1 in path order, pendants appended in spine order."""
    if len(a) < 1:
        raise ValueError("caterpillar needs a spine of length >= 1")
    if any(x < 0 for x in a):
        raise ValueError(f"negative pendant count in {list(a)}")
    ell = len(a)
    edges = [(i, i + 1) for i in range(ell - 1)]
    nxt = ell
    for t, count in enumerate(a):
        for _ in range(count):
            edges.append((t, nxt))
            nxt += 1
    return Graph(nxt, edges)


# ----------------------------------------------------------------------
# graph6

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + (bits[k] << 5 | bits[k + 1] << 4 | bits[k + 2] << 3 | bits[k + 3] << 2 | bits[k + 4] << 1 | bits[k + 5]))
        for k in range(0, len(bits), 6)
    )
    return _encode_n(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphSpecError("empty graph6 string")
    vals = []
    for ch in s:
        c = ord(ch) - 63
        if not 0 <= c <= 63:
            raise GraphSpecError("invalid graph6 character", ch)
        vals.append(c)
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] != 63:
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        pos = 4
    elif len(vals) >= 8:
        n = 0
        for c in vals[2:8]:
            n = n << 6 | c
        pos = 8
    else:
        raise GraphSpecError("truncated graph6 size field", text)
    need = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (need + 5) // 6:
        raise GraphSpecError(
            f"graph6 length mismatch (n={n} needs {(need + 5) // 6} data bytes, got {len(body)})", text
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    # padding bits must be zero
    for pad in range(need, len(body) * 6):
        if body[pad // 6] >> (5 - pad % 6) & 1:
            raise GraphSpecError("nonzero graph6 padding bits", text)
    return Graph(n, edges)


# ----------------------------------------------------------------------
# graph-spec mini-language

def _int_token(tok: str) -> int:
    tok = tok.strip()
    try:
        value = int(tok)
    except ValueError:
        raise GraphSpecError("expected an integer", tok) from None
    return value


def parse_graph_spec(text: str) -> Graph:
    """Parse ``g6:``, ``path:``, ``star:``, ``clique:``, ``cat:`` or ``edges:`` specs.

    >>> parse_graph_spec("path:4").edges
    ((0, 1), (1, 2), (2, 3))
    """
    if ":" not in text:
        raise GraphSpecError("graph spec must look like kind:args", text)
    kind, _, arg = text.partition(":")
    kind = kind.strip().lower()
    if kind == "g6":
        return from_graph6(arg)
    if kind == "path":
        n = _int_token(arg)
        if n < 1:
            raise GraphSpecError("path length must be >= 1", arg)
        return path_graph(n)
    if kind == "star":
        n = _int_token(arg)
        if n < 2:
            raise GraphSpecError("star order must be >= 2", arg)
        return star_graph(n)
    if kind == "clique":
        n = _int_token(arg)
        if n < 1:
            raise GraphSpecError("clique order must be >= 1", arg)
        return complete_graph(n)
    if kind == "cat":
        parts = [p for p in arg.split(",")]
        if not arg.strip() or any(not p.strip() for p in parts):
            raise GraphSpecError("caterpillar needs comma-separated pendant counts", arg)
        a = [_int_token(p) for p in parts]
        for p, x in zip(parts, a):
            if x < 0:
                raise GraphSpecError("pendant counts must be non-negative", p)
        return caterpillar(a)
    if kind == "edges":
        head, sep, tail = arg.partition(";")
        n = _int_token(head)
        if n < 0:
            raise GraphSpecError("vertex count must be non-negative", head)
        edges = []
        if sep and tail.strip():
            for tok in tail.split(","):
                ends = tok.split("-")
                if len(ends) != 2:
                    raise GraphSpecError("edge must look like u-v", tok)
                u, v = _int_token(ends[0]), _int_token(ends[1])
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphSpecError(f"vertex out of range for n={n}", tok)
                if u == v:
                    raise GraphSpecError("loops are not allowed", tok)
                edges.append((u, v))
        return Graph(n, edges)
    raise GraphSpecError("unknown graph kind", kind)
