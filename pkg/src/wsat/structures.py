"""Finders for the local tree structures that force goodness."""

from __future__ import annotations

from typing import Optional

from .graph import Graph


def find_p2_leaf(t: Graph) -> Optional[tuple[int, int]]:
    """(leaf, neighbour) with the neighbour of degree 2; smallest leaf first."""
    deg = t.degrees()
    for x in range(t.n):
        if deg[x] == 1:
            c = t.neighbors(x)[0]
            if deg[c] == 2:
                return x, c
    return None


def find_six_vertex(t: Graph) -> Optional[dict[int, int]]:
    """Roles {1..6: vertex} with v1, v2 leaves, v3 ~ v4 both of degree 3,
    N(v3) = {v1, v4, v5} and N(v4) = {v2, v3, v6}."""
    deg = t.degrees()
    for v3 in range(t.n):
        if deg[v3] != 3:
            continue
        for v4 in t.neighbors(v3):
            if deg[v4] != 3:
                continue
            rest3 = [w for w in t.neighbors(v3) if w != v4]
            rest4 = [w for w in t.neighbors(v4) if w != v3]
            l3 = [w for w in rest3 if deg[w] == 1]
            l4 = [w for w in rest4 if deg[w] == 1]
            if not l3 or not l4:
                continue
            v1, v2 = l3[0], l4[0]
            v5 = next(w for w in rest3 if w != v1)
            v6 = next(w for w in rest4 if w != v2)
            return {1: v1, 2: v2, 3: v3, 4: v4, 5: v5, 6: v6}
    return None


def find_even_path(t: Graph) -> Optional[list[int]]:
    """Shortest path v1..v_{2k} (k >= 2) whose interior vertices all have
    degree 2 and whose ends are both adjacent to leaves."""
    deg = t.degrees()
    near_leaf = [any(deg[w] == 1 for w in t.neighbors(v)) and deg[v] > 1 for v in range(t.n)]
    best = None
    for s in range(t.n):
        if not near_leaf[s]:
            continue
        for first in t.neighbors(s):
            prev, cur = s, first
            path = [s]
            # extend only through degree-2 vertices, so the interior is valid
            while deg[cur] == 2:
                path.append(cur)
                prev, cur = cur, [w for w in t.neighbors(cur) if w != prev][0]
                if len(path) >= 3 and len(path) % 2 == 1 and near_leaf[cur]:
                    cand = path + [cur]
                    cand = cand if cand[0] < cand[-1] else cand[::-1]
                    if best is None or (len(cand), cand) < (len(best), best):
                        best = cand
    return best
