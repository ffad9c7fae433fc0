"""Brute-force reference implementations used to cross-check the fast paths.

Everything here is deliberately naive: orientations are enumerated as raw
direction vectors over the edge list, shortcut detection enumerates all
directed paths, and alternation slices subsequences.  None of it shares code
with the implementations under test.
"""

from itertools import combinations, permutations

from wordrep.graphs import Graph
from wordrep.orientations import Orientation


def all_orientations(g: Graph):
    """Every one of the 2^|E| direction assignments, cyclic ones included."""
    edges = g.edges()
    m = len(edges)
    for bits in range(1 << m):
        succ = [0] * g.n
        for idx, (u, v) in enumerate(edges):
            if bits >> idx & 1:
                succ[v - 1] |= 1 << (u - 1)
            else:
                succ[u - 1] |= 1 << (v - 1)
        yield Orientation(g, tuple(succ))


def oriented_acyclic(o: Orientation) -> bool:
    n = o.base.n
    seen = [False] * n

    def cycle_from(v, stack):
        if v in stack:
            return True
        if seen[v]:
            return False
        stack = stack | {v}
        row = o.succ[v]
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            if cycle_from(j, stack):
                return True
        seen[v] = True
        return False

    return not any(cycle_from(v, set()) for v in range(n))


def all_directed_paths(o: Orientation):
    """All simple directed paths with at least 2 arcs, as 0-based tuples."""
    n = o.base.n

    def extend(path):
        last = path[-1]
        row = o.succ[last]
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            if j not in path:
                newp = path + (j,)
                if len(newp) >= 3:
                    yield newp
                yield from extend(newp)

    for v in range(n):
        yield from extend((v,))


def has_shortcut_by_paths(o: Orientation, length="any") -> bool:
    """Directly apply the definition: a path whose endpoints are joined by an
    arc but whose induced digraph is not transitive."""
    for path in all_directed_paths(o):
        if length != "any" and len(path) - 1 != length:
            continue
        first, last = path[0], path[-1]
        if not o.succ[first] >> last & 1:
            continue
        for i in range(len(path)):
            for j in range(i + 1, len(path)):
                if not o.succ[path[i]] >> path[j] & 1:
                    return True
    return False


def oriented_transitive(o: Orientation) -> bool:
    n = o.base.n
    for u in range(n):
        for v in range(n):
            if o.succ[u] >> v & 1:
                for z in range(n):
                    if o.succ[v] >> z & 1 and not o.succ[u] >> z & 1:
                        return False
    return True


def brute_semi_transitive(g: Graph) -> bool:
    return any(
        oriented_acyclic(o) and not has_shortcut_by_paths(o)
        for o in all_orientations(g)
    )


def brute_k_shortcut_free(g: Graph, k: int) -> bool:
    return any(
        oriented_acyclic(o) and not has_shortcut_by_paths(o, k)
        for o in all_orientations(g)
    )


def brute_transitive(g: Graph) -> bool:
    return any(oriented_transitive(o) for o in all_orientations(g))


# ---------------------------------------------------------------------------
# Words.


def brute_alternate(letters, x, y) -> bool:
    sub = [c for c in letters if c in (x, y)]
    return all(a != b for a, b in zip(sub, sub[1:]))


def brute_graph_of_word(letters, n) -> Graph:
    edges = [
        (x, y)
        for x, y in combinations(range(1, n + 1), 2)
        if brute_alternate(letters, x, y)
    ]
    return Graph.from_edges(n, edges)


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    verts = range(g.n)
    for perm in permutations(verts):
        if all(
            (g.adj[i] >> j & 1) == (h.adj[perm[i]] >> perm[j] & 1)
            for i in verts
            for j in verts
        ):
            return True
    return False
