"""Acyclic orientations, shortcut detection and orientation search.

The searches (semi-transitive, k-shortcut-free, transitive) all run over
vertex orderings rather than raw edge directions: every acyclic orientation
is induced by at least one linear order of the vertices, so searching the
orders is complete, keeps acyclicity for free, and makes every detected
violation permanent for the whole subtree (reachability between placed
vertices can never change once both are placed), which is what the pruning
relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graphs import Graph


class CyclicOrientationError(ValueError):
    """Raised when an operation requires an acyclic orientation."""


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of ``base``; ``succ[i]`` = out-neighbour bits."""

    base: Graph
    succ: tuple

    def __post_init__(self):
        n = self.base.n
        if len(self.succ) != n:
            raise ValueError("succ row count does not match n")
        for i in range(n):
            if self.succ[i] & ~self.base.adj[i]:
                raise ValueError(f"arc leaving vertex {i + 1} without an underlying edge")
        for i in range(n):
            for j in range(i + 1, n):
                if self.base.adj[i] >> j & 1:
                    fwd = self.succ[i] >> j & 1
                    bwd = self.succ[j] >> i & 1
                    if fwd == bwd:
                        raise ValueError(f"edge {{{i + 1},{j + 1}}} not oriented exactly once")

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.succ[u - 1] >> (v - 1) & 1)

    def arcs(self) -> list:
        out = []
        for i in range(self.base.n):
            row = self.succ[i]
            while row:
                j = (row & -row).bit_length() - 1
                row &= row - 1
                out.append((i + 1, j + 1))
        return sorted(out)

    def arc_text(self) -> str:
        return ",".join(f"{u}->{v}" for u, v in self.arcs())


@dataclass(frozen=True)
class ShortcutWitness:
    """A directed path plus the missing arc that makes it a shortcut."""

    path: tuple          # 1-based vertices, consecutive ones joined by arcs
    missing_pair: tuple  # (path[i], path[j]), i < j, arc absent

    def validate(self, o: Orientation):
        assert len(self.path) >= 4, "shortcut needs at least four vertices"
        for a, b in zip(self.path, self.path[1:]):
            assert o.has_arc(a, b), f"path arc {a}->{b} absent"
        assert o.has_arc(self.path[0], self.path[-1]), "closing arc absent"
        x, y = self.missing_pair
        i, j = self.path.index(x), self.path.index(y)
        assert i < j, "missing pair not ordered along the path"
        assert not o.has_arc(x, y) and not o.has_arc(y, x), "pair not missing"


def orient_by_order(g: Graph, order) -> Orientation:
    """Orient every edge from the earlier to the later vertex of ``order`` (1-based)."""
    pos = [0] * g.n
    for p, v in enumerate(order):
        pos[v - 1] = p
    succ = [0] * g.n
    for i in range(g.n):
        row = g.adj[i]
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            if pos[i] < pos[j]:
                succ[i] |= 1 << j
    return Orientation(g, tuple(succ))


def is_acyclic(o: Orientation) -> bool:
    """Kahn peeling; equivalently the transitive closure has an empty diagonal."""
    n = o.base.n
    indeg = [0] * n
    for i in range(n):
        row = o.succ[i]
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            indeg[j] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        row = o.succ[v]
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            indeg[j] -= 1
            if indeg[j] == 0:
                stack.append(j)
    return seen == n


def _topo_order(o: Orientation) -> list:
    n = o.base.n
    indeg = [0] * n
    for i in range(n):
        row = o.succ[i]
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            indeg[j] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    out = []
    while stack:
        v = stack.pop()
        out.append(v)
        row = o.succ[v]
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            indeg[j] -= 1
            if indeg[j] == 0:
                stack.append(j)
    if len(out) != n:
        raise CyclicOrientationError("orientation contains a directed cycle")
    return out


def _reach_masks(o: Orientation) -> list:
    """reach[v] = bitmask of vertices reachable from v by a nonempty path."""
    order = _topo_order(o)
    reach = [0] * o.base.n
    for v in reversed(order):
        row = o.succ[v]
        r = row
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            r |= reach[j]
        reach[v] = r
    return reach


def find_shortcut(o: Orientation, length: Union[int, str] = "any") -> Optional[ShortcutWitness]:
    """Find a shortcut whose defining path has ``length`` arcs ('any' = any length).

    For 'any' the check runs per arc u->v over R(u,v), the vertices lying on
    directed u-v paths: the orientation is shortcut-free iff every reachable
    pair inside some R(u,v) is an arc.  For a fixed length, paths of exactly
    that many arcs are enumerated.
    """
    if length != "any" and (not isinstance(length, int) or length < 3):
        raise ValueError("shortcut path length must be 'any' or an integer >= 3")
    reach = _reach_masks(o)  # raises CyclicOrientationError on cyclic input
    n = o.base.n
    if length == "any":
        for u in range(n):
            row = o.succ[u]
            while row:
                v = (row & -row).bit_length() - 1
                row &= row - 1
                between = 0
                m = reach[u]
                while m:
                    z = (m & -m).bit_length() - 1
                    m &= m - 1
                    if reach[z] >> v & 1:
                        between |= 1 << z
                rset = between | 1 << u | 1 << v
                m = rset
                while m:
                    x = (m & -m).bit_length() - 1
                    m &= m - 1
                    bad = reach[x] & rset & ~o.succ[x]
                    if bad:
                        y = (bad & -bad).bit_length() - 1
                        return _witness_for_pair(o, reach, u, v, x, y)
        return None
    # fixed length: DFS over paths with exactly `length` arcs from u to v
    for u in range(n):
        row = o.succ[u]
        while row:
            v = (row & -row).bit_length() - 1
            row &= row - 1
            w = _fixed_length_shortcut(o, reach, u, v, length)
            if w is not None:
                return w
    return None


def _witness_for_pair(o: Orientation, reach, u, v, x, y) -> ShortcutWitness:
    """Assemble the path u ~> x ~> y ~> v; (x,y) is the missing pair."""
    path = (
        _some_path(o, reach, u, x)
        + _some_path(o, reach, x, y)[1:]
        + _some_path(o, reach, y, v)[1:]
    )
    w = ShortcutWitness(tuple(p + 1 for p in path), (x + 1, y + 1))
    w.validate(o)
    return w


def _some_path(o: Orientation, reach, a, b) -> list:
    """Any directed path a ~> b (a may equal b)."""
    path = [a]
    cur = a
    while cur != b:
        row = o.succ[cur]
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            if j == b or reach[j] >> b & 1:
                path.append(j)
                cur = j
                break
        else:  # pragma: no cover - reach masks guarantee progress
            raise AssertionError("reachability bookkeeping broken")
    return path


def _fixed_length_shortcut(o: Orientation, reach, u, v, length) -> Optional[ShortcutWitness]:
    stack = [(u, [u])]
    while stack:
        cur, path = stack.pop()
        if len(path) - 1 == length:
            if cur != v:
                continue
            for i in range(len(path)):
                for j in range(i + 1, len(path)):
                    a, b = path[i], path[j]
                    if not (o.succ[a] >> b & 1):
                        w = ShortcutWitness(tuple(p + 1 for p in path), (a + 1, b + 1))
                        w.validate(o)
                        return w
            continue
        row = o.succ[cur]
        while row:
            j = (row & -row).bit_length() - 1
            row &= row - 1
            if j == v or reach[j] >> v & 1:
                stack.append((j, path + [j]))
    return None


def is_semi_transitive_orientation(o: Orientation) -> bool:
    return is_acyclic(o) and find_shortcut(o, "any") is None


def is_transitive_orientation(o: Orientation) -> bool:
    n = o.base.n
    for u in range(n):
        row = o.succ[u]
        while row:
            v = (row & -row).bit_length() - 1
            row &= row - 1
            if o.succ[v] & ~o.succ[u]:
                return False
    return True


# ---------------------------------------------------------------------------
# Orientation search.

_MODE_SEMI = 0
_MODE_KST = 1
_MODE_TRANS = 2


def find_semi_transitive_orientation(g: Graph) -> Optional[Orientation]:
    """A semi-transitive orientation of g, or None (exhaustive, so None is a proof)."""
    return _order_search(g, _MODE_SEMI)


def is_word_representable(g: Graph) -> bool:
    return find_semi_transitive_orientation(g) is not None


def find_k_shortcut_free_orientation(g: Graph, k: int) -> Optional[Orientation]:
    """An acyclic orientation with no shortcut of exactly k arcs, or None."""
    if not isinstance(k, int) or k < 3:
        raise ValueError("shortcut path length k must be an integer >= 3")
    return _order_search(g, _MODE_KST, k)


def find_transitive_orientation(g: Graph) -> Optional[Orientation]:
    """A transitive orientation of g, or None iff g is not a comparability graph."""
    return _order_search(g, _MODE_TRANS)


def _order_search(g: Graph, mode: int, k: int = 0) -> Optional[Orientation]:
    """Backtracking over vertex orders; first hit wins, exhaustion proves None.

    Placing vertex w appends it to the current linear order, directing all its
    edges toward w.  Property checks only ever involve the freshly created
    arcs u->w, because reachability between previously placed vertices is
    already final.  Branch order is ascending label; a branch is skipped when
    swapping w with the previous, non-adjacent, larger-labelled vertex would
    give the same orientation from a lexicographically smaller order.
    """
    n = g.n
    adj = g.adj
    anc = [0] * n          # ancestors of placed vertices (strict, bitmask)
    order = []
    chosen = [0]           # chosen[d] = bitmask of labels already tried at depth d

    placed = 0
    while True:
        depth = len(order)
        if depth == n:
            succ = tuple(adj[v] & ~(anc[v] | 1 << v) for v in range(n))
            return Orientation(g, succ)
        # pick next untried vertex at this depth
        cand = ~(placed | chosen[depth]) & ((1 << n) - 1)
        advanced = False
        while cand:
            w = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            chosen[depth] |= 1 << w
            if order and order[-1] > w and not (adj[w] >> order[-1] & 1):
                continue  # same orientation reachable from a smaller order
            ins = adj[w] & placed
            a = ins
            m = ins
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                a |= anc[u]
            anc[w] = a
            if not _violation(adj, anc, ins, w, mode, k):
                order.append(w)
                placed |= 1 << w
                chosen.append(0)
                advanced = True
                break
        if advanced:
            continue
        if not order:
            return None
        w = order.pop()
        placed &= ~(1 << w)
        chosen.pop()


def _violation(adj, anc, ins, w, mode, k) -> bool:
    """Permanent property violation created by the new arcs into w."""
    if mode == _MODE_TRANS:
        m = ins
        while m:
            b = (m & -m).bit_length() - 1
            m &= m - 1
            if adj[b] & anc[b] & ~adj[w]:
                return True
        return False
    aw = anc[w]
    if mode == _MODE_SEMI:
        m = ins
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            # R(u,w): vertices on directed u-w paths
            rset = 1 << u | 1 << w
            t = aw & ~(1 << u)
            while t:
                z = (t & -t).bit_length() - 1
                t &= t - 1
                if anc[z] >> u & 1:
                    rset |= 1 << z
            t = rset
            while t:
                y = (t & -t).bit_length() - 1
                t &= t - 1
                if anc[y] & rset & ~adj[y]:
                    return True
        return False
    # k-shortcut-free: look for a path of exactly k arcs u ~> w with a hole
    m = ins
    while m:
        u = (m & -m).bit_length() - 1
        m &= m - 1
        rset = 1 << w
        t = aw & ~(1 << u)
        while t:
            z = (t & -t).bit_length() - 1
            t &= t - 1
            if anc[z] >> u & 1:
                rset |= 1 << z
        if rset.bit_count() < k:  # not enough intermediates for a k-arc path
            continue
        if _kst_violation(adj, anc, u, w, rset, k):
            return True
    return False


def _kst_violation(adj, anc, u, w, rset, k) -> bool:
    # DFS over k-arc paths from u to w inside rset; arcs follow the order,
    # so x->y exists iff adjacent and x is an ancestor of y.
    stack = [(u, 1, 1 << u)]
    while stack:
        cur, arcs_used, verts = stack.pop()
        nxt = adj[cur] & rset
        while nxt:
            z = (nxt & -nxt).bit_length() - 1
            nxt &= nxt - 1
            if not (anc[z] >> cur & 1 or (z == w and adj[w] >> cur & 1)):
                continue
            if z == w:
                if arcs_used == k:
                    path = verts | 1 << w
                    # a hole = some non-adjacent pair among the path vertices
                    t = path
                    while t:
                        x = (t & -t).bit_length() - 1
                        t &= t - 1
                        if (path & ~adj[x]) & ~(1 << x):
                            return True
                continue
            if arcs_used < k:
                stack.append((z, arcs_used + 1, verts | 1 << z))
    return False
