"""k-uniform word-representant search and representation numbers.

The k-uniform search inserts all k copies of one vertex at a time into a
growing word (this realizes the occurrence-position model: only the relative
order of the occurrences matters).  Once a vertex is inserted, every
constraint against the already-placed vertices is fully decided, so a branch
dies at the first vertex that cannot be placed.  Insertion slots are not
enumerated blindly: an already-placed neighbour acts as an anchor, and only
the two interleaving patterns against that anchor are generated.

The permutational search works block-by-block instead: a concatenation of k
permutations represents g iff the blocks order every edge pair consistently
and every non-edge pair inconsistently, so the first block fixes an edge
orientation and later blocks are its linear extensions.  A branch whose
oriented edges force a non-edge pair into their transitive closure can never
break that pair and is cut immediately, whatever k is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Optional

from .graphs import Graph
from .orientations import is_word_representable
from .words import Word

INFINITE = math.inf


class CapExceededError(RuntimeError):
    """Representable graph, but no representant found up to the copy cap."""

    def __init__(self, graph: Graph, cap: int):
        super().__init__(
            f"graph is word-representable but no k-uniform representant "
            f"exists for k <= {cap}; raise the cap"
        )
        self.graph = graph
        self.cap = cap


@dataclass(frozen=True)
class PositionAssignment:
    """rows[i][j] = 1-based position of the (j+1)-th copy of letter i+1."""

    n: int
    k: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("row count does not match alphabet size")
        seen = set()
        top = self.k * self.n
        for row in self.rows:
            if len(row) != self.k:
                raise ValueError("row length does not match multiplicity k")
            for a, b in zip(row, row[1:]):
                if a >= b:
                    raise ValueError("occurrence positions must increase along a row")
            for p in row:
                if not (1 <= p <= top):
                    raise ValueError(f"position {p} outside 1..{top}")
                seen.add(p)
        if len(seen) != self.n * self.k:
            raise ValueError("occurrence positions must be distinct")


def word_of_assignment(a: PositionAssignment) -> Word:
    letters = [0] * (a.n * a.k)
    for i, row in enumerate(a.rows):
        for p in row:
            letters[p - 1] = i + 1
    return Word(tuple(letters), a.n)


def assignment_of_word(w: Word, k: int) -> PositionAssignment:
    rows = [[] for _ in range(w.n)]
    for p, c in enumerate(w.letters, start=1):
        rows[c - 1].append(p)
    return PositionAssignment(w.n, k, tuple(tuple(r) for r in rows))


def representation_number(g: Graph, cap: Optional[int] = None):
    """(least k, witness word) with the graph k-representable, or (inf, None).

    Non-representability is decided by the orientation search first, so no
    word search ever runs on a non-representable graph.  A representable
    graph with no representant up to ``cap`` (default 2n, the classical
    per-letter bound) raises :class:`CapExceededError`.
    """
    if cap is None:
        cap = 2 * g.n
    if cap < 1:
        raise ValueError("cap must be >= 1")
    full = (1 << g.n) - 1
    if all(g.adj[i] == full & ~(1 << i) for i in range(g.n)):
        return 1, Word(tuple(range(1, g.n + 1)), g.n)
    if not is_word_representable(g):
        return INFINITE, None
    for k in range(2, cap + 1):
        w = find_k_uniform_representant(g, k)
        if w is not None:
            return k, w
    raise CapExceededError(g, cap)


# ---------------------------------------------------------------------------
# k-uniform search.


def find_k_uniform_representant(g: Graph, k: int) -> Optional[Word]:
    """A k-uniform word representing g, or None (exhaustive search)."""
    if k < 1:
        raise ValueError("multiplicity k must be >= 1")
    n = g.n
    order = _placement_order(g)
    adj = g.adj
    found = _insert_search(adj, order, 0, [], k)
    if found is None:
        return None
    return Word(tuple(found), n)


def _placement_order(g: Graph):
    """Greedy max-placed-neighbours order, seeded with a maximum-degree vertex."""
    degs = [g.adj[i].bit_count() for i in range(g.n)]
    seed = max(range(g.n), key=lambda i: (degs[i], -i))
    order = [seed + 1]
    rest = set(range(1, g.n + 1)) - {seed + 1}
    while rest:
        nxt = max(
            rest,
            key=lambda v: (sum(1 for u in order if g.adj[v - 1] >> (u - 1) & 1), -v),
        )
        order.append(nxt)
        rest.discard(nxt)
    return order


def _insert_search(adj, order, idx, word, k):
    if idx == len(order):
        return list(word)
    v = order[idx]
    placed = order[:idx]
    length = len(word)
    qpos = {u: [] for u in placed}
    for p, c in enumerate(word):
        qpos[c].append(p)
    vrow = adj[v - 1]
    neighbours = [u for u in placed if vrow >> (u - 1) & 1]
    others = [u for u in placed if not vrow >> (u - 1) & 1]

    if neighbours:
        anchor = min(neighbours, key=lambda u: _anchor_width(qpos[u], length, k))
        slot_iter = _anchored_slots(qpos[anchor], length, k)
        rest = [u for u in neighbours if u != anchor]
    else:
        slot_iter = combinations_with_replacement(range(length + 1), k)
        rest = []

    dedup = set() if word == word[::-1] else None
    for slots in slot_iter:
        ok = True
        for u in rest:
            if not _interleaves(slots, qpos[u]):
                ok = False
                break
        if ok:
            for u in others:
                if _interleaves(slots, qpos[u]):
                    ok = False
                    break
        if not ok:
            continue
        neww = list(word)
        for off, s in enumerate(slots):
            neww.insert(s + off, v)
        if dedup is not None:
            key = min(tuple(neww), tuple(reversed(neww)))
            if key in dedup:
                continue
            dedup.add(key)
        res = _insert_search(adj, order, idx + 1, neww, k)
        if res is not None:
            return res
    return None


def _anchor_width(q, length, k):
    width = 0
    for pat in (0, 1):
        w = 1
        for j in range(k):
            lo = 0 if (pat == 0 and j == 0) else q[j - 1 + pat] + 1
            hi = q[j + pat] if j + pat < k else length
            w *= max(0, hi - lo + 1)
        width += w
    return width


def _anchored_slots(q, length, k):
    """Slot k-tuples interleaving the anchor occurrences at positions q.

    Slot s means 'insert before current index s'; the copy at slot s precedes
    the letter at index p iff s <= p.  Pattern 0 starts with the new vertex
    (slot_j in [q_{j-1}+1, q_j]), pattern 1 with the anchor
    (slot_j in [q_j+1, q_{j+1}]).
    """
    for pat in (0, 1):
        ranges = []
        for j in range(k):
            lo = 0 if (pat == 0 and j == 0) else q[j - 1 + pat] + 1
            hi = q[j + pat] if j + pat < k else length
            if hi < lo:
                ranges = None
                break
            ranges.append(range(lo, hi + 1))
        if ranges is not None:
            yield from product(*ranges)


def _interleaves(slots, q):
    """True iff the new copies (at ``slots``) strictly alternate with letter
    occurrences at indices ``q``.  Slot s precedes index p iff s <= p."""
    k = len(slots)
    if len(q) != k:
        return False
    # either the new letter leads (slots[j] <= q[j], q[j] < slots[j+1]) ...
    lead = True
    for j in range(k):
        if slots[j] > q[j] or (j + 1 < k and slots[j + 1] <= q[j]):
            lead = False
            break
    if lead:
        return True
    # ... or the anchor-side letter leads (q[j] < slots[j], slots[j] <= q[j+1])
    for j in range(k):
        if slots[j] <= q[j] or (j + 1 < k and slots[j] > q[j + 1]):
            return False
    return True


# ---------------------------------------------------------------------------
# Permutational search.


def find_permutational_representant(g: Graph, k: int) -> Optional[Word]:
    """A concatenation of k permutations of 1..n representing g, or none.

    Equivalent to the k-uniform model with each copy confined to its block.
    """
    if k < 1:
        raise ValueError("block count k must be >= 1")
    n = g.n
    if n == 1:
        return Word((1,) * k, 1)
    adj = g.adj
    full = (1 << n) - 1

    # oriented[i] = bitmask of j with edge i->j fixed by the first block
    state = {
        "oriented": [0] * n,
        "closure": [0] * n,  # strict descendants in the oriented-edge closure
        "flipped": [0] * n,  # non-edge pairs already ordered differently somewhere
        "first_order": [0] * n,  # first_order[i] bit j: i preceded j in block 1
    }

    def close_over(i, j):
        """Add i->j to the closure; abort (return False) if a non-edge pair
        becomes comparable, since no linear extension can ever flip it."""
        stack = [(i, j)]
        while stack:
            a, b = stack.pop()
            if state["closure"][a] >> b & 1:
                continue
            if not (adj[a] >> b & 1):
                return False
            state["closure"][a] |= 1 << b
            for c in range(n):
                if state["closure"][b] >> c & 1 and not state["closure"][a] >> c & 1:
                    stack.append((a, c))
                if state["closure"][c] >> a & 1 and not state["closure"][c] >> b & 1:
                    stack.append((c, b))
        return True

    def block_search(block, placed_mask, prefix, blocks):
        if placed_mask == full:
            if block + 1 == k:
                # every non-edge pair must have flipped by now
                for i in range(n):
                    nonedges = full & ~adj[i] & ~(1 << i)
                    if nonedges & ~state["flipped"][i]:
                        return None
                return blocks + [list(prefix)]
            return block_search(block + 1, 0, [], blocks + [list(prefix)])
        for v in range(n):
            bit = 1 << v
            if placed_mask & bit:
                continue
            later = full & ~placed_mask & ~bit
            if block == 0:
                # orient edges v -> later neighbours; reject forced non-edges
                saved_or = list(state["oriented"])
                saved_cl = list(state["closure"])
                saved_fo = list(state["first_order"])
                state["first_order"][v] |= later
                state["oriented"][v] |= adj[v] & later
                ok = True
                mm = adj[v] & later
                while mm and ok:
                    j = (mm & -mm).bit_length() - 1
                    mm &= mm - 1
                    ok = close_over(v, j)
                if ok:
                    res = block_search(block, placed_mask | bit, prefix + [v], blocks)
                    if res is not None:
                        return res
                state["oriented"] = saved_or
                state["closure"] = saved_cl
                state["first_order"] = saved_fo
            else:
                # edge pairs must keep their block-1 order: v may not precede
                # an unplaced vertex u with an oriented edge u->v
                blocked = False
                for u in range(n):
                    if later >> u & 1 and state["oriented"][u] >> v & 1:
                        blocked = True
                        break
                if blocked:
                    continue
                newly = []
                m = later & ~adj[v]  # non-edges ordered v-before-u in this block
                while m:
                    u = (m & -m).bit_length() - 1
                    m &= m - 1
                    if state["first_order"][u] >> v & 1 and not state["flipped"][v] >> u & 1:
                        state["flipped"][v] |= 1 << u
                        state["flipped"][u] |= 1 << v
                        newly.append(u)
                res = block_search(block, placed_mask | bit, prefix + [v], blocks)
                if res is not None:
                    return res
                for u in newly:
                    state["flipped"][v] &= ~(1 << u)
                    state["flipped"][u] &= ~(1 << v)
        return None

    blocks = block_search(0, 0, [], [])
    if blocks is None:
        return None
    letters = []
    for b in blocks:
        letters.extend(v + 1 for v in b)
    return Word(tuple(letters), n)
