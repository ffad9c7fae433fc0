"""Graph data model, graph6 codec, structural utilities and named generators.

Vertices are labelled 1..n in every public interface.  Internally vertex i
is bit ``i-1`` of an adjacency bitmask, which keeps the hot loops (search,
isomorphism) on plain ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_N = 62  # short graph6 form only


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSizeError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n as a tuple of adjacency bitmasks.

    ``adj[i]`` holds the neighbours of internal vertex i (bit j set means
    internal j is adjacent).  Instances are immutable and safe to share.
    """

    n: int
    adj: tuple

    def __post_init__(self):
        if not (1 <= self.n <= MAX_N):
            raise UnsupportedSizeError(f"vertex count {self.n} outside 1..{MAX_N}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {i + 1} has out-of-range bits")
            if row >> i & 1:
                raise ValueError(f"self-loop at vertex {i + 1}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.adj[i] >> j & 1) != (self.adj[j] >> i & 1):
                    raise ValueError(f"adjacency not symmetric at {{{i + 1},{j + 1}}}")

    @staticmethod
    def from_edges(n: int, edges: Iterable) -> "Graph":
        """Build a graph from 1-based vertex pairs."""
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n) or u == v:
                raise ValueError(f"bad edge ({u},{v}) for n={n}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return Graph(n, tuple(adj))

    def edges(self) -> list:
        """Edge list as sorted 1-based pairs."""
        out = []
        for i in range(self.n):
            row = self.adj[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((i + 1, j + 1))
                row >>= 1
                j += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def degree_sequence(self) -> tuple:
        return tuple(sorted(r.bit_count() for r in self.adj))


# ---------------------------------------------------------------------------
# graph6 codec (short form, n <= 62), bit-compatible with nauty's geng output.


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record (short form).

    The record is ``chr(n+63)`` followed by the upper triangle read column by
    column (x[0]=bit(0,1), x[1]=bit(0,2), x[2]=bit(1,2), ...) packed into
    6-bit groups, each stored as ``chr(bits+63)``, zero-padded at the end.
    """
    line = line.rstrip("\n")
    if not line:
        raise Graph6Error("empty graph6 record", 0)
    first = ord(line[0])
    if first == 126:
        raise Graph6Error("long-form graph6 (n > 62) not supported", 0)
    if not (63 <= first <= 125):
        raise Graph6Error(f"bad header byte {first}", 0)
    n = first - 63
    if n == 0:
        raise Graph6Error("graph6 record with n = 0", 0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(line) - 1 != nbytes:
        raise Graph6Error(
            f"record length {len(line)} != expected {1 + nbytes} for n={n}",
            len(line) if len(line) < 1 + nbytes else 1 + nbytes,
        )
    adj = [0] * n
    bit = 0
    for off in range(1, 1 + nbytes):
        b = ord(line[off])
        if not (63 <= b <= 126):
            raise Graph6Error(f"bad data byte {b}", off)
        b -= 63
        for shift in range(5, -1, -1):
            if bit >= nbits:
                break
            if b >> shift & 1:
                i, j = _triangle_pos(bit)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(adj))


def _triangle_pos(bit: int):
    # bit index -> (i, j), i < j, column-major upper triangle
    j = 1
    while j * (j + 1) // 2 <= bit:
        j += 1
    i = bit - j * (j - 1) // 2
    return i, j


def encode_graph6(g: Graph) -> str:
    """Inverse of :func:`parse_graph6`; canonical short form."""
    n = g.n
    if n > MAX_N:
        raise UnsupportedSizeError(f"n={n} exceeds graph6 short form limit {MAX_N}")
    chars = [chr(n + 63)]
    acc = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            filled += 1
            if filled == 6:
                chars.append(chr(acc + 63))
                acc = 0
                filled = 0
    if filled:
        chars.append(chr((acc << (6 - filled)) + 63))
    return "".join(chars)


def read_graph6_lines(lines: Iterable) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# Structural utilities.


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 1."""
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove vertex v (1-based); remaining labels close up order-preservingly."""
    if not (1 <= v <= g.n):
        raise ValueError(f"vertex {v} out of range 1..{g.n}")
    if g.n == 1:
        raise ValueError("cannot delete the only vertex")
    vi = v - 1
    lo = (1 << vi) - 1
    adj = []
    for i in range(g.n):
        if i == vi:
            continue
        row = g.adj[i]
        adj.append((row & lo) | ((row >> (vi + 1)) << vi))
    return Graph(g.n - 1, tuple(adj))


def induced_subgraph(g: Graph, vertices: Iterable) -> Graph:
    """Subgraph induced on the given 1-based vertex set, labels compacted."""
    keep = sorted(set(vertices))
    if not keep:
        raise ValueError("empty vertex set")
    if keep[0] < 1 or keep[-1] > g.n:
        raise ValueError(f"vertex set not within 1..{g.n}")
    pos = {v - 1: k for k, v in enumerate(keep)}
    adj = [0] * len(keep)
    for k, v in enumerate(keep):
        row = g.adj[v - 1]
        m = 0
        for old, new in pos.items():
            if row >> old & 1:
                m |= 1 << new
        adj[k] = m
    return Graph(len(keep), tuple(adj))


# ---------------------------------------------------------------------------
# Isomorphism: invariant-pruned backtracking.  Exact; intended for n <= 12.


def _vertex_invariants(g: Graph):
    degs = [r.bit_count() for r in g.adj]
    inv = []
    for i in range(g.n):
        row = g.adj[i]
        nbr = []
        while row:
            v = (row & -row).bit_length() - 1
            row &= row - 1
            nbr.append(degs[v])
        inv.append((degs[i], tuple(sorted(nbr))))
    return inv


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Edge-preserving bijection test via backtracking.

    Vertices are matched in an order that keeps the candidate lists short:
    rarest (degree, neighbour-degree-multiset) class first, preferring
    vertices adjacent to already-matched ones.
    """
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    inv_g = _vertex_invariants(g)
    inv_h = _vertex_invariants(h)
    if sorted(inv_g) != sorted(inv_h):
        return False
    n = g.n
    by_inv = {}
    for j in range(n):
        by_inv.setdefault(inv_h[j], []).append(j)

    # order g's vertices: connect to previously ordered when possible
    order = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        adj_mask = 0
        for v in order:
            adj_mask |= g.adj[v]
        cands = [v for v in remaining if placed >> v & 1 == 0]
        cands.sort(key=lambda v: (-(adj_mask >> v & 1), len(by_inv[inv_g[v]]), v))
        v = cands[0]
        order.append(v)
        remaining.discard(v)
        placed |= 1 << v

    mapping = [-1] * n  # g vertex -> h vertex
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        want = inv_g[v]
        for w in by_inv[want]:
            if used >> w & 1:
                continue
            ok = True
            for u in order[:k]:
                if (g.adj[v] >> u & 1) != (h.adj[w] >> mapping[u] & 1):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used |= 1 << w
                if extend(k + 1):
                    return True
                used &= ~(1 << w)
                mapping[v] = -1
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# Named families.  Labelings are fixed so that tests can refer to vertices.

J4_EDGES = [
    (1, 2), (1, 3), (2, 3),
    (4, 5), (4, 6), (5, 6),
    (1, 7), (2, 7), (4, 7), (5, 7),
    (1, 8), (3, 8), (4, 8), (6, 8),
    (2, 9), (3, 9), (5, 9), (6, 9),
]

FAMILIES = (
    "complete", "empty", "path", "cycle", "wheel",
    "prism", "petersen", "crown", "crown_apex", "j4",
)


def generate(family: str, size: int = 0) -> Graph:
    """Build a named graph.

    ``size`` meanings: vertex count for complete/empty/path/cycle, rim length
    for wheel (wheel(5) has 6 vertices), cycle length for prism (two copies of
    C_size joined by a matching), half-size n for crown H_{n,n} (parts 1..n
    and n+1..2n, vertex i non-adjacent only to n+i) and crown_apex G_n (apex
    2n+1).  petersen and j4 ignore size.
    """
    if family == "complete":
        _need(size >= 1, family, size)
        return Graph.from_edges(size, combinations(range(1, size + 1), 2))
    if family == "empty":
        _need(size >= 1, family, size)
        return Graph(size, (0,) * size)
    if family == "path":
        _need(size >= 1, family, size)
        return Graph.from_edges(size, [(i, i + 1) for i in range(1, size)])
    if family == "cycle":
        _need(size >= 3, family, size)
        e = [(i, i + 1) for i in range(1, size)] + [(size, 1)]
        return Graph.from_edges(size, e)
    if family == "wheel":
        _need(size >= 3, family, size)
        hub = size + 1
        e = [(i, i + 1) for i in range(1, size)] + [(size, 1)]
        e += [(i, hub) for i in range(1, size + 1)]
        return Graph.from_edges(size + 1, e)
    if family == "prism":
        _need(size >= 3, family, size)
        n = size
        e = [(i, i % n + 1) for i in range(1, n + 1)]
        e += [(n + i, n + i % n + 1) for i in range(1, n + 1)]
        e += [(i, n + i) for i in range(1, n + 1)]
        return Graph.from_edges(2 * n, e)
    if family == "petersen":
        outer = [(i, i % 5 + 1) for i in range(1, 6)]
        spokes = [(i, i + 5) for i in range(1, 6)]
        inner = [(5 + i, 5 + (i + 1) % 5 + 1) for i in range(1, 6)]
        return Graph.from_edges(10, outer + spokes + inner)
    if family == "crown":
        _need(size >= 1, family, size)
        n = size
        e = [(i, n + j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        return Graph.from_edges(2 * n, e)
    if family == "crown_apex":
        _need(size >= 1, family, size)
        n = size
        e = [(i, n + j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
        apex = 2 * n + 1
        e += [(i, apex) for i in range(1, 2 * n + 1)]
        return Graph.from_edges(2 * n + 1, e)
    if family == "j4":
        return Graph.from_edges(9, J4_EDGES)
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _need(cond: bool, family: str, size: int):
    if not cond:
        raise ValueError(f"invalid size {size} for family {family!r}")
