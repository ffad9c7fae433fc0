#!/usr/bin/env python3
"""Generate graph6 files with all connected graphs on n vertices, one per
isomorphism class, for the test fixtures under tests/data/.

Works by vertex augmentation: every graph on n vertices arises from a graph
on n-1 vertices by adding one vertex with some neighbourhood.  Candidates are
bucketed by a Weisfeiler-Leman style invariant and deduplicated with the
exact isomorphism test.  Expected class counts (OEIS A000088 / A001349) are
asserted along the way.

Usage: python tools/gen_connected_g6.py MAX_N [OUTDIR]
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wordrep.graphs import Graph, are_isomorphic, encode_graph6, is_connected

ALL_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}
CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}


def wl_signature(g, rounds=3):
    n = g.n
    colors = [g.adj[i].bit_count() for i in range(n)]
    for _ in range(rounds):
        keys = []
        for i in range(n):
            nbr = []
            row = g.adj[i]
            while row:
                j = (row & -row).bit_length() - 1
                row &= row - 1
                nbr.append(colors[j])
            keys.append((colors[i], tuple(sorted(nbr))))
        rank = {key: r for r, key in enumerate(sorted(set(keys)))}
        colors = [rank[key] for key in keys]
    return tuple(sorted(colors))


def augment(graphs, n):
    """All isomorphism classes on n vertices from the classes on n-1."""
    buckets = {}
    kept = []
    t0 = time.time()
    for parent in graphs:
        base = parent.adj + (0,)
        for mask in range(1 << (n - 1)):
            adj = list(base)
            adj[n - 1] = mask
            m = mask
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                adj[j] |= 1 << (n - 1)
            child = Graph(n, tuple(adj))
            key = (child.edge_count(), wl_signature(child))
            bucket = buckets.setdefault(key, [])
            if not any(are_isomorphic(child, rep) for rep in bucket):
                bucket.append(child)
                kept.append(child)
    print(f"  n={n}: {len(kept)} classes in {time.time() - t0:.1f}s", flush=True)
    return kept


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    outdir = Path(sys.argv[2]) if len(sys.argv) > 2 else (
        Path(__file__).resolve().parent.parent / "tests" / "data"
    )
    outdir.mkdir(parents=True, exist_ok=True)
    graphs = [Graph(1, (0,))]
    for n in range(1, max_n + 1):
        if n > 1:
            graphs = augment(graphs, n)
        assert len(graphs) == ALL_COUNTS[n], (n, len(graphs))
        connected = [g for g in graphs if is_connected(g)]
        assert len(connected) == CONNECTED_COUNTS[n], (n, len(connected))
        lines = sorted(encode_graph6(g) for g in connected)
        path = outdir / f"connected_n{n}.g6"
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path} ({len(connected)} graphs)", flush=True)


if __name__ == "__main__":
    main()
