"""Batch classification over graph6 streams: chunked parallel workers,
checkpoint/resume, JSON-lines records and Table-style CSV summaries.

A run splits the input lines into fixed-size chunks; each chunk is classified
independently (one worker per chunk) and its records are persisted as a part
file next to the checkpoint.  Merging is done in chunk index order, so the
output never depends on worker count or completion order, and a killed run
resumes from the completed chunks as long as the input digest matches.
"""

from __future__ import annotations

import csv
import hashlib
import json
import math
import os
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Optional

from .graphs import Graph, are_isomorphic, delete_vertex, parse_graph6
from .orientations import (
    find_k_shortcut_free_orientation,
    find_semi_transitive_orientation,
)
from .uniform import INFINITE, representation_number

JOBS_ENV_VAR = "WORDREP_JOBS"


class CheckpointMismatchError(RuntimeError):
    """Checkpoint belongs to a different input or different run options."""


@dataclass(frozen=True)
class ClassifyOptions:
    rep_numbers: bool = False
    k3: bool = False
    cap: Optional[int] = None

    def fingerprint(self) -> dict:
        return {"rep_numbers": self.rep_numbers, "k3": self.k3, "cap": self.cap}


@dataclass(frozen=True)
class ClassificationRecord:
    graph6: str
    n: int
    representable: bool
    rep_number: object = None   # int, INFINITE, or None when not computed
    k3_orientable: object = None  # bool, or None when not computed

    def to_json_dict(self) -> dict:
        repnum = self.rep_number
        if repnum == INFINITE:
            repnum = "inf"
        return {
            "g6": self.graph6,
            "n": self.n,
            "wr": self.representable,
            "repnum": repnum,
            "k3": self.k3_orientable,
        }

    @staticmethod
    def from_json_dict(d: dict) -> "ClassificationRecord":
        repnum = d.get("repnum")
        if repnum == "inf":
            repnum = INFINITE
        return ClassificationRecord(d["g6"], d["n"], d["wr"], repnum, d.get("k3"))


@dataclass
class EnumerationSummary:
    n: int
    total_graphs: int = 0
    nwr_count: int = 0
    rep_number_histogram: dict = field(default_factory=dict)
    non_3st_count: Optional[int] = None
    elapsed: float = 0.0

    def add(self, rec: ClassificationRecord):
        self.total_graphs += 1
        if not rec.representable:
            self.nwr_count += 1
        if rec.rep_number is not None:
            key = "inf" if rec.rep_number == INFINITE else rec.rep_number
            self.rep_number_histogram[key] = self.rep_number_histogram.get(key, 0) + 1
        if rec.k3_orientable is not None:
            if self.non_3st_count is None:
                self.non_3st_count = 0
            if not rec.k3_orientable:
                self.non_3st_count += 1


@dataclass
class EnumerationResult:
    complete: bool
    summaries: Optional[list]          # per vertex count, ascending; None if partial
    records_path: Optional[Path] = None
    chunks_done: int = 0
    chunks_total: int = 0


def classify(g: Graph, options: ClassifyOptions = ClassifyOptions(), graph6: str = "") -> ClassificationRecord:
    """Per-graph verdict.  Representability is always decided; representation
    number and 3-shortcut-free orientability only on request."""
    representable = find_semi_transitive_orientation(g) is not None
    repnum = None
    if options.rep_numbers:
        if representable:
            repnum, _ = representation_number(g, options.cap)
        else:
            repnum = INFINITE  # no word search needed, Theorems 1 + 3
    k3 = None
    if options.k3:
        if representable:
            k3 = True  # a semi-transitive orientation has no shortcut at all
        else:
            k3 = find_k_shortcut_free_orientation(g, 3) is not None
    return ClassificationRecord(graph6, g.n, representable, repnum, k3)


# ---------------------------------------------------------------------------
# Chunked enumeration.


def default_jobs() -> int:
    env = os.environ.get(JOBS_ENV_VAR)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _classify_chunk(args):
    index, lines, options = args
    records = []
    for offset, line in enumerate(lines):
        try:
            g = parse_graph6(line)
        except ValueError as exc:
            raise ValueError(f"bad graph6 at chunk {index} offset {offset}: {exc}") from exc
        records.append(classify(g, options, graph6=line).to_json_dict())
    return index, records


def _digest(lines) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode())
        h.update(b"\n")
    return h.hexdigest()


def enumerate_stream(
    lines: Iterable,
    options: ClassifyOptions = ClassifyOptions(),
    jobs: Optional[int] = None,
    chunk_size: int = 1000,
    checkpoint: Optional[Path] = None,
    records_path: Optional[Path] = None,
    summary_path: Optional[Path] = None,
    max_chunks: Optional[int] = None,
) -> EnumerationResult:
    """Classify every graph6 line; returns per-n summaries once all chunks ran.

    With ``checkpoint`` set, finished chunks survive a kill and are skipped on
    the next call; a checkpoint written for different input or options is
    refused.  ``max_chunks`` bounds the number of chunks processed in this
    call (the run is then reported as partial).
    """
    lines = [ln.strip() for ln in lines if ln.strip()]
    if jobs is None:
        jobs = default_jobs()
    chunks = [lines[i:i + chunk_size] for i in range(0, len(lines), chunk_size)]
    digest = _digest(lines)
    meta = {
        "digest": digest,
        "chunk_size": chunk_size,
        "options": options.fingerprint(),
        "chunks_total": len(chunks),
    }

    parts_dir = None
    done = set()
    if checkpoint is not None:
        checkpoint = Path(checkpoint)
        parts_dir = checkpoint.with_name(checkpoint.name + ".parts")
        if checkpoint.exists():
            stored = json.loads(checkpoint.read_text())
            if {k: stored.get(k) for k in meta} != meta:
                raise CheckpointMismatchError(
                    f"checkpoint {checkpoint} does not match this input/options"
                )
            done = {
                i for i in stored.get("done", [])
                if (parts_dir / _part_name(i)).exists()
            }
        parts_dir.mkdir(parents=True, exist_ok=True)

    start = time.monotonic()
    pending = [i for i in range(len(chunks)) if i not in done]
    if max_chunks is not None:
        pending = pending[:max_chunks]

    results = {}  # chunk index -> list of record dicts, for chunks run now
    tasks = [(i, chunks[i], options) for i in pending]
    if tasks:
        if jobs == 1:
            produced = map(_classify_chunk, tasks)
            for index, records in produced:
                results[index] = records
                _finish_chunk(checkpoint, parts_dir, meta, done, index, records)
        else:
            with Pool(processes=jobs) as pool:
                for index, records in pool.imap_unordered(_classify_chunk, tasks):
                    results[index] = records
                    _finish_chunk(checkpoint, parts_dir, meta, done, index, records)

    complete = len(done) == len(chunks) if checkpoint is not None else len(results) == len(chunks)
    if not complete:
        return EnumerationResult(False, None, records_path,
                                 chunks_done=len(done or results), chunks_total=len(chunks))

    # merge in chunk index order, independent of completion order
    all_records = []
    for i in range(len(chunks)):
        if i in results:
            recs = results[i]
        else:
            part = parts_dir / _part_name(i)
            recs = [json.loads(ln) for ln in part.read_text().splitlines()]
        all_records.extend(ClassificationRecord.from_json_dict(r) for r in recs)

    summaries = {}
    for rec in all_records:
        summaries.setdefault(rec.n, EnumerationSummary(rec.n)).add(rec)
    elapsed = time.monotonic() - start
    ordered = [summaries[n] for n in sorted(summaries)]
    for s in ordered:
        s.elapsed = elapsed

    if records_path is not None:
        records_path = Path(records_path)
        with records_path.open("w") as fh:
            for rec in all_records:
                fh.write(json.dumps(rec.to_json_dict(), sort_keys=True) + "\n")
    if summary_path is not None:
        write_summary_csv(Path(summary_path), ordered)
    return EnumerationResult(True, ordered, records_path,
                             chunks_done=len(chunks), chunks_total=len(chunks))


def _part_name(index: int) -> str:
    return f"chunk_{index:06d}.jsonl"


def _finish_chunk(checkpoint, parts_dir, meta, done, index, records):
    if checkpoint is None:
        return
    part = parts_dir / _part_name(index)
    tmp = part.with_suffix(".tmp")
    with tmp.open("w") as fh:
        for r in records:
            fh.write(json.dumps(r, sort_keys=True) + "\n")
    tmp.replace(part)
    done.add(index)
    state = dict(meta)
    state["done"] = sorted(done)
    tmp_ck = checkpoint.with_suffix(checkpoint.suffix + ".tmp")
    tmp_ck.write_text(json.dumps(state))
    tmp_ck.replace(checkpoint)


def write_summary_csv(path: Path, summaries, minimal_counts: Optional[dict] = None):
    """CSV with one row per vertex count, mirroring the enumeration tables.

    Deliberately contains no timing data, so two runs over the same input are
    byte-identical regardless of worker count or resume history.
    """
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "total", "nwr", "percent", "minimal", "non_minimal"])
        for s in summaries:
            pct = f"{100.0 * s.nwr_count / s.total_graphs:.2f}" if s.total_graphs else ""
            mins = (minimal_counts or {}).get(s.n)
            w.writerow([
                s.n, s.total_graphs, s.nwr_count, pct,
                "" if mins is None else mins[0],
                "" if mins is None else mins[1],
            ])


def read_records(path: Path):
    return [
        ClassificationRecord.from_json_dict(json.loads(ln))
        for ln in Path(path).read_text().splitlines()
        if ln.strip()
    ]


# ---------------------------------------------------------------------------
# Minimality and the 3-semi-transitive separation.


def minimal_nwr(nwr_n, nwr_prev=None):
    """Split non-word-representable graphs into minimal and non-minimal ones.

    A graph is minimal iff all its one-vertex deletions are representable
    (heredity pushes any smaller bad induced subgraph up to a deletion).
    With ``nwr_prev`` (the complete list one size down) deletions are decided
    by isomorphism lookup; otherwise each deletion is searched directly.
    """
    index = None
    if nwr_prev is not None:
        index = {}
        for h in nwr_prev:
            index.setdefault((h.n, h.edge_count(), h.degree_sequence()), []).append(h)

    minimal = []
    non_minimal = 0
    for g in nwr_n:
        bad_deletion = False
        for v in range(1, g.n + 1):
            d = delete_vertex(g, v)
            if index is not None:
                bucket = index.get((d.n, d.edge_count(), d.degree_sequence()), [])
                nwr = any(are_isomorphic(d, h) for h in bucket)
            else:
                nwr = find_semi_transitive_orientation(d) is None
            if nwr:
                bad_deletion = True
                break
        if bad_deletion:
            non_minimal += 1
        else:
            minimal.append(g)
    return minimal, non_minimal


def count_3st_not_st(graphs) -> tuple:
    """Graphs with a 3-shortcut-free orientation but no semi-transitive one."""
    separating = []
    for g in graphs:
        if find_semi_transitive_orientation(g) is not None:
            continue
        if find_k_shortcut_free_orientation(g, 3) is not None:
            separating.append(g)
    return separating, len(separating)
