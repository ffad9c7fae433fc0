"""Command line interface: one subcommand per capability, graph6 in,
machine-readable JSON lines out.

Exit codes: 0 computed (whatever the verdict), 2 usage error, 3 graph6 parse
error, 4 representation-number cap exceeded, 5 checkpoint mismatch.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .graphs import (
    FAMILIES,
    Graph6Error,
    generate as generate_graph,
    parse_graph6,
    encode_graph6,
)
from .orientations import (
    find_k_shortcut_free_orientation,
    find_semi_transitive_orientation,
    find_transitive_orientation,
)
from .pipeline import (
    CheckpointMismatchError,
    ClassifyOptions,
    classify as classify_graph,
    count_3st_not_st,
    enumerate_stream,
    minimal_nwr,
    read_records,
    write_summary_csv,
)
from .uniform import CapExceededError, INFINITE, representation_number
from .words import Word, verify_representation

EXIT_PARSE = 3
EXIT_CAP = 4
EXIT_CHECKPOINT = 5


@click.group()
def main():
    """Word-representable graph toolkit."""


def _input_lines(path):
    stream = sys.stdin if path in (None, "-") else open(path)
    for line in stream:
        line = line.strip()
        if line:
            yield line


def _graphs(path):
    for line in _input_lines(path):
        try:
            yield line, parse_graph6(line)
        except Graph6Error as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_PARSE)


def _emit(obj):
    click.echo(json.dumps(obj, sort_keys=True))


input_opt = click.option("--input", "input_path", default=None,
                         help="graph6 file (default: stdin)")


@main.command()
@input_opt
def check(input_path):
    """Decide word-representability; print a witness orientation if one exists."""
    for line, g in _graphs(input_path):
        o = find_semi_transitive_orientation(g)
        _emit({
            "g6": line,
            "representable": o is not None,
            "orientation": o.arc_text() if o else None,
        })


@main.command()
@input_opt
@click.option("--cap", type=int, default=None, help="max copies per letter (default 2n)")
def repnum(input_path, cap):
    """Representation number with a witness word ('infinity' when none exists)."""
    for line, g in _graphs(input_path):
        try:
            r, w = representation_number(g, cap)
        except CapExceededError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_CAP)
        _emit({
            "g6": line,
            "repnum": "infinity" if r == INFINITE else r,
            "word": w.text() if w else None,
        })


@main.command("verify-word")
@click.option("--graph", "graph_g6", required=True, help="graph6 record")
@click.option("--word", "word_text", required=True,
              help="digit string (n<=9) or space/comma separated labels")
def verify_word(graph_g6, word_text):
    """Check whether WORD represents GRAPH."""
    try:
        g = parse_graph6(graph_g6)
    except Graph6Error as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    try:
        w = Word.parse(word_text, n=g.n)
        valid = verify_representation(w, g)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit({"g6": graph_g6, "word": w.text(), "valid": valid})


@main.command()
@input_opt
@click.option("--mode", type=click.Choice(["st", "3st", "transitive"]), default="st")
@click.option("--k", type=int, default=3, help="shortcut arc count for --mode 3st")
def orient(input_path, mode, k):
    """Search for a semi-transitive / k-shortcut-free / transitive orientation."""
    for line, g in _graphs(input_path):
        if mode == "st":
            o = find_semi_transitive_orientation(g)
        elif mode == "3st":
            o = find_k_shortcut_free_orientation(g, k)
        else:
            o = find_transitive_orientation(g)
        _emit({"g6": line, "mode": mode, "orientation": o.arc_text() if o else None})


@main.command("classify")
@input_opt
@click.option("--rep-numbers", is_flag=True, help="also compute representation numbers")
@click.option("--k3", is_flag=True, help="also decide 3-shortcut-free orientability")
@click.option("--cap", type=int, default=None)
def classify_cmd(input_path, rep_numbers, k3, cap):
    """Full per-graph verdict as JSON lines."""
    options = ClassifyOptions(rep_numbers=rep_numbers, k3=k3, cap=cap)
    for line, g in _graphs(input_path):
        try:
            rec = classify_graph(g, options, graph6=line)
        except CapExceededError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_CAP)
        _emit(rec.to_json_dict())


@main.command("enumerate")
@input_opt
@click.option("--rep-numbers", is_flag=True)
@click.option("--k3", is_flag=True)
@click.option("--cap", type=int, default=None)
@click.option("--jobs", type=int, default=None, help="worker count (env WORDREP_JOBS)")
@click.option("--chunk", type=int, default=1000, help="graphs per work chunk")
@click.option("--checkpoint", type=click.Path(path_type=Path), default=None)
@click.option("--records", "records_path", type=click.Path(path_type=Path), default=None)
@click.option("--summary", "summary_path", type=click.Path(path_type=Path), default=None)
@click.option("--max-chunks", type=int, default=None,
              help="process at most this many chunks, then stop (resumable)")
def enumerate_cmd(input_path, rep_numbers, k3, cap, jobs, chunk, checkpoint,
                  records_path, summary_path, max_chunks):
    """Classify a whole graph6 stream with chunked workers and checkpointing."""
    options = ClassifyOptions(rep_numbers=rep_numbers, k3=k3, cap=cap)
    lines = list(_input_lines(input_path))
    try:
        result = enumerate_stream(
            lines, options, jobs=jobs, chunk_size=chunk, checkpoint=checkpoint,
            records_path=records_path, summary_path=summary_path,
            max_chunks=max_chunks,
        )
    except CheckpointMismatchError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CHECKPOINT)
    except CapExceededError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_CAP)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_PARSE)
    if not result.complete:
        _emit({"status": "partial", "chunks_done": result.chunks_done,
               "chunks_total": result.chunks_total})
        return
    for s in result.summaries:
        _emit({
            "n": s.n, "total": s.total_graphs, "nwr": s.nwr_count,
            "histogram": s.rep_number_histogram or None,
            "non_3st": s.non_3st_count, "elapsed": round(s.elapsed, 1),
        })


@main.command("minimal")
@input_opt
@click.option("--prev", "prev_path", type=click.Path(path_type=Path), default=None,
              help="graph6 file with all NWR graphs one vertex smaller")
@click.option("--records", "records_path", type=click.Path(path_type=Path), default=None,
              help="reuse wr verdicts from an earlier enumerate run")
def minimal_cmd(input_path, prev_path, records_path):
    """Minimal non-word-representable graphs of the input stream."""
    if records_path is not None:
        records = read_records(records_path)
        nwr = []
        for rec in records:
            if not rec.representable:
                nwr.append(parse_graph6(rec.graph6))
    else:
        nwr = []
        for line, g in _graphs(input_path):
            if find_semi_transitive_orientation(g) is None:
                nwr.append(g)
    prev = None
    if prev_path is not None:
        prev = [g for _, g in _graphs(str(prev_path))]
    minimal, non_minimal = minimal_nwr(nwr, prev)
    for g in minimal:
        click.echo(encode_graph6(g))
    _emit({"nwr": len(nwr), "minimal": len(minimal), "non_minimal": non_minimal})


@main.command("separate-3st")
@input_opt
def separate_3st(input_path):
    """Graphs that are 3-shortcut-free orientable but not word-representable."""
    graphs = [g for _, g in _graphs(input_path)]
    separating, count = count_3st_not_st(graphs)
    for g in separating:
        click.echo(encode_graph6(g))
    _emit({"count": count})


@main.command("generate")
@click.argument("family", type=click.Choice(FAMILIES))
@click.argument("size", type=int, default=0)
@click.option("--edges", is_flag=True, help="also print the edge list (human use)")
def generate_cmd(family, size, edges):
    """Print a named graph as graph6."""
    try:
        g = generate_graph(family, size)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(encode_graph6(g))
    if edges:
        click.echo(" ".join(f"{u}-{v}" for u, v in g.edges()), err=True)


if __name__ == "__main__":
    main()
