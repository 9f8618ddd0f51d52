"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 budget or scan limit exceeded,
4 precondition violated (e.g. disconnected input to ``graph bounds``).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as B
from .distribution import format_decimal, fraction_str
from .embed import DEFAULT_BUDGET, BudgetExceeded, brute_force_distribution, monte_carlo_faces
from .graph import Multigraph, build_graph, read_edge_list
from .multistar import (
    delta,
    interval_scan,
    multistar_expected_faces,
    multistar_face_distribution,
    reduce_partition,
)
from .perm import conj_class_size, parse_partition, partition_number

EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_PRECONDITION = 4
DEFAULT_SEED = 1
SCAN_LIMIT = 40


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _frac(x: Fraction) -> dict:
    return {"exact": fraction_str(x), "decimal": format_decimal(x)}


def _emit(result: dict, fmt: str, out, table_rows=None) -> None:
    if fmt == "json":
        json.dump(result, out, indent=2)
        out.write("\n")
        return
    rows = table_rows if table_rows is not None else []
    if fmt == "csv":
        if rows:
            w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        for k, v in _flat(result).items():
            if k.startswith("config.") or k.startswith("distribution."):
                continue
            out.write(f"# {k},{v}\n")
        return
    for k, v in _flat(result).items():
        if k.startswith("distribution."):
            continue
        out.write(f"{k:<28} {v}\n")
    if rows:
        out.write("\n")
        keys = list(rows[0])
        widths = [max(len(k), *(len(str(r[k])) for r in rows)) for k in keys]
        out.write("  ".join(k.rjust(w) for k, w in zip(keys, widths)) + "\n")
        for r in rows:
            out.write("  ".join(str(r[k]).rjust(w) for k, w in zip(keys, widths)) + "\n")


def _flat(d: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            if set(v) == {"exact", "decimal"}:
                out[key] = f"{v['exact']} ({v['decimal']})" if v["exact"] != v["decimal"] else v["exact"]
            else:
                out.update(_flat(v, key + "."))
        elif isinstance(v, list):
            continue
        else:
            out[key] = v
    return out


def _config(args, **extra) -> dict:
    cfg = {"command": args.command}
    for name in ("action", "kind", "partition", "input", "samples", "seed", "format", "budget", "max_n",
                 "order_file", "cycles_file", "shard_size", "limit"):
        if hasattr(args, name):
            val = getattr(args, name)
            cfg[name] = str(val) if isinstance(val, Path) else val
    cfg.update(extra)
    return cfg


# ---------------------------------------------------------------------------
# multistar


def cmd_multistar(args) -> tuple[dict, list]:
    try:
        lam = parse_partition(args.partition)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    shape = reduce_partition(lam)
    e = multistar_expected_faces(lam)
    result = {
        "config": _config(args),
        "partition": str(lam),
        "n": lam.weight,
        "reduced_partition": str(shape.reduced),
        "reduced_n": shape.reduced_n,
    }
    rows = []
    if shape.reduced:
        dist = multistar_face_distribution(shape.reduced)
        result["class_size"] = str(conj_class_size(shape.reduced))
        result["distribution"] = dist.to_json()["rows"]
        rows = dist.to_rows()
    else:
        result["class_size"] = "1"
        result["distribution"] = [{"faces": 1, "count": "1", "probability": "1", "probability_decimal": "1"}]
        rows = [{"faces": 1, "count": 1, "probability": "1", "probability_decimal": "1"}]
    result["expectation"] = _frac(e)
    if shape.reduced_n >= 2:
        c = delta(shape.reduced_n)
        half = Fraction(1, shape.reduced_n + 1)
        result["interval"] = {
            "delta": _frac(c),
            "gap": _frac(e - c),
            "half_width": _frac(half),
            "inside": abs(e - c) < half,
        }
    return result, rows


# ---------------------------------------------------------------------------
# graph


def _load_graph(path) -> Multigraph:
    try:
        return read_edge_list(path)
    except (OSError, UnicodeDecodeError, ValueError) as exc:
        raise CliError(f"cannot read edge list {path}: {exc}", EXIT_PARSE) from None


def _read_tokens(path) -> list[list[str]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_PARSE) from None
    return [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _bounds_section(G: Multigraph, args) -> dict:
    if G.has_loops():
        raise CliError("ordering bounds need a loopless graph", EXIT_PRECONDITION)
    if not G.is_connected():
        raise CliError("ordering bounds need a connected graph", EXIT_PRECONDITION)
    if getattr(args, "order_file", None):
        labels = [t for line in _read_tokens(args.order_file) for t in line]
        try:
            order = B.ordering_from_labels(G, labels)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PARSE) from None
        source = "file"
    else:
        order = B.degeneracy_order(G)
        source = "smallest-last"
    sec = {
        "ordering_source": source,
        "ordering": " ".join(str(G.labels[v]) for v in order.ordering),
        "back_degrees": " ".join(map(str, order.back_degrees)),
        "harmonic_bound": _frac(B.face_bound_harmonic(G, order)),
        "log_bound": format_decimal(B.face_bound_log(G, order)),
        "stahl_bound": format_decimal(B.stahl_bound(G)),
    }
    if getattr(args, "cycles_file", None):
        cycles = _read_tokens(args.cycles_file)
        try:
            rep = B.cycle_family_lower_bound(G, cycles)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_PRECONDITION) from None
        sec["cycle_lower_bound"] = _frac(rep.exact)
        sec["cycle_lower_bound_coarse"] = _frac(rep.coarse)
    return sec


def _graph_summary(G: Multigraph) -> dict:
    return {"vertices": G.vertex_count, "edges": G.edge_count, "components": len(G.components())}


def cmd_graph(args) -> tuple[dict, list]:
    G = _load_graph(args.input)
    result = {"config": _config(args), "graph": _graph_summary(G)}
    rows = []
    if args.action == "brute":
        try:
            dist = brute_force_distribution(G, budget=args.budget)
        except BudgetExceeded as exc:
            raise CliError(str(exc), EXIT_BUDGET) from None
        result["embeddings"] = str(dist.total)
        result["expectation"] = _frac(dist.expectation())
        result["distribution"] = dist.to_json()["rows"]
        rows = dist.to_rows()
    elif args.action == "sample":
        if args.samples < 2:
            raise CliError("--samples must be at least 2", EXIT_PARSE)
        rep = monte_carlo_faces(G, args.samples, args.seed, shard_size=args.shard_size, workers=args.workers)
        result["estimate"] = {
            "samples": rep.samples,
            "mean": _frac(rep.mean),
            "variance": _frac(rep.variance),
            "stderr": format_decimal(rep.stderr),
        }
        rows = [{"faces": f, "count": c} for f, c in rep.histogram.items()]
        if not G.has_loops() and G.is_connected():
            result["bounds"] = _bounds_section(G, args)
    else:
        result["bounds"] = _bounds_section(G, args)
    return result, rows


# ---------------------------------------------------------------------------
# scan


def dipole_chain(mu: int, copies: int) -> Multigraph:
    """``copies`` dipoles with ``mu`` edges each, joined in a path by single edges."""
    edges = []
    for i in range(copies):
        edges += [(f"a{i}", f"b{i}")] * mu
        if i:
            edges.append((f"b{i - 1}", f"a{i}"))
    return build_graph(edges)


def cmd_scan(args, out) -> int:
    if args.max_n > args.limit:
        msg = f"--max-n {args.max_n} exceeds the scan limit {args.limit}"
        if args.kind == "interval":
            total = sum(partition_number(n) for n in range(2, args.max_n + 1))
            msg += f"; the scan would cover {total} partitions"
        raise CliError(msg, EXIT_BUDGET)
    w = csv.writer(out, lineterminator="\n")
    out.write("# " + json.dumps(_config(args), sort_keys=True) + "\n")
    if args.kind == "interval":
        w.writerow(["n", "partition", "reduced_n", "expectation", "delta", "gap", "gap_decimal",
                    "half_width", "inside"])
        for r in interval_scan(args.max_n):
            w.writerow([r.partition.weight, r.partition.exponent_string(), r.reduced_n,
                        fraction_str(r.expectation), fraction_str(r.center), fraction_str(r.gap),
                        format_decimal(r.gap), fraction_str(r.half_width), str(r.inside).lower()])
    else:
        w.writerow(["mu", "copies", "vertices", "samples", "mean", "stderr", "mean_per_vertex"])
        for mu in (2, 3, 4, 8):
            copies = 1
            while 2 * copies <= args.max_n:
                G = dipole_chain(mu, copies)
                rep = monte_carlo_faces(G, args.samples, args.seed, shard_size=args.shard_size)
                w.writerow([mu, copies, G.vertex_count, rep.samples, format_decimal(rep.mean),
                            format_decimal(rep.stderr), format_decimal(rep.mean / G.vertex_count)])
                copies *= 2
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="randembed", description="Faces of random orientable graph embeddings.")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("multistar", help="exact face distribution of a multistar")
    m.add_argument("--partition", required=True, help='edge multiplicities, "5,4,4,2" or "5 4^2 2"')
    m.add_argument("--format", choices=("table", "csv", "json"), default="table")

    g = sub.add_parser("graph", help="analyse a graph read from an edge-list file")
    g.add_argument("action", choices=("sample", "brute", "bounds"))
    g.add_argument("--input", required=True, type=Path)
    g.add_argument("--samples", type=int, default=100_000)
    g.add_argument("--seed", type=int, default=DEFAULT_SEED)
    g.add_argument("--shard-size", type=int, default=8192)
    g.add_argument("--workers", type=int, default=1)
    g.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    g.add_argument("--order-file", type=Path)
    g.add_argument("--cycles-file", type=Path)
    g.add_argument("--format", choices=("table", "csv", "json"), default="table")

    s = sub.add_parser("scan", help="CSV scans over partitions or graph families")
    s.add_argument("kind", choices=("interval", "conjecture"))
    s.add_argument("--max-n", type=int, default=12)
    s.add_argument("--limit", type=int, default=SCAN_LIMIT)
    s.add_argument("--samples", type=int, default=2000)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--shard-size", type=int, default=8192)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if hasattr(args, "seed") and not 0 <= args.seed < 2**64:
        print("error: --seed must be a 64-bit unsigned integer", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.command == "scan":
            return cmd_scan(args, out)
        if args.command == "multistar":
            result, rows = cmd_multistar(args)
        else:
            result, rows = cmd_graph(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    _emit(result, args.format, out, rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
