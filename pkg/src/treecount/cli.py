"""Command-line frontend: count, enumerate, prufer, sample, verify.

Exit codes are a stable contract: 0 success (or all identities PASS),
1 verification failure, 2 usage or validation error, 3 enumeration cap
exceeded.  All output is UTF-8, line-feed terminated, and deterministic
given the flags (sample streams included, via the seed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import IO, Iterable, Iterator, NamedTuple

from treecount import counting, enumeration, sampling, verifier
from treecount.core import (
    CapExceeded,
    DegreeSequence,
    LabeledTree,
    OutOfRange,
    TreeCountError,
    degree_of,
    degree_sequence,
    prufer_to_text,
    read_prufer_lines,
    read_trees,
    tree_to_text,
)

TREE_FORMATS = ("edges", "prufer", "json", "csv")


class OutputEnvelope(NamedTuple):
    """A chosen output format plus the (lazy) payload lines."""

    format: str
    payload: Iterable[str]


def _write(env: OutputEnvelope, out: IO[str]) -> None:
    for chunk in env.payload:
        out.write(chunk)


def _parse_degrees(text: str) -> DegreeSequence:
    try:
        degrees = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise OutOfRange(f"degrees must be comma-separated integers, got {text!r}") from None
    return degree_sequence(degrees)


def _prufer_line(tree: LabeledTree) -> str:
    if tree.n == 1:
        return ""
    return prufer_to_text(enumeration.prufer_encode(tree))


def _tree_lines(
    trees: Iterable[LabeledTree],
    fmt: str,
    *,
    want_count: bool = False,
    limit: int | None = None,
) -> Iterator[str]:
    total = 0
    if fmt == "csv":
        yield "tree,u,v\n"
    for tree in trees:
        if limit is not None and total >= limit:
            break
        if fmt == "edges":
            yield tree_to_text(tree)
        elif fmt == "prufer":
            yield _prufer_line(tree) + "\n"
        elif fmt == "json":
            yield json.dumps({"n": tree.n, "edges": [list(e) for e in tree.edges]}) + "\n"
        else:
            for u, v in tree.edges:
                yield f"{total},{u},{v}\n"
        total += 1
    if want_count:
        if fmt == "json":
            yield json.dumps({"count": total}) + "\n"
        elif fmt == "csv":
            yield f"count,{total}\n"
        else:
            yield f"count {total}\n"


# ---------------------------------------------------------------------------
# count


def cmd_count(args, stdin: IO[str], stdout: IO[str]) -> int:
    if args.subject == "total":
        if args.n is None:
            raise OutOfRange("count total requires -n")
        payload = {"subject": "total", "n": args.n}
        value = counting.count_total_trees(args.n)
    elif args.subject == "degrees":
        if args.degrees is None:
            raise OutOfRange("count degrees requires -d/--degrees")
        d = _parse_degrees(args.degrees)
        payload = {"subject": "degrees", "degrees": list(d.degrees)}
        value = counting.count_trees_with_degrees(d)
    else:
        if args.n is None or args.k is None:
            raise OutOfRange("count degv1 requires -n and -k")
        payload = {"subject": "degv1", "n": args.n, "k": args.k}
        value = counting.count_trees_deg_v1(args.n, args.k)

    if args.format == "json":
        payload["count"] = str(value)
        lines = [json.dumps(payload) + "\n"]
    elif args.format == "csv":
        lines = ["count\n", f"{value}\n"]
    else:
        lines = [f"{value}\n"]
    _write(OutputEnvelope(args.format, lines), stdout)
    return 0


# ---------------------------------------------------------------------------
# enumerate


def cmd_enumerate(args, stdin: IO[str], stdout: IO[str]) -> int:
    n = args.n
    if args.degrees is not None:
        d = _parse_degrees(args.degrees)
        if len(d.degrees) != n:
            raise OutOfRange(
                f"--degrees lists {len(d.degrees)} vertices but -n is {n}"
            )
        trees: Iterable[LabeledTree] = enumeration.enumerate_trees_with_degrees(d)
    elif args.deg_v1 is not None:
        k = args.deg_v1
        if not 1 <= k <= n - 1:
            raise OutOfRange(f"--deg-v1 must lie in 1..{n - 1}, got {k}")
        trees = (
            t for t in enumeration.enumerate_all_trees(n) if degree_of(t, 1) == k
        )
    else:
        trees = enumeration.enumerate_all_trees(n)
    lines = _tree_lines(trees, args.format, want_count=args.count, limit=args.limit)
    _write(OutputEnvelope(args.format, lines), stdout)
    return 0


# ---------------------------------------------------------------------------
# prufer


def cmd_prufer(args, stdin: IO[str], stdout: IO[str]) -> int:
    if args.direction == "encode":
        if args.format == "json":
            lines: Iterator[str] = (
                json.dumps(
                    {"n": seq.n, "symbols": list(seq.symbols)}
                )
                + "\n"
                for seq in map(enumeration.prufer_encode, read_trees(stdin))
            )
        else:
            lines = (
                prufer_to_text(enumeration.prufer_encode(tree)) + "\n"
                for tree in read_trees(stdin)
            )
    else:
        decoded = map(enumeration.prufer_decode, read_prufer_lines(stdin))
        fmt = "json" if args.format == "json" else "edges"
        lines = _tree_lines(decoded, fmt)
    _write(OutputEnvelope(args.format, lines), stdout)
    return 0


# ---------------------------------------------------------------------------
# sample


def cmd_sample(args, stdin: IO[str], stdout: IO[str]) -> int:
    cfg = sampling.SamplerConfig(seed=args.seed, count=args.count)
    if args.degrees is not None:
        d = _parse_degrees(args.degrees)
        trees = sampling.sample_tree_with_degrees(d, cfg)
    else:
        trees = sampling.sample_uniform_tree(args.n, cfg)
    _write(OutputEnvelope(args.format, _tree_lines(trees, args.format)), stdout)
    return 0


# ---------------------------------------------------------------------------
# verify


VERIFY_SUBJECTS = {
    "theorem1": "THEOREM_1",
    "degv1": "DEG_V1_TOTALITY",
    "lemma1": "LEMMA_1",
    "recursion": "EQ_20_RECURSION",
    "doublecount": "DOUBLE_COUNT_PAIRS",
    "l3": "L3_EXPANSION",
    "supervertex": "SUPERVERTEX_MARGINAL",
    "collapse": "BINOMIAL_COLLAPSE",
    "roundtrip": "PRUFER_ROUNDTRIP",
}


def _table_lines(reports) -> Iterator[str]:
    yield (
        f"{'identity_id':<22}{'status':<8}{'checked':>9}{'failures':>10}{'elapsed_ms':>12}\n"
    )
    for r in reports:
        yield (
            f"{r.identity_id:<22}{r.status:<8}{r.checked:>9}{len(r.failures):>10}{r.elapsed_ms:>12}\n"
        )
    rows = [(r.identity_id, f) for r in reports for f in r.failures]
    if rows:
        yield "counterexamples:\n"
        for rid, f in rows:
            yield f"  {rid} {f.parameters}: expected {f.expected}, got {f.got}\n"


def _verify_exit(reports) -> int:
    capped = mismatched = False
    for r in reports:
        for f in r.failures:
            if str(f.got).startswith("CapExceeded"):
                capped = True
            else:
                mismatched = True
    if mismatched:
        return 1
    if capped:
        return 3
    return 0


def cmd_verify(args, stdin: IO[str], stdout: IO[str]) -> int:
    if args.max_n is not None and args.max_n < 2:
        raise OutOfRange(f"--max-n must be >= 2, got {args.max_n}")
    max_n = args.max_n
    if max_n is None:
        env = os.environ.get("TREECOUNT_VERIFY_MAX_N")
        if env is not None:
            try:
                max_n = int(env)
            except ValueError:
                raise OutOfRange(
                    f"TREECOUNT_VERIFY_MAX_N must be an integer, got {env!r}"
                ) from None
    if args.subject == "all":
        limits = None if max_n is None else {i: max_n for i in verifier.IDENTITY_IDS}
        reports = verifier.verify_all(limits)
    else:
        identity_id = VERIFY_SUBJECTS[args.subject]
        limit = max_n if max_n is not None else verifier.DEFAULT_LIMITS[identity_id]
        reports = [verifier._REGISTRY[identity_id](limit)]
    as_json = args.json or args.format == "json"
    if as_json:
        status = "PASS" if all(r.status == "PASS" for r in reports) else "FAIL"
        doc = {"status": status, "reports": [r.to_record() for r in reports]}
        lines: Iterable[str] = [json.dumps(doc, indent=2) + "\n"]
    else:
        lines = _table_lines(reports)
    _write(OutputEnvelope("json" if as_json else "table", lines), stdout)
    return _verify_exit(reports)


# ---------------------------------------------------------------------------
# parser and dispatch


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treecount",
        description="Exact counting, enumeration, verification, and sampling of labeled trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="print an exact tree count")
    c.add_argument("subject", choices=["total", "degrees", "degv1"])
    c.add_argument("-n", type=int, help="vertex count")
    c.add_argument("-d", "--degrees", help="comma-separated degrees, vertex i at position i")
    c.add_argument("-k", type=int, help="degree of vertex 1 (degv1 subject)")
    c.add_argument("--format", choices=["text", "json", "csv"], default="text")
    c.set_defaults(handler=cmd_count)

    e = sub.add_parser("enumerate", help="stream all trees on n vertices")
    e.add_argument("-n", type=int, required=True)
    filt = e.add_mutually_exclusive_group()
    filt.add_argument("--degrees", help="restrict to this degree sequence")
    filt.add_argument("--deg-v1", type=int, help="restrict to trees with this degree at vertex 1")
    e.add_argument("--format", choices=list(TREE_FORMATS), default="edges")
    e.add_argument("--limit", type=int, help="stop after this many trees")
    e.add_argument("--count", action="store_true", help="append a final count line")
    e.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("prufer", help="convert between edge lists and Prufer sequences")
    p.add_argument("direction", choices=["encode", "decode"])
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_prufer)

    s = sub.add_parser("sample", help="draw seeded uniform random trees")
    target = s.add_mutually_exclusive_group(required=True)
    target.add_argument("-n", type=int)
    target.add_argument("--degrees", help="sample with this exact degree sequence")
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=list(TREE_FORMATS), default="edges")
    s.set_defaults(handler=cmd_sample)

    v = sub.add_parser("verify", help="check counting identities against oracles")
    v.add_argument("subject", choices=["all", *VERIFY_SUBJECTS])
    v.add_argument("--max-n", type=int, help="top of the parameter grid for every selected identity")
    v.add_argument("--json", action="store_true", help="emit one JSON document")
    v.add_argument("--format", choices=["table", "json"], default="table")
    v.set_defaults(handler=cmd_verify)

    return parser


def main(
    argv: list[str] | None = None,
    *,
    stdin: IO[str] | None = None,
    stdout: IO[str] | None = None,
    stderr: IO[str] | None = None,
) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args, stdin, stdout)
    except CapExceeded as err:
        print(f"treecount: {err}", file=stderr)
        return 3
    except TreeCountError as err:
        print(f"treecount: {err}", file=stderr)
        return 2
    except BrokenPipeError:
        return 0


def run() -> None:
    sys.exit(main())
