"""Command line front end.

Subcommands: fib, lucas, wythoff, minseq, cost, huffman, classify, verify,
selftest.  Exit codes: 0 on success, 1 on usage or input errors, 2 when a
verification (verify, selftest) finds a mismatch.
"""

import argparse
import csv
import difflib
import io
import sys
from importlib import resources

from . import golden, huffman, oracle, theorems, wythoff
from .numbers import fib, lucas

__all__ = ["main", "entrypoint"]

MARKER = "*"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_weights(text: str) -> tuple[int, ...]:
    """Parse a comma-separated list of positive integers."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise UsageError(f"malformed weight list: {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise UsageError(f"malformed weight list: {text!r}") from None


def format_trace_table(trace, marker: str = MARKER) -> str:
    """Render a trace as the canonical table, one row per intermediate sequence.

    The merged value of each step carries a marker suffix at the position
    where the tie policy inserted it.
    """
    lines = ["step | sequence"]
    for i, seq in enumerate(trace.sequences()):
        cells = [str(w) for w in seq]
        if i > 0 and len(seq) > 1:
            cells[trace.steps[i - 1].insert_pos - 1] += marker
        lines.append(f"{i:>4} | {' '.join(cells)}")
    return "\n".join(lines) + "\n"


def format_trace_csv(trace) -> str:
    """Render a trace as CSV rows: step, merged, pos, weights."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["step", "merged", "pos", "weights"])
    for i, seq in enumerate(trace.sequences()):
        if i == 0:
            merged, pos = "", ""
        else:
            step = trace.steps[i - 1]
            merged, pos = step.merged_value, step.insert_pos
        writer.writerow([i, merged, pos, " ".join(str(w) for w in seq)])
    return buf.getvalue()


def format_tree(tree) -> str:
    """Render a tree as indented lines: '+' internal nodes, '-' leaves."""
    lines = []
    stack = [(tree, 0)]
    while stack:
        node, depth = stack.pop()
        tag = "-" if isinstance(node, huffman.Leaf) else "+"
        lines.append(f"{'  ' * depth}{tag} {node.weight}")
        if isinstance(node, huffman.Internal):
            stack.append((node.right, depth + 1))
            stack.append((node.left, depth + 1))
    return "\n".join(lines) + "\n"


def format_codebook(tree) -> str:
    """Render 'index weight codeword' lines, leaves numbered left to right."""
    weights = huffman.leaf_weights(tree)
    lines = []
    for (idx, code), w in zip(huffman.codebook(tree), weights):
        lines.append(f"{idx} {w} {code if code else '-'}")
    return "\n".join(lines) + "\n"


def _fixture_text(name: str) -> str:
    return (resources.files("huffwyth") / "fixtures" / f"{name}.txt").read_text()


def run_selftest(out) -> int:
    """Recompute the five reference traces and diff them against the goldens.

    Writes one line per example plus a summary line; returns 0 when all
    match and 2 otherwise.
    """
    failures = 0
    for ex in golden.GOLDEN_EXAMPLES:
        if ex.k is None:
            expected_weights = theorems.min_abs_sequence(ex.n)
        else:
            expected_weights = theorems.min_k_sequence(ex.n, ex.k)
        problems = []
        if expected_weights != ex.weights:
            problems.append("construction does not reproduce the stored weights")
        trace = huffman.run_huffman(ex.weights)
        if tuple(trace.sequences()) != ex.rows:
            problems.append("trace rows diverge from the stored rows")
        if trace.total != ex.total:
            problems.append(f"total {trace.total} != {ex.total}")
        rendered = format_trace_table(trace)
        fixture = _fixture_text(ex.name)
        if rendered != fixture:
            diff = difflib.unified_diff(
                fixture.splitlines(), rendered.splitlines(),
                fromfile=f"{ex.name}.txt", tofile="computed", lineterm="",
            )
            problems.append("rendering differs from fixture:\n" + "\n".join(diff))
        if problems:
            failures += 1
            out(f"{ex.name} ({ex.title}): FAIL")
            for p in problems:
                out(f"  {p}")
        else:
            out(f"{ex.name} ({ex.title}): ok, total {trace.total}")
    out("selftest: ok" if failures == 0 else f"selftest: {failures} example(s) FAILED")
    return 0 if failures == 0 else 2


def _build_parser() -> _Parser:
    parser = _Parser(prog="huffwyth")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fib", help="print a Fibonacci number")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("lucas", help="print a Lucas number")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("wythoff", help="print a row of the Wythoff array")
    p.add_argument("--row", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument(
        "--generalized", action="store_true",
        help="start at column 0 (row index and lower Wythoff seed) "
             "instead of the classical array columns",
    )

    p = sub.add_parser("minseq", help="print a minimizing sequence and its cost")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int)
    group.add_argument("--abs", action="store_true")

    p = sub.add_parser("cost", help="print only the closed-form cost")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int)
    group.add_argument("--abs", action="store_true")

    p = sub.add_parser("huffman", help="run the merge process on given weights")
    p.add_argument("--weights", required=True, help="comma separated positive integers")
    p.add_argument("--sort", action="store_true", help="sort the weights first")
    p.add_argument("--trace", action="store_true", help="print the full trace")
    p.add_argument("--tree", action="store_true", help="print the tree")
    p.add_argument("--codebook", action="store_true", help="print the codewords")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--tie", choices=["before", "after"], default="before",
                   help="where the merged node lands among equal values")
    p.add_argument("--marker", default=MARKER,
                   help="suffix marking the merged value in table output")

    p = sub.add_parser("classify", help="order-classify a weight sequence")
    p.add_argument("--weights", required=True)
    p.add_argument("--sort", action="store_true")

    p = sub.add_parser("verify", help="brute-force check a closed-form minimum")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int)
    group.add_argument("--abs", action="store_true")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--limit", type=int, default=oracle.DEFAULT_CANDIDATE_LIMIT)

    sub.add_parser("selftest", help="recompute the reference examples")
    return parser


def _tie_policy(name: str) -> huffman.TiePolicy:
    return (
        huffman.TiePolicy.MERGED_BEFORE_EQUALS
        if name == "before"
        else huffman.TiePolicy.MERGED_AFTER_EQUALS
    )


def _cmd_huffman(args, out) -> int:
    weights = parse_weights(args.weights)
    if args.sort:
        weights = tuple(sorted(weights))
    policy = _tie_policy(args.tie)
    trace = huffman.run_huffman(weights, policy)
    if args.trace:
        if args.format == "json":
            out(huffman.trace_to_json(trace, indent=2))
        elif args.format == "csv":
            out(format_trace_csv(trace), end="")
        else:
            out(format_trace_table(trace, args.marker), end="")
    if args.tree or args.codebook:
        tree = huffman.build_tree(weights, policy)
        if args.tree:
            out(format_tree(tree), end="")
        if args.codebook:
            out(format_codebook(tree), end="")
    if not (args.trace or args.tree or args.codebook):
        out(trace.total)
    return 0


def _cmd_verify(args, out) -> int:
    if args.abs:
        report = oracle.brute_force_min_abs(args.n, args.max_weight, args.limit)
    else:
        report = oracle.brute_force_min(args.n, args.k, args.max_weight, args.limit)
    out(oracle.report_to_json(report, indent=2))
    return 0 if report.matches_closed_form else 2


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]

    def out(*parts, end="\n"):
        print(*parts, end=end)

    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        if args.command == "fib":
            out(fib(args.n))
        elif args.command == "lucas":
            out(lucas(args.n))
        elif args.command == "wythoff":
            if args.cols < 1:
                raise UsageError(f"--cols must be >= 1, got {args.cols}")
            start = 0 if args.generalized else 2
            row = wythoff.wythoff_row(args.row, start + args.cols)
            out(" ".join(str(v) for v in row[start:]))
        elif args.command == "minseq":
            if args.abs:
                seq, cost = theorems.min_abs_sequence(args.n), theorems.min_abs_cost(args.n)
            else:
                seq, cost = theorems.min_k_sequence(args.n, args.k), theorems.min_k_cost(args.n, args.k)
            out(",".join(str(w) for w in seq))
            out(f"cost {cost}")
        elif args.command == "cost":
            if args.abs:
                out(theorems.min_abs_cost(args.n))
            else:
                out(theorems.min_k_cost(args.n, args.k))
        elif args.command == "huffman":
            return _cmd_huffman(args, out)
        elif args.command == "classify":
            weights = parse_weights(args.weights)
            if args.sort:
                weights = tuple(sorted(weights))
            out(huffman.classify_order(weights))
        elif args.command == "verify":
            return _cmd_verify(args, out)
        elif args.command == "selftest":
            return run_selftest(out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entrypoint() -> None:
    sys.exit(main())
