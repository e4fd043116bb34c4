"""Command line interface: ``sockmatch {table,count,prob,simulate,asym}``.

Exit status is 0 on success, 2 for invalid arguments and 3 when an internal
consistency check fails (for instance a trigonometric evaluation that does
not round safely).
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence

from . import closedform, recurrences, trigsum
from .closedform import WalkSpec
from .errors import DomainError, PrecisionError
from .oracle import count_bounded_walks_oracle, physical_hit_probability
from .report import FORMATS, format_decimal, render_json, render_markdown, render_records
from .sampler import MODELS, SEED_LIMIT, estimate_hit_probability

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3

B_METHODS = ("explicit", "alt", "rec1", "rec2", "complement")
A_METHODS = ("binomial", "bounded", "recurrence", "trig")
W_METHODS = ("formula", "oracle")
DEFAULT_METHOD = {"B": "explicit", "A": "binomial", "W": "formula"}


class UsageError(Exception):
    pass


def b_grid(n_max: int, k_max: int, method: str) -> list[list[int]]:
    """B(n, k) for 1 <= n <= n_max, 1 <= k <= k_max as ``grid[n-1][k-1]``."""
    if method in ("rec1", "rec2"):
        build = recurrences.b_table_first if method == "rec1" else recurrences.b_table_second
        table = build(n_max, k_max)
        return [[table[n, k] for k in range(1, k_max + 1)] for n in range(1, n_max + 1)]
    cell: Callable[[int, int], int] = {
        "explicit": closedform.b_explicit,
        "alt": closedform.b_alt,
        "complement": closedform.b_complement,
    }[method]
    return [[cell(n, k) for k in range(1, k_max + 1)] for n in range(1, n_max + 1)]


def _positive(name: str, value: int | None, minimum: int = 1) -> int:
    if value is None:
        raise UsageError(f"--{name} is required")
    if value < minimum:
        raise UsageError(f"--{name} must be >= {minimum}, got {value}")
    return value


def cmd_table(args: argparse.Namespace) -> str:
    n_max = _positive("nmax", args.nmax)
    k_max = _positive("kmax", args.kmax)
    grid = b_grid(n_max, k_max, args.method)
    if args.format == "markdown":
        columns = ["n"] + [f"k={k}" for k in range(1, k_max + 1)]
        return render_markdown(columns, [[n, *row] for n, row in enumerate(grid, 1)])
    rows = [(n, k, str(grid[n - 1][k - 1])) for n in range(1, n_max + 1) for k in range(1, k_max + 1)]
    return render_records(args.format, ("n", "k", "B"), rows, {"family": "B", "method": args.method})


def _count_a(n: int, t: int, method: str) -> tuple[int, str]:
    if method == "binomial":
        if n >= t + 2:
            return closedform.a_binomial_form(n, t), "binomial"
        return closedform.a_bounded(n, t), "bounded"
    if method == "bounded":
        return closedform.a_bounded(n, t), "bounded"
    if method == "recurrence":
        return recurrences.a_recurrence(n, t)[n, t], "recurrence"
    return trigsum.a_trig(n, t).rounded, "trig"


def cmd_count(args: argparse.Namespace) -> str:
    family = args.family
    method = args.method or DEFAULT_METHOD[family]
    allowed = {"B": B_METHODS, "A": A_METHODS, "W": W_METHODS}[family]
    if method not in allowed:
        raise UsageError(f"method {method!r} not available for family {family}; choose from {allowed}")
    n = _positive("n", args.n, 0)
    record: dict[str, object] = {"family": family, "n": n}
    if family == "B":
        k = _positive("k", args.k)
        if method in ("rec1", "rec2"):
            fn = recurrences.b_recurrence_first if method == "rec1" else recurrences.b_recurrence_second
            value = fn(n, k)
        elif method == "complement":
            value = closedform.b_complement(_positive("n", n), k)
        else:
            value = (closedform.b_explicit if method == "explicit" else closedform.b_alt)(n, k)
        record["k"] = k
        used = method
    elif family == "A":
        t = _positive("t", args.t, 0)
        value, used = _count_a(n, t, method)
        record["t"] = t
    else:
        spec = WalkSpec(n, _positive("lower", args.lower, 0), _positive("upper", args.upper, 0))
        value = closedform.bounded_walk_count(spec) if method == "formula" else count_bounded_walks_oracle(spec)
        record["lower"], record["upper"] = spec.lower, spec.upper
        used = method
    record["method"] = method
    record["method_used"] = used
    record["value"] = str(value)
    if args.format == "json":
        return render_json(record)
    columns = list(record)
    return render_records(args.format, columns, [[record[c] for c in columns]])


def cmd_prob(args: argparse.Namespace) -> str:
    n = _positive("n", args.n)
    k = _positive("k", args.k)
    digits = _positive("digits", args.digits)
    if args.model == "uniform":
        p = trigsum.hit_probability_uniform(n, k)
    else:
        p = physical_hit_probability(n, k)
    record = {
        "n": n,
        "k": k,
        "model": args.model,
        "numerator": str(p.numerator),
        "denominator": str(p.denominator),
        "exact": f"{p.numerator}/{p.denominator}",
        "decimal": format_decimal(p, digits),
    }
    if args.format == "json":
        return render_json(record)
    columns = list(record)
    return render_records(args.format, columns, [[record[c] for c in columns]])


def cmd_simulate(args: argparse.Namespace) -> str:
    _positive("n", args.n)
    _positive("k", args.k)
    _positive("trials", args.trials)
    if not 0 <= args.seed < SEED_LIMIT:
        raise UsageError(f"--seed must be in [0, 2**64), got {args.seed}")
    result = estimate_hit_probability(args.model, args.n, args.k, args.trials, args.seed)
    record = result.as_dict()
    if args.format == "json":
        return render_json(record)
    columns = list(record)
    return render_records(args.format, columns, [[record[c] for c in columns]])


def cmd_asym(args: argparse.Namespace) -> str:
    k = _positive("k", args.k)
    n_max = _positive("nmax", args.nmax, k)
    digits = _positive("digits", args.digits)
    rows = [
        (row.n, f"{row.p_exact.numerator}/{row.p_exact.denominator}", format_decimal(row.p_exact, digits), row.bound)
        for row in trigsum.convergence_series(k, n_max)
    ]
    return render_records(args.format, ("n", "p_exact", "p_decimal", "one_minus_p_estimate"), rows, {"k": k})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sockmatch", description="Exact counts of height-restricted Dyck paths.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="markdown")

    p = sub.add_parser("table", help="table of B(n, k)")
    p.add_argument("--nmax", type=int, default=15)
    p.add_argument("--kmax", type=int, default=15)
    p.add_argument("--method", choices=B_METHODS, default="explicit")
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("count", help="a single count B(n,k), A(n,t) or W(n,h,t)")
    p.add_argument("--family", choices=("B", "A", "W"), default="B")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--lower", type=int)
    p.add_argument("--upper", type=int)
    p.add_argument("--method", choices=sorted(set(B_METHODS + A_METHODS + W_METHODS)))
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("prob", help="exact probability of reaching k unmatched socks")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--model", choices=MODELS, default="uniform")
    p.add_argument("--digits", type=int, default=20)
    add_format(p)
    p.set_defaults(func=cmd_prob)

    p = sub.add_parser("simulate", help="Monte Carlo estimate with a 99%% Wilson interval")
    p.add_argument("--model", choices=MODELS, default="uniform")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("asym", help="convergence of P(n, k) towards 1")
    p.add_argument("--k", type=int)
    p.add_argument("--nmax", type=int)
    p.add_argument("--digits", type=int, default=20)
    add_format(p)
    p.set_defaults(func=cmd_asym)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionError, AssertionError) as exc:
        print(f"{parser.prog} {args.command}: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
