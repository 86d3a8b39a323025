"""Command-line entry point: ``turanlab <subcommand>``.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error,
3 solver stopped at its node budget.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .clique_shift import best_clique, run_to_clique, uniformize_on_support
from .combinatorics import DEFAULT_SEED, SEED_MASK, binomial, fraction_str
from .graph import (
    MAX_CLIQUE_N,
    MAX_TRIANGLE_FREE_N,
    GraphFormatError,
    brute_force_max_clique,
    brute_force_max_triangle_free,
    complete_bipartite,
    has_triangle,
    mantel_bound,
    parse_edge_list,
)
from .sperner import (
    MAX_ORACLE_N,
    FamilyFormatError,
    is_antichain,
    lym_sum,
    max_antichain_bruteforce,
    parse_family,
    sperner_bound,
)
from .turan import DEFAULT_NODE_BUDGET, CoverInstance, solve_exact
from .verify import MAX_VERIFY_N, verify_all

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SEED_ENV = "TURANLAB_SEED"


class UsageError(Exception):
    pass


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return DEFAULT_SEED
    try:
        seed = int(raw, 0)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={raw!r} is not an integer") from None
    if not 0 <= seed <= SEED_MASK:
        raise UsageError(f"{SEED_ENV}={raw!r} is not a 64-bit unsigned integer")
    return seed


def _seed_arg(text: str) -> int:
    try:
        seed = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not 0 <= seed <= SEED_MASK:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return seed


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def cmd_mantel(args) -> tuple[dict, int]:
    n = args.n
    if not 1 <= n <= MAX_TRIANGLE_FREE_N:
        raise UsageError(f"n must be in 1..{MAX_TRIANGLE_FREE_N} for the exhaustive column, got {n}")
    bound = mantel_bound(n)
    brute = brute_force_max_triangle_free(n)
    witness = complete_bipartite(n)
    ok = brute == bound and witness.num_edges() == bound and not has_triangle(witness)
    report = {
        "n": n,
        "bound": bound,
        "brute_force": brute,
        "verdict": "PASS" if ok else "FAIL",
        "witness": f"K_{{{(n + 1) // 2},{n // 2}}}",
        "witness_edges": witness.num_edges(),
        "witness_triangle_free": not has_triangle(witness),
    }
    return report, EXIT_OK if ok else EXIT_FAIL


def cmd_shift(args) -> tuple[dict, int]:
    if args.restarts < 1:
        raise UsageError("--restarts must be at least 1")
    g = parse_edge_list(_read(args.graph))
    if g.n == 0:
        raise UsageError("graph has no vertices")
    trace = run_to_clique(g)
    _, value = uniformize_on_support(g, trace.final)
    clique = trace.support()
    restart_clique, restart_idx = best_clique(g, args.restarts, args.seed)
    report = {
        "n": g.n,
        "m": g.num_edges(),
        "trace": trace.to_json(),
        "clique": clique,
        "clique_size": len(clique),
        "value": fraction_str(value),
        "restarts": args.restarts,
        "seed": args.seed,
        "restart_clique": restart_clique,
        "restart_clique_size": len(restart_clique),
        "restart_index": restart_idx,
    }
    if g.n <= MAX_CLIQUE_N:
        omega = brute_force_max_clique(g)
        report["omega"] = omega
        report["value_ceiling"] = fraction_str(1 - Fraction(1, omega))
        report["verdict"] = "PASS" if max(len(clique), len(restart_clique)) <= omega else "FAIL"
    return report, EXIT_OK if report.get("verdict", "PASS") == "PASS" else EXIT_FAIL


def cmd_turan(args) -> tuple[dict, int]:
    try:
        inst = CoverInstance(args.n, args.k, args.l)
        inst.check_capacity()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.budget < 1:
        raise UsageError("--budget must be positive")
    res = solve_exact(inst, args.budget)
    report = res.to_json()
    report["lower_bound_ceiling"] = -(-res.lower_bound.numerator // res.lower_bound.denominator)
    report["binomial_ratio"] = f"{binomial(inst.n, inst.l)}/{binomial(inst.k, inst.l)}"
    return report, EXIT_OK if res.optimal else EXIT_BUDGET


def cmd_sperner(args) -> tuple[dict, int]:
    if args.family is None and args.n is None:
        raise UsageError("give a family file or --n for oracle mode")
    if args.family is not None and args.n is not None:
        raise UsageError("family file and --n are mutually exclusive")
    if args.family is not None:
        f = parse_family(_read(args.family))
        lym = lym_sum(f)
        anti = is_antichain(f)
        report = {
            "mode": "family",
            "n": f.n,
            "size": len(f),
            "family": f.as_lists(),
            "antichain": anti,
            "lym_sum": fraction_str(lym),
            "bound": sperner_bound(f.n),
        }
        if anti:
            report["verdict"] = "PASS" if lym <= 1 and len(f) <= sperner_bound(f.n) else "FAIL"
        return report, EXIT_FAIL if report.get("verdict") == "FAIL" else EXIT_OK
    n = args.n
    if not 1 <= n <= MAX_ORACLE_N:
        raise UsageError(f"oracle mode supports 1 <= n <= {MAX_ORACLE_N}, got {n}")
    best = max_antichain_bruteforce(n)
    ok = best == sperner_bound(n)
    report = {"mode": "oracle", "n": n, "max_antichain": best, "bound": sperner_bound(n), "verdict": "PASS" if ok else "FAIL"}
    return report, EXIT_OK if ok else EXIT_FAIL


def cmd_verify_all(args) -> tuple[dict, int]:
    if not 2 <= args.max_n <= MAX_VERIFY_N:
        raise UsageError(f"--max-n must be in 2..{MAX_VERIFY_N}, got {args.max_n}")
    report = verify_all(args.max_n, args.seed, threads=args.threads, samples=args.samples)
    return report, EXIT_OK if report["passed"] else EXIT_FAIL


def _table(report: dict, indent: str = "") -> str:
    lines = []
    for key, val in report.items():
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_table(val, indent + "  "))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{indent}{key}:")
            for item in val:
                if "name" in item and "passed" in item:
                    tag = "PASS" if item["passed"] else "FAIL"
                    lines.append(f"{indent}  [{tag}] {item['name']} ({item['checks']} checks)")
                    for v in item.get("violations", []):
                        lines.append(f"{indent}      {v}")
                else:
                    lines.append(f"{indent}  " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            lines.append(f"{indent}{key:<22} {val}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--seed", type=_seed_arg, default=None,
                        help=f"64-bit seed (default ${SEED_ENV} or {DEFAULT_SEED:#x})")
    common.add_argument("--threads", type=int, default=None, help="sampling worker threads (default: all cores)")

    p = argparse.ArgumentParser(prog="turanlab", description="Mantel, Sperner and Turán covering checks.")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("mantel", parents=[common], help="floor(n^2/4) vs exhaustive search")
    m.add_argument("n", type=int)
    m.set_defaults(func=cmd_mantel)

    s = sub.add_parser("shift", parents=[common], help="run the mass-shifting dynamics on an edge-list graph")
    s.add_argument("graph", help="edge-list file ('-' for stdin)")
    s.add_argument("--restarts", type=int, default=10)
    s.set_defaults(func=cmd_shift)

    t = sub.add_parser("turan", parents=[common], help="solve T(n,k,l) exactly")
    t.add_argument("n", type=int)
    t.add_argument("k", type=int)
    t.add_argument("l", type=int)
    t.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET, help="search node budget")
    t.set_defaults(func=cmd_turan)

    sp = sub.add_parser("sperner", parents=[common], help="check a family file, or run the oracle with --n")
    sp.add_argument("family", nargs="?", default=None, help="family file ('-' for stdin)")
    sp.add_argument("--n", type=int, default=None, help="oracle mode: maximum antichain on [n]")
    sp.set_defaults(func=cmd_sperner)

    v = sub.add_parser("verify-all", parents=[common], help="run every invariant suite")
    v.add_argument("--max-n", type=int, default=MAX_VERIFY_N)
    v.add_argument("--samples", type=int, default=10**5, help="Monte Carlo samples per estimator")
    v.set_defaults(func=cmd_verify_all)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = default_seed()
        if args.threads is not None and args.threads < 1:
            raise UsageError("--threads must be positive")
        report, code = args.func(args)
    except (UsageError, GraphFormatError, FamilyFormatError) as exc:
        print(f"turanlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print(_table(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
