#!/usr/bin/env python3
"""
quatorder CLI
Maximal orders of B_p, their Gross lattices and supersingular j-invariants
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from sympy import isprime
from tabulate import tabulate

from config import get_setting
from src.algorithms import (
    algorithm1,
    algorithm2,
    dominance_poset,
    enumerate_types,
    oracle_check,
    unit_group,
    verify_properties,
    verify_theorem1,
)
from src.algorithms.jinvariant import run_algorithm1
from src.algorithms.types import expected_mass
from src.classpoly import default_cache
from src.errors import InputError, InvariantError, NotPrimeError, UndecidedError
from src.formats import RunReport, basis_strings, parse_order_file
from src.lattices import (
    gross_lattice,
    has_sqrt_minus_p,
    is_maximal,
    schiemann_bound,
    successive_minima,
    trace_zero_index,
)
from src.oracle import supersingular_set

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_UNDECIDED = 2
EXIT_INVARIANT = 3


def _check_prime(p: int) -> int:
    if not isprime(p) or p < 3:
        raise NotPrimeError(f"{p} is not prime (need an odd prime)")
    return p


def format_trace_table(trace: List[dict]) -> str:
    """Format the Algorithm-1 steps as a table.

    Args:
        trace: List of step dictionaries

    Returns:
        Formatted table string
    """
    if not trace:
        return "No lattice steps (unit shortcut)."
    headers = ["n", "y", "d", "eps", "k", "deg G"]
    rows = [[s["n"], s["y"], s["d"], s["eps"], s["k"], s["degree"]] for s in trace]
    return tabulate(rows, headers=headers, tablefmt="grid")


def format_types_table(types) -> str:
    headers = ["#", "D1", "D2", "D3", "|O^x|", "j in F_p", "weight"]
    rows = []
    for i, order in enumerate(types.orders):
        m = successive_minima(gross_lattice(order))
        rows.append([i, m.D1, m.D2, m.D3, types.units[i].size, types.in_fp[i], types.weights[i]])
    return tabulate(rows, headers=headers, tablefmt="grid")


def format_matching_table(result) -> str:
    headers = ["#", "K(X)", "root"]
    rows = [
        [i, str(outcome.minpoly), outcome.root if outcome.root is not None else "pair"]
        for i, (_, outcome) in zip(result.indices, result.pairs)
    ]
    for left in result.leftover:
        rows.append([left.index, str(left.G), "undecided"])
    return tabulate(rows, headers=headers, tablefmt="grid")


def cmd_jinv(args, report: RunReport) -> int:
    order = parse_order_file(args.order_file)
    if args.trace:
        result = run_algorithm1(order)
    else:
        result = algorithm1(order)
    trace = [s.to_dict() for s in result.state.trace]
    if args.trace:
        print(format_trace_table(trace))
    if not result.decided:
        raise UndecidedError(f"undecided at p = {order.p}: {result.reason}", result.state)

    outcome = result.outcome
    print(outcome.describe())
    if outcome.root is not None:
        print(f"j(O) = {outcome.root}")
    report.finish({"minpoly": list(outcome.minpoly.coeffs), "root": outcome.root, "p": order.p}, trace=trace)
    return EXIT_OK


def cmd_match_all(args, report: RunReport) -> int:
    p = _check_prime(args.p)
    print(f"Enumerating maximal order types of B_{p}...")
    result = algorithm2(p, restrict_to_Fp=args.restrict_fp, jobs=args.jobs)
    print(format_matching_table(result))

    outputs = {
        "p": p,
        "restricted": args.restrict_fp,
        "pairs": [
            {"order_basis": basis_strings(order), "K": list(outcome.minpoly.coeffs)}
            for order, outcome in result.pairs
        ],
        "leftover": [{"index": left.index, "G": list(left.G.coeffs)} for left in result.leftover],
    }
    if args.oracle_check:
        oracle_check(result, supersingular_set(p, jobs=args.jobs or get_setting("jobs")))
        outputs["oracle"] = "match"
        print("Oracle check: match")
    print(f"\nTypes matched: {len(result.pairs)}")
    _dump(args, outputs)
    report.finish(outputs)
    return EXIT_OK if result.decided else EXIT_UNDECIDED


def cmd_hilbert(args, report: RunReport) -> int:
    cache = default_cache()
    H = cache.get(args.D)
    if args.p is not None:
        _check_prime(args.p)
        reduced = cache.mod_p(args.D, args.p)
        print(f"{reduced} (mod {args.p})")
        report.finish({"D": args.D, "p": args.p, "coeffs": list(reduced.coeffs)})
    else:
        print(H)
        report.finish({"D": args.D, "coeffs": list(H.coeffs)})
    return EXIT_OK


def cmd_oracle(args, report: RunReport) -> int:
    p = _check_prime(args.p)
    if p > get_setting("oracle_max_p"):
        raise InputError(f"p = {p} is above oracle_max_p = {get_setting('oracle_max_p')}")
    sset = supersingular_set(p, jobs=args.jobs or get_setting("jobs"))
    print(f"Supersingular polynomial mod {p}: {sset.polynomial}")
    print(f"Roots in F_{p}: {', '.join(map(str, sset.roots_in_Fp)) or 'none'}")
    for f in sset.conjugate_pairs:
        print(f"Conjugate pair: {f}")
    print(f"\nTotal supersingular j: {sset.count}")
    outputs = {
        "p": p,
        "roots_in_Fp": list(sset.roots_in_Fp),
        "conjugate_pairs": [list(f.coeffs) for f in sset.conjugate_pairs],
        "polynomial": list(sset.polynomial.coeffs),
    }
    _dump(args, outputs)
    report.finish(outputs)
    return EXIT_OK


def cmd_order_info(args, report: RunReport) -> int:
    order = parse_order_file(args.order_file)
    lattice = gross_lattice(order)
    m = successive_minima(lattice)
    units = unit_group(order)
    info = {
        "p": order.p,
        "discriminant": order.disc,
        "maximal": is_maximal(order),
        "gross_gram": [list(row) for row in lattice.gram],
        "minima": list(m.as_tuple()),
        "mu": str(m.mu),
        "units": units.size,
        "max_unit_order": units.max_order,
        "has_sqrt_minus_p": has_sqrt_minus_p(order),
        "schiemann_bound": schiemann_bound(m),
        "trace_zero_index": trace_zero_index(order),
    }
    rows = [[k, json.dumps(v) if isinstance(v, list) else v] for k, v in info.items()]
    print(tabulate(rows, headers=["Property", "Value"], tablefmt="grid"))
    _dump(args, info)
    report.finish(info)
    return EXIT_OK


def cmd_types(args, report: RunReport) -> int:
    p = _check_prime(args.p)
    types = enumerate_types(p)
    print(format_types_table(types))
    print(f"\nTypes: {len(types)}  class number: {types.class_number}  mass: {types.mass} (expected {expected_mass(p)})")
    outputs = {
        "p": p,
        "types": [
            {"order_basis": basis_strings(order), "units": u.size, "in_Fp": flag}
            for order, u, flag in zip(types.orders, types.units, types.in_fp)
        ],
        "class_number": types.class_number,
        "mass": str(types.mass),
    }
    _dump(args, outputs)
    report.finish(outputs)
    return EXIT_OK


def cmd_verify(args, report: RunReport) -> int:
    p = _check_prime(args.p)
    types = enumerate_types(p)
    outputs = {"p": p}
    passed = True

    if args.theorem1:
        result = verify_theorem1(p, types)
        outputs["theorem1"] = result.to_dict()
        print(f"Distinguishing theorem: {'pass' if result.passed else 'FAIL'} ({result.checked} pairs distinguished)")
        passed &= result.passed
    if args.dominance is not None:
        poset = dominance_poset(p, args.dominance, types)
        outputs["dominance"] = poset.to_dict()
        print(f"Dominance up to {args.dominance}: antisymmetric = {poset.antisymmetric}, strict = {poset.strict}")
    if args.properties:
        match = algorithm2(p, jobs=args.jobs, types=types)
        props = verify_properties(p, types, match)
        outputs["properties"] = props.to_dict()
        for failure in props.failures:
            print(f"FAIL {failure.name} (type {failure.type_index}): {failure.witness}", file=sys.stderr)
        print(f"Properties: {'pass' if props.passed else 'FAIL'} ({len(props.results)} checks)")
        passed &= props.passed

    _dump(args, outputs)
    report.finish(outputs, exit_code=EXIT_OK if passed else EXIT_INVARIANT)
    return EXIT_OK if passed else EXIT_INVARIANT


def _spot_check_cache():
    """Recompute one random H_{-D} from the disk cache, if there is one."""
    cache = default_cache()
    if cache.cache_dir is not None:
        cache.spot_check()


def _dump(args, outputs):
    if getattr(args, "output", None):
        with open(args.output, "w") as f:
            json.dump(outputs, f, indent=2)
        print(f"\nResults exported to {args.output}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Maximal orders of B_p and their supersingular j-invariants",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # j-invariant of a maximal order
  python main.py jinv data/orders/example_p61.json --trace

  # Match every type at p = 61 and compare with the brute-force oracle
  python main.py match-all -p 61 --oracle-check

  # Hilbert class polynomial, over Z or mod p
  python main.py hilbert -D 7 -p 61
        """
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    common.add_argument("--report", help="Write a JSON run report to this path")
    common.add_argument("--output", "-o", help="Output file path (JSON format)")
    common.add_argument("--jobs", "-j", type=int, default=None, help="Worker processes (default: QUATORDER_JOBS or 1)")

    sub = parser.add_subparsers(dest="command", required=True)

    jinv = sub.add_parser("jinv", parents=[common], help="Run Algorithm 1 on an order file")
    jinv.add_argument("order_file")
    jinv.add_argument("--trace", action="store_true", help="Print the per-step log")
    jinv.set_defaults(func=cmd_jinv, inputs=lambda a: [a.order_file])

    match = sub.add_parser("match-all", parents=[common], help="Run Algorithm 2 over all types")
    match.add_argument("-p", type=int, required=True)
    match.add_argument("--restrict-fp", action="store_true", help="Only types with j in F_p")
    match.add_argument("--oracle-check", action="store_true", help="Compare with the brute-force oracle")
    match.set_defaults(func=cmd_match_all)

    hilbert = sub.add_parser("hilbert", parents=[common], help="Hilbert class polynomial H_{-D}")
    hilbert.add_argument("-D", type=int, required=True)
    hilbert.add_argument("-p", type=int, default=None, help="Reduce mod p")
    hilbert.set_defaults(func=cmd_hilbert)

    oracle = sub.add_parser("oracle", parents=[common], help="All supersingular j mod p by brute force")
    oracle.add_argument("-p", type=int, required=True)
    oracle.set_defaults(func=cmd_oracle)

    info = sub.add_parser("order-info", parents=[common], help="Invariants of an order file")
    info.add_argument("order_file")
    info.set_defaults(func=cmd_order_info, inputs=lambda a: [a.order_file])

    types = sub.add_parser("types", parents=[common], help="Enumerate the maximal order types")
    types.add_argument("-p", type=int, required=True)
    types.set_defaults(func=cmd_types)

    verify = sub.add_parser("verify", parents=[common], help="Empirical verifiers")
    verify.add_argument("-p", type=int, required=True)
    verify.add_argument("--theorem1", action="store_true")
    verify.add_argument("--dominance", type=int, metavar="BOUND")
    verify.add_argument("--properties", action="store_true")
    verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI function."""
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )

    inputs = args.inputs(args) if hasattr(args, "inputs") else []
    code = EXIT_OK
    report = None
    try:
        report = RunReport.start(argv, inputs)
        _spot_check_cache()
        code = args.func(args, report)
    except UndecidedError as e:
        print(f"Undecided: {e}", file=sys.stderr)
        code = EXIT_UNDECIDED
        if report is not None and e.state is not None:
            report.finish({"undecided": str(e)}, code, [s.to_dict() for s in e.state.trace])
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        code = EXIT_INPUT
    except InvariantError as e:
        print(f"Invariant failure: {e}", file=sys.stderr)
        code = EXIT_INVARIANT
    except OSError as e:
        print(f"Error: {e}", file=sys.stderr)
        code = EXIT_INPUT

    if args.report and report is not None:
        if report.exit_code != code:
            report.finish(report.outputs, code, report.trace)
        report.write(args.report)
    return code


if __name__ == "__main__":
    sys.exit(main())
