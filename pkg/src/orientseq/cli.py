"""Command-line front end.

Subcommands: construct {periodic|aperiodic|debruijn}, verify, bound, search,
index, locate, tables.  Exit codes: 0 success, 1 property violation (the
counterexample is reported), 2 usage error.  All commands are deterministic;
--json switches to machine-readable output.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import aperiodic, locator, periodic, search, seqio
from .join import debruijn_lempel
from .seqcore import BitsError, FiniteSeq, GeneratingCycle, PreconditionError
from .verifier import verify_nwindow, verify_orientable

__all__ = ["main"]


def _emit(args, payload: dict, human: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _write_outputs(args, seq, order: int, trace=None) -> None:
    if getattr(args, "out", None):
        seqio.write_sequence(args.out, seq, order=order)
    if getattr(args, "trace", None) and trace is not None:
        with open(args.trace, "w", encoding="ascii") as fh:
            json.dump(trace.as_dict(), fh, indent=2)


def _load_seq(path: str, mode: Optional[str]):
    f = seqio.read_sequence(path)
    mode = mode or f.mode
    if mode is None:
        raise BitsError(
            f"{path} has no mode header; pass --mode periodic|aperiodic"
        )
    return (f.to_cycle() if mode == "periodic" else f.to_finite()), mode, f.order


def _cmd_construct_periodic(args) -> int:
    if args.starter:
        f = seqio.read_sequence(args.starter)
        starter = f.to_cycle()
        n0 = args.starter_order or f.order
        if n0 is None:
            raise BitsError("starter file has no order header; pass --starter-order")
    else:
        starter, n0 = periodic.DEFAULT_STARTER, periodic.DEFAULT_STARTER_ORDER
    cycle, trace = periodic.build_orientable(starter, n0, args.target_order)
    _write_outputs(args, cycle, args.target_order, trace)
    _emit(
        args,
        {
            "mode": "periodic",
            "order": args.target_order,
            "period": cycle.period,
            "bits": cycle.bits,
            "trace": trace.as_dict(),
        },
        f"orientable order {args.target_order} period {cycle.period}\n{cycle.bits}",
    )
    return 0


def _cmd_construct_aperiodic(args) -> int:
    seq, trace = aperiodic.build_aos(args.target_order)
    _write_outputs(args, seq, args.target_order, trace)
    _emit(
        args,
        {
            "mode": "aperiodic",
            "order": args.target_order,
            "length": len(seq),
            "bits": seq.bits,
            "trace": trace.as_dict(),
        },
        f"aperiodic orientable order {args.target_order} length {len(seq)}\n{seq.bits}",
    )
    return 0


def _cmd_construct_debruijn(args) -> int:
    cycle = debruijn_lempel(args.order)
    _write_outputs(args, cycle, args.order)
    _emit(
        args,
        {"mode": "periodic", "order": args.order, "period": cycle.period, "bits": cycle.bits},
        f"de Bruijn order {args.order} period {cycle.period}\n{cycle.bits}",
    )
    return 0


def _cmd_verify(args) -> int:
    seq, mode, file_order = _load_seq(args.file, args.mode)
    order = args.order or file_order
    if order is None:
        raise BitsError(f"{args.file} has no order header; pass --order")
    check = verify_orientable if args.property == "orientable" else verify_nwindow
    cx = check(seq, order)
    size = seq.period if isinstance(seq, GeneratingCycle) else len(seq)
    if cx is None:
        _emit(
            args,
            {"ok": True, "mode": mode, "order": order, "size": size},
            f"ok: {args.property} at order {order} ({mode}, size {size})",
        )
        return 0
    _emit(
        args,
        {"ok": False, "mode": mode, "order": order, "counterexample": cx.as_dict()},
        f"FAIL: windows at positions {cx.i} and {cx.j} collide ({cx.kind})",
    )
    return 1


def _cmd_bound(args) -> int:
    if args.aperiodic:
        value = aperiodic.burns_bound(args.order)
        which = "aperiodic length bound"
    else:
        value = periodic.dai_bound(args.order)
        which = "periodic period bound"
    _emit(
        args,
        {"order": args.order, "aperiodic": bool(args.aperiodic), "bound": value},
        f"{which} at order {args.order}: {value}",
    )
    return 0


def _cmd_search(args) -> int:
    initial = None
    if args.resume:
        with open(args.resume, encoding="ascii") as fh:
            prev = json.load(fh)
        if prev.get("witness"):
            initial = (prev["value"], prev["witness"])
    if args.mode == "periodic":
        result = search.max_orientable_period(
            args.order, node_budget=args.budget, initial_best=initial
        )
    else:
        result = search.max_aos_length(
            args.order, node_budget=args.budget, initial_best=initial
        )
    payload = {"mode": args.mode, "order": args.order, **result.as_dict()}
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            json.dump(payload, fh, indent=2)
    status = "exhaustive" if result.exhaustive else "budget-limited best"
    _emit(
        args,
        payload,
        f"{status} optimum at order {args.order} ({args.mode}): "
        f"{result.value}\n{result.witness}\nnodes: {result.nodes}",
    )
    return 0


def _cmd_index(args) -> int:
    seq, _, file_order = _load_seq(args.seq, args.mode)
    order = args.order or file_order
    if order is None:
        raise BitsError(f"{args.seq} has no order header; pass --order")
    idx = locator.build_index(seq, order)
    locator.save_index(idx, args.out)
    print(f"indexed {len(idx)} windows at order {order} -> {args.out}")
    return 0


def _cmd_locate(args) -> int:
    seq, _, file_order = _load_seq(args.seq, args.mode)
    order = args.order or file_order
    if order is None:
        raise BitsError(f"{args.seq} has no order header; pass --order")
    idx = locator.build_index(seq, order)
    hit = locator.locate(idx, args.window)
    if hit is None:
        _emit(args, {"found": False, "window": args.window}, "not found")
        return 1
    pos, orientation = hit
    _emit(
        args,
        {"found": True, "window": args.window, "position": pos, "orientation": orientation},
        f"position {pos}, reading {orientation}",
    )
    return 0


def _cmd_tables(args) -> int:
    max_order = args.max_order
    periods = {
        step.order: step.period
        for step in periodic.build_orientable(
            periodic.DEFAULT_STARTER, periodic.DEFAULT_STARTER_ORDER, max_order
        )[1].steps
    }
    lengths = {
        step.order: step.period for step in aperiodic.build_aos(max_order)[1].steps
    }
    payload = {
        "period_bound": {n: periodic.dai_bound(n) for n in range(5, max_order + 1)},
        "periodic_family": periods,
        "aperiodic_family": lengths,
        "aperiodic_bound": {
            n: aperiodic.burns_bound(n) for n in range(2, max_order + 1)
        },
        "literature_aperiodic": aperiodic.BURNS_TABLE,
    }
    if args.json:
        print(json.dumps(payload, indent=2))
        return 0
    print("order  period-bound  periodic-family  aperiodic-family  aperiodic-bound")
    for n in range(2, max_order + 1):
        bound = periodic.dai_bound(n) if n >= 5 else "-"
        per = periods.get(n, "-")
        print(
            f"{n:>5}  {bound:>12}  {per:>15}  {lengths.get(n, '-'):>16}"
            f"  {aperiodic.burns_bound(n):>15}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orientseq",
        description="Construct, verify, search, and decode orientable binary sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="build a sequence recursively")
    kinds = construct.add_subparsers(dest="kind", required=True)

    cp = kinds.add_parser("periodic", help="periodic orientable sequence")
    cp.add_argument("--target-order", type=int, required=True)
    cp.add_argument("--starter", help="sequence file with an alternative starter")
    cp.add_argument("--starter-order", type=int)
    cp.add_argument("--out", help="write the sequence to this file")
    cp.add_argument("--trace", help="write the construction trace JSON here")
    cp.add_argument("--json", action="store_true")
    cp.set_defaults(func=_cmd_construct_periodic)

    ca = kinds.add_parser("aperiodic", help="finite orientable sequence")
    ca.add_argument("--target-order", type=int, required=True)
    ca.add_argument("--out")
    ca.add_argument("--trace")
    ca.add_argument("--json", action="store_true")
    ca.set_defaults(func=_cmd_construct_aperiodic)

    cd = kinds.add_parser("debruijn", help="de Bruijn sequence via the doubling recursion")
    cd.add_argument("--order", type=int, required=True)
    cd.add_argument("--out")
    cd.add_argument("--json", action="store_true")
    cd.set_defaults(func=_cmd_construct_debruijn)

    v = sub.add_parser("verify", help="check orientability of a sequence file")
    v.add_argument("file")
    v.add_argument("--order", type=int)
    v.add_argument("--mode", choices=["periodic", "aperiodic"])
    v.add_argument(
        "--property",
        choices=["orientable", "nwindow"],
        default="orientable",
        help="which window property to check (default: orientable)",
    )
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify)

    b = sub.add_parser("bound", help="upper bound on period or length")
    b.add_argument("--order", type=int, required=True)
    b.add_argument("--aperiodic", action="store_true")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=_cmd_bound)

    s = sub.add_parser("search", help="exhaustive maximum-sequence search")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--mode", choices=["periodic", "aperiodic"], default="periodic")
    s.add_argument("--budget", type=int, help="node budget (default: unlimited)")
    s.add_argument("--resume", help="seed from a previous search result JSON")
    s.add_argument("--out", help="write the result JSON here")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_search)

    ix = sub.add_parser("index", help="build a position+orientation lookup table")
    ix.add_argument("--seq", required=True)
    ix.add_argument("--order", type=int)
    ix.add_argument("--mode", choices=["periodic", "aperiodic"])
    ix.add_argument("--out", required=True)
    ix.set_defaults(func=_cmd_index)

    lc = sub.add_parser("locate", help="look up one window's position and direction")
    lc.add_argument("--seq", required=True)
    lc.add_argument("--order", type=int)
    lc.add_argument("--mode", choices=["periodic", "aperiodic"])
    lc.add_argument("--window", required=True)
    lc.add_argument("--json", action="store_true")
    lc.set_defaults(func=_cmd_locate)

    t = sub.add_parser("tables", help="regenerate the bound and family tables")
    t.add_argument("--max-order", type=int, default=10)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=_cmd_tables)

    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 1
    except (BitsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
