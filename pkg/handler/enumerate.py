"""
enumerate: exhaustive counts, compared with the closed forms.

Modes: lifts (one residue matrix), full (all of Mat_n(Z/p^{N+1})), l1deg1 (lifts over
R_{N+1} of a residue matrix over F_q), reduced-block (r x r matrices pA).
"""
from typing import Any, Dict

from errors import DomainError
from experiments import (enumerate_l1deg1_lifts, enumerate_reduced_block, format_key, full_histogram,
                         full_report, lift_histogram, lifts_report)
from experiments.report import exact_report
from formulas import ProblemInstance, l1deg1_count, reduced_block_count
from module_theory import ModuleType
from ring_core import PolySpec, RingDescriptor
from utils.parse_function import parse_matrix, parse_polys


def _histogram_rows(table) -> list:
    return [{"types": format_key(key), "count": count}
            for key, count in sorted(table.items(), key=lambda kv: -kv[1])]


def handle_enumerate(args) -> Dict[str, Any]:
    budget = args.budget_log2
    if args.mode == "l1deg1":
        poly = PolySpec.parse(args.ext, args.p)
        g = ModuleType.parse(args.target[0], poly.degree)
        residue_ring = RingDescriptor.of(args.p, 1, poly)
        xbar = parse_matrix(args.xbar, residue_ring)
        observed = enumerate_l1deg1_lifts(g, poly, args.N, args.n, xbar, None, args.workers, budget)
        report = exact_report("l1deg1", {"p": args.p, "ext": str(poly), "N": args.N, "n": args.n,
                                         "target": g.format()},
                              observed, l1deg1_count(g, poly.q, args.N, args.n), xbar=str(xbar))
        return {"success": True, "mismatch": not report.passed, **report.to_dict()}
    if args.mode == "reduced-block":
        g = ModuleType.parse(args.target[0])
        r = g.residue_rank()
        observed = enumerate_reduced_block(g, args.p, args.N, r, args.workers, budget)
        report = exact_report("reduced-block", {"p": args.p, "N": args.N, "r": r, "target": g.format()},
                              observed, reduced_block_count(g, args.p, args.N))
        return {"success": True, "mismatch": not report.passed, **report.to_dict()}

    if args.histogram:
        polys = parse_polys(args.poly, args.p)
        if args.mode == "lifts":
            if not args.xbar:
                raise DomainError("--histogram with --mode lifts needs --xbar")
            xbar = parse_matrix(args.xbar, RingDescriptor.of(args.p, 1))
            table = lift_histogram(xbar, args.p, args.N, polys, args.workers, budget)
        else:
            table = full_histogram(args.p, args.n, args.N, polys, args.workers, budget)
        return {"success": True, "mode": args.mode, "total": sum(table.values()), "rows": _histogram_rows(table)}

    inst = ProblemInstance.parse(args.p, args.N, args.n, args.poly, args.target)
    if args.mode == "lifts":
        xbar = parse_matrix(args.xbar, RingDescriptor.of(args.p, 1)) if args.xbar else None
        if xbar is not None and xbar.rows != inst.n:
            raise DomainError(f"--xbar is {xbar.rows}x{xbar.cols} but n={inst.n}")
        report = lifts_report(inst, xbar, args.workers, budget)
    elif args.mode == "full":
        report = full_report(inst, args.workers, budget)
    else:
        raise DomainError(f"unknown enumerate mode {args.mode!r}")
    return {"success": True, "mismatch": not report.passed, **report.to_dict()}
