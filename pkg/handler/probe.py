"""
probe-conjecture: enumerate an instance of any degree against the exact lift-count formula.
"""
from typing import Any, Dict

from experiments import probe_conjecture
from formulas import ProblemInstance
from ring_core import RingDescriptor
from utils.parse_function import parse_matrix


def handle_probe(args) -> Dict[str, Any]:
    inst = ProblemInstance.parse(args.p, args.N, args.n, args.poly, args.target)
    xbar = parse_matrix(args.xbar, RingDescriptor.of(args.p, 1)) if args.xbar else None
    report = probe_conjecture(inst, xbar, args.mode, args.workers, args.budget_log2)
    # non-blocking beyond degree 2
    return {"success": True, "mismatch": report.blocking and not report.passed, **report.to_dict()}
