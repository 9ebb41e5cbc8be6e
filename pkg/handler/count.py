"""
count: closed-form counts (main3 joint lift count, l1deg1 over R, reduced block count).
"""
from fractions import Fraction
from typing import Any, Dict

from errors import DomainError
from formulas import ProblemInstance, l1deg1_count, main3_count, reduced_block_count
from module_theory import ModuleType, split_prime_power


def _number(value):
    return value.numerator if value.denominator == 1 else str(value)


def handle_count(args) -> Dict[str, Any]:
    if args.formula == "main3":
        if args.p is None:
            raise DomainError("--p is required for main3")
        inst = ProblemInstance.parse(args.p, args.N, args.n, args.poly, args.target)
        payload = {"success": True, "formula": "main3", "instance": inst.describe(),
                   "count": _number(main3_count(inst))}
        if inst.warnings:
            payload["warnings"] = list(inst.warnings)
        return payload

    if args.q is None or not args.target:
        raise DomainError(f"--q and --target are required for {args.formula}")
    _, d = split_prime_power(args.q)
    g = ModuleType.parse(args.target[0], d)
    if args.formula == "l1deg1":
        value = l1deg1_count(g, args.q, args.N, args.n)
    else:
        value = reduced_block_count(g, args.q, args.N)
    return {"success": True, "formula": args.formula, "type": g.format(), "q": args.q,
            "N": args.N, "n": args.n, "count": _number(Fraction(value))}
