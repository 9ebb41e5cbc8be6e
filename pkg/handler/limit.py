"""
limit: large-n joint probabilities, truncated at a stated tolerance.
"""
from typing import Any, Dict

from errors import DomainError
from formulas import ProblemInstance, cl_limit, main_limit
from utils.parse_function import parse_polys, parse_targets


def handle_limit(args) -> Dict[str, Any]:
    polys = parse_polys(args.poly, args.p)
    if args.target:
        targets = parse_targets(args.target, polys)
        # the limit does not depend on n or N; pick the smallest admissible pair
        N = max(g.exponent() for g in targets)
        n = max(1, sum(poly.degree * g.residue_rank() for poly, g in zip(polys, targets)))
        inst = ProblemInstance(args.p, tuple(polys), tuple(targets), n, N)
        value = main_limit(inst, args.tol)
        kind, given = "main", [g.format() for g in targets]
    elif args.rank:
        value = cl_limit(args.p, [poly.degree for poly in polys], args.rank, args.tol)
        kind, given = "residue-ranks", list(args.rank)
    else:
        raise DomainError("give --target (module types) or --rank (residue ranks)")
    return {"success": True, "limit": kind, "p": args.p, "polys": [str(x) for x in polys],
            "given": given, "tol": args.tol, **value.to_dict()}
