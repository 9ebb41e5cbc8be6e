"""
rank-census: joint census of dim_{F_q} cok(P_j(Xbar)) over all Xbar in Mat_n(F_p).
"""
from fractions import Fraction
from typing import Any, Dict

from experiments import residue_rank_census
from formulas import cl_limit, rank_count_formula
from utils.parse_function import parse_polys


def handle_rank_census(args) -> Dict[str, Any]:
    polys = parse_polys(args.poly, args.p)
    census = residue_rank_census(args.p, args.n, polys, args.workers)
    total = args.p ** (args.n * args.n)
    degs = [poly.degree for poly in polys]
    rows = []
    for ranks in sorted(census):
        row = {"ranks": ",".join(str(r) for r in ranks), "count": census[ranks],
               "probability": str(Fraction(census[ranks], total)),
               "limit": cl_limit(args.p, degs, list(ranks)).value}
        # P = t counts matrices of rank n - r directly
        if len(polys) == 1 and polys[0].degree == 1:
            row["formula"] = rank_count_formula(args.n, args.n - ranks[0], args.p)
        rows.append(row)
    return {"success": True, "p": args.p, "n": args.n, "polys": [str(x) for x in polys],
            "total": total, "rows": rows}
