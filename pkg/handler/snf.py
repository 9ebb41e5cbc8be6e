"""
snf: Smith normal form of a matrix over Z/p^k or (Z/p^k)[t]/(P).
"""
from typing import Any, Dict

from config import MINOR_MAX_DIM
from logger import logger_access
from normal_form import minor_gcd_valuations, minor_identity_holds, smith_normal_form
from utils.parse_function import parse_matrix, parse_ring


def handle_snf(args) -> Dict[str, Any]:
    ring = parse_ring(args.p, args.mod_exp, args.ext)
    x = parse_matrix(args.matrix, ring)
    result = smith_normal_form(x, with_transforms=args.transforms)
    payload = {"success": True, "ring": str(ring), "n": x.rows}
    payload.update(result.to_dict(with_transforms=args.transforms))
    if args.minors and x.rows <= MINOR_MAX_DIM:
        valuations = minor_gcd_valuations(x)
        payload["minor_valuations"] = valuations
        payload["minor_identity"] = minor_identity_holds(result.exponents, valuations, ring.k)
    logger_access.info(f"📐 snf over {ring}: {result.exponents}")
    return payload
