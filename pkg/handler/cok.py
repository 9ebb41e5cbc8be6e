"""
cok: cokernel of a matrix, or of P(X) read as a module over (Z/p^m)[t]/(P).
"""
from typing import Any, Dict

from logger import logger_access
from module_theory import ModuleType
from normal_form import cokernel_group_side, lee_snf, smith_normal_form, underlying_group
from ring_core import PolySpec
from utils.parse_function import parse_matrix, parse_ring


def _describe(g: ModuleType, q: int) -> Dict[str, Any]:
    return {"type": g.format(), "q": q, "residue_rank": g.residue_rank(),
            "order_log_q": g.order_log_q(), "order": g.order(q)}


def handle_cok(args) -> Dict[str, Any]:
    ring = parse_ring(args.p, args.mod_exp, None if args.poly else args.ext)
    x = parse_matrix(args.matrix, ring)
    if not args.poly:
        snf = smith_normal_form(x)
        payload = {"success": True, "ring": str(ring), "exponents": snf.exponents, "saturated": snf.saturated}
        if not snf.saturated:
            payload.update(_describe(ModuleType.from_exponents(snf.exponents, ring.degree), ring.q))
        return payload

    poly = PolySpec.parse(args.poly, args.p)
    snf = lee_snf(x, poly)
    payload = {"success": True, "ring": str(ring), "poly": str(poly), "exponents": snf.exponents,
               "saturated": snf.saturated}
    if snf.saturated:
        logger_access.info(f"📐 cok over R for P={poly}: saturated {snf.exponents}")
        return payload
    g = ModuleType.from_exponents(snf.exponents, poly.degree)
    group = underlying_group(g)
    payload.update(_describe(g, poly.q))
    payload["underlying_group"] = _describe(group, args.p)
    payload["transport_agrees"] = cokernel_group_side(x, poly) == group
    logger_access.info(f"📐 cok over R for P={poly}: {g} (group {group})")
    return payload
