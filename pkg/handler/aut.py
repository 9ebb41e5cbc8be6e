"""
aut: |Aut(G)| for a module type over the unramified DVR with residue field F_q.
"""
from typing import Any, Dict

from formulas import aut_count_formula
from logger import logger_access
from module_theory import ModuleType, brute_force_aut_count, split_prime_power


def handle_aut(args) -> Dict[str, Any]:
    _, d = split_prime_power(args.q)
    g = ModuleType.parse(args.type, d)
    count = aut_count_formula(g, args.q)
    payload = {"success": True, "type": g.format(), "q": args.q, "aut": count}
    if args.oracle:
        oracle = brute_force_aut_count(g, args.q)
        payload["oracle"] = oracle
        payload["agree"] = oracle == count
        logger_access.info(f"🔎 aut({g}, q={args.q}): formula {count}, oracle {oracle}")
    return payload
