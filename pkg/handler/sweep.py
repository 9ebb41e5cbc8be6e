"""
sweep: run a declarative list of instances and archive the reports.
"""
from typing import Any, Dict

from config import REPORT_PATH
from experiments import run_sweep


def handle_sweep(args) -> Dict[str, Any]:
    reports = run_sweep(args.config, args.workers, args.report_dir or REPORT_PATH)
    blocking_failures = [r.name for r in reports if r.blocking and not r.passed]
    return {"success": True, "mismatch": bool(blocking_failures), "reports": len(reports),
            "mismatches": blocking_failures, "rows": [r.to_row() for r in reports]}
