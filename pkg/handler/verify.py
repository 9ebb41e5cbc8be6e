"""
verify: run the acceptance suite and print a scoreboard.

A blocking MISMATCH sets "mismatch" so the runner exits with 3; the reports are archived
under the report directory.
"""
from typing import Any, Dict

from config import REPORT_PATH
from experiments import run_acceptance
from logger import logger_access, logger_experiment
from result import write_reports
from utils.utils_time import run_stamp


def handle_verify(args) -> Dict[str, Any]:
    results = run_acceptance(quick=args.quick, workers=args.workers, seed=args.seed, only=args.only)
    rows, everything = [], []
    blocking_failures = 0
    for title, reports in results:
        everything.extend(reports)
        failed = [r for r in reports if not r.passed]
        blocking = [r for r in failed if r.blocking]
        blocking_failures += len(blocking)
        rows.append({"check": title, "reports": len(reports), "passed": len(reports) - len(failed),
                     "failed": len(failed), "status": "FAIL" if blocking else ("WARN" if failed else "PASS")})
        for r in failed:
            logger_experiment.warning(f"🚨 {title}: {r.name} {r.verdict} observed={r.observed} "
                                      f"predicted={r.predicted} {r.instance}")
    paths = write_reports(everything, args.report_dir or REPORT_PATH, f"verify_{run_stamp()}")
    logger_access.info(f"🏁 verify finished: {blocking_failures} blocking mismatches")
    return {"success": True, "mismatch": blocking_failures > 0, "quick": args.quick, "seed": args.seed,
            "blocking_failures": blocking_failures, "archived": paths, "rows": rows}
