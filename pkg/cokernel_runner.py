#!/usr/bin/env python3
"""
Cokernel Runner
Command-line entry point: parses the subcommand, stores the run parameters and dispatches
to the handler, then writes the handler's payload as json, csv or plain text.

Exit codes: 0 ok, 1 invalid input, 2 budget exceeded, 3 blocking MISMATCH.
"""

import sys
import argparse
import traceback

from constants import set_constants, get_constants
from errors import BudgetExceeded, CokernelError
from handler import (handle_aut, handle_cok, handle_count, handle_enumerate, handle_limit, handle_probe,
                     handle_rank_census, handle_sample, handle_snf, handle_sweep, handle_verify)
from logger import logger_access, logger_error
from result import write_output
from utils.constants import EXIT_BUDGET, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK, OUTPUT_FORMATS

# options whose values may start with '-' (negative coefficients)
VALUE_OPTIONS = {"--poly", "--ext", "--matrix", "--xbar", "--target"}


def _join_negative_values(argv):
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in VALUE_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and not argv[i + 1].startswith("--"):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
    common.add_argument("--format", choices=OUTPUT_FORMATS, default=None, help="output format (default json)")
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")
    common.add_argument("--workers", type=int, default=None, help="process count, 0 = all cores")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled and randomized runs")
    common.add_argument("--budget-log2", dest="budget_log2", type=int, default=None,
                        help="log2 of the largest object count an exhaustive engine may visit")

    parser = argparse.ArgumentParser(prog="cokernel_runner", allow_abbrev=False,
                                     description="Cokernels of matrices over Z/p^k and (Z/p^m)[t]/(P)")
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, handler, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, allow_abbrev=False)
        p.set_defaults(handler=handler)
        return p

    p = command("snf", handle_snf, "Smith normal form of a square matrix")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--mod-exp", dest="mod_exp", type=int, default=1)
    p.add_argument("--ext", default=None, help="work over (Z/p^k)[t]/(EXT)")
    p.add_argument("--matrix", required=True, help='"a,b;c,d" or JSON')
    p.add_argument("--transforms", action="store_true")
    p.add_argument("--minors", action="store_true", help="add the minor-gcd cross-check")

    p = command("cok", handle_cok, "cokernel of X, or of P(X) as an R-module")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--mod-exp", dest="mod_exp", type=int, default=1)
    p.add_argument("--poly", default=None, help="read cok(P(X)) over (Z/p^m)[t]/(P)")
    p.add_argument("--ext", default=None)
    p.add_argument("--matrix", required=True)

    p = command("aut", handle_aut, "automorphism count of a module type")
    p.add_argument("--type", required=True, help='e.g. "2^1,1^2"')
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force count")

    p = command("rank-census", handle_rank_census, "joint residue-rank census over Mat_n(F_p)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", action="append", default=[])

    p = command("count", handle_count, "closed-form counts")
    p.add_argument("--formula", choices=("main3", "l1deg1", "reduced-block"), default="main3")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--poly", action="append", default=[])
    p.add_argument("--target", action="append", default=[])

    p = command("limit", handle_limit, "large-n limiting probabilities")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--poly", action="append", default=[])
    p.add_argument("--target", action="append", default=[])
    p.add_argument("--rank", type=int, action="append", default=[])
    p.add_argument("--tol", type=float, default=1e-12)

    p = command("enumerate", handle_enumerate, "exhaustive counts against the closed forms")
    p.add_argument("--mode", choices=("lifts", "full", "l1deg1", "reduced-block"), default="lifts")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--poly", action="append", default=[])
    p.add_argument("--target", action="append", default=[])
    p.add_argument("--xbar", default=None, help="residue matrix over F_p (over F_q for l1deg1)")
    p.add_argument("--ext", default=None, help="P for l1deg1")
    p.add_argument("--histogram", action="store_true", help="full joint table instead of one count")

    p = command("sample", handle_sample, "Monte Carlo joint cokernel distribution")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--poly", action="append", default=[])
    p.add_argument("--target", action="append", default=[])
    p.add_argument("--samples", type=int, default=10 ** 5)

    p = command("probe-conjecture", handle_probe, "enumerate an instance of any degree")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--poly", action="append", default=[])
    p.add_argument("--target", action="append", default=[])
    p.add_argument("--xbar", default=None)
    p.add_argument("--mode", choices=("lifts", "full"), default="lifts")

    p = command("verify", handle_verify, "run the acceptance suite")
    p.add_argument("--quick", action="store_true", help="smaller sizes for smoke runs")
    p.add_argument("--only", action="append", default=None, help="run checks whose title contains this word")
    p.add_argument("--report-dir", dest="report_dir", default=None)

    p = command("sweep", handle_sweep, "run a sweep file")
    p.add_argument("--config", default=None)
    p.add_argument("--report-dir", dest="report_dir", default=None)
    return parser


def run(argv=None, stream=None) -> int:
    """
    Parse argv, dispatch and write the payload.

    Returns:
        int: the exit code.
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INVALID

    set_constants(args)
    params = get_constants()
    if args.seed is None:
        args.seed = params["SEED"]
    fmt = params["OUTPUT_FORMAT"]
    logger_access.info(f"🎯 {args.command} {' '.join(argv)}")

    try:
        payload = args.handler(args)
        code = EXIT_MISMATCH if payload.get("mismatch") else EXIT_OK
    except BudgetExceeded as e:
        logger_error.error(f"❌ {args.command}: {e}")
        payload, code = {"success": False, "error": str(e), "error_type": type(e).__name__}, EXIT_BUDGET
    except (CokernelError, ValueError) as e:
        logger_error.error(f"❌ {args.command}: {e}")
        payload, code = {"success": False, "error": str(e), "error_type": type(e).__name__}, EXIT_INVALID
    except Exception as e:
        logger_error.error(f"❌ {args.command} crashed: {e}\n{traceback.format_exc()}")
        payload, code = {"success": False, "error": str(e), "error_type": type(e).__name__}, EXIT_INVALID

    write_output(payload, fmt, args.out, stream)
    logger_access.info(f"✅ {args.command} finished with exit code {code}")
    return code


def main():
    return run()


if __name__ == "__main__":
    exit(main())
