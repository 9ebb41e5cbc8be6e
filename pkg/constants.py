from config import WORKERS, LIFT_BUDGET_LOG2, FULL_BUDGET_LOG2

# per-run parameters, filled once by the runner
params = {
    "WORKERS": WORKERS,
    "LIFT_BUDGET_LOG2": LIFT_BUDGET_LOG2,
    "FULL_BUDGET_LOG2": FULL_BUDGET_LOG2,
    "OUTPUT_FORMAT": "json",
    "SEED": 0,
}

def set_constants(args):
    """Copy the parsed command line options that handlers read back later.

    Args:
        args (argparse.Namespace): parsed options; missing or None attributes fall back to the defaults.
    """
    global params
    workers = getattr(args, "workers", None)
    budget_log2 = getattr(args, "budget_log2", None)
    seed = getattr(args, "seed", None)
    params["WORKERS"] = WORKERS if workers is None else int(workers)
    params["LIFT_BUDGET_LOG2"] = LIFT_BUDGET_LOG2 if budget_log2 is None else int(budget_log2)
    params["FULL_BUDGET_LOG2"] = FULL_BUDGET_LOG2 if budget_log2 is None else int(budget_log2)
    params["OUTPUT_FORMAT"] = getattr(args, "format", None) or "json"
    params["SEED"] = 0 if seed is None else int(seed)


def get_constants():
    global params
    return params
