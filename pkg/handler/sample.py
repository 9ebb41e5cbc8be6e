"""
sample: Monte Carlo joint cokernel table, optionally scored against the large-n limit.
"""
from typing import Any, Dict

from experiments import SamplerConfig, format_key, sample_joint_distribution, sample_report
from formulas import ProblemInstance
from utils.parse_function import parse_polys


def handle_sample(args) -> Dict[str, Any]:
    cfg = SamplerConfig(seed=args.seed, samples=args.samples, workers=args.workers)
    if args.target:
        inst = ProblemInstance.parse(args.p, args.N, args.n, args.poly, args.target)
        report = sample_report(inst, cfg)
        return {"success": True, "mismatch": not report.passed, **report.to_dict()}
    polys = parse_polys(args.poly, args.p)
    table = sample_joint_distribution(args.p, args.n, args.N, polys, cfg)
    rows = [{"types": format_key(key), "count": count, "frequency": count / table.samples}
            for key, count in sorted(table.counts.items(), key=lambda kv: -kv[1])]
    return {"success": True, "p": args.p, "n": args.n, "N": args.N, "polys": [str(x) for x in polys],
            "samples": table.samples, "seed": table.seed, "rows": rows}
