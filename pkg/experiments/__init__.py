from .codes import OVERFLOW, NO_MATCH, PolyPack, joint_key, format_key
from .parallel import resolve_workers, chunk_ranges, run_chunks
from .enumeration import (FullEnumeration,
                          check_rank_hypothesis,
                          residue_coranks,
                          enumerate_lifts,
                          lift_histogram,
                          enumerate_full,
                          full_histogram,
                          residue_rank_census,
                          admissible_residues,
                          enumerate_l1deg1_lifts,
                          enumerate_reduced_block,
                          lee_transport_check)
from .sampling import SamplerConfig, SampleTable, sample_joint_distribution, compare_to_exact
from .report import ExperimentReport, exact_verdict, statistical_verdict, exact_report, statistical_report
from .probe import probe_conjecture
from .sweep import lifts_report, full_report, sample_report, run_instance, run_sweep
from .acceptance import QUICK, FULL, CHECKS, run_acceptance
