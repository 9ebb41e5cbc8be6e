from .constants import (VERDICT_EXACT_MATCH, VERDICT_WITHIN_3_SIGMA, VERDICT_MISMATCH,
                        EXIT_OK, EXIT_INVALID, EXIT_BUDGET, EXIT_MISMATCH,
                        FORMAT_JSON, FORMAT_CSV, FORMAT_PLAIN, OUTPUT_FORMATS)
from .utils_general import load_json, save_json, to_json
from .parse_function import parse_ring, parse_matrix, parse_polys, parse_targets
from .utils_time import run_stamp
