VERDICT_EXACT_MATCH = "exact-match"
VERDICT_WITHIN_3_SIGMA = "within-3σ"
VERDICT_MISMATCH = "MISMATCH"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_BUDGET = 2
EXIT_MISMATCH = 3

FORMAT_JSON = "json"
FORMAT_CSV = "csv"
FORMAT_PLAIN = "plain"
OUTPUT_FORMATS = (FORMAT_JSON, FORMAT_CSV, FORMAT_PLAIN)
