from .snf import handle_snf
from .cok import handle_cok
from .aut import handle_aut
from .rank_census import handle_rank_census
from .count import handle_count
from .limit import handle_limit
from .enumerate import handle_enumerate
from .sample import handle_sample
from .probe import handle_probe
from .verify import handle_verify
from .sweep import handle_sweep
