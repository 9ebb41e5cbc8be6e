from .instance import ProblemInstance
from .counts import (ExactRational,
                     gl_order,
                     aut_count_formula,
                     rank_count_formula,
                     residue_factor,
                     main3_count,
                     main2_factor,
                     main2_check_rhs,
                     l1deg1_count,
                     reduced_block_count)
from .limits import LimitValue, truncation_index, main_limit, cl_limit
