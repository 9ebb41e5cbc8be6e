from .module_type import (ModuleType,
                          RankVector,
                          residue_rank,
                          order_log_q,
                          exponent,
                          annihilated_by,
                          quotient_mod_p,
                          enumerate_module_types,
                          brute_force_element_count)
from .aut_oracle import brute_force_aut_count, split_prime_power
