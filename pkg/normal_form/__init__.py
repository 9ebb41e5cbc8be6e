from .smith import SNFResult, smith_normal_form, cokernel_type
from .minors import minor_gcd_valuations, minor_identity_holds
from .lee import (lee_matrix,
                  lee_snf,
                  cokernel_via_lee,
                  underlying_group,
                  cokernel_group_side)
