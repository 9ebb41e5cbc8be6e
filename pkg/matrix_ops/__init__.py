from .ring_matrix import (RingMatrix,
                          mat_mul,
                          mat_add,
                          mat_sub,
                          mat_scale,
                          poly_eval,
                          residue_rank,
                          is_invertible,
                          reduce_mod,
                          lift_canonical,
                          iter_lifts,
                          companion,
                          random_matrix,
                          random_invertible)
from .block_ops import (BlockPartition,
                        SwapBlocks,
                        ScaleBlock,
                        AddBlockMultiple,
                        block_row_op,
                        block_col_op,
                        row_op_matrix,
                        col_op_matrix,
                        random_block_op)
