from .modulus import PrimePowerModulus, is_prime, p_valuation
from .polynomial import (PolySpec,
                         check_irreducible,
                         find_irreducible,
                         poly_divmod_p,
                         poly_xgcd_p)
from .element import (RingDescriptor,
                      ChainRingElement,
                      mul_digits,
                      add,
                      mul,
                      inverse,
                      valuation)
