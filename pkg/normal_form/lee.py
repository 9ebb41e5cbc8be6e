"""
Transport between cok(P(X)) over Z/p^m and cok_R(X - t I) over R = (Z/p^m)[t]/(P).
"""
from errors import StructuralError
from matrix_ops import RingMatrix, mat_sub, mat_scale, poly_eval
from module_theory import ModuleType
from normal_form.smith import SNFResult, cokernel_type, smith_normal_form
from ring_core import PolySpec, RingDescriptor


def lee_matrix(x: RingMatrix, poly: PolySpec) -> RingMatrix:
    """X - t I over R_m, t the class of the variable (-a_0 when deg P = 1)."""
    if x.ring.extension is not None:
        raise StructuralError(f"transport expects a matrix over Z/p^m, got one over {x.ring}")
    if poly.p != x.ring.p:
        raise StructuralError(f"polynomial over F_{poly.p} used with {x.ring}")
    ring = RingDescriptor(x.ring.modulus, poly)
    lifted = RingMatrix(ring, x.rows, x.cols, tuple(ring.element(e.digits) for e in x.entries))
    return mat_sub(lifted, mat_scale(ring.generator(), RingMatrix.identity(ring, x.rows)))


def lee_snf(x: RingMatrix, poly: PolySpec) -> SNFResult:
    return smith_normal_form(lee_matrix(x, poly))


def cokernel_via_lee(x: RingMatrix, poly: PolySpec) -> ModuleType:
    """
    cok(P(X)) with its R-module structure, computed as cok_R(X - t I).

    Raises:
        PrecisionSaturated: propagated from cokernel_type.
    """
    return cokernel_type(lee_matrix(x, poly))


def underlying_group(g: ModuleType) -> ModuleType:
    """Each R/p^e is (Z/p^e)^d as a group, d the residue degree."""
    d = g.residue_degree
    return ModuleType(tuple((e, r * d) for e, r in g.parts), 1)


def cokernel_group_side(x: RingMatrix, poly: PolySpec) -> ModuleType:
    """cok(P(X)) as an abelian p-group."""
    return cokernel_type(poly_eval(poly, x))

