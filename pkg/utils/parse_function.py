import json
from typing import List, Optional, Sequence

from errors import DomainError, StructuralError
from matrix_ops import RingMatrix
from module_theory import ModuleType
from ring_core import PolySpec, RingDescriptor


def parse_ring(p: int, k: int, poly_text: Optional[str] = None) -> RingDescriptor:
    """Z/p^k, or (Z/p^k)[t]/(P) when a polynomial literal is given."""
    extension = PolySpec.parse(poly_text, p) if poly_text else None
    return RingDescriptor.of(p, k, extension)


def _parse_entry(ring: RingDescriptor, value):
    if isinstance(value, str):
        return ring.parse_element(value)
    if isinstance(value, list):
        return ring.element([int(c) for c in value])
    return ring.from_int(int(value))


def parse_matrix(text: str, ring: RingDescriptor) -> RingMatrix:
    """
    Parse a matrix literal.

    Args:
        text (str): "0,1;1,1" (rows by ';', entries by ',', entries in the "c0+c1*t" form)
            or a JSON array of arrays whose entries are integers, digit lists or strings.
        ring (RingDescriptor): ring of the entries.

    Returns:
        RingMatrix: the parsed matrix.
    """
    text = text.strip()
    if not text:
        raise DomainError("empty matrix literal")
    try:
        if text.startswith("["):
            rows = json.loads(text)
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise DomainError(f"matrix JSON must be an array of arrays, got {text!r}")
        else:
            rows = [[cell.strip() for cell in row.split(",")] for row in text.split(";") if row.strip()]
        return RingMatrix.from_rows(ring, [[_parse_entry(ring, v) for v in row] for row in rows])
    except (json.JSONDecodeError, ValueError) as e:
        if isinstance(e, (DomainError, StructuralError)):
            raise
        raise DomainError(f"bad matrix literal {text!r}: {e}") from e


def parse_polys(texts: Sequence[str], p: int) -> List[PolySpec]:
    if not texts:
        raise DomainError("at least one --poly is required")
    return [PolySpec.parse(text, p) for text in texts]


def parse_targets(texts: Sequence[str], polys: Sequence[PolySpec]) -> List[ModuleType]:
    if len(texts) != len(polys):
        raise StructuralError(f"{len(polys)} polynomials but {len(texts)} targets")
    return [ModuleType.parse(text, poly.degree) for text, poly in zip(texts, polys)]
