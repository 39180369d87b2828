"""
Existential projection of polyhedra and regions

Eliminating coordinate ``index`` moves it to the last position and drops it
from the PPL polyhedron, which projects along it; the result has one
coordinate fewer.
"""

from ..utils.exceptions import GeometryException
from ..utils.logging import get_logger
from .double_description import from_ppl, to_ppl
from .linear import Polyhedron, Region
from .lp import includes

logger = get_logger(__name__)


def eliminate_polyhedron(polyhedron: Polyhedron, index: int) -> Polyhedron:
    """Projection of a polyhedron along coordinate ``index``"""
    dimension = polyhedron.dimension
    if not 0 <= index < dimension:
        raise GeometryException(f"variable index {index} out of range for dimension {dimension}")
    if polyhedron.is_trivially_empty:
        return Polyhedron.empty(dimension - 1)

    order = [k for k in range(dimension) if k != index] + [index]
    projected = to_ppl(polyhedron.permuted(order))
    projected.remove_higher_space_dimensions(dimension - 1)
    return from_ppl(projected, dimension - 1)


def simplify(region: Region) -> Region:
    """Drop empty disjuncts and disjuncts contained in another one"""
    pieces = [p for p in region.disjuncts if not p.is_empty()]
    kept: list[Polyhedron] = []
    for k, piece in enumerate(pieces):
        later = pieces[k + 1:]
        if any(includes(other, piece) for other in kept) or any(includes(other, piece) for other in later):
            continue
        kept.append(piece)
    return Region(region.dimension, tuple(kept))


def eliminate(region: Region, index: int) -> Region:
    """Projection of every disjunct along coordinate ``index``"""
    if not 0 <= index < region.dimension:
        raise GeometryException(f"variable index {index} out of range for dimension {region.dimension}")
    projected = region.map(lambda p: eliminate_polyhedron(p, index), region.dimension - 1)
    result = simplify(projected)
    logger.debug(f"eliminated x{index + 1}: {len(region)} -> {len(result)} disjuncts")
    return result
