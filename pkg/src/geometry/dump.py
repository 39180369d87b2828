"""
Text dump of polyhedra: one constraint per line, ``a1 ... aD rel b``
"""

from ..models.rational import format_rational, parse_rational
from ..utils.exceptions import ParseException
from .linear import LinearConstraint, Polyhedron, Relation


def dump_constraint(constraint: LinearConstraint) -> str:
    coefficients = " ".join(format_rational(a) for a in constraint.coefficients)
    return f"{coefficients} {constraint.relation.value} {format_rational(constraint.bound)}".strip()


def dump_polyhedron(polyhedron: Polyhedron) -> str:
    return "\n".join(dump_constraint(c) for c in polyhedron.constraints)


def load_polyhedron(text: str, dimension: int) -> Polyhedron:
    """Inverse of dump_polyhedron, used for golden files"""
    relations = {r.value: r for r in Relation}
    constraints = []
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) != dimension + 2 or tokens[-2] not in relations:
            raise ParseException(f"malformed constraint '{line}'", number, 1)
        constraints.append(
            LinearConstraint(
                tuple(parse_rational(t) for t in tokens[:dimension]),
                relations[tokens[-2]],
                parse_rational(tokens[-1]),
            )
        )
    return Polyhedron(dimension, tuple(constraints))
