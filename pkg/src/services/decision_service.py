"""
Decision procedures: thresholds, inclusion, distance, cut-points and multi-threshold queries
"""

from fractions import Fraction
from typing import Optional

from ..geometry.linear import LinearConstraint, Polyhedron, Relation
from ..geometry.lp import find_point
from ..models.automaton import LassoWord, PayoffAutomaton, Semantics
from ..models.expression import ExpressionAst, ExpressionNode, NodeOp, complement_expression
from ..models.queries import (
    BuchiAutomaton,
    BuchiEdge,
    CompareKind,
    CutpointResult,
    MultiThresholdQuery,
    QueryAtom,
    QueryRelation,
    QueryResult,
    ThresholdKind,
    ThresholdQuery,
    ThresholdResult,
    WitnessResult,
)
from ..models.spec import ValidatedSpec
from ..models.values import IntervalUnion
from ..utils.config import Settings, get_settings
from ..utils.exceptions import QueryException, ValidationException
from ..utils.logging import get_logger
from .value_service import ValueService
from .witness_service import WitnessService

logger = get_logger(__name__)


def state_name(state: tuple[str, ...]) -> str:
    return f"({','.join(state)})"


def difference_expression(lhs: ExpressionAst, rhs: ExpressionAst) -> ExpressionAst:
    """rhs - lhs as sum(rhs, complement(lhs)) over the joint leaves"""
    if set(lhs.alphabet) != set(rhs.alphabet):
        raise ValidationException(f"alphabet mismatch between '{lhs.name}' and '{rhs.name}'")
    return ExpressionAst(
        name=f"{rhs.name}-{lhs.name}",
        root=ExpressionNode.binary(NodeOp.SUM, rhs.root, complement_expression(lhs).root),
    )


def atom_constraint(atom: QueryAtom, dimension: int) -> LinearConstraint:
    """Linear constraint over the 2d coordinates (inf_1..inf_d, sup_1..sup_d)"""
    coefficients = [Fraction(0)] * (2 * dimension)
    for coefficient, variable in atom.terms:
        if variable.index > dimension:
            raise QueryException(f"variable {variable} out of range for a {dimension}-dimensional payoff")
        coefficients[variable.position(dimension)] += coefficient
    bound = atom.bound
    if atom.relation in (QueryRelation.GE, QueryRelation.GT):
        coefficients = [-c for c in coefficients]
        bound = -bound
    relation = Relation.LE if atom.relation in (QueryRelation.LE, QueryRelation.GE) else Relation.LT
    return LinearConstraint(tuple(coefficients), relation, bound)


class DecisionService:
    """Service answering end-user analysis questions"""

    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings
        self.values = ValueService(settings)
        self.witnesses = WitnessService(settings)

    @property
    def settings(self) -> Settings:
        return self._settings or get_settings()

    # Thresholds
    def threshold_of(self, expression: ExpressionAst, query: ThresholdQuery) -> ThresholdResult:
        intervals = self.values.scc_intervals(expression)
        if query.kind is ThresholdKind.EMPTINESS:
            scc, interval = max(intervals, key=lambda item: (item[1].hi, -item[0]))
            result = interval.hi >= query.nu
            return ThresholdResult(result=result, scc=scc if result else None)
        scc, interval = min(intervals, key=lambda item: (item[1].lo, item[0]))
        result = interval.lo >= query.nu
        return ThresholdResult(result=result, scc=None if result else scc)

    def threshold_decision(self, spec: ValidatedSpec, expr_name: str, query: ThresholdQuery) -> ThresholdResult:
        """Emptiness: some word reaches nu. Universality: every word reaches nu."""
        result = self.threshold_of(spec.expression(expr_name), query)
        logger.info(f"{query.kind.value} of '{expr_name}' at {query.nu}: {result.result}")
        return result

    # Inclusion, equivalence and distance
    def includes(self, lhs: ExpressionAst, rhs: ExpressionAst) -> bool:
        """L_lhs <= L_rhs on every word"""
        difference = difference_expression(lhs, rhs)
        query = ThresholdQuery(kind=ThresholdKind.UNIVERSALITY, nu=Fraction(0))
        return self.threshold_of(difference, query).result

    def compare(self, spec: ValidatedSpec, lhs_name: str, rhs_name: str, kind: CompareKind) -> bool:
        lhs, rhs = spec.expression(lhs_name), spec.expression(rhs_name)
        result = self.includes(lhs, rhs)
        if kind is CompareKind.EQUIVALENCE:
            result = result and self.includes(rhs, lhs)
        logger.info(f"{kind.value} of '{lhs_name}' in '{rhs_name}': {result}")
        return result

    def distance_of(self, lhs: ExpressionAst, rhs: ExpressionAst) -> Fraction:
        return self.values.value_set_of(difference_expression(lhs, rhs)).max_abs()

    def distance(self, spec: ValidatedSpec, lhs_name: str, rhs_name: str) -> Fraction:
        """sup over words of |lhs(w) - rhs(w)|, exact"""
        return self.distance_of(spec.expression(lhs_name), spec.expression(rhs_name))

    # Cut-points
    def cutpoint_of(self, expression: ExpressionAst, eta: Fraction) -> CutpointResult:
        value_set: IntervalUnion = self.values.value_set_of(expression)
        if value_set.contains(eta):
            return CutpointResult(isolated=False)
        return CutpointResult(isolated=True, gap=value_set.distance_to(eta))

    def cutpoint(self, spec: ValidatedSpec, expr_name: str, eta: Fraction) -> CutpointResult:
        return self.cutpoint_of(spec.expression(expr_name), eta)

    def emit_buchi_of(self, expression: ExpressionAst, eta: Fraction) -> BuchiAutomaton:
        intervals = self.values.scc_intervals(expression)
        if any(interval.contains(eta) for _, interval in intervals):
            raise QueryException(f"eta is not isolated: {eta} lies in the value set")

        analysis = self.values.cycle_analysis(expression.leaves)
        product = analysis.product
        winning = {scc for scc, interval in intervals if interval.lo > eta}
        scc_of = {state: scc.id for scc in analysis.sccs for state in scc.states}

        states = sorted(product.states)
        edges = [
            BuchiEdge(source=state_name(s), letter=letter, target=state_name(product.step(s, letter).target))
            for s in states
            for letter in product.alphabet
        ]
        accepting = [state_name(s) for s in states if scc_of[s] in winning]
        buchi = BuchiAutomaton(
            states=tuple(state_name(s) for s in states),
            initial=state_name(product.initial),
            alphabet=product.alphabet,
            edges=tuple(edges),
            accepting=tuple(accepting),
            scc_of={state_name(s): scc_of[s] for s in states},
        )
        logger.info(f"Buchi automaton: {len(states)} states, {len(accepting)} accepting")
        return buchi

    def emit_buchi(self, spec: ValidatedSpec, expr_name: str, eta: Fraction) -> BuchiAutomaton:
        """Deterministic Buchi automaton for the words valued at least eta"""
        return self.emit_buchi_of(spec.expression(expr_name), eta)

    def buchi_accepts(self, buchi: BuchiAutomaton, word: LassoWord) -> bool:
        return buchi.accepts(word)

    # Multi-threshold queries
    def mt_query(self, payoff: PayoffAutomaton, query: MultiThresholdQuery) -> QueryResult:
        """Intersect the vector set of inf/sup copies of the payoff with the query region"""
        dimension = payoff.dimension
        for variable in query.variables:
            if variable.index > dimension:
                raise QueryException(f"variable {variable} out of range for a {dimension}-dimensional payoff")

        leaves = [payoff.component(i, Semantics.LIMINF) for i in range(dimension)]
        leaves += [payoff.component(i, Semantics.LIMSUP) for i in range(dimension)]
        vector_set = self.values.vector_set_of_leaves(leaves)

        cells = [
            Polyhedron.from_constraints(2 * dimension, (atom_constraint(a, dimension) for a in conjunction))
            for conjunction in query.disjuncts
        ]
        for entry in vector_set.per_scc:
            for cell in cells:
                point = find_point(entry.polyhedron.intersect(cell))
                if point is not None:
                    logger.info(f"query satisfied in SCC {entry.scc}")
                    return QueryResult(satisfiable=True, scc=entry.scc, point=point)
        return QueryResult(satisfiable=False)

    # Witnesses
    def witness_lasso(self, spec: ValidatedSpec, expr_name: str, nu: Fraction, eps: Fraction) -> WitnessResult:
        return self.witnesses.witness_lasso(spec, expr_name, nu, eps)


# Global service instance
decision_service = DecisionService()


def get_decision_service() -> DecisionService:
    """Get decision service instance"""
    return decision_service
