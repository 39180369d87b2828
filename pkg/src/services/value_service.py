"""
Vector sets, projections along expression trees, value sets and lasso evaluation
"""

from fractions import Fraction
from typing import Optional, Sequence

from ..geometry.fmin import fmin_region
from ..geometry.fourier_motzkin import eliminate_polyhedron, simplify
from ..geometry.linear import LinearConstraint, Polyhedron, Region, le
from ..geometry.lp import Direction, optimize
from ..models.automaton import DetMPAutomaton, LassoWord, Semantics
from ..models.expression import ExpressionAst, ExpressionNode, NodeOp
from ..models.product import CycleValueSet, ProductAutomaton, Scc
from ..models.spec import ValidatedSpec
from ..models.values import Interval, IntervalUnion, SccPolyhedron, VectorSet
from ..utils.config import Settings, get_settings
from ..utils.exceptions import GeometryException, ValidationException
from ..utils.logging import get_logger
from .automaton_analysis import AutomatonAnalysisService

logger = get_logger(__name__)


class CycleAnalysis:
    """Normalized product of a leaf list with its SCCs and cycle values"""

    def __init__(self, leaves: Sequence[DetMPAutomaton], product: ProductAutomaton,
                 sccs: list[Scc], cycle_values: dict[int, CycleValueSet]):
        self.leaves = tuple(leaves)
        self.product = product
        self.sccs = sccs
        self.cycle_values = cycle_values
        self.flip_mask = frozenset(k for k, a in enumerate(leaves) if a.semantics is Semantics.LIMSUP)

    def raw(self, point: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Undo the LimSup negation on a normalized vector"""
        return tuple(-v if k in self.flip_mask else v for k, v in enumerate(point))


def _sum_substitution(constraint: LinearConstraint, i: int, j: int) -> LinearConstraint:
    coefficients = list(constraint.coefficients)
    coefficients[j] = coefficients[j] - coefficients[i]
    return LinearConstraint(tuple(coefficients), constraint.relation, constraint.bound)


class ValueService:
    """Service computing vector sets and value sets of expressions"""

    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings
        self.analysis = AutomatonAnalysisService(settings)

    @property
    def settings(self) -> Settings:
        return self._settings or get_settings()

    # Vector sets
    def cycle_analysis(self, leaves: Sequence[DetMPAutomaton]) -> CycleAnalysis:
        """LimSup leaves are replaced by their negated LimInf counterparts before the product"""
        normalized = [leaf.as_liminf() for leaf in leaves]
        product = self.analysis.product_of(normalized)
        sccs = self.analysis.reachable_sccs(product)
        cycle_values = {
            scc.id: self.analysis.simple_cycle_values(product, scc) for scc in sccs if scc.has_cycle
        }
        return CycleAnalysis(leaves, product, sccs, cycle_values)

    def vector_set_of_leaves(self, leaves: Sequence[DetMPAutomaton]) -> VectorSet:
        analysis = self.cycle_analysis(leaves)
        per_scc = []
        for scc_id, values in analysis.cycle_values.items():
            polyhedron = fmin_region(values.points).negate_coordinates(analysis.flip_mask)
            per_scc.append(SccPolyhedron(scc=scc_id, polyhedron=polyhedron))
        return VectorSet(
            leaf_ids=tuple(a.id for a in leaves), per_scc=tuple(per_scc), flip_mask=analysis.flip_mask
        )

    def vector_set_of(self, expression: ExpressionAst) -> VectorSet:
        return self.vector_set_of_leaves(expression.leaves)

    def vector_set(self, spec: ValidatedSpec, expr_name: str) -> VectorSet:
        """V_E as the union over reachable cycle-bearing SCCs of F_min(conv(S_C))"""
        return self.vector_set_of(spec.expression(expr_name))

    # Projections
    def apply_projection(self, region: Region, op: NodeOp, i: int, j: int) -> Region:
        """Image of the region under x_i := op(x_i, x_j) followed by dropping x_j"""
        if not 0 <= i < j < region.dimension:
            raise GeometryException(f"projection indices ({i}, {j}) out of range for dimension {region.dimension}")
        if op is NodeOp.LEAF:
            raise GeometryException("a leaf is not a projection")

        pieces: list[Polyhedron] = []
        for polyhedron in region.disjuncts:
            pieces.extend(self._project(polyhedron, op, i, j))
        result = simplify(Region(region.dimension - 1, tuple(pieces)))
        logger.debug(f"{op.value}-projection ({i + 1}, {j + 1}): {len(region)} -> {len(result)} disjuncts")
        return result

    def _project(self, polyhedron: Polyhedron, op: NodeOp, i: int, j: int) -> list[Polyhedron]:
        dimension = polyhedron.dimension
        if op is NodeOp.SUM:
            # substitute x_i = s - x_j, keep s in coordinate i
            substituted = Polyhedron.from_constraints(
                dimension, (_sum_substitution(c, i, j) for c in polyhedron.constraints)
            )
            return [eliminate_polyhedron(substituted, j)]

        order = [Fraction(0)] * dimension
        if op is NodeOp.MAX:
            order[j], order[i] = Fraction(1), Fraction(-1)
        else:
            order[i], order[j] = Fraction(1), Fraction(-1)
        keep_i = le(order, 0)
        return [
            eliminate_polyhedron(polyhedron.with_constraints([keep_i]), j),
            eliminate_polyhedron(polyhedron.swap_coordinates(i, j).with_constraints([keep_i]), j),
        ]

    def fold(self, expression: ExpressionAst, polyhedron: Polyhedron) -> Region:
        """Fold projections along the tree in post-order down to one coordinate"""
        leaf_index = {leaf_id: k for k, leaf_id in enumerate(expression.leaf_ids)}
        mapping = [leaf_index[a.id] for a in expression.root.occurrences()]
        region = Region.of(polyhedron.embed(mapping))
        return self._fold_node(expression.root, region, 0)

    def _fold_node(self, node: ExpressionNode, region: Region, offset: int) -> Region:
        if node.is_leaf:
            return region
        left, right = node.children
        region = self._fold_node(left, region, offset)
        region = self._fold_node(right, region, offset + 1)
        return self.apply_projection(region, node.op, offset, offset + 1)

    # Value sets
    def scc_intervals(self, expression: ExpressionAst) -> list[tuple[int, Interval]]:
        """Per-SCC value interval [m_C, M_C]"""
        vector_set = self.vector_set_of(expression)
        intervals = []
        for entry in vector_set.per_scc:
            region = self.fold(expression, entry.polyhedron)
            pieces = []
            for piece in region.disjuncts:
                lo = optimize(piece, [1], Direction.MIN)
                hi = optimize(piece, [1], Direction.MAX)
                if not lo.is_optimal or not hi.is_optimal:
                    raise GeometryException(f"value region of SCC {entry.scc} is not bounded")
                pieces.append(Interval(lo=lo.value, hi=hi.value))
            if not pieces:
                continue
            if self.settings.debug:
                assert len(IntervalUnion.of(pieces).intervals) == 1, f"SCC {entry.scc} value pieces do not abut"
            intervals.append(
                (entry.scc, Interval(lo=min(p.lo for p in pieces), hi=max(p.hi for p in pieces)))
            )
        logger.info(f"Value intervals of '{expression.name}': " + ", ".join(f"{k}: {i}" for k, i in intervals))
        return intervals

    def value_set_of(self, expression: ExpressionAst) -> IntervalUnion:
        result = IntervalUnion.of(interval for _, interval in self.scc_intervals(expression))
        if self.settings.debug:
            bound = expression.dimension * max(a.max_abs_weight for a in expression.leaves) * 2 ** expression.sum_op_count
            assert result.max_abs() <= bound, f"value set {result} exceeds the weight bound {bound}"
        return result

    def value_set(self, spec: ValidatedSpec, expr_name: str) -> IntervalUnion:
        """Scalar value set of a named expression as a union of closed intervals"""
        return self.value_set_of(spec.expression(expr_name))

    # Lasso words
    def leaf_value(self, automaton: DetMPAutomaton, word: LassoWord) -> Fraction:
        """Mean payoff of one automaton on a lasso word (LimInf and LimSup coincide)"""
        state = automaton.initial
        for letter in word.prefix:
            state = automaton.step(state, letter).target

        starts: dict[str, int] = {}
        totals: list[Fraction] = []
        while state not in starts:
            starts[state] = len(totals)
            total = Fraction(0)
            for letter in word.cycle:
                transition = automaton.step(state, letter)
                total += transition.weight
                state = transition.target
            totals.append(total)
        loop = totals[starts[state]:]
        return sum(loop, Fraction(0)) / (len(loop) * len(word.cycle))

    def evaluate_lasso_of(self, expression: ExpressionAst, word: LassoWord) -> Fraction:
        alphabet = set(expression.alphabet)
        unknown = sorted(word.letters() - alphabet)
        if unknown:
            raise ValidationException(f"unknown letter '{unknown[0]}' in lasso word", letter=unknown[0])
        values = {leaf.id: self.leaf_value(leaf, word) for leaf in expression.leaves}
        return expression.evaluate(values)

    def evaluate_lasso(self, spec: ValidatedSpec, expr_name: str, word: LassoWord) -> Fraction:
        """Exact value of the expression on prefix . cycle^omega"""
        return self.evaluate_lasso_of(spec.expression(expr_name), word)


# Global service instance
value_service = ValueService()


def get_value_service() -> ValueService:
    """Get value service instance"""
    return value_service
