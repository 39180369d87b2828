"""
Construction of lasso words whose value approaches a target threshold
"""

from fractions import Fraction
from itertools import product as cartesian
from math import ceil, floor
from typing import Optional, Sequence

from ..geometry.linear import LinearConstraint, Relation
from ..geometry.lp import solve
from ..models.automaton import LassoWord
from ..models.expression import ExpressionAst, ExpressionNode, NodeOp
from ..models.product import SimpleCycle
from ..models.queries import WitnessResult
from ..models.spec import ValidatedSpec
from ..utils.config import Settings, get_settings
from ..utils.exceptions import QueryException, ResourceBudgetException, ValidationException
from ..utils.logging import get_logger
from .value_service import CycleAnalysis, ValueService

logger = get_logger(__name__)

_ZERO = Fraction(0)


def primitive_root(letters: Sequence[str]) -> tuple[str, ...]:
    """Shortest u with letters = u^k"""
    size = len(letters)
    for period in range(1, size + 1):
        if size % period == 0 and tuple(letters) == tuple(letters[:period]) * (size // period):
            return tuple(letters[:period])
    return tuple(letters)


class _Objective:
    """Linear programs maximizing a monotone expression over convex combinations of cycle means"""

    def __init__(self, expression: ExpressionAst, points: Sequence[tuple[Fraction, ...]]):
        self.points = points
        self.coordinate = {leaf_id: k for k, leaf_id in enumerate(expression.leaf_ids)}
        self.root = expression.root
        self.min_slots: dict[int, int] = {}
        self._number(self.root)
        self.width = len(points) + len(self.min_slots)

    def _number(self, node: ExpressionNode) -> None:
        if node.op is NodeOp.MIN:
            self.min_slots[id(node)] = len(self.points) + len(self.min_slots)
        for child in node.children:
            self._number(child)

    def _alternatives(self, node: ExpressionNode) -> list[tuple[list[Fraction], list[LinearConstraint]]]:
        if node.is_leaf:
            k = self.coordinate[node.automaton.id]
            form = [p[k] for p in self.points] + [_ZERO] * len(self.min_slots)
            return [(form, [])]
        left, right = (self._alternatives(child) for child in node.children)
        if node.op is NodeOp.MAX:
            return left + right
        combined = []
        for (lf, lc), (rf, rc) in cartesian(left, right):
            if node.op is NodeOp.SUM:
                combined.append(([a + b for a, b in zip(lf, rf)], lc + rc))
                continue
            slot = self.min_slots[id(node)]
            bounds = []
            for form in (lf, rf):
                coefficients = [-a for a in form]
                coefficients[slot] += 1
                bounds.append(LinearConstraint(tuple(coefficients), Relation.LE, _ZERO))
            form = [_ZERO] * self.width
            form[slot] = Fraction(1)
            combined.append((form, lc + rc + bounds))
        return combined

    def maximize(self) -> tuple[Fraction, tuple[Fraction, ...]]:
        """Best value and the convex weights attaining it"""
        count = len(self.points)
        simplex = [LinearConstraint(tuple([Fraction(1)] * count + [_ZERO] * len(self.min_slots)), Relation.EQ,
                                    Fraction(1))]
        for k in range(count):
            coefficients = [_ZERO] * self.width
            coefficients[k] = Fraction(-1)
            simplex.append(LinearConstraint(tuple(coefficients), Relation.LE, _ZERO))

        best: Optional[tuple[Fraction, tuple[Fraction, ...]]] = None
        for form, constraints in self._alternatives(self.root):
            result = solve(self.width, simplex + constraints, form)
            if result.is_optimal and (best is None or result.value > best[0]):
                best = (result.value, result.point[:count])
        return best


class WitnessService:
    """Service producing epsilon-witness lasso words"""

    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings
        self.values = ValueService(settings)

    @property
    def settings(self) -> Settings:
        return self._settings or get_settings()

    def lasso_supremum(self, expression: ExpressionAst, analysis: CycleAnalysis,
                       scc_id: int) -> tuple[Fraction, list[tuple[SimpleCycle, Fraction]]]:
        """Supremum of lasso values inside one SCC and the cycle mixture attaining it"""
        representatives: dict[tuple[Fraction, ...], SimpleCycle] = {}
        for cycle in analysis.cycle_values[scc_id].cycles:
            representatives.setdefault(analysis.raw(cycle.mean), cycle)
        points = list(representatives)
        value, weights = _Objective(expression, points).maximize()
        mixture = [(representatives[p], w) for p, w in zip(points, weights) if w > 0]
        return value, mixture

    def build_lasso(self, analysis: CycleAnalysis, scc_id: int,
                    mixture: list[tuple[SimpleCycle, Fraction]], n: int) -> Optional[LassoWord]:
        """Lasso looping through each cycle floor(n * weight / length) times"""
        counts = [(cycle, floor(n * weight / len(cycle.letters))) for cycle, weight in mixture]
        counts = [(cycle, count) for cycle, count in counts if count > 0]
        if not counts:
            return None

        product = analysis.product
        scc_states = next(s.states for s in analysis.sccs if s.id == scc_id)
        anchor = counts[0][0].states[0]
        prefix = self.values.analysis.shortest_path(product, product.initial, anchor)

        loop: list[str] = []
        current = anchor
        for cycle, count in counts:
            loop += self.values.analysis.shortest_path(product, current, cycle.states[0], scc_states)
            loop += list(cycle.letters) * count
            current = cycle.states[0]
        loop += self.values.analysis.shortest_path(product, current, anchor, scc_states)
        return LassoWord(prefix=tuple(prefix), cycle=primitive_root(loop))

    def witness_of(self, expression: ExpressionAst, nu: Fraction, eps: Fraction) -> WitnessResult:
        if eps <= 0:
            raise ValidationException("eps must be positive")
        target = nu - eps

        intervals = self.values.scc_intervals(expression)
        best = max((interval.hi for _, interval in intervals), default=None)
        if best is None or best < nu:
            raise QueryException(f"no witness exists: no word reaches {nu}")

        analysis = self.values.cycle_analysis(expression.leaves)
        candidates = []
        for scc_id, interval in intervals:
            if interval.hi < nu:
                continue
            supremum, mixture = self.lasso_supremum(expression, analysis, scc_id)
            logger.info(f"SCC {scc_id}: lasso supremum {supremum}, value interval {interval}")
            if supremum >= target:
                candidates.append((supremum, scc_id, mixture))
        if not candidates:
            raise QueryException(
                f"no lasso witness reaches {target}: the supremum needs a word that is not ultimately periodic"
            )
        candidates.sort(key=lambda c: (-c[0], c[1]))

        rounds = self.settings.witness_max_rounds
        for supremum, scc_id, mixture in candidates:
            n = max(ceil(len(cycle.letters) / weight) for cycle, weight in mixture)
            for _ in range(rounds):
                word = self.build_lasso(analysis, scc_id, mixture, n)
                if word is not None:
                    value = self.values.evaluate_lasso_of(expression, word)
                    logger.debug(f"N = {n}: {word} has value {value}")
                    if value >= target:
                        return WitnessResult(word=word, value=value, scc=scc_id)
                n *= 2
        raise ResourceBudgetException(f"no witness found within {rounds} rounds", budget=rounds)

    def witness_lasso(self, spec: ValidatedSpec, expr_name: str, nu: Fraction, eps: Fraction) -> WitnessResult:
        """Lasso word w with value(w) >= nu - eps, provided some word reaches nu"""
        return self.witness_of(spec.expression(expr_name), nu, eps)


# Global service instance
witness_service = WitnessService()


def get_witness_service() -> WitnessService:
    """Get witness service instance"""
    return witness_service
