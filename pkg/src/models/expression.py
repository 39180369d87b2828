"""
Expression trees over deterministic mean-payoff automata
"""

from enum import Enum
from fractions import Fraction
from typing import Callable, Mapping, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from ..utils.exceptions import ValidationException
from .automaton import NEG_SUFFIX, DetMPAutomaton
from .rational import format_rational


class NodeOp(str, Enum):
    """Label of an expression tree node"""
    LEAF = "leaf"
    MAX = "max"
    MIN = "min"
    SUM = "sum"


class ExpressionNode(BaseModel):
    """A max/min/sum tree whose leaves are automata"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    op: NodeOp
    automaton: Optional[DetMPAutomaton] = None
    children: tuple["ExpressionNode", ...] = ()

    @model_validator(mode="after")
    def _check_shape(self) -> "ExpressionNode":
        if self.op is NodeOp.LEAF:
            if self.automaton is None or self.children:
                raise ValueError("a leaf carries exactly one automaton and no children")
        elif len(self.children) != 2 or self.automaton is not None:
            raise ValueError(f"{self.op.value} node needs exactly two children")
        return self

    @classmethod
    def leaf(cls, automaton: DetMPAutomaton) -> "ExpressionNode":
        return cls(op=NodeOp.LEAF, automaton=automaton)

    @classmethod
    def binary(cls, op: NodeOp, left: "ExpressionNode", right: "ExpressionNode") -> "ExpressionNode":
        return cls(op=op, children=(left, right))

    @property
    def is_leaf(self) -> bool:
        return self.op is NodeOp.LEAF

    def occurrences(self) -> list[DetMPAutomaton]:
        """Leaf automata in left-to-right order, repetitions included"""
        if self.is_leaf:
            return [self.automaton]
        return [a for child in self.children for a in child.occurrences()]

    def count(self, op: NodeOp) -> int:
        own = 1 if self.op is op else 0
        return own + sum(child.count(op) for child in self.children)

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        """Fold leaf values (keyed by automaton id) up the tree"""
        if self.is_leaf:
            return values[self.automaton.id]
        left, right = (child.evaluate(values) for child in self.children)
        if self.op is NodeOp.MAX:
            return max(left, right)
        if self.op is NodeOp.MIN:
            return min(left, right)
        return left + right

    def map_leaves(self, func: Callable[[DetMPAutomaton], DetMPAutomaton],
                   swap_extrema: bool = False) -> "ExpressionNode":
        if self.is_leaf:
            return ExpressionNode.leaf(func(self.automaton))
        op = self.op
        if swap_extrema and op is not NodeOp.SUM:
            op = NodeOp.MIN if op is NodeOp.MAX else NodeOp.MAX
        left, right = (child.map_leaves(func, swap_extrema) for child in self.children)
        return ExpressionNode.binary(op, left, right)

    def __str__(self) -> str:
        if self.is_leaf:
            return self.automaton.id
        left, right = self.children
        return f"{self.op.value}({left}, {right})"


class ExpressionAst(BaseModel):
    """A named expression; leaf coordinates follow first occurrence order"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    root: ExpressionNode

    @property
    def leaves(self) -> tuple[DetMPAutomaton, ...]:
        """Distinct leaf automata; coordinate i of the vector set is leaves[i]"""
        seen: dict[str, DetMPAutomaton] = {}
        for automaton in self.root.occurrences():
            known = seen.setdefault(automaton.id, automaton)
            if known != automaton:
                raise ValidationException(
                    f"automaton id '{automaton.id}' denotes two different automata",
                    automaton=automaton.id,
                )
        return tuple(seen.values())

    @property
    def leaf_ids(self) -> tuple[str, ...]:
        return tuple(a.id for a in self.leaves)

    @property
    def dimension(self) -> int:
        return len(self.leaves)

    @property
    def sum_op_count(self) -> int:
        return self.root.count(NodeOp.SUM)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return tuple(sorted(self.leaves[0].alphabet))

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        return self.root.evaluate(values)

    def __str__(self) -> str:
        return str(self.root)


def _toggle_neg(name: str) -> str:
    if name.endswith(NEG_SUFFIX):
        return name[: -len(NEG_SUFFIX)]
    return name + NEG_SUFFIX


def complement_expression(expression: ExpressionAst) -> ExpressionAst:
    """Expression for the negated language.

    max and min swap, sum is kept, and every leaf becomes the automaton with
    opposite weights and flipped semantics.
    """
    return ExpressionAst(
        name=_toggle_neg(expression.name),
        root=expression.root.map_leaves(DetMPAutomaton.negated, swap_extrema=True),
    )


def scale_expression(factor: Fraction, expression: ExpressionAst) -> ExpressionAst:
    """Multiply every word value by a nonzero rational factor"""
    factor = Fraction(factor)
    if factor == 0:
        raise ValidationException("scaling factor must be nonzero")
    if factor < 0:
        return scale_expression(-factor, complement_expression(expression))
    if factor == 1:
        return expression
    return ExpressionAst(
        name=f"{expression.name}#scale({format_rational(factor)})",
        root=expression.root.map_leaves(lambda a: a.scaled(factor)),
    )
