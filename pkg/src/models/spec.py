"""
Input file models: parsed syntax and validated specification
"""

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from ..utils.exceptions import ValidationException
from .automaton import DetMPAutomaton, PayoffAutomaton, PayoffTransition, Semantics, Transition
from .expression import ExpressionAst


# Syntax Models
class AutomatonBlock(BaseModel):
    """An ``automaton`` block as written in the input file"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    semantics: Semantics
    alphabet: tuple[str, ...]
    initial: str
    transitions: tuple[Transition, ...]
    line: Optional[int] = None


class PayoffBlock(BaseModel):
    """A ``payoff`` block with a weight vector on every transition"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    alphabet: tuple[str, ...]
    initial: str
    transitions: tuple[PayoffTransition, ...]
    line: Optional[int] = None


class ExprSyntax(BaseModel):
    """Expression tree before name resolution and rewriting"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: str = Field(..., pattern=r"^(ref|max|min|sum|neg|scale)$")
    name: Optional[str] = None
    factor: Optional[Fraction] = None
    args: tuple["ExprSyntax", ...] = ()
    line: Optional[int] = None
    column: Optional[int] = None


class ExpressionDef(BaseModel):
    """An ``expression <name> = <tree>;`` definition"""
    model_config = ConfigDict(frozen=True)

    name: str
    tree: ExprSyntax
    line: Optional[int] = None


class SpecFile(BaseModel):
    """Abstract syntax of a whole input file"""
    model_config = ConfigDict(frozen=True)

    automata: tuple[AutomatonBlock, ...] = ()
    payoffs: tuple[PayoffBlock, ...] = ()
    expressions: tuple[ExpressionDef, ...] = ()


# Validated Models
class ValidatedSpec(BaseModel):
    """A specification that passed totality, determinism and alphabet checks"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    automata: dict[str, DetMPAutomaton] = Field(default_factory=dict)
    payoffs: dict[str, PayoffAutomaton] = Field(default_factory=dict)
    expressions: dict[str, ExpressionAst] = Field(default_factory=dict)

    @property
    def sum_op_counts(self) -> dict[str, int]:
        """Number of sum nodes per expression"""
        return {name: expr.sum_op_count for name, expr in self.expressions.items()}

    def expression(self, name: str) -> ExpressionAst:
        try:
            return self.expressions[name]
        except KeyError:
            known = ", ".join(sorted(self.expressions)) or "none"
            raise ValidationException(f"unknown expression '{name}' (defined: {known})")

    def payoff(self, name: Optional[str] = None) -> PayoffAutomaton:
        """Payoff automaton by id; the only one when no id is given"""
        if name is None:
            if len(self.payoffs) != 1:
                raise ValidationException(
                    f"expected exactly one payoff automaton, found {len(self.payoffs)}"
                )
            return next(iter(self.payoffs.values()))
        try:
            return self.payoffs[name]
        except KeyError:
            raise ValidationException(f"unknown payoff automaton '{name}'", automaton=name)
