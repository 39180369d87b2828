"""
Automaton models for the mean-payoff expression analyzer
"""

from enum import Enum
from fractions import Fraction
from typing import Callable, Optional

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from .rational import format_rational

NEG_SUFFIX = "#neg"


class Semantics(str, Enum):
    """Limit-average flavour of a deterministic automaton"""
    LIMINF = "liminf"
    LIMSUP = "limsup"

    def flipped(self) -> "Semantics":
        return Semantics.LIMSUP if self is Semantics.LIMINF else Semantics.LIMINF


class Transition(BaseModel):
    """A weighted transition (source, letter) -> target"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: str
    letter: str
    target: str
    weight: Fraction


class DetMPAutomaton(BaseModel):
    """Deterministic mean-payoff automaton with LimInfAvg or LimSupAvg semantics"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str = Field(..., min_length=1)
    states: tuple[str, ...]
    initial: str
    alphabet: tuple[str, ...]
    transitions: tuple[Transition, ...]
    semantics: Semantics = Semantics.LIMINF

    _table: dict[tuple[str, str], Transition] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._table = {(t.source, t.letter): t for t in self.transitions}

    def step(self, state: str, letter: str) -> Transition:
        """The unique transition leaving ``state`` on ``letter``"""
        return self._table[(state, letter)]

    @property
    def max_abs_weight(self) -> Fraction:
        return max((abs(t.weight) for t in self.transitions), default=Fraction(0))

    def map_weights(self, new_id: str, func: Callable[[Fraction], Fraction],
                    semantics: Optional[Semantics] = None) -> "DetMPAutomaton":
        """Copy with every weight transformed by ``func``"""
        return DetMPAutomaton(
            id=new_id,
            states=self.states,
            initial=self.initial,
            alphabet=self.alphabet,
            transitions=tuple(
                Transition(source=t.source, letter=t.letter, target=t.target, weight=func(t.weight))
                for t in self.transitions
            ),
            semantics=semantics or self.semantics,
        )

    def negated(self) -> "DetMPAutomaton":
        """Automaton for the complement language: opposite weights, flipped semantics"""
        if self.id.endswith(NEG_SUFFIX):
            new_id = self.id[: -len(NEG_SUFFIX)]
        else:
            new_id = self.id + NEG_SUFFIX
        return self.map_weights(new_id, lambda w: -w, self.semantics.flipped())

    def scaled(self, factor: Fraction) -> "DetMPAutomaton":
        """Automaton whose weights are multiplied by a positive factor"""
        return self.map_weights(f"{self.id}#scale({format_rational(factor)})", lambda w: w * factor)

    def as_liminf(self) -> "DetMPAutomaton":
        """LimInfAvg automaton used by the vector-set construction.

        A LimSupAvg automaton is replaced by its weight-negated LimInfAvg
        counterpart; its coordinate is flipped back after F_min.
        """
        if self.semantics is Semantics.LIMINF:
            return self
        return self.map_weights(self.id, lambda w: -w, Semantics.LIMINF)


class PayoffTransition(BaseModel):
    """A transition of a multi-payoff automaton carrying a weight vector"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: str
    letter: str
    target: str
    weights: tuple[Fraction, ...]


class PayoffAutomaton(BaseModel):
    """Deterministic automaton with d-dimensional weight vectors"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str = Field(..., min_length=1)
    states: tuple[str, ...]
    initial: str
    alphabet: tuple[str, ...]
    transitions: tuple[PayoffTransition, ...]
    dimension: int = Field(..., ge=1)

    def component(self, index: int, semantics: Semantics) -> DetMPAutomaton:
        """Single-coordinate copy of the automaton under the given semantics"""
        tag = "inf" if semantics is Semantics.LIMINF else "sup"
        return DetMPAutomaton(
            id=f"{self.id}#{tag}{index + 1}",
            states=self.states,
            initial=self.initial,
            alphabet=self.alphabet,
            transitions=tuple(
                Transition(source=t.source, letter=t.letter, target=t.target, weight=t.weights[index])
                for t in self.transitions
            ),
            semantics=semantics,
        )


class LassoWord(BaseModel):
    """Ultimately periodic word prefix . cycle^omega"""
    model_config = ConfigDict(frozen=True)

    prefix: tuple[str, ...] = ()
    cycle: tuple[str, ...] = Field(..., min_length=1)

    def letters(self) -> set[str]:
        return set(self.prefix) | set(self.cycle)

    def __str__(self) -> str:
        prefix = " ".join(self.prefix)
        return f"{prefix} ({' '.join(self.cycle)})^w".strip()
