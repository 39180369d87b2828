"""
Query and result models for the decision engine
"""

from enum import Enum
from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from .automaton import LassoWord
from .rational import format_rational


class ThresholdKind(str, Enum):
    EMPTINESS = "emptiness"
    UNIVERSALITY = "universality"


class CompareKind(str, Enum):
    INCLUSION = "inclusion"
    EQUIVALENCE = "equivalence"


class ThresholdQuery(BaseModel):
    """Is some word (emptiness) or every word (universality) valued at least nu"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: ThresholdKind
    nu: Fraction


class ThresholdResult(BaseModel):
    """Decision plus the SCC that witnesses it (best SCC for emptiness, worst for universality)"""
    model_config = ConfigDict(frozen=True)

    result: bool
    scc: Optional[int] = None


class CutpointResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    isolated: bool
    gap: Optional[Fraction] = None

    def as_json(self) -> dict:
        payload = {"isolated": self.isolated}
        if self.gap is not None:
            payload["gap"] = format_rational(self.gap)
        return payload


# Multi-threshold queries
class QueryRelation(str, Enum):
    LT = "<"
    LE = "<="
    GE = ">="
    GT = ">"

    def negated(self) -> "QueryRelation":
        return {
            QueryRelation.LT: QueryRelation.GE,
            QueryRelation.LE: QueryRelation.GT,
            QueryRelation.GE: QueryRelation.LT,
            QueryRelation.GT: QueryRelation.LE,
        }[self]


class QueryVariable(BaseModel):
    """inf(i) or sup(i), i counted from 1"""
    model_config = ConfigDict(frozen=True)

    kind: str = Field(..., pattern=r"^(inf|sup)$")
    index: int = Field(..., ge=1)

    def position(self, dimension: int) -> int:
        """Coordinate in the 2d-dimensional vector set"""
        offset = 0 if self.kind == "inf" else dimension
        return offset + self.index - 1

    def __str__(self) -> str:
        return f"{self.kind}({self.index})"


class QueryAtom(BaseModel):
    """sum of coefficient * variable  relation  bound"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    terms: tuple[tuple[Fraction, QueryVariable], ...]
    relation: QueryRelation
    bound: Fraction

    def negated(self) -> "QueryAtom":
        return QueryAtom(terms=self.terms, relation=self.relation.negated(), bound=self.bound)

    def __str__(self) -> str:
        lhs = " + ".join(f"{format_rational(c)}*{v}" for c, v in self.terms)
        return f"{lhs} {self.relation.value} {format_rational(self.bound)}"


class MultiThresholdQuery(BaseModel):
    """Boolean query over payoff variables kept in disjunctive normal form"""
    model_config = ConfigDict(frozen=True)

    text: str = ""
    disjuncts: tuple[tuple[QueryAtom, ...], ...]

    @property
    def variables(self) -> set[QueryVariable]:
        return {v for conj in self.disjuncts for atom in conj for _, v in atom.terms}


class QueryResult(BaseModel):
    """sat/unsat answer with the SCC and a point of the vector set when sat"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    satisfiable: bool
    scc: Optional[int] = None
    point: Optional[tuple[Fraction, ...]] = None

    @property
    def verdict(self) -> str:
        return "sat" if self.satisfiable else "unsat"


# Buchi automata
class BuchiEdge(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: str
    letter: str
    target: str


class BuchiAutomaton(BaseModel):
    """Deterministic Buchi automaton over the product state graph"""
    model_config = ConfigDict(frozen=True)

    states: tuple[str, ...]
    initial: str
    alphabet: tuple[str, ...]
    edges: tuple[BuchiEdge, ...]
    accepting: tuple[str, ...]
    scc_of: dict[str, int] = Field(default_factory=dict)

    _table: dict[tuple[str, str], str] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._table = {(e.source, e.letter): e.target for e in self.edges}

    def step(self, state: str, letter: str) -> str:
        return self._table[(state, letter)]

    def accepts(self, word: LassoWord) -> bool:
        """Whether the states visited infinitely often meet the accepting set"""
        state = self.initial
        for letter in word.prefix:
            state = self.step(state, letter)
        seen: dict[str, int] = {}
        while state not in seen:
            seen[state] = len(seen)
            for letter in word.cycle:
                state = self.step(state, letter)
        # states at cycle boundaries from the first repeat onwards form the loop
        loop_starts = [s for s, k in seen.items() if k >= seen[state]]
        accepting = set(self.accepting)
        for start in loop_starts:
            current = start
            for letter in word.cycle:
                if current in accepting:
                    return True
                current = self.step(current, letter)
        return False


class WitnessResult(BaseModel):
    """A lasso word and its exact value"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    word: LassoWord
    value: Fraction
    scc: int
