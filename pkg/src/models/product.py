"""
Synchronized product models
"""

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from .rational import Vector

ProductState = tuple[str, ...]


class ProductEdge(BaseModel):
    """A product transition carrying one weight per leaf automaton"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    source: ProductState
    letter: str
    target: ProductState
    weights: Vector


class ProductAutomaton(BaseModel):
    """Reachable part of the synchronized product of the leaf automata"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    leaf_ids: tuple[str, ...]
    states: tuple[ProductState, ...]
    initial: ProductState
    alphabet: tuple[str, ...]
    edges: tuple[ProductEdge, ...]

    _table: dict[tuple[ProductState, str], ProductEdge] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._table = {(e.source, e.letter): e for e in self.edges}

    @property
    def dimension(self) -> int:
        return len(self.leaf_ids)

    def step(self, state: ProductState, letter: str) -> ProductEdge:
        return self._table[(state, letter)]


class Scc(BaseModel):
    """A strongly connected component of the reachable product graph"""
    model_config = ConfigDict(frozen=True)

    id: int = Field(..., ge=0)
    states: tuple[ProductState, ...] = Field(..., min_length=1)
    has_cycle: bool


class SimpleCycle(BaseModel):
    """A simple cycle: distinct states, closed, with its mean weight vector"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    states: tuple[ProductState, ...]
    letters: tuple[str, ...]
    mean: Vector


class CycleValueSet(BaseModel):
    """Distinct simple-cycle means S_C of one SCC"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    scc: int
    points: tuple[Vector, ...]
    cycles: tuple[SimpleCycle, ...] = ()
