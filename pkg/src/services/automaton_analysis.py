"""
Synchronized product, strongly connected components and simple cycles
"""

import itertools
from collections import deque
from typing import Iterable, Optional, Sequence

import networkx

from ..models.automaton import DetMPAutomaton
from ..models.product import CycleValueSet, ProductAutomaton, ProductEdge, ProductState, Scc, SimpleCycle
from ..models.rational import mean
from ..models.spec import ValidatedSpec
from ..utils.config import Settings, get_settings
from ..utils.exceptions import ResourceBudgetException
from ..utils.logging import get_logger

logger = get_logger(__name__)


def canonical_rotation(cycle: list) -> list:
    """Rotate the cycle so that it starts with its smallest node"""
    start = min(range(len(cycle)), key=lambda k: cycle[k])
    return cycle[start:] + cycle[:start]


class AutomatonAnalysisService:
    """Service building products and enumerating their cycles"""

    def __init__(self, settings: Optional[Settings] = None):
        self._settings = settings

    @property
    def settings(self) -> Settings:
        return self._settings or get_settings()

    def synchronized_product(self, spec: ValidatedSpec, expr_name: str) -> ProductAutomaton:
        """Product of the distinct leaves of a named expression, weights as declared"""
        return self.product_of(spec.expression(expr_name).leaves)

    def product_of(self, automata: Sequence[DetMPAutomaton]) -> ProductAutomaton:
        """Reachable synchronized product over the shared alphabet"""
        alphabet = tuple(sorted(automata[0].alphabet))
        initial: ProductState = tuple(a.initial for a in automata)

        index = {initial: 0}
        order = [initial]
        edges: list[ProductEdge] = []
        queue = deque([initial])
        while queue:
            state = queue.popleft()
            for letter in alphabet:
                steps = [a.step(q, letter) for a, q in zip(automata, state)]
                target = tuple(t.target for t in steps)
                edges.append(
                    ProductEdge(source=state, letter=letter, target=target, weights=tuple(t.weight for t in steps))
                )
                if target not in index:
                    index[target] = len(order)
                    order.append(target)
                    queue.append(target)

        product = ProductAutomaton(
            leaf_ids=tuple(a.id for a in automata),
            states=tuple(order),
            initial=initial,
            alphabet=alphabet,
            edges=tuple(edges),
        )
        logger.info(f"Product of {len(automata)} automata: {len(order)} states, {len(edges)} edges")
        return product

    def _graph(self, product: ProductAutomaton) -> networkx.DiGraph:
        graph = networkx.DiGraph()
        graph.add_nodes_from(product.states)
        for edge in product.edges:
            if graph.has_edge(edge.source, edge.target):
                graph[edge.source][edge.target]["letters"].append(edge.letter)
            else:
                graph.add_edge(edge.source, edge.target, letters=[edge.letter])
        return graph

    def reachable_sccs(self, product: ProductAutomaton) -> list[Scc]:
        """All SCCs of the reachable graph, numbered by discovery order of their first state"""
        graph = self._graph(product)
        position = {state: k for k, state in enumerate(product.states)}
        components = [
            sorted(component, key=position.__getitem__)
            for component in networkx.strongly_connected_components(graph)
        ]
        components.sort(key=lambda c: position[c[0]])

        sccs = []
        for scc_id, states in enumerate(components):
            has_cycle = len(states) > 1 or graph.has_edge(states[0], states[0])
            sccs.append(Scc(id=scc_id, states=tuple(states), has_cycle=has_cycle))
        logger.info(
            f"Found {len(sccs)} SCCs, {sum(1 for s in sccs if s.has_cycle)} of them with cycles"
        )
        return sccs

    def simple_cycles(self, product: ProductAutomaton, scc: Scc, budget: Optional[int] = None) -> list[SimpleCycle]:
        """Every simple cycle inside the SCC; parallel letters give distinct cycles"""
        if not scc.has_cycle:
            return []
        budget = budget or self.settings.cycle_budget
        graph = self._graph(product).subgraph(scc.states)

        cycles: list[SimpleCycle] = []
        for nodes in networkx.simple_cycles(graph):
            nodes = canonical_rotation(nodes)
            hops = list(zip(nodes, nodes[1:] + nodes[:1]))
            choices = [sorted(graph[u][v]["letters"]) for u, v in hops]
            for letters in itertools.product(*choices):
                if len(cycles) >= budget:
                    raise ResourceBudgetException(
                        f"more than {budget} simple cycles in SCC {scc.id}; raise the cycle budget to continue",
                        budget=budget,
                    )
                weights = [product.step(u, letter).weights for (u, _), letter in zip(hops, letters)]
                cycles.append(SimpleCycle(states=tuple(nodes), letters=letters, mean=mean(weights)))

        cycles.sort(key=lambda c: (len(c.states), c.states, c.letters))
        return cycles

    def simple_cycle_values(self, product: ProductAutomaton, scc: Scc,
                            budget: Optional[int] = None) -> CycleValueSet:
        """Distinct simple-cycle means S_C of an SCC"""
        cycles = self.simple_cycles(product, scc, budget)
        points = tuple(sorted(dict.fromkeys(c.mean for c in cycles)))
        logger.info(f"SCC {scc.id}: {len(cycles)} simple cycles, {len(points)} distinct means")
        return CycleValueSet(scc=scc.id, points=points, cycles=tuple(cycles))

    def shortest_path(self, product: ProductAutomaton, source: ProductState, target: ProductState,
                      within: Optional[Iterable[ProductState]] = None) -> list[str]:
        """Letters of a shortest path, letters tried in alphabetical order"""
        allowed = set(within) if within is not None else None
        parent: dict[ProductState, tuple[ProductState, str]] = {}
        seen = {source}
        queue = deque([source])
        while queue and target not in seen:
            state = queue.popleft()
            for letter in product.alphabet:
                nxt = product.step(state, letter).target
                if nxt in seen or (allowed is not None and nxt not in allowed):
                    continue
                seen.add(nxt)
                parent[nxt] = (state, letter)
                queue.append(nxt)
        if target not in seen:
            raise ValueError(f"{target} is not reachable from {source}")
        letters = []
        state = target
        while state != source:
            state, letter = parent[state]
            letters.append(letter)
        return letters[::-1]


# Global service instance
automaton_analysis_service = AutomatonAnalysisService()


def get_automaton_analysis_service() -> AutomatonAnalysisService:
    """Get automaton analysis service instance"""
    return automaton_analysis_service
