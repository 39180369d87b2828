"""
Shared specifications for the test suites
"""

import pytest

from src.models.automaton import LassoWord
from src.services.parser import get_parser_service
from src.services.validation import get_validation_service

TWO_COUNTERS = """
automaton A1 liminf {
  alphabet a, b;
  initial q;
  q -a/1-> q;
  q -b/0-> q;
}

automaton A2 liminf {
  alphabet a, b;
  initial q;
  q -a/0-> q;
  q -b/1-> q;
}

payoff P {
  alphabet a, b;
  initial q;
  q -a/(1, 0)-> q;
  q -b/(0, 1)-> q;
}

expression Emax = max(A1, A2);
expression Emin = min(A1, A2);
expression E1 = A1;
expression E2 = A2;
expression A1twice = scale(2, A1);
expression Ediff = sum(A1, neg(A2));
"""

# s branches on its first letter into a sink of weight 2 (a) or weight 1 (b)
BRANCHING = """
automaton B liminf {
  alphabet a, b;
  initial s;
  s -a/0-> p;
  s -b/0-> r;
  p -a/2-> p;
  p -b/2-> p;
  r -a/1-> r;
  r -b/1-> r;
}

expression Eb = B;
"""


def load(text: str):
    return get_validation_service().validate(get_parser_service().parse_spec(text))


@pytest.fixture
def two_counters():
    """A1 averages the a's, A2 averages the b's"""
    return load(TWO_COUNTERS)


@pytest.fixture
def branching():
    """Three SCCs: a transient initial state and two sinks valued 2 and 1"""
    return load(BRANCHING)


@pytest.fixture
def two_counters_file(tmp_path):
    path = tmp_path / "counters.mpa"
    path.write_text(TWO_COUNTERS, encoding="utf-8")
    return path


@pytest.fixture
def branching_file(tmp_path):
    path = tmp_path / "branching.mpa"
    path.write_text(BRANCHING, encoding="utf-8")
    return path


def random_automaton_text(rng, name: str, states: int, alphabet=("a", "b"), weights=(-2, 2)) -> str:
    """A random total deterministic automaton block"""
    semantics = rng.choice(["liminf", "limsup"])
    names = [f"q{k}" for k in range(states)]
    lines = [f"automaton {name} {semantics} {{", f"  alphabet {', '.join(alphabet)};", "  initial q0;"]
    for state in names:
        for letter in alphabet:
            lines.append(f"  {state} -{letter}/{rng.randint(*weights)}-> {rng.choice(names)};")
    lines.append("}")
    return "\n".join(lines)


def random_tree(rng, leaves, depth: int) -> str:
    if depth == 0 or rng.random() < 0.3:
        leaf = rng.choice(leaves)
        return f"neg({leaf})" if rng.random() < 0.2 else leaf
    op = rng.choice(["max", "min", "sum"])
    return f"{op}({random_tree(rng, leaves, depth - 1)}, {random_tree(rng, leaves, depth - 1)})"


def random_spec_text(rng, automata: int = 2, max_states: int = 3, expressions: int = 3, depth: int = 2) -> str:
    """Random automata A0.. and expressions X0.. over them"""
    names = [f"A{k}" for k in range(automata)]
    blocks = [random_automaton_text(rng, name, rng.randint(1, max_states)) for name in names]
    for k in range(expressions):
        blocks.append(f"expression X{k} = {random_tree(rng, names, depth)};")
    return "\n\n".join(blocks)


def random_lasso(rng, alphabet=("a", "b"), max_prefix: int = 3, max_cycle: int = 4):
    prefix = tuple(rng.choice(alphabet) for _ in range(rng.randint(0, max_prefix)))
    cycle = tuple(rng.choice(alphabet) for _ in range(rng.randint(1, max_cycle)))
    return LassoWord(prefix=prefix, cycle=cycle)
