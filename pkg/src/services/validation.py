"""
Validation of parsed specifications and eager expression rewriting
"""

from typing import Sequence

from ..models.automaton import DetMPAutomaton, PayoffAutomaton
from ..models.expression import ExpressionAst, ExpressionNode, NodeOp, complement_expression, scale_expression
from ..models.rational import assert_canonical
from ..models.spec import AutomatonBlock, ExprSyntax, PayoffBlock, SpecFile, ValidatedSpec
from ..utils.config import get_settings
from ..utils.exceptions import ValidationException
from ..utils.logging import get_logger

logger = get_logger(__name__)

_BINARY = {"max": NodeOp.MAX, "min": NodeOp.MIN, "sum": NodeOp.SUM}


class ValidationService:
    """Service checking totality, determinism and alphabets"""

    def validate(self, spec: SpecFile) -> ValidatedSpec:
        """Validate a parsed file and rewrite neg/scale nodes down to the leaves"""
        automata: dict[str, DetMPAutomaton] = {}
        for block in spec.automata:
            automata[block.id] = self._build_automaton(block)

        payoffs: dict[str, PayoffAutomaton] = {}
        for block in spec.payoffs:
            payoffs[block.id] = self._build_payoff(block)

        expressions: dict[str, ExpressionAst] = {}
        for definition in spec.expressions:
            root = self._resolve(definition.tree, automata, expressions)
            expression = ExpressionAst(name=definition.name, root=root)
            self._check_alphabets(expression)
            expressions[definition.name] = expression
            for leaf in expression.leaves:
                known = automata.setdefault(leaf.id, leaf)
                if known != leaf:
                    raise ValidationException(
                        f"rewritten automaton '{leaf.id}' clashes with a declared automaton", automaton=leaf.id
                    )

        if get_settings().debug:
            for automaton in automata.values():
                assert_canonical(t.weight for t in automaton.transitions)

        validated = ValidatedSpec(automata=automata, payoffs=payoffs, expressions=expressions)
        logger.info(
            f"Validated {len(automata)} automata and {len(expressions)} expressions "
            f"(sum nodes: {validated.sum_op_counts})"
        )
        return validated

    def _check_transitions(self, name: str, alphabet: Sequence[str], initial: str, transitions) -> tuple[str, ...]:
        if len(set(alphabet)) != len(alphabet):
            raise ValidationException(f"automaton '{name}' repeats a letter in its alphabet", automaton=name)

        states: dict[str, None] = {initial: None}
        seen = set()
        for t in transitions:
            if t.letter not in alphabet:
                raise ValidationException(
                    f"automaton '{name}' uses letter '{t.letter}' outside its alphabet",
                    automaton=name, state=t.source, letter=t.letter,
                )
            key = (t.source, t.letter)
            if key in seen:
                raise ValidationException(
                    f"automaton '{name}' is not deterministic at ({t.source}, {t.letter})",
                    automaton=name, state=t.source, letter=t.letter,
                )
            seen.add(key)
            states.setdefault(t.source, None)
            states.setdefault(t.target, None)

        for state in states:
            for letter in alphabet:
                if (state, letter) not in seen:
                    raise ValidationException(
                        f"automaton '{name}' is not total at ({state}, {letter})",
                        automaton=name, state=state, letter=letter,
                    )
        return tuple(states)

    def _build_automaton(self, block: AutomatonBlock) -> DetMPAutomaton:
        states = self._check_transitions(block.id, block.alphabet, block.initial, block.transitions)
        return DetMPAutomaton(
            id=block.id,
            states=states,
            initial=block.initial,
            alphabet=block.alphabet,
            transitions=block.transitions,
            semantics=block.semantics,
        )

    def _build_payoff(self, block: PayoffBlock) -> PayoffAutomaton:
        states = self._check_transitions(block.id, block.alphabet, block.initial, block.transitions)
        return PayoffAutomaton(
            id=block.id,
            states=states,
            initial=block.initial,
            alphabet=block.alphabet,
            transitions=block.transitions,
            dimension=len(block.transitions[0].weights),
        )

    def _resolve(self, tree: ExprSyntax, automata: dict[str, DetMPAutomaton],
                 expressions: dict[str, ExpressionAst]) -> ExpressionNode:
        """Resolve names and apply complement/scaling rewrites"""
        if tree.kind == "ref":
            if tree.name in automata:
                return ExpressionNode.leaf(automata[tree.name])
            if tree.name in expressions:
                return expressions[tree.name].root
            raise ValidationException(
                f"unknown automaton id '{tree.name}' (line {tree.line}, column {tree.column})", automaton=tree.name
            )

        children = [self._resolve(arg, automata, expressions) for arg in tree.args]
        if tree.kind in _BINARY:
            return ExpressionNode.binary(_BINARY[tree.kind], *children)

        inner = ExpressionAst(name="_", root=children[0])
        if tree.kind == "neg":
            return complement_expression(inner).root
        if tree.factor == 0:
            raise ValidationException(f"scaling factor must be nonzero (line {tree.line}, column {tree.column})")
        return scale_expression(tree.factor, inner).root

    def _check_alphabets(self, expression: ExpressionAst) -> None:
        leaves = expression.leaves
        reference = set(leaves[0].alphabet)
        for leaf in leaves[1:]:
            if set(leaf.alphabet) != reference:
                raise ValidationException(
                    f"alphabet mismatch between leaves '{leaves[0].id}' and '{leaf.id}' of '{expression.name}'",
                    automaton=leaf.id,
                )


# Global service instance
validation_service = ValidationService()


def get_validation_service() -> ValidationService:
    """Get validation service instance"""
    return validation_service
