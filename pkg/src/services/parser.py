"""
Parser for the .mpa input format
"""

import re
from pathlib import Path
from typing import Union

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from ..models.automaton import PayoffTransition, Semantics, Transition
from ..models.rational import parse_rational
from ..models.spec import AutomatonBlock, ExprSyntax, ExpressionDef, PayoffBlock, SpecFile
from ..utils.exceptions import ParseException
from ..utils.logging import get_logger

logger = get_logger(__name__)

SPEC_GRAMMAR = r"""
    start: item*

    ?item: automaton_block
         | payoff_block
         | expression_def

    automaton_block: "automaton" NAME semantics "{" alphabet_decl initial_decl transition* "}"
    payoff_block: "payoff" NAME "{" alphabet_decl initial_decl transition* "}"
    !semantics: "liminf" | "limsup"

    alphabet_decl: "alphabet" NAME ("," NAME)* ";"
    initial_decl: "initial" NAME ";"
    transition: NAME EDGE NAME ";"

    expression_def: "expression" NAME "=" tree ";"

    ?tree: NAME                              -> ref
         | "max" "(" tree "," tree ")"      -> max
         | "min" "(" tree "," tree ")"      -> min
         | "sum" "(" tree "," tree ")"      -> sum
         | "neg" "(" tree ")"               -> neg
         | "scale" "(" RATIONAL "," tree ")" -> scale

    EDGE: /-\s*[A-Za-z_][A-Za-z0-9_]*\s*\/\s*(\([^()]*\)|[-+]?\d+(\s*\/\s*[-+]?\d+)?)\s*->/
    RATIONAL: /[-+]?\d+(\s*\/\s*[-+]?\d+)?/
    NAME: /[A-Za-z_][A-Za-z0-9_]*(#neg(?![A-Za-z0-9_])|#scale\(-?[0-9]+(\/[0-9]+)?\))*/
    COMMENT: /#[^\n]*/

    %import common.WS
    %ignore WS
    %ignore COMMENT
"""

_EDGE_PARTS = re.compile(r"^-\s*([A-Za-z_][A-Za-z0-9_]*)\s*/\s*(.*?)\s*->$", re.S)


def _rational(text: str, token: Token):
    try:
        return parse_rational(text)
    except ParseException as e:
        raise ParseException(str(e), token.line, token.column)


def _edge(token: Token) -> tuple[str, Union[tuple, object]]:
    """Split an edge label into its letter and its scalar or tuple weight"""
    letter, weight = _EDGE_PARTS.match(str(token)).groups()
    if weight.startswith("("):
        parts = [p for p in weight[1:-1].split(",")]
        if not all(p.strip() for p in parts):
            raise ParseException(f"bad weight vector '{weight}'", token.line, token.column)
        return letter, tuple(_rational(p, token) for p in parts)
    return letter, _rational(weight, token)


class _SpecTransformer(Transformer):
    """Turn the lark parse tree into SpecFile models"""

    def start(self, items):
        automata = [i for i in items if isinstance(i, AutomatonBlock)]
        payoffs = [i for i in items if isinstance(i, PayoffBlock)]
        expressions = [i for i in items if isinstance(i, ExpressionDef)]
        if not automata and not payoffs:
            raise ParseException("no automaton defined")

        seen: dict[str, int] = {}
        for item in items:
            key = item.name if isinstance(item, ExpressionDef) else item.id
            if key in seen:
                raise ParseException(f"duplicate id '{key}' (first defined on line {seen[key]})", item.line, 1)
            seen[key] = item.line
        return SpecFile(automata=tuple(automata), payoffs=tuple(payoffs), expressions=tuple(expressions))

    def semantics(self, children):
        return Semantics(str(children[0]))

    def alphabet_decl(self, children):
        return tuple(str(c) for c in children)

    def initial_decl(self, children):
        return str(children[0])

    def transition(self, children):
        source, edge, target = children
        letter, weight = _edge(edge)
        return source, letter, str(target), weight

    def automaton_block(self, children):
        name, semantics, alphabet, initial, *transitions = children
        built = []
        for source, letter, target, weight in transitions:
            if isinstance(weight, tuple):
                raise ParseException(
                    f"automaton '{name}' needs scalar weights, got a vector", source.line, source.column
                )
            built.append(Transition(source=str(source), letter=letter, target=target, weight=weight))
        return AutomatonBlock(
            id=str(name), semantics=semantics, alphabet=alphabet, initial=initial,
            transitions=tuple(built), line=name.line,
        )

    def payoff_block(self, children):
        name, alphabet, initial, *transitions = children
        built = []
        dimension = None
        for source, letter, target, weight in transitions:
            if not isinstance(weight, tuple):
                weight = (weight,)
            if dimension is None:
                dimension = len(weight)
            elif len(weight) != dimension:
                raise ParseException(
                    f"payoff '{name}' mixes weight vectors of dimension {dimension} and {len(weight)}",
                    source.line, source.column,
                )
            built.append(PayoffTransition(source=str(source), letter=letter, target=target, weights=weight))
        return PayoffBlock(id=str(name), alphabet=alphabet, initial=initial, transitions=tuple(built), line=name.line)

    def expression_def(self, children):
        name, tree = children
        return ExpressionDef(name=str(name), tree=tree, line=name.line)

    def ref(self, children):
        token = children[0]
        return ExprSyntax(kind="ref", name=str(token), line=token.line, column=token.column)

    def max(self, children):
        return ExprSyntax(kind="max", args=tuple(children))

    def min(self, children):
        return ExprSyntax(kind="min", args=tuple(children))

    def sum(self, children):
        return ExprSyntax(kind="sum", args=tuple(children))

    def neg(self, children):
        return ExprSyntax(kind="neg", args=tuple(children))

    def scale(self, children):
        token, tree = children
        return ExprSyntax(
            kind="scale", factor=_rational(str(token), token), args=(tree,), line=token.line, column=token.column
        )


class ParserService:
    """Service turning .mpa text into its abstract syntax"""

    def __init__(self):
        self._parser = Lark(SPEC_GRAMMAR, parser="lalr")

    def parse_spec(self, text: str) -> SpecFile:
        """Parse .mpa text; errors carry line and column"""
        try:
            tree = self._parser.parse(text)
            spec = _SpecTransformer().transform(tree)
        except VisitError as e:
            if isinstance(e.orig_exc, ParseException):
                raise e.orig_exc
            raise
        except UnexpectedEOF as e:
            raise ParseException(f"unexpected end of input, expected one of {sorted(e.expected)}")
        except UnexpectedToken as e:
            raise ParseException(f"unexpected token '{e.token}'", e.line, e.column)
        except UnexpectedCharacters as e:
            raise ParseException(f"unexpected character '{text[e.pos_in_stream]}'", e.line, e.column)
        except UnexpectedInput as e:
            raise ParseException("syntax error", e.line, e.column)

        logger.info(
            f"Parsed {len(spec.automata)} automata, {len(spec.payoffs)} payoff automata, "
            f"{len(spec.expressions)} expressions"
        )
        return spec

    def parse_file(self, path: Union[str, Path]) -> SpecFile:
        text = Path(path).read_text(encoding="utf-8")
        return self.parse_spec(text)


# Global service instance
parser_service = ParserService()


def get_parser_service() -> ParserService:
    """Get parser service instance"""
    return parser_service
