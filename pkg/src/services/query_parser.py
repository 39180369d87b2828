"""
Parser for multi-threshold queries over payoff variables

    query  := disj
    disj   := conj ("||" conj)*
    conj   := unary ("&&" unary)*
    unary  := "!" unary | "(" disj ")" | atom
    atom   := linear ("<" | "<=" | ">=" | ">") rational
    linear := ["-"] term (("+" | "-") term)*
    term   := [rational "*"] ("inf" | "sup") "(" index ")"
"""

from fractions import Fraction
from itertools import product

from lark import Lark, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken, VisitError

from ..models.queries import MultiThresholdQuery, QueryAtom, QueryRelation, QueryVariable
from ..models.rational import parse_rational
from ..utils.exceptions import ParseException
from ..utils.logging import get_logger

logger = get_logger(__name__)

QUERY_GRAMMAR = r"""
    ?start: disj

    ?disj: conj
         | disj "||" conj     -> or_
    ?conj: unary
         | conj "&&" unary    -> and_
    ?unary: "!" unary         -> not_
          | "(" disj ")"
          | atom

    atom: linear CMP BOUND
    linear: [SIGN] term (SIGN term)*
    term: [COEFFICIENT "*"] VAR "(" INDEX ")"

    CMP: /<=|>=|<|>/
    SIGN: "+" | "-"
    VAR: "inf" | "sup"
    INDEX: /[0-9]+/
    COEFFICIENT: /[0-9]+(\s*\/\s*[0-9]+)?/
    BOUND: /[-+]?[0-9]+(\s*\/\s*[0-9]+)?/

    %import common.WS
    %ignore WS
"""


class _QueryTransformer(Transformer):
    def atom(self, children):
        terms, relation, bound = children
        return QueryAtom(terms=terms, relation=QueryRelation(str(relation)), bound=parse_rational(str(bound)))

    def linear(self, children):
        terms = []
        sign = Fraction(1)
        for child in children:
            if child is None:
                continue
            if isinstance(child, tuple):
                coefficient, variable = child
                terms.append((sign * coefficient, variable))
                sign = Fraction(1)
            else:
                sign = Fraction(-1) if str(child) == "-" else Fraction(1)
        return tuple(terms)

    def term(self, children):
        coefficient, kind, index = children
        value = parse_rational(str(coefficient)) if coefficient is not None else Fraction(1)
        return value, QueryVariable(kind=str(kind), index=int(index))

    def and_(self, children):
        return ("and", *children)

    def or_(self, children):
        return ("or", *children)

    def not_(self, children):
        return ("not", children[0])


def to_dnf(formula, negate: bool = False) -> list[tuple[QueryAtom, ...]]:
    """Disjunctive normal form with negations pushed into the atoms"""
    if isinstance(formula, QueryAtom):
        return [(formula.negated() if negate else formula,)]
    tag = formula[0]
    if tag == "not":
        return to_dnf(formula[1], not negate)
    left, right = to_dnf(formula[1], negate), to_dnf(formula[2], negate)
    if (tag == "and") != negate:
        return [a + b for a, b in product(left, right)]
    return left + right


class QueryParserService:
    """Service parsing the multi-threshold query language"""

    def __init__(self):
        self._parser = Lark(QUERY_GRAMMAR, parser="lalr", maybe_placeholders=True)

    def parse_query(self, text: str) -> MultiThresholdQuery:
        try:
            formula = _QueryTransformer().transform(self._parser.parse(text))
        except VisitError as e:
            if isinstance(e.orig_exc, ParseException):
                raise e.orig_exc
            raise
        except UnexpectedToken as e:
            raise ParseException(f"unexpected token '{e.token}' in query", e.line, e.column)
        except UnexpectedCharacters as e:
            raise ParseException(f"unexpected character '{text[e.pos_in_stream]}' in query", e.line, e.column)
        except UnexpectedInput as e:
            raise ParseException("malformed query", e.line, e.column)

        query = MultiThresholdQuery(text=text, disjuncts=tuple(to_dnf(formula)))
        logger.debug(f"Query '{text}' has {len(query.disjuncts)} disjuncts")
        return query


# Global service instance
query_parser_service = QueryParserService()


def get_query_parser_service() -> QueryParserService:
    """Get query parser service instance"""
    return query_parser_service
