"""
Unit tests for the multi-threshold query parser
"""

from fractions import Fraction

import pytest

from src.models.queries import QueryRelation, QueryVariable
from src.services.query_parser import QueryParserService
from src.utils.exceptions import ParseException


@pytest.fixture
def parser():
    return QueryParserService()


class TestQueryParser:
    """Unit tests for QueryParserService"""

    def test_single_atom(self, parser):
        query = parser.parse_query("inf(1) >= 1/2")
        assert len(query.disjuncts) == 1
        atom = query.disjuncts[0][0]
        assert atom.terms == ((Fraction(1), QueryVariable(kind="inf", index=1)),)
        assert atom.relation is QueryRelation.GE
        assert atom.bound == Fraction(1, 2)

    def test_linear_terms(self, parser):
        atom = parser.parse_query("-inf(1) + 3/2*sup(2) - sup(1) < -1").disjuncts[0][0]
        assert atom.terms == (
            (Fraction(-1), QueryVariable(kind="inf", index=1)),
            (Fraction(3, 2), QueryVariable(kind="sup", index=2)),
            (Fraction(-1), QueryVariable(kind="sup", index=1)),
        )
        assert atom.bound == -1

    def test_conjunction_binds_tighter(self, parser):
        query = parser.parse_query("inf(1) > 0 || inf(2) > 0 && sup(1) < 1")
        assert [len(conj) for conj in query.disjuncts] == [1, 2]

    def test_distribution(self, parser):
        query = parser.parse_query("(inf(1) > 0 || inf(2) > 0) && (sup(1) < 1 || sup(2) < 1)")
        assert len(query.disjuncts) == 4
        assert all(len(conj) == 2 for conj in query.disjuncts)

    def test_negation_is_pushed_into_atoms(self, parser):
        """Test De Morgan and relation flips under negation"""
        query = parser.parse_query("!(inf(1) > 0 && sup(2) <= 1)")
        relations = [conj[0].relation for conj in query.disjuncts]
        assert relations == [QueryRelation.LE, QueryRelation.GT]

    def test_double_negation(self, parser):
        query = parser.parse_query("!!inf(1) < 2")
        assert query.disjuncts[0][0].relation is QueryRelation.LT

    def test_variables(self, parser):
        query = parser.parse_query("inf(1) > 0 && sup(3) < 1")
        assert {str(v) for v in query.variables} == {"inf(1)", "sup(3)"}

    @pytest.mark.parametrize("text", ["", "inf(1)", "inf(1) > ", "avg(1) > 0", "inf(1) >= 1 &&", "inf(1) = 0"])
    def test_malformed(self, parser, text):
        with pytest.raises(ParseException):
            parser.parse_query(text)

    def test_error_position(self, parser):
        with pytest.raises(ParseException, match="column"):
            parser.parse_query("inf(1) > 0 && $")
