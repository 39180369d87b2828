"""
mpae command-line entry point

Every subcommand reads one UTF-8 ``.mpa`` file and prints a single result on
standard output. Diagnostics and errors go to standard error.

Exit codes:
    0  the analysis completed (boolean answers included)
    1  unexpected internal error
    2  parse or validation error
    3  query or geometry error
    4  resource budget exceeded
"""

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from .. import __version__
from ..geometry.double_description import enumerate_vertices
from ..geometry.dump import dump_polyhedron
from ..models.queries import CompareKind, ThresholdKind, ThresholdQuery
from ..models.rational import parse_rational
from ..models.spec import ValidatedSpec
from ..services.decision_service import DecisionService
from ..services.parser import get_parser_service
from ..services.query_parser import get_query_parser_service
from ..services.validation import get_validation_service
from ..utils.config import Settings, get_settings
from ..utils.exceptions import (
    ConfigurationException,
    GeometryException,
    MpaeException,
    ParseException,
    QueryException,
    ResourceBudgetException,
    ValidationException,
)
from ..utils.logging import configure_level, get_logger, setup_exception_logging, setup_logger
from .render import render, render_error

logger = get_logger(__name__)

SUBCOMMANDS = (
    "check", "vector-set", "value-set", "empty", "universal", "includes",
    "equiv", "distance", "cutpoint", "buchi", "query", "witness",
)

# flags each subcommand cannot do without
REQUIRED_FLAGS = {
    "vector-set": ("expr",),
    "value-set": ("expr",),
    "empty": ("expr", "nu"),
    "universal": ("expr", "nu"),
    "includes": ("lhs", "rhs"),
    "equiv": ("lhs", "rhs"),
    "distance": ("lhs", "rhs"),
    "cutpoint": ("expr", "eta"),
    "buchi": ("expr", "eta"),
    "query": ("query",),
    "witness": ("expr", "nu", "eps"),
}

QUERY_HELP = """query language:
  atom    := linear ("<" | "<=" | ">=" | ">") rational
  linear  := ["-"] term (("+" | "-") term)*
  term    := [rational "*"] ("inf" | "sup") "(" index ")"
  formula := atom | "!" formula | formula "&&" formula | formula "||" formula | "(" formula ")"
example: "inf(1) >= 1/2 && sup(2) - inf(2) < 1"
"""


class CliInvocation(BaseModel):
    """One parsed command line"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    subcommand: str
    file: Path
    expr: Optional[str] = None
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    nu: Optional[Fraction] = None
    eta: Optional[Fraction] = None
    eps: Optional[Fraction] = None
    query: Optional[str] = None
    payoff: Optional[str] = None
    output_format: str = Field(default="json", pattern=r"^(json|text)$")
    dump_cycles: bool = False
    dump_geometry: bool = False
    cycle_budget: Optional[int] = None
    log_level: Optional[str] = None

    @field_validator("nu", "eta", "eps", mode="before")
    @classmethod
    def _parse_rational(cls, value):
        if value is None or isinstance(value, Fraction):
            return value
        return parse_rational(str(value))

    @model_validator(mode="after")
    def _check_required(self) -> "CliInvocation":
        if self.subcommand not in SUBCOMMANDS:
            raise ValidationException(f"unknown subcommand '{self.subcommand}'")
        missing = [f"--{flag}" for flag in REQUIRED_FLAGS.get(self.subcommand, ()) if getattr(self, flag) is None]
        if missing:
            raise ValidationException(f"{self.subcommand} requires {', '.join(missing)}")
        return self


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mpae",
        description="Exact analysis of mean-payoff automaton expressions",
        epilog="Negative rationals are passed as --nu=-1/2.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", type=Path, help=".mpa input file")
    common.add_argument("--format", dest="output_format", choices=("json", "text"), default="json")
    common.add_argument("--cycle-budget", type=int, default=None,
                        help="maximum number of simple cycles per SCC (env MPAE_CYCLE_BUDGET)")
    common.add_argument("--log-level", type=str.upper, default=None,
                        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
                        help="diagnostic log level on standard error")

    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    subparsers.add_parser("check", parents=[common], help="parse and validate a specification")

    vector_set = subparsers.add_parser("vector-set", parents=[common], help="vector set of an expression")
    vector_set.add_argument("--expr", required=True)
    vector_set.add_argument("--dump-cycles", action="store_true", help="list simple-cycle values per SCC")
    vector_set.add_argument("--dump-geometry", action="store_true", help="list constraints per SCC")

    value_set = subparsers.add_parser("value-set", parents=[common], help="value set of an expression")
    value_set.add_argument("--expr", required=True)

    for name, help_text in (("empty", "is some word valued at least NU"),
                            ("universal", "is every word valued at least NU")):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--expr", required=True)
        sub.add_argument("--nu", required=True)

    for name, help_text in (("includes", "LHS <= RHS on every word"),
                            ("equiv", "LHS = RHS on every word"),
                            ("distance", "sup over words of |LHS - RHS|")):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--lhs", required=True)
        sub.add_argument("--rhs", required=True)

    for name, help_text in (("cutpoint", "is ETA isolated from the value set"),
                            ("buchi", "Buchi automaton for the words valued at least ETA")):
        sub = subparsers.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("--expr", required=True)
        sub.add_argument("--eta", required=True)

    query = subparsers.add_parser("query", parents=[common], help="multi-threshold query on a payoff automaton",
                                  epilog=QUERY_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
    query.add_argument("--query", required=True)
    query.add_argument("--payoff", default=None, help="payoff automaton id (default: the only one)")

    witness = subparsers.add_parser("witness", parents=[common], help="lasso word valued at least NU - EPS")
    witness.add_argument("--expr", required=True)
    witness.add_argument("--nu", required=True)
    witness.add_argument("--eps", required=True)

    return parser


def parse_invocation(argv: Sequence[str]) -> CliInvocation:
    arguments = vars(build_parser().parse_args(list(argv)))
    return CliInvocation(**{key: value for key, value in arguments.items() if value is not None})


def load_spec(path: Path) -> ValidatedSpec:
    try:
        syntax = get_parser_service().parse_file(path)
    except OSError as e:
        raise ValidationException(f"cannot read {path}: {e.strerror or e}")
    return get_validation_service().validate(syntax)


class CommandRunner:
    """Dispatches one invocation to the decision service"""

    def __init__(self, invocation: CliInvocation, settings: Settings):
        self.invocation = invocation
        self.decisions = DecisionService(settings)

    def execute(self) -> dict:
        inv = self.invocation
        spec = load_spec(inv.file)
        handler = getattr(self, "_" + inv.subcommand.replace("-", "_"))
        return handler(spec)

    def _check(self, spec: ValidatedSpec) -> dict:
        return {
            "result": "ok",
            "automata": {
                a.id: {"states": list(a.states), "alphabet": list(a.alphabet), "semantics": a.semantics.value}
                for a in spec.automata.values()
            },
            "payoffs": {p.id: {"dimension": p.dimension, "states": list(p.states)} for p in spec.payoffs.values()},
            "expressions": {
                name: {"n": e.dimension, "sum_ops": e.sum_op_count, "leaves": list(e.leaf_ids), "tree": str(e.root)}
                for name, e in spec.expressions.items()
            },
        }

    def _vector_set(self, spec: ValidatedSpec) -> dict:
        inv = self.invocation
        values = self.decisions.values
        expression = spec.expression(inv.expr)
        vector_set = values.vector_set_of(expression)
        entries = []
        for entry in vector_set.per_scc:
            item = {"scc": entry.scc, "vertices": enumerate_vertices(entry.polyhedron)}
            if inv.dump_geometry:
                item["constraints"] = dump_polyhedron(entry.polyhedron).splitlines()
            entries.append(item)
        payload = {"result": entries, "leaves": list(vector_set.leaf_ids)}
        if inv.dump_cycles:
            analysis = values.cycle_analysis(expression.leaves)
            payload["cycles"] = {
                str(scc_id): [analysis.raw(point) for point in cycle_values.points]
                for scc_id, cycle_values in sorted(analysis.cycle_values.items())
            }
        return payload

    def _value_set(self, spec: ValidatedSpec) -> dict:
        return {"result": self.decisions.values.value_set(spec, self.invocation.expr)}

    def _threshold(self, spec: ValidatedSpec, kind: ThresholdKind) -> dict:
        inv = self.invocation
        result = self.decisions.threshold_decision(spec, inv.expr, ThresholdQuery(kind=kind, nu=inv.nu))
        return {"result": result.result, "scc": result.scc}

    def _empty(self, spec: ValidatedSpec) -> dict:
        return self._threshold(spec, ThresholdKind.EMPTINESS)

    def _universal(self, spec: ValidatedSpec) -> dict:
        return self._threshold(spec, ThresholdKind.UNIVERSALITY)

    def _includes(self, spec: ValidatedSpec) -> dict:
        inv = self.invocation
        return {"result": self.decisions.compare(spec, inv.lhs, inv.rhs, CompareKind.INCLUSION)}

    def _equiv(self, spec: ValidatedSpec) -> dict:
        inv = self.invocation
        return {"result": self.decisions.compare(spec, inv.lhs, inv.rhs, CompareKind.EQUIVALENCE)}

    def _distance(self, spec: ValidatedSpec) -> dict:
        inv = self.invocation
        return {"result": self.decisions.distance(spec, inv.lhs, inv.rhs)}

    def _cutpoint(self, spec: ValidatedSpec) -> dict:
        cut = self.decisions.cutpoint(spec, self.invocation.expr, self.invocation.eta)
        return {"result": cut.isolated, "gap": cut.gap}

    def _buchi(self, spec: ValidatedSpec) -> dict:
        return {"result": self.decisions.emit_buchi(spec, self.invocation.expr, self.invocation.eta)}

    def _query(self, spec: ValidatedSpec) -> dict:
        inv = self.invocation
        query = get_query_parser_service().parse_query(inv.query)
        answer = self.decisions.mt_query(spec.payoff(inv.payoff), query)
        return {"result": answer.verdict, "scc": answer.scc, "point": answer.point}

    def _witness(self, spec: ValidatedSpec) -> dict:
        inv = self.invocation
        witness = self.decisions.witness_lasso(spec, inv.expr, inv.nu, inv.eps)
        return {"result": witness.word, "value": witness.value, "scc": witness.scc}


def exit_code_for(error: Exception) -> int:
    if isinstance(error, (ParseException, ValidationException, ConfigurationException)):
        return 2
    if isinstance(error, (QueryException, GeometryException)):
        return 3
    if isinstance(error, ResourceBudgetException):
        return 4
    return 1


def load_settings(invocation: CliInvocation) -> Settings:
    """Environment settings with the command-line overrides applied"""
    try:
        return get_settings().with_overrides(cycle_budget=invocation.cycle_budget)
    except ValidationError as e:
        fields = ", ".join(".".join(str(part) for part in error["loc"]) for error in e.errors())
        raise ConfigurationException(f"invalid MPAE_* setting: {fields or e.title}") from e


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Execute one invocation and return its exit code"""
    argv = sys.argv[1:] if argv is None else argv
    try:
        invocation = parse_invocation(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except MpaeException as e:
        print(render_error(e), file=sys.stderr)
        return exit_code_for(e)

    try:
        settings = load_settings(invocation)
        level = invocation.log_level or settings.log_level
        if settings.log_file:
            setup_logger(level, settings.log_file)
        else:
            configure_level(level)
        payload = CommandRunner(invocation, settings).execute()
    except MpaeException as e:
        logger.debug(f"{invocation.subcommand} failed: {e}")
        print(render_error(e), file=sys.stderr)
        return exit_code_for(e)
    except Exception as e:
        logger.error(f"Unhandled error: {e}", exc_info=True)
        print(render_error(e), file=sys.stderr)
        return 1

    print(render(payload, invocation.output_format))
    return 0


def main() -> None:
    setup_exception_logging()
    sys.exit(run())


if __name__ == "__main__":
    main()
