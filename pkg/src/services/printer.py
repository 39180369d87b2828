"""
Printer rendering a validated specification back into .mpa text
"""

from ..models.automaton import DetMPAutomaton, PayoffAutomaton
from ..models.rational import format_rational
from ..models.spec import ValidatedSpec


class PrinterService:
    """Service producing .mpa text that parses back to the same specification"""

    def print_spec(self, spec: ValidatedSpec) -> str:
        blocks = [self.print_automaton(a) for a in spec.automata.values()]
        blocks += [self.print_payoff(p) for p in spec.payoffs.values()]
        lines = [f"expression {name} = {expression.root};" for name, expression in spec.expressions.items()]
        if lines:
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"

    def print_automaton(self, automaton: DetMPAutomaton) -> str:
        body = [
            f"automaton {automaton.id} {automaton.semantics.value} {{",
            f"  alphabet {', '.join(automaton.alphabet)};",
            f"  initial {automaton.initial};",
        ]
        for t in automaton.transitions:
            body.append(f"  {t.source} -{t.letter}/{format_rational(t.weight)}-> {t.target};")
        body.append("}")
        return "\n".join(body)

    def print_payoff(self, payoff: PayoffAutomaton) -> str:
        body = [
            f"payoff {payoff.id} {{",
            f"  alphabet {', '.join(payoff.alphabet)};",
            f"  initial {payoff.initial};",
        ]
        for t in payoff.transitions:
            weights = ", ".join(format_rational(w) for w in t.weights)
            body.append(f"  {t.source} -{t.letter}/({weights})-> {t.target};")
        body.append("}")
        return "\n".join(body)


# Global service instance
printer_service = PrinterService()


def get_printer_service() -> PrinterService:
    """Get printer service instance"""
    return printer_service
