"""
MPAE
Exact analysis of mean-payoff automaton expressions
"""

__version__ = "0.1.0"
