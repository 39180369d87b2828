"""
Entry point for the mean-payoff expression analyzer
"""

import sys

from src.cli.main import run

if __name__ == "__main__":
    sys.exit(run())
