"""
Custom exceptions for the mean-payoff expression analyzer
"""

from typing import Optional


class MpaeException(Exception):
    """Base exception for analyzer errors"""
    pass


class ParseException(MpaeException):
    """Exception raised when input text cannot be parsed"""
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column


class ValidationException(MpaeException):
    """Exception raised when a parsed model violates a well-formedness rule"""
    def __init__(
        self,
        message: str,
        automaton: Optional[str] = None,
        state: Optional[str] = None,
        letter: Optional[str] = None
    ):
        super().__init__(message)
        self.automaton = automaton
        self.state = state
        self.letter = letter


class GeometryException(MpaeException):
    """Exception raised when a polyhedral operation receives unusable input"""
    pass


class QueryException(MpaeException):
    """Exception raised when an analysis question has no answer of the requested kind"""
    pass


class ResourceBudgetException(MpaeException):
    """Exception raised when a configured resource budget is exhausted"""
    def __init__(self, message: str, budget: Optional[int] = None):
        super().__init__(message)
        self.budget = budget


class ConfigurationException(MpaeException):
    """Exception raised when configuration is invalid"""
    pass
