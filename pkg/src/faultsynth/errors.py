"""Exception hierarchy shared by every module."""

from __future__ import annotations


class FaultSynthError(Exception):
    """Base class for all errors raised by this package."""


class AlphabetMismatch(FaultSynthError):
    pass


class AttributeConflict(FaultSynthError):
    pass


class ObservabilityIncompatibility(FaultSynthError):
    pass


class InvalidAutomaton(FaultSynthError):
    pass


class AssumptionViolated(FaultSynthError):
    """The plant is not live or contains a cycle of unobservable events."""


class EmptyFaultLanguage(FaultSynthError):
    pass


class NotPrognosable(FaultSynthError):
    pass


class ComponentSynthesisFailed(FaultSynthError):
    def __init__(self, index: int, message: str = ""):
        self.index = index
        super().__init__(message or f"component {index} has no solution")


class ProductTooLarge(FaultSynthError):
    pass


class BudgetExceeded(FaultSynthError):
    pass


class ParseError(FaultSynthError):
    pass
