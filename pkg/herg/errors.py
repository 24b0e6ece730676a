"""Exceptions raised by hergkit.

Every error derives from ``ValueError`` so callers that only guard against bad
input keep working.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from herg.utils.typing import ValidationReport


class HergError(ValueError):
    """Base class for all hergkit errors."""


class InvalidHergError(HergError):
    """Raised when an operation receives a Herg that fails validation."""

    def __init__(self, report: ValidationReport, context: str = "") -> None:
        self.report = report
        lines = [v.message for v in report.violations]
        prefix = f"{context}: " if context else ""
        super().__init__(prefix + "invalid herg: " + "; ".join(lines))


class UnknownEdgeError(HergError):
    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"unknown edge label '{name}'")


class PruneError(HergError):
    def __init__(self, label: str, reason: str) -> None:
        self.label = label
        super().__init__(f"cannot prune '{label}': {reason}")


class HergSyntaxError(HergError):
    def __init__(self, line: int, message: str) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}")


class GenerationError(HergError):
    pass


class StateSumTooLarge(HergError):
    def __init__(self, edges: int, limit: int) -> None:
        self.edges = edges
        self.limit = limit
        super().__init__(
            f"state sum over {edges} edges exceeds the limit of {limit} "
            "(raise HERG_MAX_STATE_EDGES to allow 2^e subgraphs)"
        )
