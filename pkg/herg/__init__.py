"""hergkit: ribbon graphs with half-ribbons, their duals and polynomial invariants."""

from .core import Herg, validate

__all__ = ["Herg", "validate"]

__version__ = "0.1.0"
