"""File format, generator and command line."""

from .fileformat import parse, read_herg, serialize, write_herg
from .generator import corpus, gen

__all__ = ["corpus", "gen", "parse", "read_herg", "serialize", "write_herg"]
