"""
Configuration for hergkit

Settings are read from the environment, optionally seeded from a ``.env`` file
that sits next to this package.
"""

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

logger = logging.getLogger(__name__)

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}

# =============================================================================
# STEP 1: Load Environment Variables
# =============================================================================


def load_environment_variables() -> None:
    """Load environment variables from .env file if it exists."""
    try:
        from dotenv import load_dotenv

        env_file = Path(__file__).parent / ".env"
        if env_file.exists():
            load_dotenv(env_file)
            logger.debug("Loaded environment variables from %s", env_file)
        else:
            logger.debug("No .env file found at %s", env_file)
    except ImportError:
        logger.debug("python-dotenv not installed, skipping .env file loading")


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(
            f"Invalid {name}={raw!r}: expected an integer (e.g. {name}={default})"
        ) from None
    if value < minimum:
        raise ValueError(f"Invalid {name}={value}: must be >= {minimum}")
    return value


def _env_bool(name: str, default: bool) -> bool:
    raw = os.environ.get(name)
    if raw is None:
        return default
    value = raw.strip().lower()
    if value in _TRUE:
        return True
    if value in _FALSE:
        return False
    raise ValueError(f"Invalid {name}={raw!r}: expected one of true/false/1/0")


# =============================================================================
# STEP 2: Basic Configuration
# =============================================================================


@dataclass
class HergConfiguration:
    """Process-wide settings for the library and the CLI."""

    log_level: str = "WARNING"

    # State sums enumerate 2^e subgraphs; refuse anything larger than this.
    max_state_edges: int = 16

    # Memoize the recursive evaluators on canonical forms.
    memoize: bool = False

    # Seeded draws per (v, e, |H|, twists) cell of the verify corpus.
    corpus_seeds: int = 2

    env_loaded: bool = field(default=False, repr=False)

    def __post_init__(self) -> None:
        """Load environment variables and validate settings."""
        load_environment_variables()
        self.env_loaded = True

        self.log_level = os.environ.get("HERG_LOG_LEVEL", self.log_level).upper()
        if self.log_level not in _LOG_LEVELS:
            raise ValueError(
                f"Invalid HERG_LOG_LEVEL={self.log_level!r}: "
                f"expected one of {', '.join(_LOG_LEVELS)}"
            )

        self.max_state_edges = _env_int(
            "HERG_MAX_STATE_EDGES", self.max_state_edges, minimum=0
        )
        self.memoize = _env_bool("HERG_MEMOIZE", self.memoize)
        self.corpus_seeds = _env_int("HERG_CORPUS_SEEDS", self.corpus_seeds, minimum=1)


# =============================================================================
# STEP 3: Initialize Configuration
# =============================================================================


def load_configuration() -> HergConfiguration:
    """Build a fresh configuration from the current environment."""
    return HergConfiguration()


def configure_logging(level: str | None = None) -> None:
    """Route library logs to stderr at the configured level."""
    logging.basicConfig(
        level=(level or config.log_level).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


config = load_configuration()
