"""Configuration management for supersat."""

import os
from enum import Enum
from pathlib import Path

import yaml
from platformdirs import user_config_dir
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict
from rich.console import Console

# Verbosity level constants
VERBOSITY_QUIET = 0
VERBOSITY_BASIC = 1
VERBOSITY_DETAILED = 2
VERBOSITY_DEBUG = 3

VERBOSITY_ENV = "SUPERSAT_VERBOSITY"
THREADS_ENV = "SUPERSAT_THREADS"

# Diagnostics never share stdout with machine output.
err_console = Console(stderr=True)


class OutputFormat(str, Enum):
    """Rendering of tabular results."""

    JSON = "json"
    TSV = "tsv"
    TABLE = "table"


class GraphFormat(str, Enum):
    """Graph file encodings."""

    EDGE_LIST = "edge-list"
    GRAPH6 = "graph6"


class OptimizerConfig(BaseModel):
    """Optimizer settings."""

    max_offset: int = Field(default=2, ge=0)


class OracleConfig(BaseModel):
    """Exhaustive search settings."""

    max_n: int = Field(default=8, ge=1)
    uniqueness_max_n: int = Field(default=7, ge=1)
    budget: int = Field(default=100_000_000, ge=1)
    witness_cap: int = Field(default=10, ge=0)
    prune: bool = True
    symmetry: bool = True


class OutputConfig(BaseModel):
    """Default output encodings."""

    format: OutputFormat = OutputFormat.JSON
    graph_format: GraphFormat = GraphFormat.EDGE_LIST


class SupersatConfig(BaseSettings):
    """Main configuration for supersat."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="SUPERSAT_",
        case_sensitive=False,
    )

    optimizer: OptimizerConfig = Field(default_factory=OptimizerConfig)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    verbosity: int = 0
    threads: int = Field(default=1, ge=1)
    seed: int = 0
    supersat_config_file: str = "config.yaml"

    def __init__(self, **kwargs) -> None:
        """Initialize SupersatConfig, letting the CLI environment win over file values."""
        super().__init__(**{**kwargs, **_environment_overrides(kwargs)})


def _environment_overrides(kwargs: dict) -> dict[str, int]:
    """Integer values of SUPERSAT_VERBOSITY and SUPERSAT_THREADS.

    A malformed value falls back to the explicit or default one instead of
    failing validation; threads are clamped to at least 1.
    """
    overrides: dict[str, int] = {}
    for env, name, floor_value in ((VERBOSITY_ENV, "verbosity", 0), (THREADS_ENV, "threads", 1)):
        if env not in os.environ:
            continue
        try:
            overrides[name] = max(floor_value, int(os.environ[env]))
        except ValueError:
            overrides[name] = kwargs.get(name, SupersatConfig.model_fields[name].default)
    return overrides


def current_verbosity() -> int:
    """Verbosity requested on the command line, 0 when unset."""
    try:
        return int(os.environ.get(VERBOSITY_ENV, "0"))
    except ValueError:
        return VERBOSITY_QUIET


def log(message: str, level: int = VERBOSITY_BASIC) -> None:
    """Print a diagnostic line to stderr when verbosity allows it."""
    if current_verbosity() >= level:
        err_console.print(f"[dim]{message}[/dim]")


def get_config_path() -> Path:
    """Get the path to the configuration file."""
    config_dir = Path(user_config_dir("supersat"))
    config_dir.mkdir(parents=True, exist_ok=True)

    filename = SupersatConfig().supersat_config_file
    return config_dir / filename


def load_config() -> SupersatConfig:
    """Load configuration from file and environment variables."""
    config_path = get_config_path()

    if config_path.exists():
        with Path.open(config_path) as f:
            config_data = yaml.safe_load(f) or {}
    else:
        config_data = {}

    return SupersatConfig(**config_data)


def save_config(config: SupersatConfig) -> None:
    """Save configuration to file."""
    config_path = get_config_path()

    config_dict = config.model_dump(mode="json")

    with Path.open(config_path, "w") as f:
        yaml.dump(config_dict, f, default_flow_style=False)
