"""Pydantic models for CLI runs and the rows they emit."""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator

from concord.config import settings
from concord.constants import (
    DEFAULT_DELIMITER,
    DEFAULT_THREADS,
    OUTPUT_JSON,
    SIMULATE_N_GRID,
    STUDY_EPSILONS,
    STUDY_K_GRID,
    STUDY_SCENARIOS,
)
from concord.models.multinomial import ScenarioSpec


def _strictly_increasing(values: list, name: str) -> list:
    if not values:
        raise ValueError(f"{name} must not be empty")
    if any(b <= a for a, b in zip(values, values[1:], strict=False)):
        raise ValueError(f"{name} must be strictly increasing")
    return values


class RunConfig(BaseModel):
    """Validated options of one CLI invocation."""

    model_config = ConfigDict(frozen=True)

    subcommand: Literal["compare", "expect", "simulate", "bench"]
    inputs: list[Path] = Field(default_factory=list)
    delimiter: str = DEFAULT_DELIMITER
    header: bool = False
    output_format: Literal["json", "tsv"] = OUTPUT_JSON
    seed: int = Field(default=0, ge=0)
    reps: int = Field(default=5, ge=1)
    mc: int | None = Field(default=None, ge=2)
    scenarios: list[int] = Field(default_factory=lambda: list(STUDY_SCENARIOS))
    k_grid: list[int] = Field(default_factory=lambda: list(STUDY_K_GRID))
    epsilons: list[float] = Field(default_factory=lambda: list(STUDY_EPSILONS))
    n_grid: list[int] = Field(default_factory=lambda: list(SIMULATE_N_GRID))
    threads: int = Field(default=DEFAULT_THREADS, ge=1)
    dense_cap: int = Field(default_factory=lambda: settings.dense_cap, ge=1)
    independent: bool = False
    table: Path | None = None
    n: int | None = Field(default=None, ge=1)
    scenario: ScenarioSpec | None = None
    require_mari: bool = False
    require_ari_normalized: bool = False

    @field_validator("delimiter")
    @classmethod
    def _single_character(cls, value: str) -> str:
        if len(value) != 1:
            raise ValueError("delimiter must be a single character")
        return value

    @field_validator("scenarios")
    @classmethod
    def _known_scenarios(cls, value: list[int]) -> list[int]:
        _strictly_increasing(value, "scenarios")
        if not set(value) <= set(STUDY_SCENARIOS):
            raise ValueError("scenarios must be drawn from {1, 2, 3}")
        return value

    @field_validator("k_grid")
    @classmethod
    def _valid_k_grid(cls, value: list[int]) -> list[int]:
        _strictly_increasing(value, "K grid")
        if value[0] < 2:
            raise ValueError("K grid values must be >= 2")
        return value

    @field_validator("epsilons")
    @classmethod
    def _valid_epsilons(cls, value: list[float]) -> list[float]:
        _strictly_increasing(value, "epsilon list")
        if not all(0.0 < eps < 1.0 for eps in value):
            raise ValueError("epsilon values must lie in (0, 1)")
        return value

    @field_validator("n_grid")
    @classmethod
    def _valid_n_grid(cls, value: list[int]) -> list[int]:
        _strictly_increasing(value, "n grid")
        if value[0] < 2:
            raise ValueError("n grid values must be >= 2")
        return value


class SimulationRow(BaseModel):
    """One (scenario, K, epsilon, n) cell of the bias study."""

    model_config = ConfigDict(frozen=True)

    scenario: int
    k: int
    epsilon: float
    n: int
    bias: float
    abs_bias: float
    bound: float
    mc_reps: int | None = None
    mc_mean_ari_unnormalized: float | None = None
    mc_se_ari_unnormalized: float | None = None
    mc_mean_mari: float | None = None
    mc_se_mari: float | None = None


class BenchRow(BaseModel):
    """Median timings of the sparse and dense summaries for one (n, K) cell."""

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    repeats: int
    sparse_seconds: float
    dense_seconds: float | None = None
