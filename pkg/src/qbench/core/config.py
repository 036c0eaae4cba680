"""Configuration management"""

import json
from pathlib import Path
from typing import Any, Literal

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from qbench.core.exceptions import ConfigurationError

SOLVER_NAMES = ("nsga2", "sms-emoa", "mo-cma-es")

TrajectoryMode = Literal["population", "archive"]
SpectrumKind = Literal["ellipsoid", "cigar", "discus"]


class SolverConfig(BaseModel):
    """Solver settings shared by NSGA-II, SMS-EMOA and MO-CMA-ES"""

    population_size: int = Field(default=20, ge=2)
    budget: int = Field(default=100_000, ge=2)
    lower_bound: float = -5.0
    upper_bound: float = 5.0
    initial_step_size: float = Field(default=3.0, gt=0)

    # variation operators
    crossover_eta: float = Field(default=20.0, ge=0)
    crossover_probability: float = Field(default=0.9, ge=0, le=1)
    mutation_eta: float = Field(default=20.0, ge=0)
    mutation_rate: float | None = Field(default=None, ge=0, le=1)  # None means 1/d

    # MO-CMA-ES
    target_success: float = Field(default=1 / 5.5, gt=0, lt=1)
    success_threshold: float = Field(default=0.44, gt=0, lt=1)

    seed: int = Field(default=0, ge=0)
    trajectory_mode: TrajectoryMode = "population"
    checkpoints: list[int] | None = None

    @model_validator(mode="after")
    def _check_consistency(self) -> "SolverConfig":
        if self.budget < self.population_size:
            raise ValueError(
                f"budget ({self.budget}) must be at least population_size ({self.population_size})"
            )
        if not self.lower_bound < self.upper_bound:
            raise ValueError("lower_bound must be below upper_bound")
        if self.checkpoints is not None:
            _check_schedule(self.checkpoints, self.budget)
        return self

    @property
    def bounds(self) -> tuple[float, float]:
        return self.lower_bound, self.upper_bound

    def mutation_rate_for(self, dimension: int) -> float:
        return 1.0 / dimension if self.mutation_rate is None else self.mutation_rate


class VerificationConfig(BaseModel):
    """Resolution of the verification checks"""

    random_points: int = Field(default=100, ge=1)
    segment_points: int = Field(default=50, ge=1)
    shape_grid: int = Field(default=201, ge=5)
    grid_size: int = Field(default=600, ge=10)
    front_samples: int = Field(default=2001, ge=10)
    converse_fraction: float = Field(default=0.99, gt=0, le=1)
    seed: int = 0


class ExperimentSpec(BaseModel):
    """Cartesian product of classes, instances and solvers to run"""

    classes: list[str]
    dimension: int = Field(default=10, ge=2)
    index_range: tuple[int, int] = (0, 11)  # half-open [start, stop)
    solvers: list[str] = Field(default_factory=lambda: list(SOLVER_NAMES))
    solver_config: SolverConfig = Field(default_factory=SolverConfig)
    checkpoints: list[int] | None = None
    output_dir: Path = Path("results")
    kappa: float = Field(default=1e3, gt=1)
    spectrum: SpectrumKind = "ellipsoid"
    seed: int = Field(default=0, ge=0)
    workers: int = Field(default=1, ge=1)

    @field_validator("classes")
    @classmethod
    def _check_classes(cls, value: list[str]) -> list[str]:
        from qbench.problems.classes import expand_class_names

        expand_class_names(value)
        return value

    @field_validator("index_range")
    @classmethod
    def _check_index_range(cls, value: tuple[int, int]) -> tuple[int, int]:
        start, stop = value
        if start < 0 or stop <= start:
            raise ValueError(f"index_range must satisfy 0 <= start < stop, got {value}")
        return value

    @field_validator("solvers")
    @classmethod
    def _check_solvers(cls, value: list[str]) -> list[str]:
        if not value:
            raise ValueError("At least one solver is required")
        unknown = [name for name in value if name not in SOLVER_NAMES]
        if unknown:
            raise ValueError(f"Unknown solver(s) {unknown}; available: {list(SOLVER_NAMES)}")
        return value

    @model_validator(mode="after")
    def _check_checkpoints(self) -> "ExperimentSpec":
        if self.checkpoints is not None:
            _check_schedule(self.checkpoints, self.solver_config.budget)
        return self

    @property
    def class_names(self) -> list[str]:
        from qbench.problems.classes import expand_class_names

        return expand_class_names(self.classes)

    @property
    def indices(self) -> range:
        return range(*self.index_range)

    def resolved_solver_config(self) -> SolverConfig:
        """Solver settings with the experiment's checkpoint schedule applied"""
        if self.checkpoints is None:
            return self.solver_config
        return self.solver_config.model_copy(update={"checkpoints": list(self.checkpoints)})

    @classmethod
    def load(cls, path: Path | str) -> "ExperimentSpec":
        """Read a spec from a YAML or JSON file"""
        return cls(**_read_mapping(Path(path)))


class Config(BaseModel):
    """Main configuration"""

    kappa: float = Field(default=1e3, gt=1)
    spectrum: SpectrumKind = "ellipsoid"
    solver: SolverConfig = Field(default_factory=SolverConfig)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)
    cache_dir: Path = Path(".cache/qbench")
    experiment: ExperimentSpec | None = None

    @classmethod
    def load(cls, path: Path | str) -> "Config":
        """Load the configuration from a YAML file; a missing file gives the defaults"""
        path = Path(path)
        if not path.exists():
            return cls()
        return cls(**_read_mapping(path))

    @classmethod
    def load_with_preset(
        cls, config_path: Path | str, preset_path: Path | str | None = None
    ) -> "Config":
        """Merge an experiment preset over the main configuration.

        The preset's ``solver_config`` is layered over the configured solver
        defaults, and kappa/spectrum fall back to the main configuration.
        """
        config = cls.load(config_path)
        if not preset_path:
            return config

        preset_path = Path(preset_path)
        if not preset_path.exists():
            raise ConfigurationError(f"Preset file not found: {preset_path}")
        preset = _read_mapping(preset_path)

        solver_data = config.solver.model_dump()
        solver_data.update(preset.get("solver_config") or {})
        preset["solver_config"] = solver_data
        preset.setdefault("kappa", config.kappa)
        preset.setdefault("spectrum", config.spectrum)

        config.experiment = ExperimentSpec(**preset)
        return config


class EnvSettings(BaseSettings):
    """Settings from QBENCH_* environment variables"""

    workers: int | None = None
    cache_dir: Path | None = None
    log_level: str = "WARNING"

    model_config = SettingsConfigDict(
        env_prefix="QBENCH_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


def _read_mapping(path: Path) -> dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as f:
            if path.suffix == ".json":
                data = json.load(f)
            else:
                data = yaml.safe_load(f)
    except (OSError, yaml.YAMLError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Cannot read {path}: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(f"{path} must contain a mapping at the top level")
    return data


def _check_schedule(checkpoints: list[int], budget: int) -> None:
    if not checkpoints:
        raise ValueError("Checkpoint schedule must not be empty")
    if any(b <= a for a, b in zip(checkpoints, checkpoints[1:])):
        raise ValueError("Checkpoints must be strictly increasing")
    if checkpoints[0] < 1 or checkpoints[-1] > budget:
        raise ValueError(f"Checkpoints must lie in [1, {budget}]")
