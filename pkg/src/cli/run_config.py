"""Per-subcommand run configurations, checked before any graph work starts."""
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from config import (
    ANALYZE_METRICS,
    ATTACK_TRIALS,
    CURVE_POINTS,
    DEFAULT_BIN_WIDTH,
    DEFAULT_FIT_METHOD,
    DEFAULT_K_MIN,
    DEFAULT_R_CUT,
    DEFAULT_R_MAX,
    FIT_METHODS,
    GENERATOR_MODELS,
)
from src.generators.settings import MAX_SEED

# generator flags and the models that read them
_FLAG_MODELS = {
    "m": {"ba", "fitness_ba", "rich_club_ba"},
    "c": {"rich_club_ba"},
    "retries": {"rich_club_ba"},
    "fitness": {"fitness_ba"},
    "exponent": {"inet_like"},
    "k_max": {"inet_like"},
    "preference": {"inet_like"},
    "p": {"er_random"},
    "links": {"er_random"},
}


class RunConfig(BaseModel):
    """Flags of one CLI run. Unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid")

    command: str

    def resolved(self) -> Dict[str, Any]:
        """Every flag as given or defaulted, echoed into the run's sidecars."""
        return self.model_dump(mode="json")


class GenerateRun(RunConfig):
    command: Literal["generate"] = "generate"
    model: str
    nodes: int = Field(..., ge=1, description="N, number of nodes")
    seed: int = Field(..., ge=0, le=MAX_SEED)
    output: str
    m: Optional[int] = Field(None, ge=1)
    c: Optional[int] = Field(None, ge=0)
    retries: Optional[int] = Field(None, ge=1)
    fitness: Optional[Literal["uniform", "constant"]] = None
    exponent: Optional[float] = Field(None, gt=1.0)
    k_max: Optional[int] = Field(None, ge=1)
    preference: Optional[Literal["degree", "degree_plus_one"]] = None
    p: Optional[float] = Field(None, ge=0.0, le=1.0)
    links: Optional[int] = Field(None, ge=0)

    @field_validator("model")
    @classmethod
    def _known_model(cls, v: str) -> str:
        if v not in GENERATOR_MODELS:
            raise ValueError(f"Unknown model {v!r}, expected one of {GENERATOR_MODELS}")
        return v

    @model_validator(mode="after")
    def _no_stray_flags(self):
        stray = sorted(flag for flag, models in _FLAG_MODELS.items()
                       if getattr(self, flag) is not None and self.model not in models)
        if stray:
            raise ValueError(f"Flags {['--' + f.replace('_', '-') for f in stray]} do not apply to model {self.model}")
        return self


class AnalyzeRun(RunConfig):
    command: Literal["analyze"] = "analyze"
    input: str
    output_dir: Optional[str] = None
    metrics: List[str] = Field(default_factory=lambda: list(ANALYZE_METRICS), min_length=1)
    r_max: float = Field(DEFAULT_R_MAX, gt=0.0, le=1.0)
    r_cut: float = Field(DEFAULT_R_CUT, gt=0.0, le=1.0)
    bin_width: float = Field(DEFAULT_BIN_WIDTH, gt=0.0, le=1.0)
    k_min: Union[Annotated[int, Field(ge=1)], Literal["auto"]] = DEFAULT_K_MIN
    fit_method: str = DEFAULT_FIT_METHOD
    curve_points: int = Field(CURVE_POINTS, ge=1)
    snap_ties: bool = False
    club_hop_limit: Optional[float] = Field(None, gt=0.0)
    lenient: bool = False

    @field_validator("metrics")
    @classmethod
    def _known_metrics(cls, v: List[str]) -> List[str]:
        unknown = [m for m in v if m not in ANALYZE_METRICS]
        if unknown:
            raise ValueError(f"Unknown metrics {unknown}, expected a subset of {ANALYZE_METRICS}")
        return v

    @field_validator("fit_method")
    @classmethod
    def _known_fit_method(cls, v: str) -> str:
        if v not in FIT_METHODS:
            raise ValueError(f"Unknown fit method {v!r}, expected one of {FIT_METHODS}")
        return v


class CompareRun(RunConfig):
    command: Literal["compare"] = "compare"
    inputs: List[str] = Field(..., min_length=2)
    labels: Optional[List[str]] = None
    output: str
    curve_points: int = Field(CURVE_POINTS, ge=1)
    lenient: bool = False

    @model_validator(mode="after")
    def _one_label_per_input(self):
        if self.labels is not None and len(self.labels) != len(self.inputs):
            raise ValueError(f"Got {len(self.labels)} labels for {len(self.inputs)} inputs")
        return self


class AttackRun(RunConfig):
    command: Literal["attack"] = "attack"
    input: str
    fraction: float = Field(..., gt=0.0, lt=1.0)
    seed: int = Field(..., ge=0, le=MAX_SEED)
    trials: int = Field(ATTACK_TRIALS, ge=1, description="Random-failure replicas, seeds seed..seed+trials-1")
    no_paths: bool = False
    output: str
    lenient: bool = False

    @model_validator(mode="after")
    def _seeds_fit(self):
        if self.seed + self.trials - 1 > MAX_SEED:
            raise ValueError(f"Seeds {self.seed}..{self.seed + self.trials - 1} exceed the 64-bit range")
        return self


_RUNS = {
    "generate": GenerateRun,
    "analyze": AnalyzeRun,
    "compare": CompareRun,
    "attack": AttackRun,
}


def validate_run(command: str, flags: Dict[str, Any]) -> RunConfig:
    """Build the run configuration of ``command`` from parsed flags; raises pydantic.ValidationError."""
    return _RUNS[command].model_validate({**flags, "command": command})
