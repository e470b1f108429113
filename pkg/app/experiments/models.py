from dataclasses import dataclass, field, replace, asdict
from enum import Enum
from typing import Any

import pandas as pd

from app.networks import DEFAULT_MAX_ITERS, DEFAULT_TOL, UpdateMode, default_mode
from app.networks.factory import ModelSpec


DEFAULT_SUCCESS_TOL = 1e-3


class Domain(Enum):
    """
    Value regime of memories and probes. All three are quaternions with
    zero trailing components where the regime has none.
    """
    BIPOLAR = "bipolar"
    COMPLEX = "complex"
    QUATERNION = "quaternion"


@dataclass(frozen=True)
class TrialConfig:

    domain: Domain
    n: int
    p: int

    model: str

    q: float = 5.0
    L: float = 3.0
    eps_p: float = 1e-5
    alpha: float = 4.0

    noise_prob: float = 0.0
    trials: int = 100
    max_iters: int = DEFAULT_MAX_ITERS
    tol: float = DEFAULT_TOL
    seed: int = 0
    update_mode: UpdateMode | None = None
    success_tol: float = DEFAULT_SUCCESS_TOL

    @property
    def spec(self) -> ModelSpec:
        return ModelSpec.parse(self.model)

    @property
    def kernel_params(self) -> dict[str, float]:
        return {"q": self.q, "L": self.L, "eps_p": self.eps_p, "alpha": self.alpha}

    @property
    def kernel_description(self) -> str:
        """Only the parameters the model's kernel uses, e.g. 'alpha=4'."""
        return self.spec.describe_params(self.kernel_params)

    @property
    def effective_mode(self) -> UpdateMode:
        if self.update_mode is not None:
            return self.update_mode
        return default_mode(self.spec.kind)

    def with_noise(self, noise_prob: float) -> "TrialConfig":
        return replace(self, noise_prob=noise_prob)

    def with_model(self, model: str) -> "TrialConfig":
        return replace(self, model=model)

    def as_record(self) -> dict[str, Any]:
        record = asdict(self)
        record["domain"] = self.domain.value
        record["update_mode"] = self.effective_mode.value
        return record


@dataclass(frozen=True)
class TrialOutcome:

    success: bool
    iterations: int
    converged: bool
    final_distance: float

    singular: bool = False
    overflow: bool = False


@dataclass(frozen=True)
class SweepPoint:

    noise_prob: float
    trials: int
    successes: int
    mean_iterations: float
    converged: int
    singular: int
    overflow: int = 0

    @property
    def recall_probability(self) -> float:
        return self.successes / self.trials


SWEEP_COLUMNS = [
    "model",
    "domain",
    "n",
    "p",
    "kernel_params",
    "noise_prob",
    "trials",
    "successes",
    "recall_prob",
    "mean_iters",
    "seed",
]


@dataclass(frozen=True)
class SweepResult:

    config: TrialConfig
    points: tuple[SweepPoint, ...] = field(default_factory=tuple)

    @property
    def recall_probabilities(self) -> list[float]:
        return [point.recall_probability for point in self.points]

    @property
    def noise_grid(self) -> list[float]:
        return [point.noise_prob for point in self.points]

    @property
    def convergence_rate(self) -> float:
        total = sum(point.trials for point in self.points)
        return sum(point.converged for point in self.points) / total if total else 0.0

    def to_frame(self, extended: bool = False) -> pd.DataFrame:
        """
        One row per grid point, ascending noise_prob.

        extended=True appends the converged, singular and overflow counts.
        """
        cfg = self.config
        rows = []
        for point in sorted(self.points, key=lambda pt: pt.noise_prob):
            row = {
                "model": cfg.model,
                "domain": cfg.domain.value,
                "n": cfg.n,
                "p": cfg.p,
                "kernel_params": cfg.kernel_description,
                "noise_prob": point.noise_prob,
                "trials": point.trials,
                "successes": point.successes,
                "recall_prob": point.recall_probability,
                "mean_iters": point.mean_iterations,
                "seed": cfg.seed,
            }
            if extended:
                row["converged"] = point.converged
                row["singular"] = point.singular
                row["overflow"] = point.overflow
            rows.append(row)
        columns = SWEEP_COLUMNS + (["converged", "singular", "overflow"] if extended else [])
        return pd.DataFrame(rows, columns=columns)
