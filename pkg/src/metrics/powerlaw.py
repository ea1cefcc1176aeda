"""Degree distributions and power-law exponent fitting."""
from dataclasses import dataclass
from typing import Dict, Literal, Optional, Union

import numpy as np
from loguru import logger
from pydantic import BaseModel, Field
from scipy.optimize import minimize_scalar
from scipy.special import zeta
from scipy.stats import linregress

from config import DEFAULT_FIT_METHOD, DEFAULT_K_MIN, KS_MIN_TAIL
from src.graph import Graph
from src.utils.errors import FitError

# search interval for the discrete MLE exponent
_ALPHA_BOUNDS = (1.0 + 1e-6, 20.0)


@dataclass(frozen=True, eq=False)
class DegreeDistribution:
    """Distinct degrees ``values`` with node ``counts`` and CCDF(k) = P(degree >= k)."""

    values: np.ndarray
    counts: np.ndarray
    ccdf: np.ndarray

    @classmethod
    def from_degrees(cls, degrees) -> "DegreeDistribution":
        values, counts = np.unique(np.asarray(degrees, dtype=np.int64), return_counts=True)
        tail = np.cumsum(counts[::-1])[::-1]
        return cls(values=values, counts=counts, ccdf=tail / counts.sum())

    @property
    def node_count(self) -> int:
        return int(self.counts.sum())

    def histogram(self) -> Dict[int, int]:
        return {int(k): int(c) for k, c in zip(self.values, self.counts)}

    def ccdf_map(self) -> Dict[int, float]:
        return {int(k): float(c) for k, c in zip(self.values, self.ccdf)}


class PowerLawFit(BaseModel):
    method: str
    exponent: float = Field(..., description="y in P(k) ∝ k^-y")
    k_min: int
    n_tail: int = Field(..., description="Nodes with degree >= k_min")
    points: int = Field(..., description="Distinct degree values >= k_min")
    r_squared: Optional[float] = Field(None, description="ccdf_regression goodness of fit")
    log_likelihood: Optional[float] = Field(None, description="discrete_mle maximized log-likelihood")
    std_error: Optional[float] = Field(None, description="discrete_mle asymptotic standard error")
    ks_distance: Optional[float] = Field(None, description="Largest CCDF gap between tail and fitted law, set when k_min was scanned")


def degree_distribution(g: Graph) -> DegreeDistribution:
    return DegreeDistribution.from_degrees(g.degrees())


def _log_zeta(alpha: float, k_min: int) -> float:
    return float(np.log(zeta(alpha, k_min)))


def _fit_ccdf(dist: DegreeDistribution, mask: np.ndarray, k_min: int) -> PowerLawFit:
    fit = linregress(np.log(dist.values[mask]), np.log(dist.ccdf[mask]))
    # CCDF decays with exponent y - 1
    return PowerLawFit(method="ccdf_regression", exponent=1.0 - fit.slope, k_min=k_min,
                       n_tail=int(dist.counts[mask].sum()), points=int(mask.sum()), r_squared=fit.rvalue ** 2)


def _fit_mle(dist: DegreeDistribution, mask: np.ndarray, k_min: int) -> PowerLawFit:
    counts = dist.counts[mask].astype(np.float64)
    n = counts.sum()
    log_sum = float((counts * np.log(dist.values[mask])).sum())

    def nll(alpha: float) -> float:
        return alpha * log_sum + n * _log_zeta(alpha, k_min)

    res = minimize_scalar(nll, bounds=_ALPHA_BOUNDS, method="bounded", options={"xatol": 1e-10})
    alpha = float(res.x)
    h = 1e-4
    curvature = (_log_zeta(alpha + h, k_min) - 2 * _log_zeta(alpha, k_min) + _log_zeta(alpha - h, k_min)) / h**2
    std_error = float(1.0 / np.sqrt(n * curvature)) if curvature > 0 else None
    return PowerLawFit(method="discrete_mle", exponent=alpha, k_min=k_min, n_tail=int(n), points=int(mask.sum()),
                       log_likelihood=-float(res.fun), std_error=std_error)


def _ks_distance(dist: DegreeDistribution, mask: np.ndarray, alpha: float, k_min: int) -> float:
    values = dist.values[mask]
    counts = dist.counts[mask]
    empirical = np.cumsum(counts[::-1])[::-1] / counts.sum()
    model = zeta(alpha, values) / zeta(alpha, k_min)
    return float(np.max(np.abs(empirical - model)))


def select_k_min(dist: DegreeDistribution, min_tail: int = KS_MIN_TAIL) -> PowerLawFit:
    """Discrete MLE at the tail cutoff whose fit lies closest to the data.

    Every distinct degree leaving at least ``min_tail`` nodes and 3 distinct
    values above it is tried; the one with the smallest Kolmogorov-Smirnov
    distance between tail CCDF and fitted CCDF wins.
    """
    tail_sizes = np.cumsum(dist.counts[::-1])[::-1]
    distinct_above = np.arange(dist.values.size, 0, -1)
    candidates = dist.values[(tail_sizes >= min_tail) & (distinct_above >= 3)]
    if candidates.size == 0:
        raise FitError(f"No k_min leaves {min_tail} nodes and 3 distinct degrees in the tail")

    best = None
    for k in candidates.tolist():
        mask = dist.values >= k
        fit = _fit_mle(dist, mask, k)
        ks = _ks_distance(dist, mask, fit.exponent, k)
        if best is None or ks < best.ks_distance:
            best = fit.model_copy(update={"ks_distance": ks})
    logger.debug(f"k_min scan over {candidates.size} cutoffs picked k_min={best.k_min} (KS={best.ks_distance:.4f})")
    return best


def fit_power_law_exponent(dist: DegreeDistribution, k_min: Union[int, Literal["auto"]] = DEFAULT_K_MIN,
                           method: str = DEFAULT_FIT_METHOD) -> PowerLawFit:
    """Fit y in P(k) ∝ k^-y over degrees >= k_min.

    ``k_min="auto"`` picks the cutoff with ``select_k_min`` and then fits
    ``method`` over that tail.
    """
    if method not in ("ccdf_regression", "discrete_mle"):
        raise FitError(f"Unknown fit method: {method}")
    if k_min == "auto":
        scanned = select_k_min(dist)
        if method == "discrete_mle":
            return scanned
        fit = fit_power_law_exponent(dist, scanned.k_min, method)
        return fit.model_copy(update={"ks_distance": scanned.ks_distance})
    if k_min < 1:
        raise FitError(f"k_min must be >= 1, got {k_min}")
    if dist.values.size == 0 or k_min > dist.values.max():
        raise FitError(f"k_min={k_min} exceeds the maximum degree")
    mask = dist.values >= k_min
    if mask.sum() < 3:
        raise FitError(f"Need at least 3 distinct degrees >= {k_min}, got {int(mask.sum())}")

    fit = _fit_ccdf(dist, mask, k_min) if method == "ccdf_regression" else _fit_mle(dist, mask, k_min)
    logger.debug(f"Power-law fit {fit.method}: y={fit.exponent:.4f} over {fit.points} degree values")
    return fit
