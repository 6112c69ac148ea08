"""Seeded simulation of the randomized solitaires.

Two randomizations are supported: pile selection, where each pile
independently loses one card with probability p, and card selection,
where every single card is picked with probability p.  Sampling is split
from the move itself: a seeded generator draws a mask or per-pile pick
counts, and the deterministic masked steps in bsol.operators apply them.
Identical configs (including the seed) give bit-identical results.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .operators import ejs_masked_step, popov_masked_step
from .partitions import Partition, format_parts, is_partition, potential_energy, triangular_decompose

#: Generator identity; recorded in every ChainStats for reproducibility.
RNG_ALGORITHM = "numpy-pcg64"

VARIANTS = ("popov", "ejs")


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def sample_popov_mask(rng: np.random.Generator, lam: Partition, p: float) -> tuple[int, ...]:
    """Indices of the piles that lose a card this move."""
    hits = rng.random(len(lam)) < p
    return tuple(int(i) for i in np.flatnonzero(hits))


def sample_ejs_picks(rng: np.random.Generator, lam: Partition, p: float) -> tuple[int, ...]:
    """Per-pile counts of picked cards; each card is picked independently."""
    if not lam:
        return ()
    return tuple(int(v) for v in rng.binomial(np.asarray(lam), p))


def staircase_distance(lam: Partition) -> float:
    """Mean per-card deviation from the full staircase of the decomposition k.

    The reference shape is (k, k-1, ..., 1) even for non-triangular totals,
    so distances are comparable along a whole run; it is 0 exactly on the
    staircase of a triangular n.
    """
    n = sum(lam)
    if n == 0:
        return 0.0
    k, _ = triangular_decompose(n)
    width = max(len(lam), k)
    total = 0
    for i in range(1, width + 1):
        part = lam[i - 1] if i <= len(lam) else 0
        total += abs(part - max(k + 1 - i, 0))
    return total / n


@dataclass(frozen=True)
class ChainConfig:
    """Run description; burn_in and samples default to 50n and 500n."""

    n: int
    variant: str
    p: float
    seed: int
    burn_in: int | None = None
    samples: int | None = None
    initial: Partition | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if not 0.0 < self.p <= 1.0:
            raise ValueError(f"p must lie in (0, 1], got {self.p}")
        if self.burn_in is None:
            object.__setattr__(self, "burn_in", 50 * self.n)
        if self.samples is None:
            object.__setattr__(self, "samples", 500 * self.n)
        if self.burn_in < 0 or self.samples < 0:
            raise ValueError("burn_in and samples cannot be negative")
        if self.initial is None:
            object.__setattr__(self, "initial", (self.n,))
        if not is_partition(self.initial) or sum(self.initial) != self.n:
            raise ValueError(f"initial must be a partition of {self.n}: {self.initial}")

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "variant": self.variant,
            "p": self.p,
            "seed": self.seed,
            "burn_in": self.burn_in,
            "samples": self.samples,
            "initial": list(self.initial),
        }


@dataclass(frozen=True)
class ChainStats:
    """Summary of the recorded phase of one chain."""

    config: ChainConfig
    visit_counts: dict[Partition, int]
    mean_shape: tuple[float, ...]
    mean_staircase_distance: float
    mean_energy: float
    rng_algorithm: str = RNG_ALGORITHM
    path: tuple[Partition, ...] | None = field(default=None, repr=False, compare=False)

    def to_json(self, indent: int | None = None) -> str:
        data = {
            "config": self.config.to_jsonable(),
            "rng_algorithm": self.rng_algorithm,
            "mean_shape": list(self.mean_shape),
            "mean_staircase_distance": self.mean_staircase_distance,
            "mean_energy": self.mean_energy,
            "visit_counts": {
                format_parts(lam): count
                for lam, count in sorted(self.visit_counts.items(), reverse=True)
            },
        }
        return json.dumps(data, indent=indent)

    def mean_shape_csv(self) -> str:
        lines = ["index,mean_part"]
        for i, v in enumerate(self.mean_shape, 1):
            lines.append(f"{i},{v}")
        return "\n".join(lines) + "\n"


def _chain_states(config: ChainConfig, rng: np.random.Generator) -> Iterator[Partition]:
    state = config.initial
    for _ in range(config.burn_in + config.samples):
        if config.variant == "popov":
            state = popov_masked_step(state, sample_popov_mask(rng, state, config.p))
        else:
            state = ejs_masked_step(state, sample_ejs_picks(rng, state, config.p))
        yield state


def run_chain(config: ChainConfig, record_path: bool = False) -> ChainStats:
    """Run burn_in + samples moves, tallying the recorded phase.

    The first burn_in post-move states are discarded; each of the next
    samples states is counted once.  With record_path=True the full
    trajectory (initial state included) is kept on the result.
    """
    rng = make_rng(config.seed)
    counts: dict[Partition, int] = {}
    path = [config.initial] if record_path else None
    for step_index, state in enumerate(_chain_states(config, rng)):
        if record_path:
            path.append(state)
        if step_index >= config.burn_in:
            counts[state] = counts.get(state, 0) + 1

    samples = config.samples
    if samples == 0:
        return ChainStats(config, {}, (), 0.0, 0.0,
                          path=tuple(path) if record_path else None)
    width = max(len(lam) for lam in counts)
    shape_sum = [0.0] * width
    dist_sum = 0.0
    energy_sum = 0.0
    for lam, count in counts.items():
        for i, part in enumerate(lam):
            shape_sum[i] += part * count
        dist_sum += staircase_distance(lam) * count
        energy_sum += potential_energy(lam) * count
    return ChainStats(
        config=config,
        visit_counts=counts,
        mean_shape=tuple(v / samples for v in shape_sum),
        mean_staircase_distance=dist_sum / samples,
        mean_energy=energy_sum / samples,
        path=tuple(path) if record_path else None,
    )


@dataclass(frozen=True)
class ShapeProfile:
    """Least-squares fits of the mean shape; purely diagnostic."""

    mean_shape: tuple[float, ...]
    linear_slope: float
    linear_intercept: float
    linear_residual: float
    exponential_amplitude: float
    exponential_rate: float
    exponential_residual: float

    @property
    def better(self) -> str:
        return "linear" if self.linear_residual <= self.exponential_residual else "exponential"

    def to_jsonable(self) -> dict:
        return {
            "linear": {
                "slope": self.linear_slope,
                "intercept": self.linear_intercept,
                "residual": self.linear_residual,
            },
            "exponential": {
                "amplitude": self.exponential_amplitude,
                "rate": self.exponential_rate,
                "residual": self.exponential_residual,
            },
            "better": self.better,
        }


def shape_profile(stats: ChainStats) -> ShapeProfile:
    """Fit the mean shape with a straight line and with an exponential.

    Both fits use only the strictly positive entries; residuals are RMS
    errors in the original scale, so the two numbers are comparable.  The
    exponential is fitted in log space with weights proportional to the
    values, the usual linearization.
    """
    if not stats.mean_shape:
        raise ValueError("chain recorded no samples")
    y = np.asarray(stats.mean_shape, dtype=float)
    x = np.arange(1, len(y) + 1, dtype=float)
    keep = y > 0
    x, y = x[keep], y[keep]
    if len(y) == 1:
        return ShapeProfile(stats.mean_shape, 0.0, float(y[0]), 0.0, float(y[0]), 0.0, 0.0)
    slope, intercept = np.polyfit(x, y, 1)
    lin_res = math.sqrt(float(np.mean((y - (slope * x + intercept)) ** 2)))
    log_slope, log_intercept = np.polyfit(x, np.log(y), 1, w=y)
    amplitude = math.exp(log_intercept)
    rate = -log_slope
    exp_res = math.sqrt(float(np.mean((y - amplitude * np.exp(-rate * x)) ** 2)))
    return ShapeProfile(
        stats.mean_shape,
        float(slope),
        float(intercept),
        lin_res,
        amplitude,
        rate,
        exp_res,
    )
