"""Independent cross-checks for the analytic results.

Two routes that share no code with the expression algebra:

* :func:`sample_expr` draws every seed of an expression from its Gaussian
  law and evaluates the expression sample by sample, giving Monte-Carlo
  estimates with standard errors;
* :func:`covariance_propagate` pushes the 8x8 source covariance matrix
  through the preparation network as explicit symplectic matrices.

Sampling is split into counter-keyed substreams so estimates depend only on
(seed, stream layout), never on how the work is scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import Axis, QuadExpr, squeezed_variance
from .cluster import SOURCE_KINDS, BeamsplitterSpec

_MAX_SEED = 2**64


@dataclass(frozen=True)
class RngConfig:
    """Deterministic sampling layout: base seed plus substream count."""

    seed: int = 0
    stream_count: int = 16

    def __post_init__(self) -> None:
        if not 0 <= self.seed < _MAX_SEED:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.stream_count < 1:
            raise ValueError("stream_count must be >= 1")


@dataclass(frozen=True)
class SampleEstimate:
    """Monte-Carlo estimate of one expression's mean and variance."""

    mean: float
    variance: float
    n: int
    se_mean: float
    se_var: float


def _chunk_sizes(n: int, streams: int) -> list[int]:
    streams = min(streams, n)
    base, extra = divmod(n, streams)
    return [base + (1 if i < extra else 0) for i in range(streams)]


def sample_expr(
    expr: QuadExpr,
    r: float,
    n: int,
    rng: RngConfig = RngConfig(),
) -> SampleEstimate:
    """Estimate an expression's mean and variance from n Gaussian samples.

    Each substream i draws from ``default_rng(SeedSequence([seed, i]))``, so
    two calls with the same configuration are bit-identical regardless of
    scheduling. The variance standard error uses the normal-theory formula
    ``var * sqrt(2/(n-1))``.
    """
    if n < 1000:
        raise ValueError("need at least 1000 samples")
    if r < 0:
        raise ValueError("squeezing parameter r must be >= 0")
    keys = sorted(expr.terms, key=lambda k: (k[0], k[1].value))
    laws = []
    for key in keys:
        seed = expr.registry.seed(*key)
        laws.append((expr.terms[key], seed.mean, math.sqrt(seed.variance_at(r))))

    total_n = 0
    mean = 0.0
    m2 = 0.0
    for i, size in enumerate(_chunk_sizes(n, rng.stream_count)):
        gen = np.random.default_rng(np.random.SeedSequence([rng.seed, i]))
        values = np.full(size, expr.constant)
        for coeff, seed_mean, seed_sd, in laws:
            values += coeff * gen.normal(seed_mean, seed_sd, size)
        chunk_mean = float(values.mean())
        chunk_m2 = float(((values - chunk_mean) ** 2).sum())
        delta = chunk_mean - mean
        merged = total_n + size
        mean += delta * size / merged
        m2 += chunk_m2 + delta * delta * total_n * size / merged
        total_n = merged

    variance = m2 / (total_n - 1)
    return SampleEstimate(
        mean=mean,
        variance=variance,
        n=total_n,
        se_mean=math.sqrt(variance / total_n),
        se_var=variance * math.sqrt(2.0 / (total_n - 1)),
    )


# --------------------------------------------------------------------------
# covariance-matrix route
# --------------------------------------------------------------------------

_J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])


def _symplectic_form(n_modes: int) -> np.ndarray:
    return np.kron(np.eye(n_modes), _J2)


def beamsplitter_symplectic(spec: BeamsplitterSpec, n_modes: int = 4) -> np.ndarray:
    """Explicit matrix of one splitter on the 2*n_modes quadrature vector."""
    if not 0.0 < spec.transmittance < 1.0:
        raise ValueError("transmittance must lie strictly between 0 and 1")
    t = math.sqrt(spec.transmittance)
    rr = math.sqrt(1.0 - spec.transmittance)
    c = math.cos(spec.phase_diff)
    s = math.sin(spec.phase_diff)
    rot = np.array([[c, -s], [s, c]])
    eye2 = np.eye(2)
    mat = np.eye(2 * n_modes)
    ia, ib = 2 * spec.mode_a, 2 * spec.mode_b
    mat[ia:ia + 2, ia:ia + 2] = t * eye2
    mat[ia:ia + 2, ib:ib + 2] = rr * rot
    mat[ib:ib + 2, ia:ia + 2] = rr * eye2
    mat[ib:ib + 2, ib:ib + 2] = -t * rot
    return mat


def covariance_propagate(
    network: Sequence[BeamsplitterSpec | np.ndarray],
    r: float,
) -> np.ndarray:
    """Push the source covariance through a splitter network.

    Starts from the diagonal source covariance (slots ordered as in the
    preparation layout, x before y) and conjugates by each step's matrix.
    Steps may be :class:`BeamsplitterSpec` or raw 8x8 matrices; every matrix
    is checked against the symplectic form first.
    """
    if r < 0:
        raise ValueError("squeezing parameter r must be >= 0")
    diag = []
    for kind in SOURCE_KINDS:
        diag.append(squeezed_variance(kind, Axis.X, r))
        diag.append(squeezed_variance(kind, Axis.Y, r))
    sigma = np.diag(diag)
    j = _symplectic_form(len(SOURCE_KINDS))
    for step in network:
        mat = step if isinstance(step, np.ndarray) else beamsplitter_symplectic(step)
        if mat.shape != sigma.shape:
            raise ValueError("transform has wrong shape")
        if not np.allclose(mat @ j @ mat.T, j, atol=1e-9):
            raise ValueError("non-symplectic transform supplied")
        sigma = mat @ sigma @ mat.T
    return sigma


# --------------------------------------------------------------------------
# certification
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class CertifyResult:
    """Outcome of comparing an analytic value against a sampled estimate."""

    passed: bool
    analytic: float
    estimate: float
    se: float
    k_sigma: float
    statistic: str

    @property
    def delta(self) -> float:
        return abs(self.analytic - self.estimate)


def certify(
    analytic: float,
    estimate: SampleEstimate,
    k_sigma: float,
    statistic: str,
) -> CertifyResult:
    """Check that an analytic moment sits within k standard errors.

    ``statistic`` selects which moment of the estimate is compared:
    ``"mean"`` or ``"variance"``.
    """
    if k_sigma <= 0:
        raise ValueError("k_sigma must be > 0")
    if statistic == "mean":
        value, se = estimate.mean, estimate.se_mean
    elif statistic == "variance":
        value, se = estimate.variance, estimate.se_var
    else:
        raise ValueError("statistic must be 'mean' or 'variance'")
    return CertifyResult(
        passed=abs(analytic - value) <= k_sigma * se,
        analytic=analytic,
        estimate=value,
        se=se,
        k_sigma=k_sigma,
        statistic=statistic,
    )
