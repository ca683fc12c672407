"""Gaussian state analysis and the reference curve/surface datasets.

Wigner functions are evaluated on rectangular phase-space grids from the
first and second moments of a mode. The ``fig*_dataset`` builders assemble
the exact datasets behind the package's reference figures:

* fig3: minimum distinguishable displacements over (r, r') for squeezed
  inputs with variance ``e^{-2r'}`` in the displaced quadrature;
* fig4: coherent-state propagation fidelity versus r;
* fig5: squeezer output variance versus detection angle phi for several
  ``tan(theta)`` at fixed r;
* fig6: the same versus phi for several r at fixed ``tan(theta)``, with a
  shot-noise reference column;
* fig8: Wigner grids of the controlled-X inputs and outputs.

All builders are deterministic functions of their arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .algebra import ModePair
from .gates import (
    CxParams,
    SqueezerParams,
    cx_output_moments,
    identity_fidelity,
    min_distinguishable_displacement,
    rotated_output_variance,
)

_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class GaussianMoments:
    """Mean vector and 2x2 covariance of one mode's (x, y) quadratures."""

    mean: tuple[float, float]
    cov: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.cov, dtype=float)
        if arr.shape != (2, 2):
            raise ValueError("covariance must be 2x2")
        if abs(arr[0, 1] - arr[1, 0]) > _SYMMETRY_TOL:
            raise ValueError("covariance must be symmetric")
        if np.linalg.det(arr) <= 0:
            raise ValueError("covariance must be positive definite")
        object.__setattr__(self, "cov", arr)
        object.__setattr__(self, "mean", (float(self.mean[0]), float(self.mean[1])))


def mode_moments(mode: ModePair, r: float) -> GaussianMoments:
    """Evaluate a mode's Gaussian moments at squeezing parameter r."""
    cxy = mode.x.covariance(mode.y, r)
    cov = np.array([[mode.x.variance(r), cxy], [cxy, mode.y.variance(r)]])
    return GaussianMoments(mean=(mode.x.mean(), mode.y.mean()), cov=cov)


def wigner(moments: GaussianMoments, x_grid: np.ndarray, y_grid: np.ndarray) -> np.ndarray:
    """Wigner function on the outer product of two strictly increasing grids.

    Returns ``W[i, j] = W(x_grid[i], y_grid[j])`` with the normalization
    ``W = exp(-(v-mu)^T cov^{-1} (v-mu) / 2) / (2 pi sqrt(det cov))``, so a
    vacuum state peaks at ``1/(2 pi)`` and the grid integral is 1.
    """
    x = np.asarray(x_grid, dtype=float)
    y = np.asarray(y_grid, dtype=float)
    for name, g in (("x_grid", x), ("y_grid", y)):
        if g.ndim != 1 or g.size < 1:
            raise ValueError(f"{name} must be a non-empty 1-d array")
        if g.size > 1 and not np.all(np.diff(g) > 0):
            raise ValueError(f"{name} must be strictly increasing")
    cov = moments.cov
    det = cov[0, 0] * cov[1, 1] - cov[0, 1] * cov[1, 0]
    if det <= 0:
        raise ValueError("singular covariance")
    inv00 = cov[1, 1] / det
    inv11 = cov[0, 0] / det
    inv01 = -cov[0, 1] / det
    dx = (x - moments.mean[0])[:, None]
    dy = (y - moments.mean[1])[None, :]
    quad = inv00 * dx * dx + 2.0 * inv01 * dx * dy + inv11 * dy * dy
    return np.exp(-0.5 * quad) / (2.0 * math.pi * math.sqrt(det))


@dataclass(frozen=True)
class CurveDataset:
    """A named, columnar dataset ready for serialization.

    ``values`` has one row per sample and one column per name in
    ``columns``; all entries must be finite.
    """

    tag: str
    columns: tuple[str, ...]
    values: np.ndarray
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        arr = np.asarray(self.values, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != len(self.columns):
            raise ValueError("values shape does not match columns")
        if not np.all(np.isfinite(arr)):
            raise ValueError("dataset contains non-finite entries")
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "columns", tuple(self.columns))

    def column(self, name: str) -> np.ndarray:
        if name not in self.columns:
            raise KeyError(f"unknown column {name!r}")
        return self.values[:, self.columns.index(name)]


def _as_grid(name: str, grid: Iterable[float]) -> np.ndarray:
    arr = np.asarray(list(grid), dtype=float)
    if arr.size == 0:
        raise ValueError(f"{name} must be non-empty")
    return arr


def fig3_dataset(
    r_grid: Iterable[float],
    rprime_grid: Iterable[float],
    criterion: int = 99,
) -> CurveDataset:
    """Minimum distinguishable displacement surface over (r, r').

    The input is squeezed by r' in the displaced quadrature, so each
    surface uses input variance ``e^{-2r'}``. Rows are emitted row-major
    with r as the outer loop.
    """
    rs = _as_grid("r_grid", r_grid)
    rps = _as_grid("rprime_grid", rprime_grid)
    rows = []
    for r in rs:
        for rp in rps:
            v_in = math.exp(-2.0 * rp)
            s0, s1 = min_distinguishable_displacement(r, v_in, v_in, criterion)
            rows.append((r, rp, s0, s1))
    return CurveDataset(
        tag="fig3",
        columns=("r", "r_prime", "s0_min", "s1_min"),
        values=np.array(rows),
        meta={"criterion": criterion,
              "r_grid": [float(rs[0]), float(rs[-1]), int(rs.size)],
              "rprime_grid": [float(rps[0]), float(rps[-1]), int(rps.size)]},
    )


def fig4_dataset(r_grid: Iterable[float]) -> CurveDataset:
    """Coherent-state propagation fidelity versus squeezing."""
    rs = _as_grid("r_grid", r_grid)
    rows = [(r, identity_fidelity(r)) for r in rs]
    return CurveDataset(
        tag="fig4",
        columns=("r", "fidelity"),
        values=np.array(rows),
        meta={"input": "coherent", "gains": "optimal"},
    )


def _label(value: float) -> str:
    return format(value, "g")


def fig5_dataset(
    phi_grid: Iterable[float],
    tan_thetas: Iterable[float] = (0.0, 1.0, 2.0, 5.0),
    r: float = 2.0,
) -> CurveDataset:
    """Squeezer output variance versus phi for several tan(theta)."""
    phis = _as_grid("phi_grid", phi_grid)
    ts = [float(t) for t in tan_thetas]
    if not ts:
        raise ValueError("tan_thetas must be non-empty")
    params = [SqueezerParams.from_tan(t) for t in ts]
    rows = [
        [phi] + [rotated_output_variance(p, r, phi) for p in params]
        for phi in phis
    ]
    return CurveDataset(
        tag="fig5",
        columns=("phi", *[f"v_tantheta_{_label(t)}" for t in ts]),
        values=np.array(rows),
        meta={"r": r, "tan_thetas": ts, "input": "coherent"},
    )


def fig6_dataset(
    phi_grid: Iterable[float],
    r_values: Iterable[float] = (0.3, 0.55, 0.6, 1.15),
    tan_theta: float = 2.0,
) -> CurveDataset:
    """Squeezer output variance versus phi for several r, plus shot noise."""
    phis = _as_grid("phi_grid", phi_grid)
    rs = [float(r) for r in r_values]
    if not rs:
        raise ValueError("r_values must be non-empty")
    params = SqueezerParams.from_tan(tan_theta)
    rows = [
        [phi] + [rotated_output_variance(params, r, phi) for r in rs] + [1.0]
        for phi in phis
    ]
    return CurveDataset(
        tag="fig6",
        columns=("phi", *[f"v_r_{_label(r)}" for r in rs], "snl"),
        values=np.array(rows),
        meta={"tan_theta": tan_theta, "r_values": rs, "input": "coherent"},
    )


def _centered_grid(mean: float, var: float, points: int, span: float) -> np.ndarray:
    half = span * math.sqrt(var)
    return np.linspace(mean - half, mean + half, points)


def _wigner_panel(
    name: str,
    moments: GaussianMoments,
    points: int,
    span: float,
    extra_meta: dict,
) -> CurveDataset:
    x = _centered_grid(moments.mean[0], moments.cov[0, 0], points, span)
    y = _centered_grid(moments.mean[1], moments.cov[1, 1], points, span)
    w = wigner(moments, x, y)
    values = np.column_stack(
        (np.repeat(x, y.size), np.tile(y, x.size), w.ravel())
    )
    meta = {
        "panel": name,
        "mean": [moments.mean[0], moments.mean[1]],
        "var": [float(moments.cov[0, 0]), float(moments.cov[1, 1])],
        "grid_points": points,
        "span_sigmas": span,
    }
    meta.update(extra_meta)
    return CurveDataset(tag="fig8", columns=("x", "y", "w"), values=values, meta=meta)


def fig8_dataset(
    r_values: Iterable[float] = (1.0, 3.0),
    grid_points: int = 201,
    span: float = 5.0,
    caption_reading: str = "stddev",
    s_c: float = 1.0,
    s_t: float = 2.0,
) -> Mapping[str, CurveDataset]:
    """Wigner grids of the controlled-X inputs and outputs.

    Inputs are amplitude-squeezed states displaced to ``s_c``/``s_t``. Their
    quoted spreads ``e^{-1}``/``e`` are read as standard deviations by
    default (variances ``e^{-2}``/``e^{2}``); pass
    ``caption_reading="variance"`` for the literal-variance reading. One
    panel per input plus control/target outputs at each r, every grid
    centered on its mean and spanning ``span`` standard deviations.
    """
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    if span <= 0:
        raise ValueError("span must be > 0")
    if caption_reading == "stddev":
        vx, vy = math.exp(-2.0), math.exp(2.0)
    elif caption_reading == "variance":
        vx, vy = math.exp(-1.0), math.exp(1.0)
    else:
        raise ValueError("caption_reading must be 'stddev' or 'variance'")
    rs = [float(r) for r in r_values]
    if not rs:
        raise ValueError("r_values must be non-empty")
    common = {"caption_reading": caption_reading, "s_c": s_c, "s_t": s_t}
    panels: dict[str, CurveDataset] = {}
    panels["input_control"] = _wigner_panel(
        "input_control",
        GaussianMoments((s_c, 0.0), np.diag([vx, vy])),
        grid_points, span, dict(common),
    )
    panels["input_target"] = _wigner_panel(
        "input_target",
        GaussianMoments((s_t, 0.0), np.diag([vx, vy])),
        grid_points, span, dict(common),
    )
    params = CxParams(s_c=s_c, s_t=s_t, var_cx=vx, var_cy=vy, var_tx=vx, var_ty=vy)
    for r in rs:
        moments = cx_output_moments(params, r)
        for mode in ("control", "target"):
            stats = moments[mode]
            name = f"output_{mode}_r{_label(r)}"
            panels[name] = _wigner_panel(
                name,
                GaussianMoments(
                    (stats.mean_x, stats.mean_y),
                    np.diag([stats.var_x, stats.var_y]),
                ),
                grid_points, span, dict(common, r=r),
            )
    return panels
