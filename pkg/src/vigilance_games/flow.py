"""Continuous-time gradient flow for the two-player game.

Both players descend their own cost simultaneously:

    dg/dt = -dU_g/dg        da/dt = -dU_a/da

evaluated on true throughputs (one greedy, one vigilante). The flow is
integrated with classic fourth-order Runge-Kutta and clamped to the unit
square after every step, which realises the jammed corner g = 1 as a
boundary the state can press against. Fixed points are zeros of the field,
found by Newton iteration from a seed grid with the analytic Jacobian, and
classified by the Jacobian's eigenvalues. A stable fixed point of the flow
need not be a Nash equilibrium: stationarity only needs a local minimum,
while equilibrium needs the global one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .best_response import greedy_cost_curvature, greedy_cost_slope
from .equilibrium import verify_nash
from .model import GameConfig, fair_baselines
from .play import Trajectory


def _require_two_player(config: GameConfig):
    if config.m_greedy != 1 or config.v_vigilante != 1:
        raise ValueError("flow dynamics handle exactly one greedy and one vigilante")


def gradient_field(point, config: GameConfig) -> tuple[float, float]:
    """(dg/dt, da/dt) at the given (g, a)."""
    _require_two_player(config)
    g, a = float(point[0]), float(point[1])
    b = fair_baselines(config)
    c = b.pair_clearance
    lam, rho = config.lam[0], config.rho[0]
    x = (1.0 - a) * c
    du_g = greedy_cost_slope(g, x, lam, config)
    e = g * x - b.vigilante_target
    du_a = -2.0 * g * c * e + 2.0 * rho * (a - config.q_fair)
    return (-float(du_g), -float(du_a))


def flow_jacobian(point, config: GameConfig) -> np.ndarray:
    """Jacobian of the field, from the analytic second partials."""
    _require_two_player(config)
    g, a = float(point[0]), float(point[1])
    b = fair_baselines(config)
    c = b.pair_clearance
    t = b.greedy_target
    lam, rho = config.lam[0], config.rho[0]
    x = (1.0 - a) * c
    d = g * x - t
    u = g - config.q_fair
    p = 1.0 + lam * u * u
    ugg = greedy_cost_curvature(g, x, lam, config)
    uga = -2.0 * c * ((2.0 * g * x - t) * p + 2.0 * lam * u * g * d)
    uaa = 2.0 * g * g * c * c + 2.0 * rho
    uag = -2.0 * c * (2.0 * g * x - b.vigilante_target)
    return -np.array([[ugg, uga], [uag, uaa]])


def integrate(init, dt: float, steps: int, config: GameConfig) -> Trajectory:
    """RK4 path from init, clamped to the unit square after every step.

    The endpoint verdict is "deadlock" when the state finishes pressed
    against g = 1, "converged" when the raw field there is below 1e-6 in
    max norm, else "maxed_out".
    """
    _require_two_player(config)
    if dt <= 0.0 or steps < 1:
        raise ValueError("need dt > 0 and at least one step")
    y = np.array([float(init[0]), float(init[1])])
    if not (0.0 <= y[0] <= 1.0 and 0.0 <= y[1] <= 1.0):
        raise ValueError("initial condition outside the unit square")
    states = np.empty((steps + 1, 2))
    states[0] = y

    def f(p):
        return np.array(gradient_field(p, config))

    for t in range(1, steps + 1):
        k1 = f(y)
        k2 = f(y + 0.5 * dt * k1)
        k3 = f(y + 0.5 * dt * k2)
        k4 = f(y + dt * k3)
        y = y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        y = np.clip(y, 0.0, 1.0)
        states[t] = y
    if y[0] >= 1.0 - 1e-9:
        verdict = "deadlock"
    elif float(np.max(np.abs(f(y)))) < 1e-6:
        verdict = "converged"
    else:
        verdict = "maxed_out"
    return Trajectory(
        states=states,
        m=1,
        v=1,
        verdict=verdict,
        point=tuple(states[-1]) if verdict == "converged" else None,
    )


@dataclass(frozen=True)
class FixedPointReport:
    """A zero of the field with its local and game-theoretic classification.

    eigenvalues are those of the flow Jacobian; stable means both real
    parts are negative. is_nash certifies the point against the brute-force
    deviation oracle. basin_note summarises which sampled initial
    conditions settled at this point and which hit the jammed boundary
    g = 1 at least once on the way.
    """

    point: tuple[float, float]
    eigenvalues: tuple[complex, complex]
    stable: bool
    is_nash: bool
    basin_note: str
    attracted_inits: tuple[tuple[float, float], ...] = ()
    deadlock_inits: tuple[tuple[float, float], ...] = ()


def _newton_root(seed, config, tol=1e-12, max_iter=100):
    y = np.array(seed, dtype=float)
    for _ in range(max_iter):
        field = np.array(gradient_field(y, config))
        if float(np.max(np.abs(field))) < tol:
            return y
        jac = flow_jacobian(y, config)
        try:
            delta = np.linalg.solve(jac, -field)
        except np.linalg.LinAlgError:
            return None
        y = y + delta
        if not np.all(np.isfinite(y)) or np.max(np.abs(y)) > 10.0:
            return None
    return None


def _classify_basins(point, config, dt, steps, inits):
    attracted, deadlock = [], []
    for init in inits:
        path = integrate(init, dt, steps, config)
        hit_boundary = bool(np.any(path.states[:, 0] >= 1.0 - 1e-9))
        close = float(np.max(np.abs(path.final() - np.array(point)))) < 1e-3
        if hit_boundary:
            deadlock.append(tuple(float(z) for z in init))
        elif close:
            attracted.append(tuple(float(z) for z in init))
    return tuple(attracted), tuple(deadlock)


def find_fixed_points(
    config: GameConfig,
    grid: int = 50,
    tol: float = 1e-12,
    max_iter: int = 100,
    dedup_tol: float = 1e-6,
    include_basins: bool = True,
) -> list[FixedPointReport]:
    """Newton search for zeros of the field from a seed grid.

    Roots outside the unit square are discarded, duplicates merged. Basin
    sampling integrates a coarse grid of starts; an initial condition
    counts as deadlock-bound if its path ever touches the jammed boundary
    g = 1, matching the observation that the stable point does not attract
    everything.
    """
    _require_two_player(config)
    seeds = np.linspace(0.02, 0.98, grid)
    roots = []
    for gs in seeds:
        for as_ in seeds:
            y = _newton_root((gs, as_), config, tol, max_iter)
            if y is None:
                continue
            if not (-1e-9 <= y[0] <= 1.0 + 1e-9 and -1e-9 <= y[1] <= 1.0 + 1e-9):
                continue
            y = np.clip(y, 0.0, 1.0)
            if all(np.max(np.abs(y - r)) > dedup_tol for r in roots):
                roots.append(y)
    roots.sort(key=lambda r: (r[0], r[1]))
    reports = []
    basin_inits = [
        (gg, aa)
        for gg in (0.1, 0.3, 0.5, 0.7, 0.9)
        for aa in (0.05, 0.3, 0.6, 0.9)
    ]
    for y in roots:
        eig = np.linalg.eigvals(flow_jacobian(y, config))
        stable = bool(np.all(eig.real < 0.0))
        point = (float(y[0]), float(y[1]))
        is_nash = verify_nash(point, config)
        if include_basins:
            attracted, dead = _classify_basins(point, config, 0.05, 6000, basin_inits)
            note = (
                f"{len(attracted)}/{len(basin_inits)} sampled starts settle here; "
                f"{len(dead)} hit the jammed boundary g=1 first"
            )
        else:
            attracted, dead = (), ()
            note = "basins not sampled"
        reports.append(
            FixedPointReport(
                point=point,
                eigenvalues=(complex(eig[0]), complex(eig[1])),
                stable=stable,
                is_nash=is_nash,
                basin_note=note,
                attracted_inits=attracted,
                deadlock_inits=dead,
            )
        )
    return reports


def phase_portrait(
    config: GameConfig,
    resolution: int = 25,
    streamline_inits=None,
    dt: float = 0.02,
    steps: int = 4000,
):
    """Field samples on a uniform grid plus integrated streamlines.

    Returns (field, trajectories): field is an (resolution^2, 4) array of
    rows (g, a, dg, da); trajectories is a list of Trajectory objects, one
    per initial condition.
    """
    _require_two_player(config)
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    axis = np.linspace(0.0, 1.0, resolution)
    field = np.empty((resolution * resolution, 4))
    k = 0
    for g in axis:
        for a in axis:
            dg, da = gradient_field((g, a), config)
            field[k] = (g, a, dg, da)
            k += 1
    if streamline_inits is None:
        streamline_inits = [
            (0.1, 0.1),
            (0.3, 0.3),
            (0.5, 0.8),
            (0.8, 0.2),
            (0.9, 0.6),
            (0.95, 0.05),
        ]
    trajectories = [
        integrate(init, dt, steps, config) for init in streamline_inits
    ]
    return field, trajectories
