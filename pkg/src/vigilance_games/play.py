"""Discrete-time fictitious play with damped simultaneous updates.

Each round every greedy player moves a fraction epsilon_g of the way toward
her current best response, and every vigilante moves epsilon_a of the way
toward hers. Greedy players observe their true clearance. Vigilantes only
observe their own throughput; each inverts it under the belief that she
faces a single greedy opponent, which with several vigilantes makes her
overestimate the greedy rate. Observation is exact by default, or windowed
Monte Carlo when params.observation = "empirical".

Runs terminate with one of three verdicts: converged (update smaller than
conv_tol for ten consecutive rounds), oscillating (trailing-window diameter
above 10 * conv_tol while two adjacent windows agree within 10%), or
maxed_out.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import channel
from .best_response import (
    greedy_best_response_for_clearance,
    vigilante_best_response,
)
from .model import (
    GameConfig,
    StrategyProfile,
    clearance,
    estimate_greedy_rate,
    vigilante_throughput_multi,
)

_OBSERVATIONS = ("exact", "empirical")


@dataclass(frozen=True)
class PlayParams:
    """Knobs for a fictitious-play run.

    epsilon_g / epsilon_a are the damping factors in (0, 1]; 1 is raw best
    response. init None starts from the all-fair profile. window is both
    the oscillation-detection length and, in empirical mode, unrelated to
    slots, which sets how many channel slots each vigilante averages her
    throughput over per round.
    """

    epsilon_g: float = 0.1
    epsilon_a: float = 0.1
    t_max: int = 5000
    conv_tol: float = 1e-9
    window: int = 50
    init: StrategyProfile | None = None
    observation: str = "exact"
    slots: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.epsilon_g <= 1.0 or not 0.0 < self.epsilon_a <= 1.0:
            raise ValueError("damping factors must lie in (0, 1]")
        if self.t_max < 1:
            raise ValueError("t_max must be positive")
        if self.conv_tol <= 0.0:
            raise ValueError("conv_tol must be positive")
        if self.window < 2:
            raise ValueError("window must be at least 2")
        if self.observation not in _OBSERVATIONS:
            raise ValueError(
                f"observation: expected one of {_OBSERVATIONS}, "
                f"got {self.observation!r}"
            )
        if self.slots < 1:
            raise ValueError("slots must be positive")


@dataclass(frozen=True)
class Trajectory:
    """Time-indexed strategy path shared by play and flow dynamics.

    states has one row per recorded time, columns ordered greedy rates then
    vigilante rates. verdict is "converged", "oscillating", "maxed_out" or,
    for flow paths, possibly "deadlock". point is the terminal state for
    converged runs, amplitude/window describe the detected band for
    oscillating ones.
    """

    states: np.ndarray
    m: int
    v: int
    verdict: str
    point: tuple[float, ...] | None = None
    amplitude: float | None = None
    window: int | None = None

    @property
    def steps(self) -> int:
        return self.states.shape[0] - 1

    def final(self) -> np.ndarray:
        return self.states[-1]


def _observe_phis(profile, config, params, rng):
    """Per-vigilante own-throughput observations for one round."""
    if params.observation == "exact":
        return [
            vigilante_throughput_multi(profile, config, j)
            for j in range(config.v_vigilante)
        ]
    trace = channel.simulate(profile, config, params.slots, rng=rng)
    return [
        channel.empirical_throughput(trace, config.m_greedy + j)
        for j in range(config.v_vigilante)
    ]


def step(
    profile: StrategyProfile,
    config: GameConfig,
    params: PlayParams,
    rng: np.random.Generator | None = None,
) -> StrategyProfile:
    """One simultaneous damped update of every player.

    Targets are computed from the pre-update profile for everyone, then all
    rates move at once. Degenerate observation states (a vigilante at 0, a
    fully jammed clearance) raise rather than guess.
    """
    if rng is None and params.observation == "empirical":
        rng = np.random.default_rng(params.seed)
    targets_g = []
    for i in range(config.m_greedy):
        x = clearance(profile, config, i)
        targets_g.append(
            greedy_best_response_for_clearance(x, config.lam[i], config)
        )
    phis = _observe_phis(profile, config, params, rng)
    targets_a = []
    for j in range(config.v_vigilante):
        g_hat = estimate_greedy_rate(phis[j], profile.a[j], config)
        targets_a.append(vigilante_best_response(g_hat, config.rho[j], config))
    eg, ea = params.epsilon_g, params.epsilon_a
    new_g = [g + eg * (t - g) for g, t in zip(profile.g, targets_g)]
    new_a = [a + ea * (t - a) for a, t in zip(profile.a, targets_a)]
    return StrategyProfile.from_rates(config, new_g, new_a)


def _window_diameter(block: np.ndarray) -> float:
    return float((block.max(axis=0) - block.min(axis=0)).max())


def run(config: GameConfig, params: PlayParams) -> Trajectory:
    """Iterate :func:`step` until convergence, oscillation, or t_max."""
    profile = params.init if params.init is not None else StrategyProfile.fair(config)
    if len(profile.g) != config.m_greedy or len(profile.a) != config.v_vigilante:
        raise ValueError("init profile does not match the configured population")
    rng = (
        np.random.default_rng(params.seed)
        if params.observation == "empirical"
        else None
    )
    m, v = config.m_greedy, config.v_vigilante
    states = np.empty((params.t_max + 1, m + v))
    states[0] = list(profile.g) + list(profile.a)
    streak = 0
    w = params.window
    for t in range(1, params.t_max + 1):
        profile = step(profile, config, params, rng)
        states[t] = list(profile.g) + list(profile.a)
        change = float(np.max(np.abs(states[t] - states[t - 1])))
        streak = streak + 1 if change < params.conv_tol else 0
        if streak >= 10:
            return Trajectory(
                states=states[: t + 1],
                m=m,
                v=v,
                verdict="converged",
                point=tuple(states[t]),
            )
        if t >= 2 * w:
            d1 = _window_diameter(states[t - w + 1 : t + 1])
            d0 = _window_diameter(states[t - 2 * w + 1 : t - w + 1])
            if d1 > 10.0 * params.conv_tol and abs(d1 - d0) <= 0.1 * max(d0, d1):
                return Trajectory(
                    states=states[: t + 1],
                    m=m,
                    v=v,
                    verdict="oscillating",
                    amplitude=d1,
                    window=w,
                )
    return Trajectory(states=states, m=m, v=v, verdict="maxed_out")
