"""Nash equilibrium detection for the one-greedy one-vigilante game.

Because the vigilante's best response is a continuous function of the
greedy rate, a pure Nash equilibrium exists iff the composed scalar map
F(a) = beta_a(beta_g(a)) has a fixed point. F inherits the greedy map's
discontinuity at a_plus: when the penalty weight rho is small the fixed
point sits on the backoff branch and the equilibrium exists; as rho grows
the crossing of the diagonal can fall inside the jump, and no equilibrium
remains. find_nash scans each continuous piece of F separately and refines
crossings by bisection; verify_nash certifies candidate points against the
brute-force argmin oracle rather than the closed forms.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .best_response import (
    greedy_best_response,
    grid_argmin,
    jump_point,
    vigilante_best_response,
    vigilante_cost_in_a,
)
from .model import (
    GameConfig,
    fair_baselines,
    greedy_cost,
    greedy_throughput,
    vigilante_cost,
)


@dataclass(frozen=True)
class NashVerdict:
    """Outcome of the equilibrium search.

    When exists is True, point is (g, a) and residuals carries the
    best-response self-consistency errors. When False, gap is the interval
    of vigilante rates the composed map jumps over; it brackets the
    would-be diagonal crossing and contains a_plus.
    """

    exists: bool
    point: tuple[float, float] | None
    gap: tuple[float, float] | None
    residuals: dict[str, float]
    all_points: tuple[tuple[float, float], ...] = ()


def composed_response(a: float, config: GameConfig) -> float:
    """F(a): the vigilante's reply to the greedy player's reply to a."""
    lam, rho = config.lam[0], config.rho[0]
    return vigilante_best_response(
        greedy_best_response(a, lam, config), rho, config
    )


def _crossings(config: GameConfig, lo: float, hi: float, points: int):
    """Diagonal crossings of F on [lo, hi], where F is continuous."""
    if hi <= lo:
        return []
    grid = np.linspace(lo, hi, points)
    vals = np.array([composed_response(float(a), config) - a for a in grid])
    out = []
    for k in range(len(grid) - 1):
        f0, f1 = vals[k], vals[k + 1]
        if f0 == 0.0:
            out.append(float(grid[k]))
            continue
        if (f0 < 0.0) == (f1 < 0.0):
            continue
        a0, a1 = float(grid[k]), float(grid[k + 1])
        while a1 - a0 > 1e-13:
            mid = 0.5 * (a0 + a1)
            fm = composed_response(mid, config) - mid
            if (fm < 0.0) == (f0 < 0.0):
                a0, f0 = mid, fm
            else:
                a1 = mid
        out.append(0.5 * (a0 + a1))
    if vals[-1] == 0.0:
        out.append(float(grid[-1]))
    return out


def find_nash(config: GameConfig, scan_points: int = 10_000) -> NashVerdict:
    """Search for a pure Nash equilibrium of the two-player game.

    Only defined for one greedy and one vigilante player. The scan is split
    at the best-response jump so that bisection never brackets the
    discontinuity itself.
    """
    if config.m_greedy != 1 or config.v_vigilante != 1:
        raise ValueError("find_nash handles exactly one greedy and one vigilante")
    lam, rho = config.lam[0], config.rho[0]
    eps = 1e-9
    jp = jump_point(lam, config)
    if jp is None:
        segments = [(0.0, 1.0 - eps)]
    else:
        segments = [(0.0, jp.a_plus - eps), (jp.a_plus, 1.0 - eps)]
    roots = []
    for lo, hi in segments:
        pts = max(3, int(scan_points * (hi - lo)))
        roots.extend(_crossings(config, lo, hi, pts))
    if roots:
        points = []
        for a_star in roots:
            g_star = greedy_best_response(a_star, lam, config)
            points.append((g_star, a_star))
        g_star, a_star = points[0]
        residuals = {
            "greedy": abs(g_star - greedy_best_response(a_star, lam, config)),
            "vigilante": abs(a_star - vigilante_best_response(g_star, rho, config)),
        }
        return NashVerdict(
            exists=True,
            point=(g_star, a_star),
            gap=None,
            residuals=residuals,
            all_points=tuple(points),
        )
    # no crossing on either piece: the diagonal is crossed inside the jump
    if jp is None:
        raise RuntimeError(
            "no diagonal crossing found although the response map is continuous"
        )
    left_limit = vigilante_best_response(1.0, rho, config)
    right_value = composed_response(jp.a_plus, config)
    gap = (min(left_limit, right_value), max(left_limit, right_value))
    return NashVerdict(exists=False, point=None, gap=gap, residuals={})


def verify_nash(
    point: tuple[float, float],
    config: GameConfig,
    tol: float = 1e-8,
    resolution: int = 1_000_000,
) -> bool:
    """Certify a candidate equilibrium against the brute-force oracle.

    Checks that neither player can lower her cost by more than tol by
    unilateral deviation, using dense-grid argmin rather than the closed
    forms, so this is an independent route to the same answer.
    """
    g, a = point
    lam, rho = config.lam[0], config.rho[0]
    x = (1.0 - a) * fair_baselines(config).pair_clearance

    g_best = grid_argmin(
        lambda gg: greedy_cost(gg, x, lam, config), resolution=resolution
    )
    cost_now = float(greedy_cost(g, x, lam, config))
    cost_best = float(greedy_cost(g_best, x, lam, config))
    if cost_now - cost_best > tol:
        return False

    def a_cost(aa):
        return vigilante_cost(greedy_throughput(g, aa, config), aa, rho, config)

    a_best = grid_argmin(a_cost, resolution=resolution)
    if float(a_cost(a)) - float(a_cost(a_best)) > tol:
        return False
    return True
