"""Best-response maps for both player types.

The greedy cost (g X - T)^2 (1 + lam (g - 1/n)^2) is a quartic in g with up
to three stationary points:

  ideal    T/X            the rate that hits the fair target exactly (zero
                          cost); may lie beyond 1 when the channel is jammed
  ridge    1/n + u_plus   interior local maximum separating the two wells
  backoff  1/n + u_minus  interior local minimum where the player throttles
                          back and eats the penalty instead of fighting

with u_pm = ((T - X/n) pm sqrt((T - X/n)^2 - 8 X^2/lam)) / (4 X). The ridge
and backoff exist iff the radicand is nonnegative. Whenever the ideal rate
is feasible it wins outright. Otherwise boundary play g = 1 competes with
the backoff well, and as the vigilante raises her rate the winner switches
from the boundary to the backoff at a tie point a_plus: the best response
jumps there. That discontinuity is what can destroy the Nash equilibrium.

The vigilante cost is quadratic in a, so her best response is a clamped
closed form.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .model import (
    GameConfig,
    believed_greedy_throughput,
    fair_baselines,
    greedy_cost,
    vigilante_cost,
)


class DegenerateChannelError(ValueError):
    """Raised when the channel is fully jammed from a player's point of view
    (clearance 0), leaving her cost independent of her own rate."""


class IndifferentVigilanteError(ValueError):
    """Raised when the vigilante cost is flat (g_hat = 0 with rho = 0):
    every rate is a best response."""


@dataclass(frozen=True)
class CriticalPoints:
    """Stationary points of the greedy cost at fixed clearance.

    ideal is always present. ridge and backoff are None when the radicand
    (discriminant) is negative. For a present backoff point the closed-form
    second derivative is exposed along with its three display terms: the
    curvature equals -K (coeff * radical + offset) for a positive constant
    K, so the backoff point is a true local minimum iff the combination
    coeff * radical + offset is negative.
    """

    ideal: float
    ridge: float | None
    backoff: float | None
    discriminant: float
    backoff_curvature: float | None = None
    curv_radical_coeff: float | None = None
    curv_offset: float | None = None
    curv_radical: float | None = None


@dataclass(frozen=True)
class JumpPoint:
    """Location of the greedy best-response discontinuity.

    a_plus is the vigilante rate at which boundary play and the backoff
    point exchange optimality; backoff_at_jump the landing rate just past
    it; jump_size the height 1 - backoff_at_jump of the drop. all_roots
    collects every tie found in the scan (normally exactly one).
    """

    a_plus: float
    backoff_at_jump: float
    jump_size: float
    all_roots: tuple[float, ...]


@dataclass(frozen=True)
class BestResponseCurve:
    """A sampled best-response map with branch labels.

    branch holds "left" (tracking an interior optimum), "boundary" (response
    pinned at 1), or "right" (the backoff branch past the jump). jump is the
    discontinuity location for the greedy map, None for the vigilante map.
    """

    inputs: np.ndarray
    responses: np.ndarray
    branches: tuple[str, ...]
    jump: JumpPoint | None


def greedy_cost_slope(g, clearance_x: float, lam: float, config: GameConfig):
    """d(cost)/dg at fixed clearance. Broadcasts over g."""
    b = fair_baselines(config)
    d = g * clearance_x - b.greedy_target
    u = g - config.q_fair
    p = 1.0 + lam * u * u
    return 2.0 * d * (clearance_x * p + lam * u * d)


def greedy_cost_curvature(g, clearance_x: float, lam: float, config: GameConfig):
    """d^2(cost)/dg^2 at fixed clearance. Broadcasts over g."""
    b = fair_baselines(config)
    x = clearance_x
    d = g * x - b.greedy_target
    u = g - config.q_fair
    p = 1.0 + lam * u * u
    return 2.0 * x * x * p + 8.0 * lam * u * x * d + 2.0 * lam * d * d


def greedy_critical_points(
    clearance_x: float, lam: float, config: GameConfig
) -> CriticalPoints:
    """Solve for the stationary points of the greedy cost.

    Factoring d(cost)/dg = 2(gX - T)(XP + lam u (gX - T)) gives the ideal
    root gX = T and, for the second factor, the quadratic
    2 lam X u^2 - lam (T - X/n) u + X = 0 in u = g - 1/n.
    """
    if clearance_x <= 0.0:
        raise DegenerateChannelError("clearance must be positive")
    b = fair_baselines(config)
    t = b.greedy_target
    x = clearance_x
    ideal = t / x
    if lam == 0.0:
        return CriticalPoints(ideal=ideal, ridge=None, backoff=None, discriminant=-math.inf)
    amp = t - x / config.n
    disc = amp * amp - 8.0 * x * x / lam
    if disc < 0.0:
        return CriticalPoints(ideal=ideal, ridge=None, backoff=None, discriminant=disc)
    root = math.sqrt(disc)
    q = config.q_fair
    backoff = q + (amp - root) / (4.0 * x)
    ridge = q + (amp + root) / (4.0 * x)
    curv_val, s_coeff, s_off, radical = _backoff_curvature_display(x, lam, config)
    return CriticalPoints(
        ideal=ideal,
        ridge=ridge,
        backoff=backoff,
        discriminant=disc,
        backoff_curvature=curv_val,
        curv_radical_coeff=s_coeff,
        curv_offset=s_off,
        curv_radical=radical,
    )


def _backoff_curvature_display(x: float, lam: float, config: GameConfig):
    """Closed-form second derivative at the backoff point.

    Written in terms of the effective vigilante rate ea with x = (1-ea)c,
    which always exists since the cost depends on the opponents only through
    the clearance. The radical here is sqrt(discriminant)/x, the same
    radical that splits ridge from backoff.
    """
    n = config.n
    c = fair_baselines(config).pair_clearance
    ea = 1.0 - x / c
    one = 1.0 - ea
    s_coeff = 3.0 * n * lam * (ea - 1.0) * (ea - 2.0 + n)
    s_off = 8.0 * n * n * one * one - lam * (n - 2.0 + ea) ** 2
    radical = math.sqrt(max(0.0, -s_off / (n * n * one * one * lam)))
    scale = 0.5 * n * n * ((n - 1.0) / n) ** (2 * n) / (n - 1.0) ** 4
    value = -scale * (s_coeff * radical + s_off)
    return value, s_coeff, s_off, radical


def _greedy_response_for_clearance(
    clearance_x: float, lam: float, config: GameConfig
) -> tuple[float, str]:
    """Global minimiser of the greedy cost on [0, 1] with its branch label.

    When the ideal rate is feasible it gives cost exactly 0. Otherwise only
    boundary play and the backoff point can win: the cost decreases from
    g = 0 to its first interior stationary point, so g = 0 never competes,
    and the ridge is a maximum. Ties go to the backoff point, making the
    map right-continuous at the jump.
    """
    cp = greedy_critical_points(clearance_x, lam, config)
    if cp.ideal <= 1.0:
        return cp.ideal, "left"
    boundary_cost = float(greedy_cost(1.0, clearance_x, lam, config))
    if cp.backoff is not None and 0.0 <= cp.backoff <= 1.0:
        backoff_cost = float(greedy_cost(cp.backoff, clearance_x, lam, config))
        if backoff_cost <= boundary_cost:
            return cp.backoff, "right"
    return 1.0, "boundary"


def greedy_best_response_for_clearance(
    clearance_x: float, lam: float, config: GameConfig
) -> float:
    """Best response of a greedy player seeing the given clearance."""
    return _greedy_response_for_clearance(clearance_x, lam, config)[0]


def greedy_best_response(a: float, lam: float, config: GameConfig) -> float:
    """Best response of the single greedy player to vigilante rate a."""
    g, _ = greedy_best_response_labeled(a, lam, config)
    return g


def greedy_best_response_labeled(
    a: float, lam: float, config: GameConfig
) -> tuple[float, str]:
    if a >= 1.0:
        raise DegenerateChannelError("a = 1 jams the channel completely")
    x = (1.0 - a) * fair_baselines(config).pair_clearance
    return _greedy_response_for_clearance(x, lam, config)


def boundary_backoff_gap(a: float, lam: float, config: GameConfig) -> float | None:
    """Cost of boundary play minus cost of the backoff point at rate a.

    None when the backoff point does not exist or is infeasible; positive
    once throttling back beats fighting. The jump sits at the sign change.
    """
    if a >= 1.0:
        return None
    x = (1.0 - a) * fair_baselines(config).pair_clearance
    cp = greedy_critical_points(x, lam, config)
    if cp.backoff is None or cp.backoff > 1.0:
        return None
    return float(
        greedy_cost(1.0, x, lam, config) - greedy_cost(cp.backoff, x, lam, config)
    )


def jump_point(
    lam: float, config: GameConfig, scan_points: int = 10_000
) -> JumpPoint | None:
    """Locate the discontinuity of the greedy best response in a.

    Scans the boundary/backoff cost gap over [1/n, 1) and bisects each sign
    change to 1e-12 in a. Returns None when the gap never changes sign (the
    map is then continuous: either the boundary always wins, or the backoff
    enters feasibility through g = 1 and takes over smoothly). Multiple
    sign changes are all reported, with a warning.
    """
    q = config.q_fair
    grid = np.linspace(q, 1.0 - 1e-9, scan_points)
    gaps = [boundary_backoff_gap(a, lam, config) for a in grid]
    roots = []
    for k in range(len(grid) - 1):
        lo, hi = gaps[k], gaps[k + 1]
        if lo is None or hi is None:
            continue
        if lo == 0.0:
            roots.append(float(grid[k]))
            continue
        if (lo < 0.0) == (hi < 0.0):
            continue
        a_lo, a_hi = float(grid[k]), float(grid[k + 1])
        f_lo = lo
        while a_hi - a_lo > 1e-12:
            mid = 0.5 * (a_lo + a_hi)
            f_mid = boundary_backoff_gap(mid, lam, config)
            if f_mid is None:
                break
            if (f_mid < 0.0) == (f_lo < 0.0):
                a_lo, f_lo = mid, f_mid
            else:
                a_hi = mid
        roots.append(0.5 * (a_lo + a_hi))
    if not roots:
        return None
    if len(roots) > 1:
        warnings.warn(
            f"greedy best response has {len(roots)} boundary/backoff ties; "
            "reporting the first as the jump",
            stacklevel=2,
        )
    a_plus = roots[0]
    x = (1.0 - a_plus) * fair_baselines(config).pair_clearance
    backoff = greedy_critical_points(x, lam, config).backoff
    return JumpPoint(
        a_plus=a_plus,
        backoff_at_jump=backoff,
        jump_size=1.0 - backoff,
        all_roots=tuple(roots),
    )


def vigilante_stationary_rate(
    g_hat: float, rho: float, n: int, fair_target_exponent: str = "n-1"
) -> float:
    """Closed-form minimiser of the vigilante cost against believed rate g_hat.

    The cost is quadratic in a with positive leading coefficient, so its
    unique stationary point, clamped to [0, 1], is the global constrained
    minimum:

        a* = (g^2 c^2 - g c T_v + rho/n) / (g^2 c^2 + rho)

    Flat cost (g_hat = 0 and rho = 0) has no distinguished minimiser.
    """
    if g_hat == 0.0 and rho == 0.0:
        raise IndifferentVigilanteError(
            "vigilante cost is flat: no greedy activity and no penalty weight"
        )
    c = (1.0 - 1.0 / n) ** (n - 2)
    k = n - 1 if fair_target_exponent == "n-1" else n
    target = (1.0 / n) * (1.0 - 1.0 / n) ** k
    gc = g_hat * c
    num = gc * gc - gc * target + rho / n
    den = gc * gc + rho
    return min(1.0, max(0.0, num / den))


def vigilante_best_response(g_hat: float, rho: float, config: GameConfig) -> float:
    """Best response of a vigilante believing the greedy rate is g_hat."""
    return vigilante_stationary_rate(
        g_hat, rho, config.n, config.fair_target_exponent
    )


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def grid_argmin(
    cost,
    resolution: int = 1_000_000,
    refine_tol: float = 1e-10,
    lo: float = 0.0,
    hi: float = 1.0,
) -> float:
    """Brute-force argmin of a scalar cost on [lo, hi].

    Dense grid scan (cost must broadcast over a numpy array) followed by a
    golden-section refinement inside the winning cell. Used as the oracle
    that the closed-form best responses are checked against.
    """
    if resolution < 3:
        raise ValueError("resolution must be at least 3")
    xs = np.linspace(lo, hi, resolution)
    vals = np.asarray(cost(xs))
    i = int(np.argmin(vals))
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, resolution - 1)]
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc = float(cost(c))
    fd = float(cost(d))
    while b - a > refine_tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = float(cost(c))
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = float(cost(d))
    best = 0.5 * (a + b)
    # the refined point can only improve on the winning grid node
    if float(cost(best)) > vals[i]:
        best = float(xs[i])
    return float(best)


def vigilante_cost_in_a(g_hat: float, rho: float, config: GameConfig):
    """The vigilante cost as a function of her own rate, at believed g_hat.

    Returns a callable suitable for :func:`grid_argmin`.
    """

    def cost(a):
        return vigilante_cost(
            believed_greedy_throughput(g_hat, a, config), a, rho, config
        )

    return cost


def sample_greedy_curve(
    lam: float, config: GameConfig, points: int = 513, a_max: float = 1.0 - 1e-6
) -> BestResponseCurve:
    """Sample the greedy best-response map over a in [0, a_max]."""
    inputs = np.linspace(0.0, a_max, points)
    responses = np.empty(points)
    branches = []
    for k, a in enumerate(inputs):
        g, branch = greedy_best_response_labeled(float(a), lam, config)
        responses[k] = g
        branches.append(branch)
    return BestResponseCurve(
        inputs=inputs,
        responses=responses,
        branches=tuple(branches),
        jump=jump_point(lam, config),
    )


def sample_vigilante_curve(
    rho: float, config: GameConfig, points: int = 513
) -> BestResponseCurve:
    """Sample the vigilante best-response map over believed g in [0, 1].

    The map is continuous; branch is "boundary" where the closed form
    clamps and "left" elsewhere.
    """
    inputs = np.linspace(0.0, 1.0, points)
    responses = np.empty(points)
    branches = []
    b = fair_baselines(config)
    for k, g in enumerate(inputs):
        a = vigilante_best_response(float(g), rho, config)
        responses[k] = a
        gc = float(g) * b.pair_clearance
        raw = (gc * gc - gc * b.vigilante_target + rho / config.n) / (
            gc * gc + rho
        )
        branches.append("left" if 0.0 <= raw <= 1.0 else "boundary")
    return BestResponseCurve(
        inputs=inputs, responses=responses, branches=tuple(branches), jump=None
    )
