"""Monte Carlo simulation of the slotted channel.

Each slot draws one independent Bernoulli per player; the slot carries a
packet iff exactly one player transmitted. Traces record who transmitted
and who succeeded so that empirical throughputs and the vigilante's
empirical greedy-rate estimate can be read off afterwards and compared
against the analytic formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import (
    GameConfig,
    StrategyProfile,
    estimate_greedy_rate,
    full_rate_vector,
)

_CHUNK_CELLS = 1 << 22


@dataclass(frozen=True)
class ChannelTrace:
    """Raw outcome of a simulated run.

    transmitted[s, i] says whether player i transmitted in slot s;
    success_player[s] is the index of the slot's unique successful
    transmitter, or -1 for idle and collision slots. rates echoes the access
    probabilities the trace was drawn from, ordered as in
    :func:`vigilance_games.model.full_rate_vector`.
    """

    transmitted: np.ndarray
    success_player: np.ndarray
    rates: tuple[float, ...]
    seed: int | None

    @property
    def slots(self) -> int:
        return self.transmitted.shape[0]


def simulate(
    profile: StrategyProfile,
    config: GameConfig,
    slots: int,
    seed: int | None = None,
    rng: np.random.Generator | None = None,
) -> ChannelTrace:
    """Draw a trace of the given length.

    Deterministic for a fixed seed. Pass rng instead to consume an existing
    generator stream (the play dynamics do this for windowed estimation).
    """
    if slots < 1:
        raise ValueError("need at least one slot")
    rates = full_rate_vector(profile, config)
    n = len(rates)
    if rng is None:
        rng = np.random.default_rng(seed)
    rates_row = np.asarray(rates)
    chunk_rows = max(1, _CHUNK_CELLS // n)
    parts = []
    done = 0
    while done < slots:
        rows = min(chunk_rows, slots - done)
        parts.append(rng.random((rows, n)) < rates_row)
        done += rows
    transmitted = np.concatenate(parts) if len(parts) > 1 else parts[0]
    counts = transmitted.sum(axis=1)
    success_player = np.where(
        counts == 1, np.argmax(transmitted, axis=1), -1
    ).astype(np.int64)
    return ChannelTrace(
        transmitted=transmitted,
        success_player=success_player,
        rates=tuple(rates),
        seed=seed,
    )


def empirical_throughput(trace: ChannelTrace, player: int) -> float:
    """Fraction of slots carrying a packet from the given player."""
    if not 0 <= player < trace.transmitted.shape[1]:
        raise IndexError(f"player index {player} out of range")
    return float(np.count_nonzero(trace.success_player == player)) / trace.slots


def estimate_greedy_rate_empirical(
    trace: ChannelTrace, config: GameConfig, vigilante_index: int = 0
) -> float:
    """The greedy-rate estimate a vigilante would form from this trace,
    feeding her own empirical throughput through the analytic inversion."""
    if not 0 <= vigilante_index < config.v_vigilante:
        raise IndexError(f"vigilante index {vigilante_index} out of range")
    player = config.m_greedy + vigilante_index
    a = trace.rates[player]
    phi_hat = empirical_throughput(trace, player)
    return estimate_greedy_rate(phi_hat, a, config)


def binomial_sigma(p: float, slots: int) -> float:
    """Standard deviation of an empirical per-slot rate with success
    probability p."""
    return math.sqrt(p * (1.0 - p) / slots)


def trace_summary(trace: ChannelTrace) -> list[dict]:
    """Per-player tallies, one dict per player.

    rate is the empirical per-slot success rate (successes / slots), i.e.
    the player's measured throughput; the empirical access rate is
    transmits / slots if needed.
    """
    transmits = trace.transmitted.sum(axis=0)
    out = []
    for i in range(trace.transmitted.shape[1]):
        successes = int(np.count_nonzero(trace.success_player == i))
        out.append(
            {
                "player": i,
                "transmits": int(transmits[i]),
                "successes": successes,
                "rate": successes / trace.slots,
            }
        )
    return out
