"""Slotted shared-channel model with greedy and vigilante players.

N players share a slotted random-access channel. In each slot every player
transmits independently with her own access probability; a slot carries a
successful packet iff exactly one player transmits. Cooperative players hold
the fair rate 1/N. A greedy player raises her rate g to chase the throughput
she would get under universal fairness; a vigilante raises her rate a purely
to jam the channel and drive the greedy player's throughput back down.

Everything here is closed-form bookkeeping on Bernoulli products: per-player
throughput, the fair-play baselines, the cost functions both player types
minimise, and the inversion by which the vigilante estimates the greedy
rate from her own observed throughput.
"""

from __future__ import annotations

from dataclasses import dataclass


class SilentVigilanteError(ValueError):
    """Raised when a rate estimate is requested for a vigilante that never
    transmits (a = 0): her throughput then carries no information."""


_FAIR_EXPONENTS = ("n-1", "n")


@dataclass(frozen=True)
class GameConfig:
    """Population layout and cost weights.

    n is the total number of players, of which m_greedy are greedy,
    v_vigilante are vigilantes, and the rest transmit at the fair rate 1/n.
    lam and rho are the per-player weights on the deviation penalties in the
    greedy and vigilante costs.

    fair_target_exponent selects the vigilante's nominal throughput target
    (1/n)(1-1/n)**k: "n-1" (default) is her true expected throughput when
    all n players hold the fair rate; "n" is an alternative convention with
    one extra idle factor. The default reproduces the reference fixed points
    bundled with this package; see README.
    """

    n: int
    m_greedy: int = 1
    v_vigilante: int = 1
    lam: tuple[float, ...] = (10.0,)
    rho: tuple[float, ...] = (0.01,)
    fair_target_exponent: str = "n-1"

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"need n >= 3, got n={self.n}")
        if self.m_greedy < 1 or self.v_vigilante < 1:
            raise ValueError("need at least one greedy and one vigilante player")
        if self.n < self.m_greedy + self.v_vigilante + 1:
            raise ValueError(
                f"need n >= m_greedy + v_vigilante + 1, got "
                f"n={self.n}, m={self.m_greedy}, v={self.v_vigilante}"
            )
        if len(self.lam) != self.m_greedy:
            raise ValueError(
                f"lam: expected {self.m_greedy} entries, got {len(self.lam)}"
            )
        if len(self.rho) != self.v_vigilante:
            raise ValueError(
                f"rho: expected {self.v_vigilante} entries, got {len(self.rho)}"
            )
        if any(l < 0 for l in self.lam) or any(r < 0 for r in self.rho):
            raise ValueError("cost weights must be nonnegative")
        if self.fair_target_exponent not in _FAIR_EXPONENTS:
            raise ValueError(
                f"fair_target_exponent: expected one of {_FAIR_EXPONENTS}, "
                f"got {self.fair_target_exponent!r}"
            )

    @property
    def q_fair(self) -> float:
        return 1.0 / self.n

    @property
    def n_coop(self) -> int:
        return self.n - self.m_greedy - self.v_vigilante


@dataclass(frozen=True)
class FairBaselines:
    """Reference throughputs anchored to fair play at rate 1/n.

    greedy_target: (1-1/n)**(n-1), the throughput an always-transmitting
        player would collect if the other n-1 players all held the fair
        rate; the greedy player steers her own throughput toward it.
    vigilante_target: the vigilante's nominal throughput target under the
        configured convention.
    pair_clearance: (1-1/n)**(n-2), the probability that the n-2 bystanders
        of a two-player interaction all stay silent in a slot.
    """

    greedy_target: float
    vigilante_target: float
    pair_clearance: float


def fair_baselines(config: GameConfig) -> FairBaselines:
    n = config.n
    silence = 1.0 - 1.0 / n
    k = n - 1 if config.fair_target_exponent == "n-1" else n
    return FairBaselines(
        greedy_target=silence ** (n - 1),
        vigilante_target=(1.0 / n) * silence**k,
        pair_clearance=silence ** (n - 2),
    )


@dataclass(frozen=True)
class StrategyProfile:
    """Access probabilities for the non-cooperative players.

    g holds the greedy rates, a the vigilante rates; every remaining player
    transmits at q_coop, pinned to 1/n.
    """

    g: tuple[float, ...]
    a: tuple[float, ...]
    q_coop: float

    @classmethod
    def from_rates(cls, config: GameConfig, g, a) -> "StrategyProfile":
        g = tuple(float(x) for x in g)
        a = tuple(float(x) for x in a)
        if len(g) != config.m_greedy or len(a) != config.v_vigilante:
            raise ValueError(
                f"profile shape ({len(g)}, {len(a)}) does not match config "
                f"({config.m_greedy}, {config.v_vigilante})"
            )
        for x in g + a:
            if not 0.0 <= x <= 1.0:
                raise ValueError(f"access probability {x} outside [0, 1]")
        return cls(g=g, a=a, q_coop=config.q_fair)

    @classmethod
    def fair(cls, config: GameConfig) -> "StrategyProfile":
        q = config.q_fair
        return cls.from_rates(
            config, (q,) * config.m_greedy, (q,) * config.v_vigilante
        )


def full_rate_vector(profile: StrategyProfile, config: GameConfig) -> list[float]:
    """All n access probabilities, ordered greedy, vigilante, cooperative."""
    return list(profile.g) + list(profile.a) + [profile.q_coop] * config.n_coop


def access_prob(rates, i: int) -> float:
    """Per-slot success probability of player i: she transmits and everyone
    else stays silent."""
    rates = list(rates)
    if not 0 <= i < len(rates):
        raise IndexError(f"player index {i} out of range for {len(rates)} players")
    out = rates[i]
    for j, q in enumerate(rates):
        if j != i:
            out *= 1.0 - q
    return out


def greedy_throughput(g: float, a: float, config: GameConfig) -> float:
    """Greedy throughput in the one-greedy one-vigilante game: g(1-a)c."""
    return g * (1.0 - a) * fair_baselines(config).pair_clearance


def vigilante_throughput(g: float, a: float, config: GameConfig) -> float:
    """Vigilante throughput a(1-g)c, the mirror image of
    :func:`greedy_throughput`."""
    return a * (1.0 - g) * fair_baselines(config).pair_clearance


def coop_throughput(g: float, a: float, config: GameConfig) -> float:
    """Throughput of one cooperative bystander while a single greedy and a
    single vigilante deviate."""
    n = config.n
    return (1.0 / n) * (1.0 - a) * (1.0 - g) * (1.0 - 1.0 / n) ** (n - 3)


def clearance(profile: StrategyProfile, config: GameConfig, i: int) -> float:
    """Probability that everyone except greedy player i stays silent.

    Greedy throughput factors as g_i times this number, so it is the only
    channel statistic greedy player i's cost depends on.
    """
    if not 0 <= i < config.m_greedy:
        raise IndexError(f"greedy index {i} out of range")
    out = (1.0 - config.q_fair) ** config.n_coop
    for j, gj in enumerate(profile.g):
        if j != i:
            out *= 1.0 - gj
    for aj in profile.a:
        out *= 1.0 - aj
    return out


def greedy_throughput_multi(
    profile: StrategyProfile, config: GameConfig, i: int
) -> float:
    """Throughput of greedy player i in the general population."""
    return profile.g[i] * clearance(profile, config, i)


def vigilante_throughput_multi(
    profile: StrategyProfile, config: GameConfig, j: int
) -> float:
    """Throughput of vigilante j in the general population."""
    if not 0 <= j < config.v_vigilante:
        raise IndexError(f"vigilante index {j} out of range")
    return access_prob(full_rate_vector(profile, config), config.m_greedy + j)


def greedy_cost(g, clearance_x: float, lam: float, config: GameConfig):
    """Greedy cost: squared shortfall from the fair-play throughput target,
    inflated by a penalty for deviating from the fair rate.

        cost = (g X - T)^2 (1 + lam (g - 1/n)^2)

    where X is the clearance this player sees and T the fair-play target.
    Minimised, not maximised. Broadcasts over numpy arrays in g.
    """
    b = fair_baselines(config)
    d = g * clearance_x - b.greedy_target
    u = g - config.q_fair
    return d * d * (1.0 + lam * u * u)


def vigilante_cost(theta_val, a, rho: float, config: GameConfig):
    """Vigilante cost: squared distance of the greedy player's throughput
    from the vigilante's fair-share target, plus a deviation penalty.

        cost = (theta_val - T_v)^2 + rho (a - 1/n)^2

    theta_val may be the true greedy throughput or a belief reconstructed
    from an estimate. Broadcasts over numpy arrays.
    """
    b = fair_baselines(config)
    e = theta_val - b.vigilante_target
    u = a - config.q_fair
    return e * e + rho * u * u


def believed_greedy_throughput(g_hat: float, a: float, config: GameConfig) -> float:
    """Greedy throughput the vigilante expects at her rate a given the
    estimate g_hat, assuming a single greedy opponent: g_hat (1-a) c."""
    return g_hat * (1.0 - a) * fair_baselines(config).pair_clearance


def estimate_greedy_rate(phi_hat: float, a: float, config: GameConfig) -> float:
    """Invert the vigilante's own throughput into a greedy-rate estimate.

    Against a single greedy player phi = a(1-g)c, so g = (ac - phi)/(ac).
    The result is clamped to [0, 1]: sampling noise in phi_hat can push the
    raw value outside. a = 0 observes nothing and raises.
    """
    if a == 0.0:
        raise SilentVigilanteError("cannot estimate the greedy rate with a = 0")
    ac = a * fair_baselines(config).pair_clearance
    raw = (ac - phi_hat) / ac
    return min(1.0, max(0.0, raw))
