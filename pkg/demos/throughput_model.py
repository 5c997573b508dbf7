"""Tour of the closed-form channel model.

A slotted channel with n stations delivers a packet exactly when one
station transmits alone, so a station transmitting with probability q_i
gets throughput q_i * prod_{j != i} (1 - q_j). Everything else in the
library is built from that one identity: the fair baselines, the greedy
and vigilante targets, and the vigilante's estimator of the greedy rate.

Run:  python3 demos/throughput_model.py
"""

from vigilance_games import (
    GameConfig,
    StrategyProfile,
    access_prob,
    estimate_greedy_rate,
    fair_baselines,
    full_rate_vector,
    greedy_throughput,
    vigilante_throughput,
)


def main() -> None:
    cfg = GameConfig(n=10, lam=(10.0,), rho=(0.001,))
    b = fair_baselines(cfg)

    print("=== channel with n = 10 stations, everyone fair at q = 1/n ===")
    fair_rates = [cfg.q_fair] * cfg.n
    print(f"fair throughput per station : {access_prob(fair_rates, 0):.10f}")
    print(f"vigilante_target (the same) : {b.vigilante_target:.10f}")
    print()

    print("=== what a defector would earn ===")
    # One station transmits every slot while the other nine stay fair.
    defector = [1.0] + [cfg.q_fair] * (cfg.n - 1)
    print(f"always-on against 9 fair    : {access_prob(defector, 0):.10f}")
    print(f"greedy_target (the same)    : {b.greedy_target:.10f}")
    print("The greedy player's cost steers her throughput toward that")
    print("number; the vigilante's cost steers the greedy player's")
    print("throughput back down to the fair share.")
    print()

    print("=== two-player shorthand ===")
    g, a = 0.4, 0.3
    profile = StrategyProfile.from_rates(cfg, g=[g], a=[a])
    rates = full_rate_vector(profile, cfg)
    print(f"profile: g = {g}, a = {a}, eight cooperators at 0.1")
    print(f"greedy throughput    : {greedy_throughput(g, a, cfg):.10f}")
    print(f"  product identity   : {access_prob(rates, 0):.10f}")
    print(f"vigilante throughput : {vigilante_throughput(g, a, cfg):.10f}")
    print(f"  product identity   : {access_prob(rates, 1):.10f}")
    print()

    print("=== the vigilante's greedy-rate estimator ===")
    # She knows her own a and the cooperators' 1/n, measures her own
    # throughput, and inverts the product form for the one unknown.
    phi = vigilante_throughput(g, a, cfg)
    print(f"observed own throughput phi  : {phi:.10f}")
    print(f"inverted estimate of g       : {estimate_greedy_rate(phi, a, cfg):.10f}")
    print()

    print("=== why two unaware vigilantes overreact ===")
    cfg2 = GameConfig(n=10, v_vigilante=2, lam=(10.0,), rho=(0.001, 0.001))
    a1 = a2 = 0.25
    profile2 = StrategyProfile.from_rates(cfg2, g=[g], a=[a1, a2])
    rates2 = full_rate_vector(profile2, cfg2)
    phi1 = access_prob(rates2, 1)
    ghat = estimate_greedy_rate(phi1, a1, cfg2)
    print(f"true greedy rate             : {g}")
    print(f"vigilante 1's estimate       : {ghat:.10f}")
    print("Her model has no slot for the second vigilante, so the other's")
    print("interference is booked against the greedy player. Both inflate,")
    print("both punish harder, and the estimates ratchet toward deadlock.")


if __name__ == "__main__":
    main()
