"""The two best-response maps, and the jump that breaks equilibrium.

The greedy player's cost has up to three stationary points in her rate:
an ideal point that tracks her target exactly, a backoff point, and a
ridge between them. As the vigilante's rate a rises, the global minimum
switches from the channel-grabbing boundary g = 1 to the interior backoff
point -- discontinuously. This script locates that jump, shows the
one-sided limits, and samples both maps as plot-ready branch tables.

Run:  python3 demos/best_response_maps.py
"""

from vigilance_games import (
    GameConfig,
    boundary_backoff_gap,
    fair_baselines,
    greedy_best_response,
    greedy_best_response_labeled,
    greedy_critical_points,
    jump_point,
    sample_greedy_curve,
    sample_vigilante_curve,
    vigilante_best_response,
)

LAM = 10.0


def main() -> None:
    cfg = GameConfig(n=10, lam=(LAM,), rho=(0.01,))
    pair = fair_baselines(cfg).pair_clearance

    print("=== stationary points at a mid-range vigilance level ===")
    a = 0.5
    x = (1.0 - a) * pair
    cp = greedy_critical_points(x, LAM, cfg)
    print(f"clearance X(a={a})      : {x:.10f}")
    print(f"ideal point   (target/X): {cp.ideal:.10f}  (above 1: infeasible)")
    print(f"backoff point           : {cp.backoff:.10f}")
    print(f"ridge point             : {cp.ridge:.10f}")
    print(f"curvature at backoff    : {cp.backoff_curvature:.10f}  (> 0: true minimum)")
    print()

    print("=== the jump ===")
    jp = jump_point(LAM, cfg)
    print(f"jump location a+        : {jp.a_plus:.10f}")
    print(f"boundary/backoff tie    : {boundary_backoff_gap(jp.a_plus, LAM, cfg):.2e}")
    eps = 1e-9
    print(f"response at a+ - 1e-9   : {greedy_best_response(jp.a_plus - eps, LAM, cfg):.10f}")
    print(f"response at a+          : {greedy_best_response(jp.a_plus, LAM, cfg):.10f}")
    print(f"jump size               : {jp.jump_size:.10f}")
    print("Below a+ the greedy player grabs the whole channel; at a+ the")
    print("backoff basin wins by a hair and her rate falls by the jump size.")
    print()

    print("=== branch labels along the greedy map ===")
    for aa in (0.05, 0.2, 0.36, jp.a_plus, 0.5, 0.8):
        g, branch = greedy_best_response_labeled(aa, LAM, cfg)
        print(f"  a = {aa:<12.10g} -> g = {g:.6f}  [{branch}]")
    print()

    print("=== a weak penalty has no jump ===")
    weak = jump_point(0.01, cfg)
    print(f"jump_point(lambda=0.01) : {weak}")
    print("The map is continuous (though steep): the backoff point enters")
    print("through g = 1 and takes over smoothly.")
    print()

    print("=== plot-ready samples ===")
    gc = sample_greedy_curve(LAM, cfg, points=9)
    for aa, g, br in zip(gc.inputs, gc.responses, gc.branches):
        print(f"  beta_g({aa:.3f}) = {g:.6f}  [{br}]")
    vc = sample_vigilante_curve(0.01, cfg, points=5)
    for gg, av, br in zip(vc.inputs, vc.responses, vc.branches):
        print(f"  beta_a({gg:.3f}) = {av:.6f}  [{br}]")
    print()
    print("=== the vigilante map is continuous ===")
    print("Her cost is quadratic in a, so the response is a clamped ratio:")
    for gg in (0.1, 0.5, 1.0):
        print(f"  beta_a({gg:.1f}, rho=0.01) = {vigilante_best_response(gg, 0.01, cfg):.10f}")
    print(f"  beta_a(1/n) = 1/n exactly: {vigilante_best_response(0.1, 0.01, cfg) == 0.1}")


if __name__ == "__main__":
    main()
