"""Command-line harness: run a scenario file, write CSV/JSON artifacts.

    vigilance-games <best-response|play|flow|nash|channel>
                    --config <file> [--out <dir>] [--seed <u64>]

Output directory precedence: --out flag, then the VG_OUT_DIR environment
variable, then [output] dir from the scenario. Exit codes: 0 success,
2 configuration error, 3 numerical failure (degenerate inputs,
non-convergent searches). All floats are written in %.17g round-trip
precision so outputs are diffable and runs with equal seeds are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .best_response import (
    jump_point,
    sample_greedy_curve,
    sample_vigilante_curve,
)
from .channel import estimate_greedy_rate_empirical, simulate, trace_summary
from .equilibrium import find_nash
from .flow import find_fixed_points, phase_portrait
from .model import (
    GameConfig,
    StrategyProfile,
    greedy_throughput_multi,
    vigilante_throughput_multi,
)
from .play import run
from .scenario import Scenario, ScenarioError, parse_scenario

COMMANDS = ("best-response", "play", "flow", "nash", "channel")


def _fmt(x) -> str:
    return format(float(x), ".17g")


def _write_text(out_dir: str, name: str, text: str) -> str:
    path = os.path.join(out_dir, name)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return path


def _write_csv(out_dir: str, name: str, header: list[str], rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(row))
    return _write_text(out_dir, name, "\n".join(lines) + "\n")


def _write_json(out_dir: str, name: str, payload) -> str:
    return _write_text(
        out_dir, name, json.dumps(payload, indent=2, sort_keys=True) + "\n"
    )


def _require_two_player(game: GameConfig, command: str):
    if game.m_greedy != 1 or game.v_vigilante != 1:
        raise ScenarioError(
            f"[game] {command} needs m_greedy = v_vigilante = 1, "
            f"got ({game.m_greedy}, {game.v_vigilante})"
        )


def cmd_best_response(scenario: Scenario, out_dir: str) -> list[str]:
    """Both response curves plus jump annotation and intersection verdict."""
    game = scenario.game
    _require_two_player(game, "best-response")
    lam, rho = game.lam[0], game.rho[0]
    written = []
    gcurve = sample_greedy_curve(lam, game)
    rows = (
        (_fmt(x), _fmt(y), br)
        for x, y, br in zip(gcurve.inputs, gcurve.responses, gcurve.branches)
    )
    written.append(
        _write_csv(out_dir, "greedy_best_response.csv", ["input", "response", "branch"], rows)
    )
    vcurve = sample_vigilante_curve(rho, game)
    rows = (
        (_fmt(x), _fmt(y), br)
        for x, y, br in zip(vcurve.inputs, vcurve.responses, vcurve.branches)
    )
    written.append(
        _write_csv(out_dir, "vigilante_best_response.csv", ["input", "response", "branch"], rows)
    )
    verdict = find_nash(game)
    payload = {
        "a_plus": None if gcurve.jump is None else gcurve.jump.a_plus,
        "jump_size": None if gcurve.jump is None else gcurve.jump.jump_size,
        "backoff_at_jump": None
        if gcurve.jump is None
        else gcurve.jump.backoff_at_jump,
        "intersection": {
            "exists": verdict.exists,
            "g": None if verdict.point is None else verdict.point[0],
            "a": None if verdict.point is None else verdict.point[1],
        },
    }
    written.append(_write_json(out_dir, "best_response.json", payload))
    return written


def cmd_play(scenario: Scenario, out_dir: str) -> list[str]:
    """Trajectory CSV plus a verdict JSON."""
    game = scenario.game
    traj = run(game, scenario.play_params())
    m, v = game.m_greedy, game.v_vigilante
    header = (
        ["t"]
        + [f"g_{i + 1}" for i in range(m)]
        + [f"a_{j + 1}" for j in range(v)]
        + [f"theta_{i + 1}" for i in range(m)]
        + [f"phi_{j + 1}" for j in range(v)]
    )

    def rows():
        for t, state in enumerate(traj.states):
            profile = StrategyProfile.from_rates(game, state[:m], state[m:])
            thetas = [greedy_throughput_multi(profile, game, i) for i in range(m)]
            phis = [vigilante_throughput_multi(profile, game, j) for j in range(v)]
            yield [str(t)] + [_fmt(x) for x in (*state, *thetas, *phis)]

    written = [_write_csv(out_dir, "trajectory.csv", header, rows())]
    payload = {
        "verdict": traj.verdict,
        "steps": traj.steps,
        "point": None if traj.point is None else list(traj.point),
        "amplitude": traj.amplitude,
        "window": traj.window,
    }
    written.append(_write_json(out_dir, "verdict.json", payload))
    return written


def cmd_flow(scenario: Scenario, out_dir: str) -> list[str]:
    """Phase-portrait field, streamlines, and the fixed-point report."""
    game = scenario.game
    _require_two_player(game, "flow")
    field, streams = phase_portrait(
        game, resolution=scenario.grid, dt=scenario.dt, steps=scenario.steps
    )
    written = [
        _write_csv(
            out_dir,
            "phase_field.csv",
            ["g", "a", "dg", "da"],
            ((_fmt(g), _fmt(a), _fmt(dg), _fmt(da)) for g, a, dg, da in field),
        )
    ]

    def stream_rows():
        for k, traj in enumerate(streams):
            for t, (g, a) in enumerate(traj.states):
                yield (str(k), str(t), _fmt(g), _fmt(a))

    written.append(
        _write_csv(out_dir, "streamlines.csv", ["traj", "t", "g", "a"], stream_rows())
    )
    reports = find_fixed_points(game)
    payload = [
        {
            "g": r.point[0],
            "a": r.point[1],
            "eigenvalues": [[z.real, z.imag] for z in r.eigenvalues],
            "stable": r.stable,
            "is_nash": r.is_nash,
            "basin_note": r.basin_note,
            "attracted_inits": [list(p) for p in r.attracted_inits],
            "deadlock_inits": [list(p) for p in r.deadlock_inits],
        }
        for r in reports
    ]
    written.append(_write_json(out_dir, "fixed_points.json", payload))
    return written


def cmd_nash(scenario: Scenario, out_dir: str) -> list[str]:
    game = scenario.game
    _require_two_player(game, "nash")
    verdict = find_nash(game)
    payload = {
        "exists": verdict.exists,
        "g": None if verdict.point is None else verdict.point[0],
        "a": None if verdict.point is None else verdict.point[1],
        "gap_lo": None if verdict.gap is None else verdict.gap[0],
        "gap_hi": None if verdict.gap is None else verdict.gap[1],
        "residuals": verdict.residuals,
    }
    return [_write_json(out_dir, "nash.json", payload)]


def cmd_channel(scenario: Scenario, out_dir: str) -> list[str]:
    """Monte Carlo trace summary plus the vigilantes' empirical estimates."""
    game = scenario.game
    profile = scenario.initial_profile()
    trace = simulate(profile, game, scenario.slots, seed=scenario.seed)
    rows = (
        (str(r["player"]), str(r["transmits"]), str(r["successes"]), _fmt(r["rate"]))
        for r in trace_summary(trace)
    )
    written = [
        _write_csv(
            out_dir,
            "trace_summary.csv",
            ["player", "transmits", "successes", "rate"],
            rows,
        )
    ]
    estimates = [
        estimate_greedy_rate_empirical(trace, game, j)
        for j in range(game.v_vigilante)
    ]
    payload = {
        "slots": trace.slots,
        "seed": scenario.seed,
        "rates": list(trace.rates),
        "greedy_rate_estimates": estimates,
    }
    written.append(_write_json(out_dir, "channel.json", payload))
    return written


_DISPATCH = {
    "best-response": cmd_best_response,
    "play": cmd_play,
    "flow": cmd_flow,
    "nash": cmd_nash,
    "channel": cmd_channel,
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="vigilance-games",
        description="Greedy/vigilante shared-channel game experiments",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", required=True, help="scenario file")
    parser.add_argument("--out", default=None, help="output directory")
    parser.add_argument("--seed", type=int, default=None, help="seed override")
    args = parser.parse_args(argv)

    try:
        scenario = parse_scenario(args.config)
        if args.seed is not None:
            if args.seed < 0:
                raise ScenarioError("[channel] seed: must be a nonnegative integer")
            scenario = scenario.with_seed(args.seed)
        out_dir = args.out or os.environ.get("VG_OUT_DIR") or scenario.out_dir
        os.makedirs(out_dir, exist_ok=True)
    except ScenarioError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2

    try:
        written = _DISPATCH[args.command](scenario, out_dir)
    except ScenarioError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
