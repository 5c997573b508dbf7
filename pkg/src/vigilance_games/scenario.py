"""Scenario files: flat INI-style configs driving the command-line harness.

A scenario collects the game layout plus the knobs of every dynamic in one
file, with sections [game] [play] [flow] [channel] [output]. Parsing is
strict: unknown or ill-typed values fail with a diagnostic naming the
section and key, and a parsed scenario re-serialises to a field-identical
file (floats are written in round-trip precision).
"""

from __future__ import annotations

import configparser
import io
from dataclasses import dataclass, replace

from .model import GameConfig, StrategyProfile
from .play import PlayParams


class ScenarioError(ValueError):
    """A scenario file failed validation; the message names the field."""


_PHI0_TOKENS = {
    "fair": "n-1",
    "n-1": "n-1",
    "asprinted": "n",
    "as_printed": "n",
    "n": "n",
}


@dataclass(frozen=True)
class Scenario:
    """Everything a command needs: game, play, flow, and channel settings."""

    game: GameConfig
    epsilon_g: float = 0.1
    epsilon_a: float = 0.1
    t_max: int = 5000
    conv_tol: float = 1e-9
    window: int = 50
    init_g: tuple[float, ...] | None = None
    init_a: tuple[float, ...] | None = None
    mode: str = "exact"
    dt: float = 0.02
    steps: int = 5000
    grid: int = 25
    slots: int = 1_000_000
    seed: int = 0
    out_dir: str = "."

    def initial_profile(self) -> StrategyProfile:
        if self.init_g is None and self.init_a is None:
            return StrategyProfile.fair(self.game)
        q = self.game.q_fair
        g = self.init_g if self.init_g is not None else (q,) * self.game.m_greedy
        a = self.init_a if self.init_a is not None else (q,) * self.game.v_vigilante
        return StrategyProfile.from_rates(self.game, g, a)

    def play_params(self) -> PlayParams:
        init = None
        if self.init_g is not None or self.init_a is not None:
            init = self.initial_profile()
        return PlayParams(
            epsilon_g=self.epsilon_g,
            epsilon_a=self.epsilon_a,
            t_max=self.t_max,
            conv_tol=self.conv_tol,
            window=self.window,
            init=init,
            observation=self.mode,
            slots=self.slots,
            seed=self.seed,
        )

    def with_seed(self, seed: int) -> "Scenario":
        return replace(self, seed=seed)


def _get(parser, section, key, cast, default):
    if not parser.has_option(section, key):
        return default
    raw = parser.get(section, key)
    try:
        return cast(raw)
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"[{section}] {key}: {exc}") from None


def _float_list(raw: str) -> tuple[float, ...]:
    items = [p.strip() for p in raw.split(",") if p.strip()]
    if not items:
        raise ValueError("expected a comma-separated list of numbers")
    return tuple(float(p) for p in items)


def _phi0(raw: str) -> str:
    token = raw.strip().lower().replace(" ", "")
    if token not in _PHI0_TOKENS:
        raise ValueError(
            f"expected one of Fair, AsPrinted, n-1, n; got {raw.strip()!r}"
        )
    return _PHI0_TOKENS[token]


def _mode(raw: str) -> str:
    token = raw.strip().lower()
    if token not in ("exact", "empirical"):
        raise ValueError(f"expected exact or empirical, got {raw.strip()!r}")
    return token


def parse_scenario_text(text: str) -> Scenario:
    parser = configparser.ConfigParser()
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ScenarioError(f"malformed scenario file: {exc}") from None
    known = {
        "game": {"n", "m_greedy", "v_vigilante", "lambda", "rho", "phi0_exponent"},
        "play": {
            "epsilon_g",
            "epsilon_a",
            "t_max",
            "conv_tol",
            "window",
            "init_g",
            "init_a",
            "mode",
        },
        "flow": {"dt", "steps", "grid"},
        "channel": {"slots", "seed"},
        "output": {"dir"},
    }
    for section in parser.sections():
        if section not in known:
            raise ScenarioError(f"[{section}]: unknown section")
        for key in parser.options(section):
            if key not in known[section]:
                raise ScenarioError(f"[{section}] {key}: unknown key")
    if not parser.has_section("game"):
        raise ScenarioError("[game]: section is required")
    if not parser.has_option("game", "n"):
        raise ScenarioError("[game] n: key is required")

    n = _get(parser, "game", "n", int, None)
    m = _get(parser, "game", "m_greedy", int, 1)
    v = _get(parser, "game", "v_vigilante", int, 1)
    lam = _get(parser, "game", "lambda", _float_list, (10.0,) * max(m, 1))
    rho = _get(parser, "game", "rho", _float_list, (0.01,) * max(v, 1))
    phi0 = _get(parser, "game", "phi0_exponent", _phi0, "n-1")
    try:
        game = GameConfig(
            n=n,
            m_greedy=m,
            v_vigilante=v,
            lam=lam,
            rho=rho,
            fair_target_exponent=phi0,
        )
    except ValueError as exc:
        raise ScenarioError(f"[game] {exc}") from None

    init_g = _get(parser, "play", "init_g", _float_list, None)
    init_a = _get(parser, "play", "init_a", _float_list, None)
    scenario = Scenario(
        game=game,
        epsilon_g=_get(parser, "play", "epsilon_g", float, 0.1),
        epsilon_a=_get(parser, "play", "epsilon_a", float, 0.1),
        t_max=_get(parser, "play", "t_max", int, 5000),
        conv_tol=_get(parser, "play", "conv_tol", float, 1e-9),
        window=_get(parser, "play", "window", int, 50),
        init_g=init_g,
        init_a=init_a,
        mode=_get(parser, "play", "mode", _mode, "exact"),
        dt=_get(parser, "flow", "dt", float, 0.02),
        steps=_get(parser, "flow", "steps", int, 5000),
        grid=_get(parser, "flow", "grid", int, 25),
        slots=_get(parser, "channel", "slots", int, 1_000_000),
        seed=_get(parser, "channel", "seed", int, 0),
        out_dir=_get(parser, "output", "dir", str, "."),
    )
    _validate(scenario)
    return scenario


def _validate(s: Scenario):
    checks = [
        ("play", "epsilon_g", 0.0 < s.epsilon_g <= 1.0, "must lie in (0, 1]"),
        ("play", "epsilon_a", 0.0 < s.epsilon_a <= 1.0, "must lie in (0, 1]"),
        ("play", "t_max", s.t_max >= 1, "must be positive"),
        ("play", "conv_tol", s.conv_tol > 0.0, "must be positive"),
        ("play", "window", s.window >= 2, "must be at least 2"),
        ("flow", "dt", s.dt > 0.0, "must be positive"),
        ("flow", "steps", s.steps >= 1, "must be positive"),
        ("flow", "grid", s.grid >= 2, "must be at least 2"),
        ("channel", "slots", s.slots >= 1, "must be positive"),
        ("channel", "seed", s.seed >= 0, "must be a nonnegative integer"),
    ]
    for section, key, ok, msg in checks:
        if not ok:
            raise ScenarioError(f"[{section}] {key}: {msg}")
    for key, rates, count in (
        ("init_g", s.init_g, s.game.m_greedy),
        ("init_a", s.init_a, s.game.v_vigilante),
    ):
        if rates is None:
            continue
        if len(rates) != count:
            raise ScenarioError(
                f"[play] {key}: expected {count} entries, got {len(rates)}"
            )
        if any(not 0.0 <= r <= 1.0 for r in rates):
            raise ScenarioError(f"[play] {key}: rates must lie in [0, 1]")


def parse_scenario(path: str) -> Scenario:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file: {exc}") from None
    return parse_scenario_text(text)


def _fmt(x) -> str:
    return format(float(x), ".17g")


def serialize_scenario(s: Scenario) -> str:
    """Render a scenario back to INI text with every field explicit."""
    parser = configparser.ConfigParser()
    parser["game"] = {
        "n": str(s.game.n),
        "m_greedy": str(s.game.m_greedy),
        "v_vigilante": str(s.game.v_vigilante),
        "lambda": ", ".join(_fmt(x) for x in s.game.lam),
        "rho": ", ".join(_fmt(x) for x in s.game.rho),
        "phi0_exponent": s.game.fair_target_exponent,
    }
    play = {
        "epsilon_g": _fmt(s.epsilon_g),
        "epsilon_a": _fmt(s.epsilon_a),
        "t_max": str(s.t_max),
        "conv_tol": _fmt(s.conv_tol),
        "window": str(s.window),
        "mode": s.mode,
    }
    if s.init_g is not None:
        play["init_g"] = ", ".join(_fmt(x) for x in s.init_g)
    if s.init_a is not None:
        play["init_a"] = ", ".join(_fmt(x) for x in s.init_a)
    parser["play"] = play
    parser["flow"] = {
        "dt": _fmt(s.dt),
        "steps": str(s.steps),
        "grid": str(s.grid),
    }
    parser["channel"] = {"slots": str(s.slots), "seed": str(s.seed)}
    parser["output"] = {"dir": s.out_dir}
    buf = io.StringIO()
    parser.write(buf)
    return buf.getvalue()
