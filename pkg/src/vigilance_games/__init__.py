"""Greedy/vigilante dynamics on a slotted shared channel.

Closed-form model quantities, best-response maps with their jump
discontinuity, Nash existence detection, fictitious-play and gradient-flow
dynamics, and a Monte Carlo channel simulator, plus a scenario-driven CLI.
"""

from .best_response import (
    BestResponseCurve,
    CriticalPoints,
    DegenerateChannelError,
    IndifferentVigilanteError,
    JumpPoint,
    boundary_backoff_gap,
    greedy_best_response,
    greedy_best_response_for_clearance,
    greedy_best_response_labeled,
    greedy_cost_curvature,
    greedy_cost_slope,
    greedy_critical_points,
    grid_argmin,
    jump_point,
    sample_greedy_curve,
    sample_vigilante_curve,
    vigilante_best_response,
    vigilante_cost_in_a,
    vigilante_stationary_rate,
)
from .channel import (
    ChannelTrace,
    binomial_sigma,
    empirical_throughput,
    estimate_greedy_rate_empirical,
    simulate,
    trace_summary,
)
from .equilibrium import NashVerdict, composed_response, find_nash, verify_nash
from .flow import (
    FixedPointReport,
    find_fixed_points,
    flow_jacobian,
    gradient_field,
    integrate,
    phase_portrait,
)
from .model import (
    FairBaselines,
    GameConfig,
    SilentVigilanteError,
    StrategyProfile,
    access_prob,
    believed_greedy_throughput,
    clearance,
    coop_throughput,
    estimate_greedy_rate,
    fair_baselines,
    full_rate_vector,
    greedy_cost,
    greedy_throughput,
    greedy_throughput_multi,
    vigilante_cost,
    vigilante_throughput,
    vigilante_throughput_multi,
)
from .play import PlayParams, Trajectory, run, step
from .scenario import (
    Scenario,
    ScenarioError,
    parse_scenario,
    parse_scenario_text,
    serialize_scenario,
)

__version__ = "0.1.0"

__all__ = [
    "BestResponseCurve",
    "ChannelTrace",
    "CriticalPoints",
    "DegenerateChannelError",
    "FairBaselines",
    "FixedPointReport",
    "GameConfig",
    "IndifferentVigilanteError",
    "JumpPoint",
    "NashVerdict",
    "PlayParams",
    "Scenario",
    "ScenarioError",
    "SilentVigilanteError",
    "StrategyProfile",
    "Trajectory",
    "access_prob",
    "believed_greedy_throughput",
    "binomial_sigma",
    "boundary_backoff_gap",
    "clearance",
    "composed_response",
    "coop_throughput",
    "empirical_throughput",
    "estimate_greedy_rate",
    "estimate_greedy_rate_empirical",
    "fair_baselines",
    "find_fixed_points",
    "find_nash",
    "flow_jacobian",
    "full_rate_vector",
    "gradient_field",
    "greedy_best_response",
    "greedy_best_response_for_clearance",
    "greedy_best_response_labeled",
    "greedy_cost",
    "greedy_cost_curvature",
    "greedy_cost_slope",
    "greedy_critical_points",
    "greedy_throughput",
    "greedy_throughput_multi",
    "grid_argmin",
    "integrate",
    "jump_point",
    "parse_scenario",
    "parse_scenario_text",
    "phase_portrait",
    "run",
    "sample_greedy_curve",
    "sample_vigilante_curve",
    "serialize_scenario",
    "simulate",
    "step",
    "trace_summary",
    "verify_nash",
    "vigilante_best_response",
    "vigilante_cost",
    "vigilante_cost_in_a",
    "vigilante_stationary_rate",
    "vigilante_throughput",
    "vigilante_throughput_multi",
]
