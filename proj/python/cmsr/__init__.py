"""Collective route recommendation: evaluation, construction, simulation."""

from ._core import (
    GreedyStep,
    Instance,
    MeanReport,
    SimReport,
    TaxiOutcome,
    batch_simulate,
    estimate_rate,
    evaluate,
    gen_events,
    greedy,
    lcp_style,
    load_instance,
    lower_bound,
    make_instance,
    pickup_prob,
    random_routes,
    save_instance,
    simulate,
    single_ptt,
    synth_instance,
    top_k,
)

__all__ = [
    "GreedyStep",
    "Instance",
    "MeanReport",
    "SimReport",
    "TaxiOutcome",
    "batch_simulate",
    "estimate_rate",
    "evaluate",
    "gen_events",
    "greedy",
    "lcp_style",
    "load_instance",
    "lower_bound",
    "make_instance",
    "pickup_prob",
    "random_routes",
    "save_instance",
    "simulate",
    "single_ptt",
    "synth_instance",
    "top_k",
]
