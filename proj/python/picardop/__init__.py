"""Picard-type operator learning for nonlinear heat equations on the torus."""

from ._core import (  # noqa: F401
    GridSpec,
    TorusField,
    TrajectoryField,
    SemigroupKind,
    Nonlinearity,
    PiecewiseLinear,
    PicardParams,
    PicardModel,
    InitialLaw,
    SensorSet,
    apply_fejer,
    apply_semigroup,
    build_rho,
    catalog,
    catalog_names,
    clip_state,
    clipped_loss,
    duhamel,
    fejer_mask,
    heat_multiplier,
    iterate,
    observe,
    picard_step,
    plan_budget,
    reconstruct,
    reconstruction_error,
    run_scenario_config,
    sample_initial,
    sobolev_norm,
    solve_fixed_point,
    stability_envelope,
    sup_norm,
    sup_norm_trajectory,
    terminal_trace,
    truncation_error,
)

__version__ = "0.1.0"
