"""Exact symplectic dGBV checks and Frobenius data on finite models."""

from ._core import (
    Model,
    all_harmonic,
    betti,
    build_kodaira_thurston,
    build_torus,
    delta_betti,
    first_failure,
    hard_lefschetz,
    load_model,
    mathieu,
    potential_terms,
    run,
    validate_ok,
    wdvv_ok,
)

__all__ = [
    "Model",
    "all_harmonic",
    "betti",
    "build_kodaira_thurston",
    "build_torus",
    "delta_betti",
    "first_failure",
    "hard_lefschetz",
    "load_model",
    "mathieu",
    "potential_terms",
    "run",
    "validate_ok",
    "wdvv_ok",
]
