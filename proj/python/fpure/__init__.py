"""Exact F-purity and F-pure threshold invariants over prime fields."""

from ._fpure import (
    BudgetExhausted,
    Error,
    InputError,
    MathError,
    NotFpureError,
    apply_divided_power,
    diff_power_member,
    fedder,
    fpt_bounds,
    groebner_basis,
    main_formula,
    run,
    set_pair_budget,
    stratify,
    theta,
    theta_at_prime,
    theta_global,
)

__all__ = [
    "BudgetExhausted",
    "Error",
    "InputError",
    "MathError",
    "NotFpureError",
    "apply_divided_power",
    "diff_power_member",
    "fedder",
    "fpt_bounds",
    "groebner_basis",
    "main_formula",
    "run",
    "set_pair_budget",
    "stratify",
    "theta",
    "theta_at_prime",
    "theta_global",
]
