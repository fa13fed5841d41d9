"""Exact weight, branching and K-type computations for compact Lie groups."""

from ._liedual import (
    BudgetExceeded,
    InputError,
    NegativeMultiplicity,
    NotCovered,
    branch,
    dimension,
    embeddings,
    infchar_lift,
    multiplicity_series,
    restrict,
    rule_ids,
    sign_first_appearance,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "InputError",
    "NegativeMultiplicity",
    "NotCovered",
    "branch",
    "dimension",
    "embeddings",
    "infchar_lift",
    "multiplicity_series",
    "restrict",
    "rule_ids",
    "sign_first_appearance",
    "verify",
]
