"""Graded characters: free generator profiles, O(2n) orbifolds of free bosons, and an oracle."""

from .molien import BUDGET_ENV, CharacterBudgetError, orbifold_character, term_budget, weyl_density
from .oracle import OracleTooLarge, brute_force_dim
from .series import (
    GeneratorProfile,
    QSeries,
    TruncationMismatch,
    first_discrepancy,
    fock_character,
    free_character,
    generator_profile_of,
)

__all__ = [
    "BUDGET_ENV",
    "CharacterBudgetError",
    "GeneratorProfile",
    "OracleTooLarge",
    "QSeries",
    "TruncationMismatch",
    "brute_force_dim",
    "first_discrepancy",
    "fock_character",
    "free_character",
    "generator_profile_of",
    "orbifold_character",
    "term_budget",
    "weyl_density",
]
