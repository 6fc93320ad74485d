"""Hamiltonian listings of polytope face lattices."""

from ._core import (
    EMPTY,
    BudgetExceeded,
    InputError,
    brgc,
    decide_strip,
    families,
    fixture,
    flag_to_signed_perm,
    fubini,
    gamma,
    generate,
    little_schroeder,
    rank,
    strip,
    sweep,
    verify,
)

__all__ = [
    "EMPTY",
    "BudgetExceeded",
    "InputError",
    "brgc",
    "decide_strip",
    "families",
    "fixture",
    "flag_to_signed_perm",
    "fubini",
    "gamma",
    "generate",
    "little_schroeder",
    "rank",
    "strip",
    "sweep",
    "verify",
]
