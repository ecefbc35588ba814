"""Quantum BCH codes from classical BCH codes over GF(2), GF(4) and GF(2^ell)."""

from .config import BudgetExceeded, Budgets
from .cyclic_code import LinearCode, code_from_zero_set, dual_code, hermitian_orthogonal_gf4
from .cyclotomic import ZeroSet, all_cosets, bch_bound, coset, dual_zero_set, enumerate_self_dual_zero_sets
from .quantum import QuantumCodeRecord, build_qbch, search_qbch

__all__ = [
    "BudgetExceeded",
    "Budgets",
    "LinearCode",
    "QuantumCodeRecord",
    "ZeroSet",
    "all_cosets",
    "bch_bound",
    "build_qbch",
    "code_from_zero_set",
    "coset",
    "dual_code",
    "dual_zero_set",
    "enumerate_self_dual_zero_sets",
    "hermitian_orthogonal_gf4",
    "search_qbch",
]
__version__ = "0.1.0"
