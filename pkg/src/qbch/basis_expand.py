"""Binary expansion of codes over GF(2^ell) with respect to a self-dual basis."""

from __future__ import annotations

import functools
import itertools

import numpy as np

from . import linalg
from .cyclic_code import LinearCode, dual_code
from .finite_field import FieldCtx, field_for_size, is_self_dual_basis, reconstruct_element, trace


@functools.lru_cache(maxsize=None)
def _coordinate_table(basis: tuple[int, ...], ctx: FieldCtx, self_dual: bool) -> np.ndarray:
    """Row ``x`` holds the coordinates of field element ``x``."""
    table = np.zeros((ctx.order, ctx.ell), dtype=np.int64)
    if self_dual:
        for x in range(ctx.order):
            table[x] = [trace(ctx.mul(x, b), ctx) for b in basis]
        return table
    seen = set()
    for coords in itertools.product((0, 1), repeat=ctx.ell):
        x = reconstruct_element(list(coords), basis)
        seen.add(x)
        table[x] = coords
    if len(seen) != ctx.order:
        raise ValueError("basis elements are linearly dependent")
    return table


def expand_code(code: LinearCode, basis, check: bool = True) -> LinearCode:
    """Binary [ell*n, ell*k] code obtained by expanding every symbol in ``basis``.

    Symbol j occupies bits j*ell .. j*ell+ell-1.  With ``check=False`` a
    basis that is not self-dual is accepted and plain coordinates are used;
    duality is then not preserved in general.
    """
    ctx = field_for_size(code.q)
    basis = tuple(int(b) for b in basis)
    self_dual = is_self_dual_basis(basis, ctx)
    if check and not self_dual:
        raise ValueError("binary expansion requires a self-dual basis")
    table = _coordinate_table(basis, ctx, self_dual)
    mul = linalg.mul_table(ctx)
    rows = [table[mul[beta][g]].reshape(-1) for g in code.gen for beta in basis]
    gen = np.array(rows, dtype=np.int64).reshape(-1, code.n * ctx.ell)
    out = LinearCode(code.n * ctx.ell, 2, gen)
    if out.k != ctx.ell * code.k:
        raise AssertionError(f"expansion has dimension {out.k}, expected {ctx.ell * code.k}")
    return out


def collapse_word(bits: np.ndarray, basis, q: int) -> np.ndarray:
    """Inverse of the expansion for a single word: blocks back to symbols."""
    ctx = field_for_size(q)
    blocks = np.asarray(bits).reshape(-1, ctx.ell)
    return np.array([reconstruct_element(list(b), tuple(basis)) for b in blocks], dtype=np.int64)


def expanded_dual_consistency(code: LinearCode, basis) -> bool:
    """Does expanding the dual give the binary dual of the expansion?"""
    ctx = field_for_size(code.q)
    check = is_self_dual_basis(tuple(basis), ctx)
    expanded = expand_code(code, basis, check=check)
    expanded_dual = expand_code(dual_code(code), basis, check=check)
    return linalg.row_space_equal(expanded_dual.gen, dual_code(expanded).gen)


def basis_to_json(basis, q: int) -> dict:
    ctx = field_for_size(q)
    return {"ell": ctx.ell, "modulus": ctx.modulus, "elements": [int(b) for b in basis]}


def basis_from_json(data: dict) -> tuple[int, ...]:
    return tuple(int(b) for b in data["elements"])
