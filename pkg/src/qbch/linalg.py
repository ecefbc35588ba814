"""Dense linear algebra over small fields GF(2^ell), on numpy integer arrays."""

from __future__ import annotations

import functools

import numpy as np

from .finite_field import FieldCtx, gf

GF2 = gf(1)


@functools.lru_cache(maxsize=None)
def _tables(ctx: FieldCtx) -> tuple[np.ndarray, np.ndarray]:
    q = ctx.order
    mul = np.array([[ctx.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
    inv = np.array([0] + [ctx.inv(a) for a in range(1, q)], dtype=np.int64)
    return mul, inv


def mul_table(ctx: FieldCtx) -> np.ndarray:
    return _tables(ctx)[0]


def scale(v: np.ndarray, a: int, ctx: FieldCtx) -> np.ndarray:
    if ctx.order == 2:
        return v * a
    return mul_table(ctx)[a][v]


def matmul(a: np.ndarray, b: np.ndarray, ctx: FieldCtx) -> np.ndarray:
    """Matrix product over the field (sum = xor)."""
    a = np.atleast_2d(a)
    b = np.atleast_2d(b)
    if ctx.order == 2:
        return (a.astype(np.int64) @ b.astype(np.int64)) & 1
    mul = mul_table(ctx)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for t in range(a.shape[1]):
        out ^= mul[a[:, t][:, None], b[t][None, :]]
    return out


def rref(m: np.ndarray, ctx: FieldCtx = GF2) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form with zero rows dropped, and the pivot columns."""
    r = np.array(m, dtype=np.int64, copy=True)
    if r.ndim == 1:
        r = r[None, :]
    rows, cols = r.shape
    mul, inv = _tables(ctx)
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        p = row + nz[0]
        if p != row:
            r[[row, p]] = r[[p, row]]
        if r[row, col] != 1:
            r[row] = mul[inv[r[row, col]]][r[row]]
        others = np.nonzero(r[:, col])[0]
        others = others[others != row]
        if others.size:
            if ctx.order == 2:
                r[others] ^= r[row]
            else:
                r[others] ^= mul[r[others, col][:, None], r[row][None, :]]
        pivots.append(col)
        row += 1
    return r[:row], pivots


def rank(m: np.ndarray, ctx: FieldCtx = GF2) -> int:
    if np.size(m) == 0:
        return 0
    return len(rref(m, ctx)[1])


def kernel(m: np.ndarray, ctx: FieldCtx = GF2, ncols: int | None = None) -> np.ndarray:
    """Basis (rows, in RREF) of {x : m @ x = 0}."""
    m = np.asarray(m, dtype=np.int64)
    n = ncols if ncols is not None else m.shape[-1]
    if m.size == 0:
        return np.eye(n, dtype=np.int64)
    r, pivots = rref(m, ctx)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        # x_p = -r[row, f] = r[row, f] in characteristic 2
        for row, p in enumerate(pivots):
            basis[i, p] = r[row, f]
    if not len(free):
        return basis
    return rref(basis, ctx)[0]


def row_space_equal(a: np.ndarray, b: np.ndarray, ctx: FieldCtx = GF2) -> bool:
    ra, _ = rref(a, ctx)
    rb, _ = rref(b, ctx)
    return ra.shape == rb.shape and bool(np.array_equal(ra, rb))


def in_row_space(vectors: np.ndarray, basis: np.ndarray, ctx: FieldCtx = GF2) -> bool:
    """True iff every row of ``vectors`` lies in the row space of ``basis``."""
    base_rank = rank(basis, ctx)
    return rank(np.vstack([np.atleast_2d(basis), np.atleast_2d(vectors)]), ctx) == base_rank


def complete_basis(sub: np.ndarray, big: np.ndarray, ctx: FieldCtx = GF2) -> np.ndarray:
    """Rows of ``big`` (reduced) that extend a basis of ``sub`` to one of ``big``.

    Returned rows come in the order they are encountered in the RREF of ``big``.
    """
    sub_r, _ = rref(sub, ctx) if np.size(sub) else (np.zeros((0, big.shape[1]), np.int64), [])
    big_r, _ = rref(big, ctx)
    current = sub_r
    extra = []
    for row in big_r:
        trial = np.vstack([current, row[None, :]])
        if rank(trial, ctx) > current.shape[0]:
            extra.append(row)
            current = trial
    return np.array(extra, dtype=np.int64).reshape(-1, big.shape[1])


def bits_to_int(v: np.ndarray) -> int:
    """Little-endian bit vector to int (bit i is entry i)."""
    out = 0
    for i in np.flatnonzero(v):
        out |= 1 << int(i)
    return out


def int_to_bits(x: int, n: int) -> np.ndarray:
    return np.array([(x >> i) & 1 for i in range(n)], dtype=np.int64)
