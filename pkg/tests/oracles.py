"""Independent slow reference implementations used as test oracles."""

from __future__ import annotations

import itertools

import numpy as np


def gf_mul(a: int, b: int, modulus: int) -> int:
    """Shift-and-add multiplication modulo ``modulus`` (no tables)."""
    deg = modulus.bit_length() - 1
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> deg & 1:
            a ^= modulus
    return out


def gf_pow(a: int, e: int, modulus: int) -> int:
    out = 1
    for _ in range(e):
        out = gf_mul(out, a, modulus)
    return out


def gf_trace(x: int, modulus: int) -> int:
    deg = modulus.bit_length() - 1
    total, y = 0, x
    for _ in range(deg):
        total ^= y
        y = gf_mul(y, y, modulus)
    return total


def all_codewords(gen: np.ndarray, q: int, modulus: int) -> list[tuple[int, ...]]:
    """Every F_q-combination of the rows, re-encoded from scratch."""
    gen = np.atleast_2d(np.asarray(gen, dtype=np.int64))
    k, n = gen.shape
    words = set()
    for msg in itertools.product(range(q), repeat=k):
        w = [0] * n
        for m, row in zip(msg, gen):
            if m:
                for j, g in enumerate(row):
                    w[j] ^= gf_mul(m, int(g), modulus) if q > 2 else int(g)
        words.add(tuple(w))
    return sorted(words)


def min_weight(words, block: int = 1) -> int | None:
    best = None
    for w in words:
        blocks = [any(w[i : i + block]) for i in range(0, len(w), block)]
        wt = sum(blocks)
        if wt and (best is None or wt < best):
            best = wt
    return best


def rank_gf2(m: np.ndarray) -> int:
    rows = [int("".join(map(str, r)), 2) for r in np.asarray(m, dtype=np.int64) & 1]
    rank = 0
    while rows:
        pivot = max(rows)
        rows.remove(pivot)
        if pivot == 0:
            break
        rank += 1
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if r >> top & 1 else r for r in rows]
    return rank


def poly_mul_gf2(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out
