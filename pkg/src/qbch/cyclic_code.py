"""Cyclic (BCH) codes from zero sets, and linear-code operations over GF(2^ell)."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .cyclotomic import ZeroSet, coset, dual_zero_set, orthogonal_zero_set_gf4
from .finite_field import FieldCtx, field_for_size, poly_mul, product_of_linear_factors, splitting_tower


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Linear [n, k] code over GF(q) given by a generator matrix in RREF.

    Symbols are ints in the field's own representation.  ``zero_set`` records
    cyclic provenance when the code came from one.
    """

    n: int
    q: int
    gen: np.ndarray
    zero_set: ZeroSet | None = field(default=None)

    def __post_init__(self) -> None:
        gen = np.asarray(self.gen, dtype=np.int64).reshape(-1, self.n)
        if gen.size and (gen.min() < 0 or gen.max() >= self.q):
            raise ValueError("generator entries outside the field")
        reduced, _ = linalg.rref(gen, self.field) if gen.shape[0] else (gen, [])
        reduced.setflags(write=False)
        object.__setattr__(self, "gen", reduced)

    @property
    def field(self) -> FieldCtx:
        return field_for_size(self.q)

    @property
    def k(self) -> int:
        return self.gen.shape[0]

    @property
    def ell(self) -> int:
        return self.field.ell

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.n == other.n and self.q == other.q and np.array_equal(self.gen, other.gen)

    def __hash__(self) -> int:
        return hash((self.n, self.q, self.gen.tobytes()))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.q}))"

    @functools.cached_property
    def parity_check(self) -> np.ndarray:
        return linalg.kernel(self.gen, self.field, ncols=self.n)

    def encode(self, messages: np.ndarray) -> np.ndarray:
        return linalg.matmul(np.atleast_2d(messages), self.gen, self.field)

    def contains_word(self, word: np.ndarray) -> bool:
        return not linalg.matmul(self.parity_check, np.asarray(word)[:, None], self.field).any()

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "k": self.k, "generator_rows": self.gen.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> LinearCode:
        rows = np.array(data["generator_rows"], dtype=np.int64).reshape(-1, int(data["n"]))
        return cls(int(data["n"]), int(data["q"]), rows)

    @classmethod
    def zero(cls, n: int, q: int = 2) -> LinearCode:
        return cls(n, q, np.zeros((0, n), dtype=np.int64))

    @classmethod
    def full(cls, n: int, q: int = 2) -> LinearCode:
        return cls(n, q, np.eye(n, dtype=np.int64))


# ---------------------------------------------------------------------------
# polynomials and cyclic codes


@functools.lru_cache(maxsize=None)
def coset_polynomial(n: int, q: int, rep: int) -> tuple[int, ...]:
    """prod (X - alpha^z) over the cyclotomic coset of ``rep``, with coefficients in GF(q)."""
    tower, alpha = splitting_tower(n, q)
    big = tower.big
    poly = product_of_linear_factors([big.pow(alpha, z) for z in sorted(coset(n, q, rep))], big)
    try:
        return tuple(tower.to_small(c) for c in poly)
    except ValueError as exc:
        raise ValueError(f"coset polynomial of {rep} mod {n} has a coefficient outside GF({q})") from exc


def generator_polynomial(zs: ZeroSet) -> list[int]:
    """g(X) = prod_{z in Z} (X - alpha^z), coefficients in GF(q), lowest degree first."""
    ctx = field_for_size(zs.q)
    poly = [1]
    for rep in zs.representatives():
        poly = poly_mul(poly, list(coset_polynomial(zs.n, zs.q, rep)), ctx)
    return poly


def code_from_zero_set(zs: ZeroSet) -> LinearCode:
    """The cyclic code whose generator polynomial has roots alpha^z for z in Z."""
    g = generator_polynomial(zs)
    n, k = zs.n, zs.n - len(zs)
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        rows[i, i : i + len(g)] = g
    return LinearCode(n, zs.q, rows, zs)


def dual_code(code: LinearCode) -> LinearCode:
    """Euclidean dual, computed as the kernel of the generator matrix."""
    h = linalg.kernel(code.gen, code.field, ncols=code.n)
    zs = dual_zero_set(code.zero_set) if code.zero_set is not None else None
    return LinearCode(code.n, code.q, h, zs)


def conjugate(code: LinearCode) -> LinearCode:
    """Apply x -> x^2 to every symbol."""
    ctx = code.field
    sq = np.array([ctx.mul(a, a) for a in range(code.q)], dtype=np.int64)
    return LinearCode(code.n, code.q, sq[code.gen])


def hermitian_orthogonal_gf4(code: LinearCode) -> LinearCode:
    """C* = {y : sum conj(x_j) y_j = 0 for all x in C}, which equals conj(C^perp)."""
    if code.q != 4:
        raise ValueError(f"Hermitian orthogonal code needs q=4, got q={code.q}")
    out = conjugate(dual_code(code))
    zs = orthogonal_zero_set_gf4(code.zero_set) if code.zero_set is not None else None
    return LinearCode(out.n, 4, out.gen, zs)


def hermitian_form(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix of sum_j conj(a_ij) b_kj over GF(4)."""
    ctx = field_for_size(4)
    sq = np.array([ctx.mul(x, x) for x in range(4)], dtype=np.int64)
    return linalg.matmul(sq[np.atleast_2d(a)], np.atleast_2d(b).T, ctx)


def contains(big: LinearCode, sub: LinearCode) -> bool:
    """True iff the row space of ``sub`` lies inside that of ``big``."""
    if (big.n, big.q) != (sub.n, sub.q):
        raise ValueError("codes differ in length or field")
    if sub.k == 0:
        return True
    return linalg.in_row_space(sub.gen, big.gen, big.field)


def even_weight_subcode(code: LinearCode) -> LinearCode:
    if code.q != 2:
        raise ValueError("even-weight subcode is defined for binary codes")
    rows = code.gen.copy()
    odd = np.flatnonzero(rows.sum(axis=1) & 1)
    if odd.size == 0:
        return code
    pivot = odd[0]
    rows[odd[1:]] ^= rows[pivot]
    rows = np.delete(rows, pivot, axis=0)
    return LinearCode(code.n, 2, rows)


def is_cyclic(code: LinearCode) -> bool:
    return contains(code, LinearCode(code.n, code.q, np.roll(code.gen, 1, axis=1)))


# ---------------------------------------------------------------------------
# binary images


def binary_image(code: LinearCode) -> LinearCode:
    """GF(2)-linear image of an F_(2^ell) code in the polynomial basis.

    Symbol j occupies bits j*ell .. j*ell+ell-1 (bit t is the coefficient of
    x^t).  The block weight of an image word equals the symbol weight.
    """
    if code.q == 2:
        return code
    ctx, ell = code.field, code.ell
    mul = linalg.mul_table(ctx)
    rows = []
    for g in code.gen:
        for t in range(ell):
            scaled = mul[1 << t][g]
            rows.append(((scaled[:, None] >> np.arange(ell)) & 1).reshape(-1))
    rows_arr = np.array(rows, dtype=np.int64).reshape(-1, code.n * ell)
    return LinearCode(code.n * ell, 2, rows_arr)


def symbols_to_bits(words: np.ndarray, ell: int) -> np.ndarray:
    words = np.atleast_2d(words)
    return ((words[:, :, None] >> np.arange(ell)) & 1).reshape(words.shape[0], -1)


def bits_to_symbols(bits: np.ndarray, ell: int) -> np.ndarray:
    bits = np.atleast_2d(bits)
    blocks = bits.reshape(bits.shape[0], -1, ell)
    return (blocks << np.arange(ell)).sum(axis=2)
