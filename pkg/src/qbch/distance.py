"""Minimum distances of linear codes and of code pairs (the quantum distance).

Every code over GF(2^ell) is handled through its binary image, where a
symbol is a contiguous block of ``ell`` bits and the symbol weight of a word
is its block weight.  Three routes are offered:

* exhaustive enumeration of packed codewords in Gray-code order,
* support enumeration (exact for small distances),
* random information-set sampling (upper bounds only).
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import linalg
from .config import Budgets, BudgetExceeded
from .cyclic_code import LinearCode, binary_image, contains

NO_CODEWORD = None

CHUNK_BITS = 20


@dataclass(frozen=True)
class DistanceResult:
    d: int | None
    method: str  # "exhaustive" | "support" | "sampled" | "bound"
    exact: bool

    def to_json(self) -> dict:
        return {"d": self.d, "method": self.method, "exact": self.exact}


# ---------------------------------------------------------------------------
# packing


class PackedLayout:
    """Bit layout of length-``n`` binary words in uint64 lanes.

    Blocks of ``block`` bits never straddle two lanes.
    """

    def __init__(self, n: int, block: int = 1) -> None:
        if n % block:
            raise ValueError(f"length {n} is not a multiple of block size {block}")
        self.n = n
        self.block = block
        self.per_lane = (64 // block) * block
        self.lanes = max(1, -(-n // self.per_lane))
        lead = np.zeros(self.lanes, dtype=np.uint64)
        for j in range(0, n, block):
            lane, bit = divmod(j, self.per_lane)
            lead[lane] |= np.uint64(1) << np.uint64(bit)
        self.lead = lead

    def pack(self, bits: np.ndarray) -> np.ndarray:
        bits = np.atleast_2d(np.asarray(bits, dtype=np.uint64))
        out = np.zeros((bits.shape[0], self.lanes), dtype=np.uint64)
        for i in range(self.n):
            lane, bit = divmod(i, self.per_lane)
            out[:, lane] |= bits[:, i] << np.uint64(bit)
        return out

    def unpack(self, words: np.ndarray) -> np.ndarray:
        words = np.atleast_2d(words)
        out = np.zeros((words.shape[0], self.n), dtype=np.int64)
        for i in range(self.n):
            lane, bit = divmod(i, self.per_lane)
            out[:, i] = (words[:, lane] >> np.uint64(bit)) & np.uint64(1)
        return out

    def weights(self, words: np.ndarray) -> np.ndarray:
        """Block weight of each packed word (Hamming weight when block == 1)."""
        if self.block == 1:
            return np.bitwise_count(words).sum(axis=1, dtype=np.int64)
        folded = words.copy()
        for t in range(1, self.block):
            folded |= words >> np.uint64(t)
        folded &= self.lead
        return np.bitwise_count(folded).sum(axis=1, dtype=np.int64)


def gray_table(rows: np.ndarray) -> np.ndarray:
    """All XOR combinations of packed ``rows`` in reflected Gray-code order.

    Entry ``j`` encodes the message ``j ^ (j >> 1)`` (bit i selects row i);
    consecutive entries differ by exactly one row.
    """
    table = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    for row in rows:
        table = np.concatenate([table, table[::-1] ^ row])
    return table


def gray_messages(k: int) -> np.ndarray:
    j = np.arange(1 << k, dtype=np.int64)
    return j ^ (j >> 1)


def enumerate_codewords(code: LinearCode) -> tuple[np.ndarray, np.ndarray]:
    """All codewords of a binary code in Gray-code order, with their messages."""
    if code.q != 2:
        raise ValueError("enumerate_codewords expects a binary code")
    layout = PackedLayout(code.n)
    table = gray_table(layout.pack(code.gen)) if code.k else np.zeros((1, layout.lanes), np.uint64)
    return layout.unpack(table), gray_messages(code.k)


# ---------------------------------------------------------------------------
# exhaustive enumeration


def _binary(code: LinearCode, block: int | None) -> tuple[LinearCode, int]:
    if code.q == 2:
        return code, block or 1
    if block not in (None, code.ell):
        raise ValueError("block size of a non-binary code is fixed by its field")
    return binary_image(code), code.ell


def _ordered_generators(big: LinearCode, sub: LinearCode | None) -> tuple[np.ndarray, int]:
    """Basis of ``big`` whose first ``s`` rows span ``sub``."""
    if sub is None or sub.k == 0:
        return big.gen, 0
    extra = linalg.complete_basis(sub.gen, big.gen)
    return np.vstack([sub.gen, extra]), sub.k


def _enumeration_min(
    gens: np.ndarray,
    layout: PackedLayout,
    sub_dim: int,
    stop_at: int = 0,
    workers: int = 1,
) -> int | None:
    """Minimum block weight over messages m >= 2^sub_dim (i.e. outside the sub span)."""
    k = gens.shape[0]
    if k == sub_dim:
        return NO_CODEWORD
    packed = layout.pack(gens)
    b = min(k, CHUNK_BITS)
    table = gray_table(packed[:b])
    low_msgs = gray_messages(b)
    high = packed[b:]
    n_high = 1 << (k - b)
    limit = 1 << sub_dim

    def chunk_min(h: int) -> int | None:
        hm = h ^ (h >> 1)
        if sub_dim > b and hm < (limit >> b):
            return None
        word = np.zeros(layout.lanes, dtype=np.uint64)
        for i in range(k - b):
            if (hm >> i) & 1:
                word ^= high[i]
        weights = layout.weights(table ^ word)
        if hm == 0 and sub_dim <= b:
            weights = weights[low_msgs >= limit]
        return int(weights.min()) if weights.size else None

    best: int | None = None
    batch = max(1, workers) * 4
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for start in range(0, n_high, batch):
            stop = min(start + batch, n_high)
            results = pool.map(chunk_min, range(start, stop)) if workers > 1 else map(chunk_min, range(start, stop))
            for r in results:
                if r is not None and (best is None or r < best):
                    best = r
            if best is not None and best <= stop_at:
                break
    return best


def _check_budget(kbits: int, budget: int | None, what: str) -> None:
    budget = Budgets().enumeration if budget is None else budget
    needed = 1 << kbits
    if needed > budget:
        raise BudgetExceeded(what, needed, budget)


def min_weight_exhaustive(
    code: LinearCode, budget: int | None = None, block: int | None = None, workers: int = 1
) -> int | None:
    """Exact minimum nonzero (block) weight; ``NO_CODEWORD`` for the zero code."""
    image, block = _binary(code, block)
    _check_budget(image.k, budget, f"enumerating [{code.n},{code.k}] over GF({code.q})")
    return _enumeration_min(image.gen, PackedLayout(image.n, block), 0, workers=workers)


def min_weight_outside_subcode(
    big: LinearCode,
    sub: LinearCode,
    budget: int | None = None,
    block: int | None = None,
    lower_bound: int = 0,
    workers: int = 1,
) -> int | None:
    """Exact minimum weight over codewords of ``big`` that are not in ``sub``.

    Enumeration stops early once a word of weight ``lower_bound`` is seen.
    """
    if not contains(big, sub):
        raise ValueError("sub is not contained in big")
    big_b, block = _binary(big, block)
    sub_b, _ = _binary(sub, block if sub.q == 2 else None)
    _check_budget(big_b.k, budget, f"enumerating [{big.n},{big.k}] over GF({big.q})")
    gens, s = _ordered_generators(big_b, sub_b)
    return _enumeration_min(gens, PackedLayout(big_b.n, block), s, stop_at=lower_bound, workers=workers)


def blockwise_min_weight(
    code: LinearCode, block: int, budget: int | None = None, sub: LinearCode | None = None
) -> int | None:
    """Minimum number of nonzero ``block``-bit blocks over nonzero codewords of a binary code."""
    if code.q != 2:
        raise ValueError("blockwise_min_weight expects a binary code")
    if sub is None:
        return min_weight_exhaustive(code, budget, block=block)
    return min_weight_outside_subcode(code, sub, budget, block=block)


# ---------------------------------------------------------------------------
# support enumeration


class SupportSearch:
    """Searches block supports of increasing size for codewords outside ``sub``.

    A word with block support exactly S is a codeword iff the syndromes of
    its block patterns XOR to zero; it lies outside ``sub`` iff its
    ``sub``-syndrome is nonzero.
    """

    def __init__(self, big: LinearCode, sub: LinearCode | None = None, block: int | None = None):
        big_b, block = _binary(big, block)
        self.block = block
        self.n_blocks = big_b.n // block
        h = big_b.parity_check
        if sub is not None and sub.k:
            sub_b, _ = _binary(sub, block if sub.q == 2 else None)
            hs = sub_b.parity_check
        else:
            hs = np.eye(big_b.n, dtype=np.int64)
        col = [linalg.bits_to_int(h[:, i]) for i in range(big_b.n)]
        scol = [linalg.bits_to_int(hs[:, i]) for i in range(big_b.n)]
        self.patterns: list[list[tuple[int, int]]] = []
        for j in range(self.n_blocks):
            pats = []
            for p in range(1, 1 << block):
                syn = ssyn = 0
                for t in range(block):
                    if (p >> t) & 1:
                        syn ^= col[j * block + t]
                        ssyn ^= scol[j * block + t]
                pats.append((syn, ssyn))
            self.patterns.append(pats)
        self.by_syndrome: dict[int, list[tuple[int, int]]] = {}
        for j, pats in enumerate(self.patterns):
            for syn, ssyn in pats:
                self.by_syndrome.setdefault(syn, []).append((j, ssyn))

    def cost(self, w: int) -> int:
        """Number of (w-1)-block prefixes examined at weight ``w``."""
        if w < 1:
            return 0
        return math.comb(self.n_blocks, w - 1) * ((1 << self.block) - 1) ** (w - 1)

    def has_weight(self, w: int) -> bool:
        if w < 1 or w > self.n_blocks:
            return False
        if w == 1:
            return any(syn == 0 and ssyn for pats in self.patterns for syn, ssyn in pats)
        lookup = self.by_syndrome
        for blocks in itertools.combinations(range(self.n_blocks - 1), w - 1):
            last = blocks[-1]
            for choice in itertools.product(*(self.patterns[j] for j in blocks)):
                syn = ssyn = 0
                for s, t in choice:
                    syn ^= s
                    ssyn ^= t
                for j, t in lookup.get(syn, ()):
                    if j > last and ssyn ^ t:
                        return True
        return False


def min_weight_by_support_enumeration(
    code: LinearCode,
    w_max: int,
    sub: LinearCode | None = None,
    block: int | None = None,
    budget: int | None = None,
    start: int = 1,
) -> int | None:
    """Exact minimum weight if it is at most ``w_max``, else ``None``.

    With ``sub`` the minimum is taken over codewords outside ``sub``.
    ``start`` may be raised to a proven lower bound to skip small weights.
    """
    budget = Budgets().supports if budget is None else budget
    search = SupportSearch(code, sub, block)
    needed = sum(search.cost(w) for w in range(start, w_max + 1))
    if needed > budget:
        raise BudgetExceeded(f"support enumeration up to weight {w_max}", needed, budget)
    for w in range(start, w_max + 1):
        if search.has_weight(w):
            return w
    return None


# ---------------------------------------------------------------------------
# sampling


def random_word_upper_bound(
    code: LinearCode,
    trials: int,
    seed: int = 0,
    sub: LinearCode | None = None,
    block: int | None = None,
    method: str = "information_set",
) -> int | None:
    """Smallest weight among ``trials`` sampled codewords (outside ``sub`` if given).

    ``method="uniform"`` draws uniformly random messages.  The default draws
    a random information set per round and examines every systematic row and
    every sum of two rows, which favours low-weight words.  Either way the
    result is an upper bound on the true minimum.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    big_b, block = _binary(code, block)
    if sub is not None and not contains(code, sub):
        raise ValueError("sub is not contained in code")
    sub_b = _binary(sub, block if sub.q == 2 else None)[0] if sub is not None and sub.k else None
    hs = sub_b.parity_check if sub_b is not None else None
    n, k = big_b.n, big_b.k
    if k == 0 or (sub_b is not None and sub_b.k == k):
        return NO_CODEWORD
    layout = PackedLayout(n, block)
    seeds = np.random.SeedSequence(seed)
    best: int | None = None

    def consider(words: np.ndarray) -> None:
        nonlocal best
        keep = words.any(axis=1)
        if hs is not None:
            keep &= ((words @ hs.T) & 1).any(axis=1)
        if keep.any():
            w = int(layout.weights(layout.pack(words[keep])).min())
            best = w if best is None else min(best, w)

    drawn = 0
    if method == "uniform":
        gens, s = _ordered_generators(big_b, sub_b)
        while drawn < trials:
            rng = np.random.default_rng(seeds.spawn(1)[0])
            m = min(4096, trials - drawn)
            msgs = rng.integers(0, 2, size=(m, k))
            consider((msgs @ gens) & 1)
            drawn += m
    elif method == "information_set":
        gen = big_b.gen
        iu = np.triu_indices(k, 1)
        while drawn < trials:
            rng = np.random.default_rng(seeds.spawn(1)[0])
            perm = (rng.permutation(n // block)[:, None] * block + np.arange(block)).reshape(-1)
            reduced, _ = linalg.rref(gen[:, perm])
            rows = reduced[:, np.argsort(perm)]
            pairs = rows[iu[0]] ^ rows[iu[1]]
            words = np.vstack([rows, pairs])[: trials - drawn]
            consider(words)
            drawn += words.shape[0]
    else:
        raise ValueError(f"unknown sampling method {method!r}")
    return best


# ---------------------------------------------------------------------------
# verification ladder


def _support_worthwhile(search: SupportSearch, w: int, enum_words: int, enum_ok: bool, spent: int) -> bool:
    # a support prefix costs roughly what a few hundred packed words cost
    cost = spent + search.cost(w)
    return not enum_ok or cost * 256 < enum_words


def verified_distance(
    big: LinearCode,
    sub: LinearCode | None = None,
    budgets: Budgets | None = None,
    block: int | None = None,
    lower_bound: int = 1,
    workers: int = 1,
) -> DistanceResult:
    """Exact minimum weight of ``big`` (outside ``sub``) by the cheapest in-budget route.

    ``lower_bound`` must be a proven bound; support search starts there.
    Raises ``BudgetExceeded`` when neither route fits.
    """
    budgets = budgets or Budgets()
    image, blk = _binary(big, block)
    enum_words = 1 << image.k
    enum_ok = enum_words <= budgets.enumeration
    def exhaustive(stop: int) -> int | None:
        layout = PackedLayout(image.n, blk)
        if sub is None or sub.k == 0:
            return _enumeration_min(image.gen, layout, 0, stop, workers)
        gens, s = _ordered_generators(image, _binary(sub, blk if sub.q == 2 else None)[0])
        return _enumeration_min(gens, layout, s, stop, workers)

    if sub is not None and not contains(big, sub):
        raise ValueError("sub is not contained in big")
    if enum_ok and enum_words <= 1 << 20:
        return DistanceResult(exhaustive(lower_bound), "exhaustive", True)
    search = SupportSearch(big, sub, block)
    spent = 0
    w = max(1, lower_bound)
    while w <= budgets.w_max and spent + search.cost(w) <= budgets.supports:
        if not _support_worthwhile(search, w, enum_words, enum_ok, spent):
            break
        spent += search.cost(w)
        if search.has_weight(w):
            return DistanceResult(w, "support", True)
        w += 1
    if enum_ok:
        return DistanceResult(exhaustive(max(lower_bound, w)), "exhaustive", True)
    exc = BudgetExceeded(
        f"exact distance of [{big.n},{big.k}] over GF({big.q}) (no word up to weight {w - 1})",
        enum_words,
        budgets.enumeration,
    )
    exc.proven_lower = max(lower_bound, w)
    raise exc
