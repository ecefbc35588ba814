"""Cyclotomic cosets and zero-set algebra for cyclic codes of odd length."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .config import BudgetExceeded


def _check(n: int, q: int) -> None:
    if n < 1:
        raise ValueError(f"code length must be positive, got {n}")
    if math.gcd(n, q) != 1:
        raise ValueError(f"gcd(n, q) must be 1, got n={n}, q={q}")


@dataclass(frozen=True, order=True)
class ZeroSet:
    n: int
    q: int
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        _check(self.n, self.q)
        res = tuple(sorted(set(int(z) % self.n for z in self.residues)))
        object.__setattr__(self, "residues", res)
        closed = {self.q * z % self.n for z in res}
        if not closed <= set(res):
            raise ValueError(f"residues {res} are not closed under multiplication by {self.q}")

    @classmethod
    def of(cls, n: int, q: int, residues) -> ZeroSet:
        return cls(n, q, tuple(residues))

    @classmethod
    def from_cosets(cls, n: int, q: int, representatives) -> ZeroSet:
        out: set[int] = set()
        for z in representatives:
            out |= coset(n, q, z)
        return cls(n, q, tuple(out))

    def __len__(self) -> int:
        return len(self.residues)

    def __contains__(self, z: int) -> bool:
        return z % self.n in self.residues

    def as_set(self) -> frozenset[int]:
        return frozenset(self.residues)

    def issubset(self, other: ZeroSet) -> bool:
        return set(self.residues) <= set(other.residues)

    def complement(self) -> list[int]:
        own = set(self.residues)
        return [z for z in range(self.n) if z not in own]

    def representatives(self) -> list[int]:
        """Minimal representatives of the cosets making up this set."""
        return sorted({min(coset(self.n, self.q, z)) for z in self.residues})

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.q, "residues": list(self.residues)}

    @classmethod
    def from_json(cls, data: dict) -> ZeroSet:
        return cls(int(data["n"]), int(data["q"]), tuple(data["residues"]))


def coset(n: int, q: int, z: int) -> frozenset[int]:
    """The q-cyclotomic coset of ``z`` modulo ``n``."""
    _check(n, q)
    z %= n
    out = {z}
    x = z * q % n
    while x not in out:
        out.add(x)
        x = x * q % n
    return frozenset(out)


def all_cosets(n: int, q: int) -> list[frozenset[int]]:
    """Partition of {0, ..., n-1} into cosets, ordered by minimal element."""
    _check(n, q)
    seen: set[int] = set()
    blocks = []
    for z in range(n):
        if z not in seen:
            c = coset(n, q, z)
            seen |= c
            blocks.append(c)
    return blocks


def dual_zero_set(zs: ZeroSet) -> ZeroSet:
    """Zero set of the Euclidean dual: {-z mod n : z not in Z}."""
    return ZeroSet(zs.n, zs.q, tuple(-z % zs.n for z in zs.complement()))


def orthogonal_zero_set_gf4(zs: ZeroSet) -> ZeroSet:
    """Zero set of the Hermitian orthogonal code over GF(4): {-2z mod n : z not in Z}."""
    if zs.q != 4:
        raise ValueError(f"Hermitian orthogonal zero set needs q=4, got q={zs.q}")
    return ZeroSet(zs.n, 4, tuple(-2 * z % zs.n for z in zs.complement()))


def is_weakly_self_dual(zs: ZeroSet) -> bool:
    """C is contained in its dual iff Z(C^perp) is a subset of Z(C)."""
    return dual_zero_set(zs).issubset(zs)


def is_self_orthogonal_gf4(zs: ZeroSet) -> bool:
    return orthogonal_zero_set_gf4(zs).issubset(zs)


def bch_bound(zs: ZeroSet) -> int:
    """1 + the longest run of cyclically consecutive residues in the zero set."""
    n, own = zs.n, set(zs.residues)
    if not own:
        return 1
    if len(own) == n:
        return n + 1
    best = 0
    for start in own:
        if (start - 1) % n in own:
            continue
        run = 0
        while (start + run) % n in own:
            run += 1
        best = max(best, run)
    return best + 1


def _pairing(n: int, q: int, hermitian: bool):
    """Group cosets under z -> -z (Euclidean) or z -> -2z (Hermitian).

    Both maps are involutions on q-cyclotomic cosets.  A self-dual zero set
    must contain every coset fixed by the map and at least one coset of each
    swapped pair.
    """
    factor = -2 if hermitian else -1
    blocks = all_cosets(n, q)
    index = {z: i for i, b in enumerate(blocks) for z in b}
    fixed, pairs, seen = [], [], set()
    for i, b in enumerate(blocks):
        if i in seen:
            continue
        j = index[factor * min(b) % n]
        seen |= {i, j}
        if i == j:
            fixed.append(b)
        else:
            pairs.append((b, blocks[j]))
    return fixed, pairs


def enumerate_self_dual_zero_sets(
    n: int, q: int, hermitian: bool = False, budget: int = 1 << 20
) -> list[ZeroSet]:
    """All coset unions Z with the dual (or Hermitian orthogonal) zero set inside Z.

    Results are sorted canonically.  ``budget`` caps the number of candidate
    unions examined.
    """
    if hermitian and q != 4:
        raise ValueError("hermitian search needs q=4")
    _check(n, q)
    fixed, pairs = _pairing(n, q, hermitian)
    candidates = 3 ** len(pairs)
    if candidates > budget:
        raise BudgetExceeded(f"zero-set search for n={n}, q={q}", candidates, budget)
    base: set[int] = set().union(*fixed) if fixed else set()
    predicate = is_self_orthogonal_gf4 if hermitian else is_weakly_self_dual
    found = []
    for choice in itertools.product(range(3), repeat=len(pairs)):
        residues = set(base)
        for (a, b), c in zip(pairs, choice):
            if c in (0, 2):
                residues |= a
            if c in (1, 2):
                residues |= b
        zs = ZeroSet(n, q, tuple(residues))
        if 2 * len(zs) > n and predicate(zs):
            found.append(zs)
    return sorted(set(found), key=lambda z: (len(z), z.residues))
