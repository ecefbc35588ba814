"""Arithmetic in GF(2^ell) and the towers GF(2^ell) <= GF(2^(ell*m)) used by BCH codes.

Field elements are plain Python ints whose bits are the coefficients of a
polynomial over GF(2) (bit ``i`` is the coefficient of ``x^i``).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

# Moduli for which the self-dual bases of the code tables were given.
DEFAULT_MODULI = {
    1: 0b11,  # x + 1
    2: 0b111,  # w^2 = w + 1
    3: 0b1011,  # u^3 = u + 1
    4: 0b10011,  # v^4 = v + 1
    5: 0b100101,  # w^5 = w^2 + 1
    6: 0b1011011,  # z^6 = z^4 + z^3 + z + 1
}

MAX_DEGREE = 64


# ---------------------------------------------------------------------------
# polynomials over GF(2), encoded as ints


def clmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials."""
    result = 0
    while b:
        if b & 1:
            result ^= a
        a <<= 1
        b >>= 1
    return result


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length() - 1
    while a.bit_length() - 1 >= dm:
        a ^= m << (a.bit_length() - 1 - dm)
    return a


def poly_mulmod(a: int, b: int, m: int) -> int:
    return poly_mod(clmul(a, b), m)


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_mod(a, b)
    return a


def is_irreducible(f: int) -> bool:
    """Rabin-style test: gcd(f, x^(2^i) - x) = 1 for i <= deg/2."""
    deg = f.bit_length() - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    if not f & 1:
        return False
    x = 0b10
    power = x
    for _ in range(deg // 2):
        power = poly_mulmod(power, power, f)
        if poly_gcd(f, power ^ x) != 1:
            return False
    return True


def smallest_irreducible(degree: int) -> int:
    """Lexicographically smallest irreducible polynomial of the given degree."""
    for f in range(1 << degree, 1 << (degree + 1)):
        if is_irreducible(f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {degree}")  # pragma: no cover


def default_modulus(degree: int) -> int:
    return DEFAULT_MODULI.get(degree) or smallest_irreducible(degree)


def prime_factors(n: int) -> list[int]:
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def multiplicative_order(q: int, n: int) -> int:
    """Smallest m >= 1 with q^m = 1 (mod n)."""
    if n == 1:
        return 1
    m, x = 1, q % n
    while x != 1:
        x = x * q % n
        m += 1
        if m > n:
            raise ValueError(f"{q} is not a unit modulo {n}")
    return m


# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class FieldCtx:
    """GF(2^ell) defined by an irreducible ``modulus``.

    ``generator`` is a fixed primitive element: ``x`` itself when the modulus
    is primitive, otherwise the smallest primitive element.
    """

    ell: int
    modulus: int = 0
    generator: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.ell <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}, got {self.ell}")
        if not self.modulus:
            object.__setattr__(self, "modulus", default_modulus(self.ell))
        if self.modulus.bit_length() - 1 != self.ell:
            raise ValueError("modulus degree does not match ell")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {bin(self.modulus)} is reducible")
        if not self.generator:
            object.__setattr__(self, "generator", self._find_generator())

    @property
    def order(self) -> int:
        return 1 << self.ell

    def _find_generator(self) -> int:
        n = self.order - 1
        factors = prime_factors(n)
        if self.ell == 1:
            return 1
        for g in itertools.chain([0b10], range(3, self.order)):
            if all(self.pow(g, n // p) != 1 for p in factors):
                return g
        raise ValueError("no primitive element found")  # pragma: no cover

    @functools.cached_property
    def _tables(self) -> tuple[list[int], list[int]] | None:
        if self.ell > 16:
            return None
        n = self.order - 1
        exp = [0] * (2 * n)
        log = [0] * self.order
        x = 1
        for i in range(n):
            exp[i] = exp[i + n] = x
            log[x] = i
            x = poly_mulmod(x, self.generator, self.modulus)
        return exp, log

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        tables = self._tables
        if tables is None:
            return poly_mulmod(a, b, self.modulus)
        exp, log = tables
        return exp[log[a] + log[b]]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = 1
        while e:
            if e & 1:
                result = poly_mulmod(result, a, self.modulus)
            a = poly_mulmod(a, a, self.modulus)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"FieldCtx(ell={self.ell}, modulus={bin(self.modulus)})"


@functools.lru_cache(maxsize=None)
def gf(ell: int, modulus: int = 0) -> FieldCtx:
    """Cached field context; ``modulus=0`` picks the default."""
    return FieldCtx(ell, modulus or default_modulus(ell))


def field_for_size(q: int) -> FieldCtx:
    ell = q.bit_length() - 1
    if q < 2 or q != 1 << ell:
        raise ValueError(f"field size must be a power of 2, got {q}")
    return gf(ell)


def trace(x: int, ctx: FieldCtx) -> int:
    """Absolute trace GF(2^ell) -> GF(2)."""
    total, y = 0, x
    for _ in range(ctx.ell):
        total ^= y
        y = ctx.mul(y, y)
    assert total in (0, 1), "trace left GF(2); modulus inconsistent"
    return total


# ---------------------------------------------------------------------------
# bases


def trace_gram(basis: tuple[int, ...], ctx: FieldCtx) -> list[list[int]]:
    return [[trace(ctx.mul(a, b), ctx) for b in basis] for a in basis]


def is_self_dual_basis(basis: tuple[int, ...] | list[int], ctx: FieldCtx) -> bool:
    """True iff Tr(b_i b_j) = delta_ij for all pairs."""
    basis = tuple(basis)
    if len(basis) != ctx.ell:
        raise ValueError(f"basis of GF(2^{ctx.ell}) needs {ctx.ell} elements, got {len(basis)}")
    gram = trace_gram(basis, ctx)
    return all(gram[i][j] == (i == j) for i in range(ctx.ell) for j in range(ctx.ell))


def expand_element(x: int, basis: tuple[int, ...] | list[int], ctx: FieldCtx) -> list[int]:
    """Coordinates of ``x`` in a self-dual basis: ``coord_i = Tr(x * b_i)``."""
    if not is_self_dual_basis(basis, ctx):
        raise ValueError("expansion requires a self-dual basis")
    return [trace(ctx.mul(x, b), ctx) for b in basis]


def reconstruct_element(coords: list[int], basis: tuple[int, ...] | list[int]) -> int:
    x = 0
    for c, b in zip(coords, basis):
        if c:
            x ^= b
    return x


def basis_from_exponents(exponents: tuple[int, ...], ctx: FieldCtx) -> tuple[int, ...]:
    """Elements ``x^e`` for the polynomial variable ``x`` of the modulus."""
    return tuple(ctx.pow(0b10, e) for e in exponents)


# Self-dual bases, as powers of the modulus variable, for the default moduli.
TABLE_BASIS_EXPONENTS = {
    1: (0,),
    2: (1, 2),
    3: (3, 6, 5),
    4: (3, 7, 13, 12),
    5: (9, 18, 5, 10, 20),
    6: (12, 24, 48, 33, 3, 6),
}


def default_basis(ell: int) -> tuple[int, ...]:
    ctx = gf(ell)
    try:
        return basis_from_exponents(TABLE_BASIS_EXPONENTS[ell], ctx)
    except KeyError:
        return find_self_dual_basis(ctx)


def find_self_dual_basis(ctx: FieldCtx) -> tuple[int, ...]:
    """Depth-first search for a self-dual basis (exists for every GF(2^ell))."""
    candidates = [x for x in range(1, ctx.order) if trace(ctx.mul(x, x), ctx) == 1]

    def extend(chosen: list[int], start: int) -> list[int] | None:
        if len(chosen) == ctx.ell:
            return chosen
        for i in range(start, len(candidates)):
            c = candidates[i]
            if all(trace(ctx.mul(c, b), ctx) == 0 for b in chosen):
                found = extend(chosen + [c], i + 1)
                if found:
                    return found
        return None

    found = extend([], 0)
    if found is None:  # pragma: no cover
        raise ValueError("no self-dual basis found")
    return tuple(found)


# ---------------------------------------------------------------------------
# towers


class FieldTower:
    """A subfield GF(2^ell) embedded in GF(2^(ell*m)).

    ``small`` keeps its own modulus; the embedding sends the modulus variable
    to the smallest root of the small modulus inside ``big``.
    """

    def __init__(self, small: FieldCtx, m: int, big: FieldCtx | None = None) -> None:
        self.small = small
        self.m = m
        self.big = big or gf(small.ell * m)
        if self.big.ell != small.ell * m:
            raise ValueError("big field has the wrong degree")
        self.root = self._find_root()
        self._to_big = [self._embed(a) for a in range(small.order)]
        self._to_small = {b: a for a, b in enumerate(self._to_big)}

    def _subfield(self) -> list[int]:
        big, q = self.big, self.small.order
        step = self.big.pow(big.generator, (big.order - 1) // (q - 1)) if q > 2 else 1
        out, x = [0], 1
        for _ in range(q - 1):
            out.append(x)
            x = big.mul(x, step)
        return sorted(out)

    def _find_root(self) -> int:
        coeffs = [(self.small.modulus >> i) & 1 for i in range(self.small.ell + 1)]
        for r in self._subfield():
            if poly_eval(coeffs, r, self.big) == 0:
                return r
        raise ValueError("small modulus has no root in big field")  # pragma: no cover

    def _embed(self, a: int) -> int:
        out, power = 0, 1
        for i in range(self.small.ell):
            if (a >> i) & 1:
                out ^= power
            power = self.big.mul(power, self.root)
        return out

    def to_big(self, a: int) -> int:
        return self._to_big[a]

    def to_small(self, b: int) -> int:
        try:
            return self._to_small[b]
        except KeyError:
            raise ValueError(f"element {b} of the big field is not in the subfield") from None

    def in_subfield(self, b: int) -> bool:
        return b in self._to_small


@functools.lru_cache(maxsize=None)
def splitting_tower(n: int, q: int) -> tuple[FieldTower, int]:
    """Tower containing the n-th roots of unity over GF(q), and a primitive n-th root.

    The root is ``gamma^((2^(ell*m) - 1) / n)`` for the fixed generator gamma.
    """
    small = field_for_size(q)
    m = multiplicative_order(q, n)
    if small.ell * m > MAX_DEGREE:
        raise ValueError(f"GF({q}^{m}) exceeds the supported 2^{MAX_DEGREE}")
    tower = FieldTower(small, m)
    big = tower.big
    alpha = big.pow(big.generator, (big.order - 1) // n)
    return tower, alpha


# ---------------------------------------------------------------------------
# polynomials over a field (coefficient lists, lowest degree first)


def poly_eval(coeffs: list[int], x: int, ctx: FieldCtx) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = ctx.mul(acc, x) ^ c
    return acc


def poly_trim(coeffs: list[int]) -> list[int]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_mul(a: list[int], b: list[int], ctx: FieldCtx) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] ^= ctx.mul(x, y)
    return poly_trim(out)


def poly_divmod(a: list[int], b: list[int], ctx: FieldCtx) -> tuple[list[int], list[int]]:
    b = poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = poly_trim(a)
    inv_lead = ctx.inv(b[-1])
    quot = [0] * max(len(rem) - len(b) + 1, 0)
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = ctx.mul(rem[-1], inv_lead)
        quot[shift] = factor
        for j, c in enumerate(b):
            rem[shift + j] ^= ctx.mul(factor, c)
        rem = poly_trim(rem)
    return poly_trim(quot), rem


def product_of_linear_factors(roots: list[int], ctx: FieldCtx) -> list[int]:
    """prod (X - r) over ``roots``; subtraction is addition in characteristic 2."""
    poly = [1]
    for r in roots:
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] ^= c
            nxt[i] ^= ctx.mul(c, r)
        poly = nxt
    return poly


def conjugates(beta: int, tower: FieldTower) -> list[int]:
    """Orbit of ``beta`` under x -> x^q."""
    q, big = tower.small.order, tower.big
    orbit, x = [beta], big.pow(beta, q)
    while x != beta:
        orbit.append(x)
        x = big.pow(x, q)
    return orbit


def minimal_polynomial(beta: int, tower: FieldTower) -> list[int]:
    """Minimal polynomial over the small field of ``beta`` in the big field.

    Coefficients are returned in the small field's own representation.
    """
    if beta == 0:
        return [0, 1]
    poly = product_of_linear_factors(conjugates(beta, tower), tower.big)
    return [tower.to_small(c) for c in poly]
