"""Depolarizing and erasure channels, syndrome decoding, and logical error rates.

Everything happens at the binary-symplectic level: a Pauli error on ``n``
qubits is a pair of bit vectors ``(x, z)``, with Y setting both bits.

Binary and extension-field records are CSS codes with sub <= big: X and Z
errors are decoded separately against the checks ``G_sub``.  The GF(4)
construction is decoded through its additive stabilizer image, where the
GF(4) symbol ``a0 + a1*w`` maps to the Pauli with ``x = a0 ^ a1`` and
``z = a0``.  That map turns the trace-Hermitian form into the symplectic
form.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import binomtest

from . import linalg
from .config import Budgets, BudgetExceeded
from .cyclic_code import LinearCode
from .quantum import EXACT, EXTENSION, QUATERNARY, QuantumCodeRecord, record_pair

DEPOLARIZING, ERASURE = "depolarizing", "erasure"
CHUNK = 4096  # trials per RNG stream


# ---------------------------------------------------------------------------
# domain types


@dataclass(frozen=True, eq=False)
class PauliError:
    x: np.ndarray
    z: np.ndarray

    def __post_init__(self) -> None:
        x = np.asarray(self.x, dtype=np.uint8).reshape(-1) & 1
        z = np.asarray(self.z, dtype=np.uint8).reshape(-1) & 1
        if x.shape != z.shape:
            raise ValueError("x and z parts differ in length")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "z", z)

    @classmethod
    def identity(cls, n: int) -> PauliError:
        return cls(np.zeros(n, np.uint8), np.zeros(n, np.uint8))

    @classmethod
    def single(cls, n: int, qubit: int, pauli: str) -> PauliError:
        err = cls.identity(n)
        err.x[qubit] = pauli in "XY"
        err.z[qubit] = pauli in "ZY"
        return err

    @property
    def n(self) -> int:
        return self.x.size

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.x | self.z))

    def __mul__(self, other: PauliError) -> PauliError:
        """Product up to phase."""
        return PauliError(self.x ^ other.x, self.z ^ other.z)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliError):
            return NotImplemented
        return np.array_equal(self.x, other.x) and np.array_equal(self.z, other.z)

    def __hash__(self) -> int:
        return hash((self.x.tobytes(), self.z.tobytes()))

    def __str__(self) -> str:
        return "".join("IXZY"[a + 2 * b] for a, b in zip(self.x, self.z))


@dataclass(frozen=True)
class ErasurePattern:
    n: int
    positions: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        pos = frozenset(int(p) for p in self.positions)
        if any(p < 0 or p >= self.n for p in pos):
            raise ValueError(f"erasure positions out of range for n={self.n}")
        object.__setattr__(self, "positions", pos)

    def mask(self) -> np.ndarray:
        out = np.zeros(self.n, dtype=bool)
        out[list(self.positions)] = True
        return out

    def __len__(self) -> int:
        return len(self.positions)


@dataclass(frozen=True)
class ChannelModel:
    kind: str
    epsilon: float

    def __post_init__(self) -> None:
        if self.kind not in (DEPOLARIZING, ERASURE):
            raise ValueError(f"unknown channel {self.kind!r}")
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must lie in [0, 1], got {self.epsilon}")


@dataclass(frozen=True)
class TrialOutcome:
    success: bool
    residual: PauliError | None
    decoder_used: str


# ---------------------------------------------------------------------------
# samplers


def sample_depolarizing_batch(trials: int, n: int, eps: float, rng: np.random.Generator):
    """``trials`` errors as (x, z) arrays: I w.p. 1-3eps/4, else X, Y, Z w.p. eps/4 each."""
    u = rng.random((trials, n))
    # u in [j*eps/4, (j+1)*eps/4) picks X, Y, Z for j = 0, 1, 2; anything else is I
    kind = np.minimum(u * (4 / eps), 3).astype(np.int64) if eps > 0 else np.full((trials, n), 3)
    x = ((kind == 0) | (kind == 1)).astype(np.uint8)
    z = ((kind == 1) | (kind == 2)).astype(np.uint8)
    return x, z


def sample_erasure_batch(trials: int, n: int, eps: float, rng: np.random.Generator):
    """Erasure masks plus a uniform Pauli on every erased position."""
    erased = rng.random((trials, n)) < eps
    pauli = rng.integers(0, 4, size=(trials, n))
    x = (erased & (pauli & 1).astype(bool)).astype(np.uint8)
    z = (erased & (pauli >> 1).astype(bool)).astype(np.uint8)
    return erased, x, z


def sample_depolarizing(n: int, eps: float, rng: np.random.Generator) -> PauliError:
    x, z = sample_depolarizing_batch(1, n, eps, rng)
    return PauliError(x[0], z[0])


def sample_erasure(n: int, eps: float, rng: np.random.Generator) -> tuple[ErasurePattern, PauliError]:
    erased, x, z = sample_erasure_batch(1, n, eps, rng)
    return ErasurePattern(n, frozenset(np.flatnonzero(erased[0]).tolist())), PauliError(x[0], z[0])


# ---------------------------------------------------------------------------
# binary syndrome decoder


def _pack_rows(bits: np.ndarray) -> list[int]:
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), axis=-1)
    return [int.from_bytes(row.tobytes(), "big") for row in np.atleast_2d(packed)]


class SyndromeDecoder:
    """Decoder for ``H v = s`` on binary vectors split into blocks of ``block`` bits.

    ``trivial`` spans the errors that act as the identity on the code.  Without
    erasures the decoder looks up a coset leader of block weight at most
    ``radius``; with erasures it solves the linear system on the erased
    blocks.
    """

    def __init__(self, checks: np.ndarray, trivial: np.ndarray, block: int, radius: int, table_budget: int):
        self.checks = np.asarray(checks, dtype=np.int64) & 1
        self.length = self.checks.shape[1]
        if self.length % block:
            raise ValueError("length is not a multiple of the block size")
        self.block = block
        self.radius = radius
        self.trivial_checks = linalg.kernel(trivial, linalg.GF2, ncols=self.length) if len(trivial) else np.eye(
            self.length, dtype=np.int64
        )
        self.table_budget = table_budget
        self._table: dict[int, tuple] | None = None
        self._solvers: dict[tuple[int, ...], tuple] = {}

    # syndromes and membership

    def syndromes(self, vectors: np.ndarray) -> np.ndarray:
        return (np.atleast_2d(vectors).astype(np.int64) @ self.checks.T) & 1

    def is_trivial(self, vectors: np.ndarray) -> np.ndarray:
        return ~((np.atleast_2d(vectors).astype(np.int64) @ self.trivial_checks.T) & 1).any(axis=1)

    # lookup table

    def table_size(self) -> int:
        blocks, patterns = self.length // self.block, (1 << self.block) - 1
        return sum(math.comb(blocks, w) * patterns**w for w in range(self.radius + 1))

    @property
    def table(self) -> dict[int, tuple]:
        if self._table is None:
            self._table = self._build_table()
        return self._table

    def _build_table(self) -> dict[int, tuple]:
        size = self.table_size()
        if size > self.table_budget:
            raise BudgetExceeded("syndrome table", size, self.table_budget)
        b, nb = self.block, self.length // self.block
        cols = _pack_rows(self.checks.T)
        pattern_syn = []
        for j in range(nb):
            row = []
            for p in range(1, 1 << b):
                s = 0
                for t in range(b):
                    if (p >> t) & 1:
                        s ^= cols[j * b + t]
                row.append(s)
            pattern_syn.append(row)
        full = 1 << linalg.rank(self.checks)
        table: dict[int, tuple] = {0: ()}
        for w in range(1, self.radius + 1):
            for support in itertools.combinations(range(nb), w):
                for pats in itertools.product(range(1, 1 << b), repeat=w):
                    s = 0
                    for j, p in zip(support, pats):
                        s ^= pattern_syn[j][p - 1]
                    table.setdefault(s, tuple(zip(support, pats)))
                if len(table) == full:
                    return table
        return table

    def _leader(self, entry: tuple) -> np.ndarray:
        v = np.zeros(self.length, dtype=np.uint8)
        for j, p in entry:
            for t in range(self.block):
                v[j * self.block + t] = (p >> t) & 1
        return v

    # erasure solver

    def _solver(self, cols: tuple[int, ...]):
        solver = self._solvers.get(cols)
        if solver is None:
            a = self.checks[:, cols]
            r = a.shape[0]
            reduced, pivots = linalg.rref(np.hstack([a, np.eye(r, dtype=np.int64)]))
            pivots = [p for p in pivots if p < len(cols)]
            rank = len(pivots)
            transform = reduced[:, len(cols) :]
            ambiguous = False
            null = linalg.kernel(a, linalg.GF2, ncols=len(cols))
            if len(null):
                embedded = np.zeros((len(null), self.length), dtype=np.int64)
                embedded[:, cols] = null
                ambiguous = not self.is_trivial(embedded).all()
            solver = (pivots, transform[:rank], transform[rank:], ambiguous)
            self._solvers[cols] = solver
        return solver

    def _solve_erasure(self, cols: tuple[int, ...], syndrome: np.ndarray) -> np.ndarray | None:
        pivots, top, bottom, ambiguous = self._solver(cols)
        if ambiguous or ((bottom @ syndrome) & 1).any():
            return None
        v = np.zeros(self.length, dtype=np.uint8)
        values = (top @ syndrome) & 1
        for p, val in zip(pivots, values):
            v[cols[p]] = val
        return v

    # decoding

    def decode(self, syndrome: np.ndarray, erased_blocks: np.ndarray | None = None) -> tuple[np.ndarray | None, str]:
        """A correction with the given syndrome, or ``None`` on decoder failure."""
        syndrome = np.asarray(syndrome, dtype=np.int64)
        if erased_blocks is not None and erased_blocks.any():
            blocks = np.flatnonzero(erased_blocks)
            cols = tuple(int(j * self.block + t) for j in blocks for t in range(self.block))
            return self._solve_erasure(cols, syndrome), ERASURE
        if not syndrome.any():
            return np.zeros(self.length, dtype=np.uint8), "table"
        entry = self.table.get(_pack_rows(syndrome)[0])
        return (None if entry is None else self._leader(entry)), "table"


# ---------------------------------------------------------------------------
# quantum decoders


def decoding_radius(record: QuantumCodeRecord) -> int:
    """floor((d-1)/2) for the best proven distance (block distance for extension codes)."""
    if record.construction == EXTENSION:
        d = record.dq if record.flags.get("dq") == EXACT and record.dq else record.d_bch
    else:
        d = record.verified_distance()
    return max((d - 1) // 2, 0)


def _gf4_to_pauli(words: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a0, a1 = words & 1, (words >> 1) & 1
    return a0 ^ a1, a0


def _interleave(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = np.atleast_2d(a), np.atleast_2d(b)
    out = np.empty((a.shape[0], 2 * a.shape[1]), dtype=np.int64)
    out[:, 0::2], out[:, 1::2] = a, b
    return out


def stabilizer_generators(sub: LinearCode) -> tuple[np.ndarray, np.ndarray]:
    """(x, z) parts of the binary stabilizer generators of a GF(4) code: images of g and w*g."""
    mul = linalg.mul_table(sub.field)
    words = np.vstack([sub.gen, mul[2][sub.gen]]) if sub.k else np.zeros((0, sub.n), dtype=np.int64)
    return _gf4_to_pauli(words)


class QuantumDecoder:
    """Decoder for one record: CSS (two binary parts) or symplectic (GF(4) image)."""

    def __init__(self, record: QuantumCodeRecord, budgets: Budgets | None = None, radius: int | None = None):
        budgets = budgets or Budgets()
        self.record = record
        self.radius = decoding_radius(record) if radius is None else radius
        pair = record_pair(record)
        self.css = record.construction != QUATERNARY
        if self.css:
            self.n = pair.sub.n
            self.block = pair.symbol_block
            self.sub = pair.sub
            checks = pair.sub.gen
            self.part = SyndromeDecoder(checks, pair.sub.gen, self.block, self.radius, budgets.syndrome_table)
        else:
            self.n = pair.sub.n
            self.block = 1
            self.sub = pair.sub
            sx, sz = stabilizer_generators(pair.sub)
            self.part = SyndromeDecoder(_interleave(sz, sx), _interleave(sx, sz), 2, self.radius, budgets.syndrome_table)

    @property
    def tag(self) -> str:
        return "css" if self.css else "symplectic"

    def syndromes(self, x: np.ndarray, z: np.ndarray) -> tuple[np.ndarray, ...]:
        if self.css:
            return self.part.syndromes(x), self.part.syndromes(z)
        return (self.part.syndromes(_interleave(x, z)),)

    def is_trivial(self, x: np.ndarray, z: np.ndarray) -> np.ndarray:
        """Per row: does the Pauli (x, z) act as the identity on the code space?"""
        if self.css:
            return self.part.is_trivial(x) & self.part.is_trivial(z)
        return self.part.is_trivial(_interleave(x, z))

    def _erased_units(self, erased: np.ndarray | None) -> np.ndarray | None:
        """Qubit erasures as erased decoder blocks (whole blocks for extension codes)."""
        if erased is None:
            return None
        erased = np.asarray(erased, dtype=bool)
        if self.css and self.block > 1:
            return erased.reshape(-1, self.block).any(axis=1)
        return erased

    def decode(self, syndromes: tuple[np.ndarray, ...], erased: np.ndarray | None = None):
        """Correction (x, z) for one trial, or ``None`` on failure, plus the decoder tag."""
        units = self._erased_units(erased)
        if self.css:
            cx, used = self.part.decode(syndromes[0], units)
            cz, _ = self.part.decode(syndromes[1], units)
            if cx is None or cz is None:
                return None, used
            return (cx, cz), used
        v, used = self.part.decode(syndromes[0], units)
        if v is None:
            return None, used
        return (v[0::2], v[1::2]), used


def css_decode(
    decoder: QuantumDecoder,
    syndrome_x: np.ndarray,
    syndrome_z: np.ndarray,
    erasures: ErasurePattern | None = None,
) -> PauliError | None:
    """Correction for the observed X and Z syndromes (``G_sub e^T``), ``None`` on failure."""
    if not decoder.css:
        raise ValueError("css_decode needs a CSS record; use QuantumDecoder.decode for GF(4) codes")
    erased = erasures.mask() if erasures is not None else None
    out, _ = decoder.decode((np.asarray(syndrome_x), np.asarray(syndrome_z)), erased)
    return None if out is None else PauliError(*out)


def is_logical_error(residual: PauliError, code: LinearCode) -> bool:
    """True unless both parts of the residual lie in the (binary) code C."""
    return not (code.contains_word(residual.x) and code.contains_word(residual.z))


def run_trial(decoder: QuantumDecoder, error: PauliError, erasures: ErasurePattern | None = None) -> TrialOutcome:
    syn = decoder.syndromes(error.x[None, :], error.z[None, :])
    erased = erasures.mask() if erasures is not None else None
    out, used = decoder.decode(tuple(s[0] for s in syn), erased)
    if out is None:
        return TrialOutcome(False, None, used)
    residual = error * PauliError(*out)
    check = decoder.syndromes(residual.x[None, :], residual.z[None, :])
    assert not any(s.any() for s in check), "correction does not match the syndrome"
    ok = bool(decoder.is_trivial(residual.x[None, :], residual.z[None, :])[0])
    return TrialOutcome(ok, residual, used)


# ---------------------------------------------------------------------------
# Monte Carlo and exhaustive estimates


@dataclass(frozen=True)
class SimulationResult:
    code: str
    channel: str
    epsilon: float | None
    trials: int
    failures: int
    mode: str = "sampled"
    ci95: tuple[float, float] = field(default=(0.0, 1.0))

    @property
    def rate(self) -> float:
        return self.failures / self.trials

    def to_json(self) -> dict:
        return {
            "code": self.code,
            "channel": self.channel,
            "epsilon": self.epsilon,
            "trials": self.trials,
            "failures": self.failures,
            "rate": self.rate,
            "ci95": list(self.ci95),
            "mode": self.mode,
        }


def wilson_interval(failures: int, trials: int) -> tuple[float, float]:
    ci = binomtest(failures, trials).proportion_ci(confidence_level=0.95, method="wilson")
    return float(ci.low), float(ci.high)


def _failures_in_batch(decoder: QuantumDecoder, x: np.ndarray, z: np.ndarray, erased: np.ndarray | None) -> int:
    syn = decoder.syndromes(x, z)
    cx = np.zeros_like(x)
    cz = np.zeros_like(z)
    failed = np.zeros(x.shape[0], dtype=bool)
    for t in range(x.shape[0]):
        out, _ = decoder.decode(tuple(s[t] for s in syn), None if erased is None else erased[t])
        if out is None:
            failed[t] = True
        else:
            cx[t], cz[t] = out
    rx, rz = x ^ cx, z ^ cz
    ok = ~failed
    check = decoder.syndromes(rx[ok], rz[ok])
    assert not any(s.any() for s in check), "correction does not match the syndrome"
    bad = failed.copy()
    bad[ok] = ~decoder.is_trivial(rx[ok], rz[ok])
    return int(bad.sum())


def _chunk_failures(decoder: QuantumDecoder, channel: ChannelModel, seed: int, index: int, size: int) -> int:
    rng = np.random.default_rng([seed, index])
    n = decoder.n
    if channel.kind == DEPOLARIZING:
        x, z = sample_depolarizing_batch(size, n, channel.epsilon, rng)
        return _failures_in_batch(decoder, x, z, None)
    erased, x, z = sample_erasure_batch(size, n, channel.epsilon, rng)
    return _failures_in_batch(decoder, x, z, erased)


def estimate_logical_error_rate(
    record: QuantumCodeRecord | QuantumDecoder,
    channel: ChannelModel,
    trials: int,
    seed: int = 0,
    budgets: Budgets | None = None,
    workers: int = 1,
) -> SimulationResult:
    """Fraction of trials ending in a logical error or a decoder failure.

    Trials run in chunks of ``CHUNK``; chunk ``i`` draws from the stream
    seeded by ``(seed, i)``, so the result does not depend on ``workers``.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    decoder = record if isinstance(record, QuantumDecoder) else QuantumDecoder(record, budgets)
    if channel.kind == DEPOLARIZING:
        decoder.part.table  # build once, before threads share it
    sizes = [min(CHUNK, trials - start) for start in range(0, trials, CHUNK)]

    def job(i: int) -> int:
        return _chunk_failures(decoder, channel, seed, i, sizes[i])

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            failures = sum(pool.map(job, range(len(sizes))))
    else:
        failures = sum(map(job, range(len(sizes))))
    return SimulationResult(
        decoder.record.label, channel.kind, channel.epsilon, trials, failures, ci95=wilson_interval(failures, trials)
    )


def all_weight_one_errors(n: int) -> tuple[np.ndarray, np.ndarray]:
    """The 3n single-qubit Paulis, ordered by qubit then X, Y, Z."""
    x = np.zeros((3 * n, n), dtype=np.uint8)
    z = np.zeros((3 * n, n), dtype=np.uint8)
    for i in range(n):
        x[3 * i, i] = x[3 * i + 1, i] = 1
        z[3 * i + 1, i] = z[3 * i + 2, i] = 1
    return x, z


def all_erasure_cases(n: int, size: int = 2) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Every erasure of ``size`` qubits with every Pauli (16 per pair) on it."""
    masks, xs, zs = [], [], []
    for support in itertools.combinations(range(n), size):
        for paulis in itertools.product(range(4), repeat=size):
            m = np.zeros(n, dtype=bool)
            x = np.zeros(n, dtype=np.uint8)
            z = np.zeros(n, dtype=np.uint8)
            m[list(support)] = True
            for q, p in zip(support, paulis):
                x[q], z[q] = p & 1, p >> 1
            masks.append(m)
            xs.append(x)
            zs.append(z)
    return np.array(masks), np.array(xs), np.array(zs)


def exhaustive_check(
    record: QuantumCodeRecord | QuantumDecoder, channel: str, budgets: Budgets | None = None, erasures: int = 2
) -> SimulationResult:
    """Decode every weight-1 Pauli (depolarizing) or every ``erasures``-qubit erasure case."""
    decoder = record if isinstance(record, QuantumDecoder) else QuantumDecoder(record, budgets)
    if channel == DEPOLARIZING:
        x, z = all_weight_one_errors(decoder.n)
        failures = _failures_in_batch(decoder, x, z, None)
    elif channel == ERASURE:
        masks, x, z = all_erasure_cases(decoder.n, erasures)
        failures = _failures_in_batch(decoder, x, z, masks)
    else:
        raise ValueError(f"unknown channel {channel!r}")
    trials = x.shape[0]
    return SimulationResult(
        decoder.record.label, channel, None, trials, failures, mode="exhaustive", ci95=wilson_interval(failures, trials)
    )
