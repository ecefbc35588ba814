"""Quantum BCH code records: construction, distance verification, search, code states."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .basis_expand import basis_to_json, expand_code
from .config import Budgets, BudgetExceeded
from .cyclic_code import (
    LinearCode,
    code_from_zero_set,
    contains,
    dual_code,
    even_weight_subcode,
    hermitian_orthogonal_gf4,
)
from .cyclotomic import (
    ZeroSet,
    bch_bound,
    dual_zero_set,
    enumerate_self_dual_zero_sets,
    is_self_orthogonal_gf4,
    is_weakly_self_dual,
    orthogonal_zero_set_gf4,
)
from .distance import enumerate_codewords, random_word_upper_bound, verified_distance
from .finite_field import default_basis, field_for_size, is_self_dual_basis

BINARY, QUATERNARY, EXTENSION = "binary", "quaternary", "extension"
LEVELS = ("bound", "dual", "exact")

# flag values
EXACT, BOUND, SAMPLED = "exact", "bound", "sampled"


@dataclass
class QuantumCodeRecord:
    """Parameters and provenance of one quantum BCH code.

    ``n`` and ``k`` count qubits.  ``d_true`` is the true distance (binary
    distance for extension-field codes, where ``dq`` is the symbol-level
    one).  ``flags`` says how each distance was established: ``exact``,
    ``bound`` (a proven lower bound) or ``sampled`` (an upper bound found by
    sampling).
    """

    n: int
    k: int
    construction: str
    zero_set: ZeroSet
    d_bch: int
    d_dual: int | None = None
    d_true: int | None = None
    d2: int | None = None
    dq: int | None = None
    basis: tuple[int, ...] | None = None
    flags: dict[str, str] = field(default_factory=dict)

    @property
    def q(self) -> int:
        return self.zero_set.q

    @property
    def ell(self) -> int:
        return field_for_size(self.q).ell if self.construction == EXTENSION else 1

    @property
    def k_classical(self) -> int:
        return self.zero_set.n - len(self.zero_set)

    @property
    def label(self) -> str:
        d = "?" if self.d_true is None else str(self.d_true)
        if self.construction == EXTENSION:
            dq = "?" if self.dq is None else str(self.dq)
            return f"[[{self.n},{self.k},{d}|{dq}]]"
        return f"[[{self.n},{self.k},{d}]]"

    def verified_distance(self) -> int:
        """Best distance value that is proven (exact d', else the code bound)."""
        if self.flags.get("d_true") == EXACT and self.d_true is not None:
            return self.d_true
        if self.d_dual is not None:
            return self.d_dual
        return self.d_bch

    def to_json(self) -> dict:
        ctx = field_for_size(self.q)
        return {
            "n": self.n,
            "k": self.k,
            "d_bch": self.d_bch,
            "d_dual": self.d_dual,
            "d_true": self.d_true,
            "d2": self.d2,
            "dq": self.dq,
            "construction": self.construction,
            "field": {"q": self.q, "ell": ctx.ell, "modulus": ctx.modulus},
            "zero_set": self.zero_set.to_json(),
            "basis": basis_to_json(self.basis, self.q) if self.basis is not None else None,
            "flags": dict(sorted(self.flags.items())),
        }

    @classmethod
    def from_json(cls, data: dict) -> QuantumCodeRecord:
        basis = data.get("basis")
        return cls(
            n=int(data["n"]),
            k=int(data["k"]),
            construction=data["construction"],
            zero_set=ZeroSet.from_json(data["zero_set"]),
            d_bch=int(data["d_bch"]),
            d_dual=data.get("d_dual"),
            d_true=data.get("d_true"),
            d2=data.get("d2"),
            dq=data.get("dq"),
            basis=tuple(basis["elements"]) if basis else None,
            flags=dict(data.get("flags", {})),
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# ---------------------------------------------------------------------------
# codes behind a record


@dataclass(frozen=True)
class CodePair:
    """The nested pair sub <= big whose quotient carries the logical qubits.

    ``big``/``sub`` are binary for the binary and extension constructions and
    quaternary for the GF(4) construction.  ``symbol_block`` is the block
    size for symbol-level distances of expanded codes.
    """

    sub: LinearCode
    big: LinearCode
    symbol_block: int = 1


def default_construction(q: int) -> str:
    return {2: BINARY, 4: QUATERNARY}.get(q, EXTENSION)


def check_predicate(zs: ZeroSet, construction: str) -> None:
    if construction == QUATERNARY:
        if zs.q != 4:
            raise ValueError("the quaternary construction needs q=4")
        if not is_self_orthogonal_gf4(zs):
            other = orthogonal_zero_set_gf4(zs)
            raise ValueError(f"Z(C*)={list(other.residues)} is not contained in Z(C)={list(zs.residues)}")
        return
    if construction == BINARY and zs.q != 2:
        raise ValueError("the binary construction needs q=2")
    if construction not in (BINARY, EXTENSION):
        raise ValueError(f"unknown construction {construction!r}")
    if not is_weakly_self_dual(zs):
        other = dual_zero_set(zs)
        raise ValueError(f"Z(C^perp)={list(other.residues)} is not contained in Z(C)={list(zs.residues)}")


def code_pair(zs: ZeroSet, construction: str | None = None, basis=None) -> CodePair:
    construction = construction or default_construction(zs.q)
    check_predicate(zs, construction)
    c = code_from_zero_set(zs)
    if construction == BINARY:
        return CodePair(c, dual_code(c))
    if construction == QUATERNARY:
        return CodePair(c, hermitian_orthogonal_gf4(c))
    ell = field_for_size(zs.q).ell
    basis = tuple(basis) if basis is not None else default_basis(ell)
    return CodePair(expand_code(c, basis), expand_code(dual_code(c), basis), ell)


def record_pair(record: QuantumCodeRecord) -> CodePair:
    return code_pair(record.zero_set, record.construction, record.basis)


def designed_distance(zs: ZeroSet, construction: str) -> int:
    other = orthogonal_zero_set_gf4(zs) if construction == QUATERNARY else dual_zero_set(zs)
    return bch_bound(other)


def is_even_weight_pair(pair: CodePair) -> bool:
    """sub is the even-weight subcode of big, of index 2 (so d' is odd)."""
    big = pair.big
    return big.q == 2 and pair.sub.k == big.k - 1 and even_weight_subcode(big) == pair.sub


# ---------------------------------------------------------------------------
# building records


def _fill_dual(record: QuantumCodeRecord, pair: CodePair, budgets: Budgets, strict: bool, workers: int) -> None:
    try:
        result = verified_distance(pair.big, budgets=budgets, workers=workers)
        record.d_dual, record.flags["d_dual"] = result.d, EXACT
    except BudgetExceeded as exc:
        if strict:
            raise
        record.d_dual = max(record.d_bch, getattr(exc, "proven_lower", 1))
        record.flags["d_dual"] = BOUND


def _true_distance(
    pair: CodePair, block: int | None, lower: int, budgets: Budgets, strict: bool, seed: int, workers: int
) -> tuple[int | None, str]:
    try:
        result = verified_distance(pair.big, pair.sub, budgets, block=block, lower_bound=lower, workers=workers)
        return result.d, EXACT
    except BudgetExceeded:
        if strict:
            raise
        bound = random_word_upper_bound(pair.big, budgets.samples, seed, sub=pair.sub, block=block)
        return bound, SAMPLED


def build_qbch(
    zs: ZeroSet,
    construction: str | None = None,
    basis=None,
    budgets: Budgets | None = None,
    level: str = "exact",
    strict: bool = False,
    seed: int = 0,
    workers: int = 1,
) -> QuantumCodeRecord:
    """Quantum code from a self-dual (or self-orthogonal) BCH zero set.

    Distances are filled up to ``level`` ("bound", "dual" or "exact").  If a
    level is out of budget the record falls back to a bound (for d_dual) or a
    sampled upper bound (for d_true), unless ``strict`` is set, in which case
    ``BudgetExceeded`` propagates.
    """
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    construction = construction or default_construction(zs.q)
    budgets = budgets or Budgets.from_env()
    pair = code_pair(zs, construction, basis)
    kc = zs.n - len(zs)
    ell = pair.symbol_block
    record = QuantumCodeRecord(
        n=ell * zs.n,
        k=ell * (zs.n - 2 * kc),
        construction=construction,
        zero_set=zs,
        d_bch=designed_distance(zs, construction),
        basis=tuple(basis or default_basis(ell)) if construction == EXTENSION else None,
        flags={"d_bch": BOUND},
    )
    if level == "bound":
        return record
    _fill_dual(record, pair, budgets, strict, workers)
    if level == "dual":
        return record
    lower = record.d_dual if record.d_dual is not None else 1
    if is_even_weight_pair(pair) and lower % 2 == 0:
        lower += 1
    d, flag = _true_distance(pair, None, lower, budgets, strict, seed, workers)
    record.d_true, record.flags["d_true"] = d, flag
    if construction == EXTENSION:
        record.d2 = d
        record.flags["d2"] = flag
        dq, qflag = _true_distance(pair, ell, 1, budgets, strict, seed, workers)
        record.dq, record.flags["dq"] = dq, qflag
    return record


def upgrade_record(
    record: QuantumCodeRecord, level: str, budgets: Budgets | None = None, seed: int = 0, workers: int = 1
) -> QuantumCodeRecord:
    """Recompute a record's distances to ``level``; budget refusals propagate."""
    return build_qbch(
        record.zero_set,
        record.construction,
        record.basis,
        budgets=budgets,
        level=level,
        strict=True,
        seed=seed,
        workers=workers,
    )


def search_qbch(
    n: int,
    q: int,
    construction: str | None = None,
    budgets: Budgets | None = None,
    level: str = "exact",
    basis=None,
    seed: int = 0,
    workers: int = 1,
) -> list[QuantumCodeRecord]:
    """All quantum BCH codes of length n over GF(q), one per (n, k).

    Among zero sets giving the same (n, k) the record with the best verified
    distance wins (ties: the canonically first zero set).  The trivial code
    with k = n (empty classical code) is skipped.
    """
    construction = construction or default_construction(q)
    budgets = budgets or Budgets.from_env()
    hermitian = construction == QUATERNARY
    best: dict[tuple[int, int], tuple[tuple, QuantumCodeRecord]] = {}
    zero_sets = enumerate_self_dual_zero_sets(n, q, hermitian=hermitian, budget=budgets.zero_sets)
    for index, zs in enumerate(zero_sets):
        if len(zs) == n:
            continue
        record = build_qbch(zs, construction, basis, budgets, level, seed=seed, workers=workers)
        key = (record.verified_distance(), record.dq or 0, -index)
        slot = (record.n, record.k)
        if slot not in best or key > best[slot][0]:
            best[slot] = (key, record)
    return [best[slot][1] for slot in sorted(best)]


# ---------------------------------------------------------------------------
# table export


TABLE_FIELDS = ["code", "n", "k", "d", "d_bch", "d_dual", "d2", "dq", "construction", "q", "zero_set", "flags"]


def table_rows(records: list[QuantumCodeRecord]) -> list[dict]:
    rows = []
    for r in records:
        rows.append(
            {
                "code": r.label,
                "n": r.n,
                "k": r.k,
                "d": r.d_true,
                "d_bch": r.d_bch,
                "d_dual": r.d_dual,
                "d2": r.d2,
                "dq": r.dq,
                "construction": r.construction,
                "q": r.q,
                "zero_set": " ".join(map(str, r.zero_set.representatives())),
                "flags": ";".join(f"{k}={v}" for k, v in sorted(r.flags.items())),
            }
        )
    return rows


def to_csv(records: list[QuantumCodeRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in table_rows(records):
        writer.writerow({k: "" if v is None else v for k, v in row.items()})
    return buf.getvalue()


# ---------------------------------------------------------------------------
# code states


MAX_STATE_QUBITS = 20


def coset_representatives(code: LinearCode) -> np.ndarray:
    """Canonical representatives w_j of C^perp / C.

    A reduced basis of C is extended to one of C^perp; w_j is the combination
    of the extra rows selected by j, with the first extra row as the most
    significant bit of j.
    """
    extra = linalg.complete_basis(code.gen, dual_code(code).gen)
    r = extra.shape[0]
    reps = np.zeros((1 << r, code.n), dtype=np.int64)
    for j in range(1 << r):
        for i in range(r):
            if (j >> (r - 1 - i)) & 1:
                reps[j] ^= extra[i]
    return reps


def _labels(words: np.ndarray) -> np.ndarray:
    """Basis-state index of each word: qubit i is bit i."""
    return (np.asarray(words, dtype=np.int64) << np.arange(words.shape[1])).sum(axis=1)


def code_states(code: LinearCode) -> np.ndarray:
    """|psi_j> = |C|^(-1/2) sum_{c in C} |c + w_j>, one row per coset representative."""
    if code.q != 2:
        raise ValueError("code states are built from binary codes")
    n = code.n
    if n > MAX_STATE_QUBITS:
        raise ValueError(f"state vectors are limited to n <= {MAX_STATE_QUBITS}, got {n}")
    if not contains(dual_code(code), code):
        raise ValueError("code is not weakly self-dual")
    words, _ = enumerate_codewords(code)
    reps = coset_representatives(code)
    states = np.zeros((reps.shape[0], 1 << n), dtype=np.complex128)
    amp = 1 / np.sqrt(words.shape[0])
    for j, w in enumerate(reps):
        states[j, _labels(words ^ w)] = amp
    return states


def hadamard_transform(states: np.ndarray, n: int) -> np.ndarray:
    """Apply H to every qubit of each row of ``states``."""
    out = np.array(states, dtype=np.complex128, copy=True)
    rows = out.shape[0]
    for t in range(n):
        view = out.reshape(rows, -1, 2, 1 << t)
        a = view[:, :, 0, :].copy()
        b = view[:, :, 1, :]
        view[:, :, 0, :] = a + b
        view[:, :, 1, :] = a - b
    return out / np.sqrt(2.0) ** n


def hadamard_identity_error(code: LinearCode) -> float:
    """Max deviation of H^n|psi_j> from |C^perp|^(-1/2) sum (-1)^(c.w_j) |c>."""
    n = code.n
    states = code_states(code)
    reps = coset_representatives(code)
    dual_words, _ = enumerate_codewords(dual_code(code))
    labels = _labels(dual_words)
    amp = 1 / np.sqrt(dual_words.shape[0])
    worst = 0.0
    for start in range(0, states.shape[0], 16):
        block = hadamard_transform(states[start : start + 16], n)
        expected = np.zeros_like(block)
        signs = 1 - 2 * ((dual_words @ reps[start : start + 16].T) & 1)
        expected[:, labels] = amp * signs.T
        worst = max(worst, float(np.abs(block - expected).max()))
    return worst


def hadamard_identity_check(code: LinearCode, tolerance: float = 1e-10) -> bool:
    return hadamard_identity_error(code) <= tolerance


def orthonormality_error(states: np.ndarray) -> float:
    gram = states.conj() @ states.T
    return float(np.abs(gram - np.eye(states.shape[0])).max())
