"""Command-line front end.

Exit codes: 0 success, 2 precondition violation, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import channel, quantum
from .config import BudgetExceeded, Budgets, budgets_from_config, load_config, parse_int
from .cyclic_code import code_from_zero_set
from .cyclotomic import (
    ZeroSet,
    all_cosets,
    dual_zero_set,
    is_self_orthogonal_gf4,
    is_weakly_self_dual,
    orthogonal_zero_set_gf4,
)

EXIT_OK, EXIT_PRECONDITION, EXIT_BUDGET = 0, 2, 3
CONSTRUCTIONS = {"1": quantum.BINARY, "2": quantum.QUATERNARY, "3": quantum.EXTENSION}


class Precondition(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _construction(text: str | None) -> str | None:
    if text is None:
        return None
    return CONSTRUCTIONS.get(text, text)


def _basis(text: str | None):
    return tuple(parse_int(t) for t in text.split(",")) if text else None


def _zero_set(args) -> ZeroSet:
    """Zero set from ``--zeros`` (cyclotomic cosets are closed automatically)."""
    return ZeroSet.from_cosets(args.n, args.q, args.zeros)


def _read_record(path: str) -> quantum.QuantumCodeRecord:
    p = Path(path)
    if not p.is_file():
        raise Precondition(f"record file {path} does not exist")
    return quantum.QuantumCodeRecord.from_json(json.loads(p.read_text()))


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            raise Precondition(f"cannot write {out}: {exc.strerror}") from exc
    else:
        sys.stdout.write(text)


def _format_records(records, fmt: str) -> str:
    if fmt == "csv":
        return quantum.to_csv(records)
    if fmt == "text":
        lines = []
        for r in records:
            flags = " ".join(f"{k}={v}" for k, v in sorted(r.flags.items()))
            lines.append(f"{r.label:<18} Z={r.zero_set.representatives()}  {flags}")
        return "".join(line + "\n" for line in lines)
    return "".join(r.dumps() + "\n" for r in records)


# ---------------------------------------------------------------------------
# commands


def cmd_cosets(args, budgets) -> str:
    blocks = [sorted(b) for b in all_cosets(args.n, args.q)]
    if args.format == "text":
        return "".join(f"C_{b[0]:<4} {' '.join(map(str, b))}\n" for b in blocks)
    return _dump({"n": args.n, "q": args.q, "cosets": blocks}) + "\n"


def cmd_zeroset_dual(args, budgets) -> str:
    zs = _zero_set(args)
    if args.hermitian:
        other, ok = orthogonal_zero_set_gf4(zs), is_self_orthogonal_gf4(zs)
    else:
        other, ok = dual_zero_set(zs), is_weakly_self_dual(zs)
    data = {
        "zero_set": list(zs.residues),
        "dual": list(other.residues),
        "hermitian": args.hermitian,
        "contained": ok,
    }
    if args.format == "text":
        return f"Z      {data['zero_set']}\nZ_dual {data['dual']}\ncontained {ok}\n"
    return _dump(data) + "\n"


def cmd_construct(args, budgets) -> str:
    record = quantum.build_qbch(
        _zero_set(args),
        _construction(args.construction),
        _basis(args.basis),
        budgets,
        args.level,
        seed=args.seed,
        workers=args.workers,
    )
    return _format_records([record], args.format)


def cmd_search(args, budgets) -> str:
    records = quantum.search_qbch(
        args.n,
        args.q,
        _construction(args.construction),
        budgets,
        args.level,
        _basis(args.basis),
        seed=args.seed,
        workers=args.workers,
    )
    return _format_records(records, args.format)


def cmd_verify(args, budgets) -> str:
    record = _read_record(args.record)
    upgraded = quantum.upgrade_record(record, args.level, budgets, seed=args.seed, workers=args.workers)
    return _format_records([upgraded], args.format)


def cmd_table(args, budgets) -> str:
    records = []
    for n in range(args.n_min, args.n_max + 1):
        if n % 2 == 0 or n < 3 or math.gcd(n, args.q) != 1:
            continue
        records += quantum.search_qbch(
            n,
            args.q,
            _construction(args.construction),
            budgets,
            args.level,
            _basis(args.basis),
            seed=args.seed,
            workers=args.workers,
        )
    return _format_records(records, "csv" if args.format == "text" else args.format)


def cmd_simulate(args, budgets) -> str:
    record = _read_record(args.record)
    decoder = channel.QuantumDecoder(record, budgets)
    if args.exhaustive:
        result = channel.exhaustive_check(decoder, args.channel, erasures=args.erasures)
        return _dump(result.to_json()) + "\n"
    lines = []
    for eps in args.eps:
        model = channel.ChannelModel(args.channel, eps)
        result = channel.estimate_logical_error_rate(decoder, model, args.trials, args.seed, workers=args.workers)
        lines.append(_dump(result.to_json()) + "\n")
    return "".join(lines)


def cmd_statecheck(args, budgets) -> str:
    if args.record:
        record = _read_record(args.record)
        if record.construction != quantum.BINARY:
            raise Precondition("state vectors are built for binary records only")
        code = code_from_zero_set(record.zero_set)
    else:
        if args.n is None or args.zeros is None:
            raise Precondition("give --record or n with --zeros")
        code = code_from_zero_set(ZeroSet.from_cosets(args.n, 2, args.zeros))
    states = quantum.code_states(code)
    ortho = quantum.orthonormality_error(states)
    had = quantum.hadamard_identity_error(code)
    data = {
        "n": code.n,
        "k_classical": code.k,
        "states": states.shape[0],
        "orthonormality_error": ortho,
        "hadamard_error": had,
        "tolerance": args.tolerance,
        "pass": ortho <= args.tolerance and had <= args.tolerance,
    }
    if args.format == "text":
        return "".join(f"{k:<20} {v}\n" for k, v in data.items())
    return _dump(data) + "\n"


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="RNG seed (default 0)")
    common.add_argument("--budget", default=None, help="enumeration budget in codewords, e.g. 2^26")
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--config", default=None, help="key = value file with budgets and defaults")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--out", default=None, help="write output to this file")

    parser = argparse.ArgumentParser(prog="qbch", description="Quantum BCH codes: construction, distances, simulation.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("cosets", cmd_cosets, "cyclotomic cosets modulo n")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)

    p = add("zeroset-dual", cmd_zeroset_dual, "zero set of the dual (or Hermitian orthogonal) code")
    p.add_argument("n", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--zeros", type=int, nargs="+", required=True, help="coset representatives")
    p.add_argument("--hermitian", action="store_true")

    level = dict(choices=quantum.LEVELS, default="exact")
    for name, func, text in (
        ("construct", cmd_construct, "build one quantum code from a zero set"),
        ("search", cmd_search, "all quantum BCH codes of length n over GF(q)"),
    ):
        p = add(name, func, text)
        p.add_argument("n", type=int)
        p.add_argument("q", type=int)
        if name == "construct":
            p.add_argument("--zeros", type=int, nargs="+", required=True, help="coset representatives")
        p.add_argument("--construction", default=None, help="1/binary, 2/quaternary or 3/extension")
        p.add_argument("--level", **level)
        p.add_argument("--basis", default=None, help="comma-separated self-dual basis elements")

    p = add("verify", cmd_verify, "upgrade a record's distances to a level")
    p.add_argument("record")
    p.add_argument("--level", **level)

    p = add("table", cmd_table, "regenerate a parameter table over a range of n")
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--construction", default=None)
    p.add_argument("--level", **level)
    p.add_argument("--basis", default=None)

    p = add("simulate", cmd_simulate, "logical error rates over a channel")
    p.add_argument("record")
    p.add_argument("--channel", choices=(channel.DEPOLARIZING, channel.ERASURE), default=channel.DEPOLARIZING)
    p.add_argument("--eps", type=float, nargs="+", default=[0.01])
    p.add_argument("--trials", type=int, default=10**4)
    p.add_argument("--exhaustive", action="store_true", help="all weight-1 Paulis or all erasure cases")
    p.add_argument("--erasures", type=int, default=2, help="erasure size in exhaustive mode")

    p = add("statecheck", cmd_statecheck, "code states and the Hadamard identity (binary, n <= 20)")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--zeros", type=int, nargs="+", default=None)
    p.add_argument("--record", default=None)
    p.add_argument("--tolerance", type=float, default=1e-10)
    return parser


def _settle(args) -> Budgets:
    """Merge config file, environment and flags (flags win)."""
    cfg = load_config(args.config) if args.config else {}
    budgets = budgets_from_config(cfg)
    if args.budget is not None:
        budgets = budgets.replace(enumeration=parse_int(args.budget))
    if args.seed is None:
        args.seed = parse_int(cfg.get("seed", "0"))
    if args.format is None:
        args.format = cfg.get("format", "csv" if args.command == "table" else "json")
    return budgets


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        budgets = _settle(args)
        _emit(args.func(args, budgets), args.out)
    except BudgetExceeded as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (Precondition, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
