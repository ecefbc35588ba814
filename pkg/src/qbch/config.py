"""Budgets, the budget-refusal exception, and the key-value config file."""

from __future__ import annotations

import configparser
import dataclasses
import os
from dataclasses import dataclass
from pathlib import Path

BUDGET_ENV = "QBCH_BUDGET"


class BudgetExceeded(RuntimeError):
    """A computation would exceed its configured budget.

    ``needed`` is the size of the refused job and ``budget`` the limit.
    """

    def __init__(self, what: str, needed: int, budget: int) -> None:
        self.what = what
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what} needs {pretty_count(needed)}, budget is {pretty_count(budget)}")


def pretty_count(x: int) -> str:
    if x > 1 and x & (x - 1) == 0:
        return f"2^{x.bit_length() - 1}"
    return str(x)


@dataclass(frozen=True)
class Budgets:
    enumeration: int = 1 << 26  # codewords for exhaustive enumeration
    supports: int = 10**7  # support prefixes for low-weight search
    syndrome_table: int = 1 << 24  # entries of a decoder syndrome table
    w_max: int = 5  # largest weight tried by support enumeration
    samples: int = 10**6  # codewords drawn for a sampled upper bound
    zero_sets: int = 1 << 20  # candidate coset unions in a search

    ENUMERATION_CAP = 1 << 28

    def __post_init__(self) -> None:
        if self.enumeration > self.ENUMERATION_CAP:
            raise ValueError(f"enumeration budget is capped at {pretty_count(self.ENUMERATION_CAP)}")

    @classmethod
    def from_env(cls) -> Budgets:
        raw = os.environ.get(BUDGET_ENV)
        return cls(enumeration=parse_int(raw)) if raw else cls()

    def replace(self, **changes) -> Budgets:
        return dataclasses.replace(self, **{k: v for k, v in changes.items() if v is not None})


def parse_int(text: str) -> int:
    """Accepts plain ints and powers written as ``2^26`` or ``2**26``."""
    text = text.strip().replace("**", "^")
    if "^" in text:
        base, exp = text.split("^", 1)
        return int(base) ** int(exp)
    return int(float(text)) if "e" in text.lower() else int(text)


def load_config(path: str | os.PathLike | None) -> dict[str, str]:
    """Read ``key = value`` lines.  Section headers are optional and ignored."""
    if path is None:
        return {}
    text = Path(path).read_text()
    parser = configparser.ConfigParser()
    parser.read_string("[qbch]\n" + text)
    out: dict[str, str] = {}
    for section in parser.sections():
        out.update(parser[section])
    return out


def budgets_from_config(cfg: dict[str, str], base: Budgets | None = None) -> Budgets:
    base = base or Budgets.from_env()
    fields = {f.name for f in dataclasses.fields(Budgets)}
    changes = {}
    for key, value in cfg.items():
        name = key.replace("-", "_")
        if name.startswith("budget_"):
            name = name[len("budget_") :]
        if name in fields:
            changes[name] = parse_int(value)
    return base.replace(**changes)
