"""Arithmetic functions f: N -> Q with the convention f(0) = 0.

Builtins are evaluated by sieves over 1..N; tabulated functions come from a
CSV file and stay exact rationals internally even when a float view is
requested.
"""

from __future__ import annotations

import csv
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable

import numpy as np

from .errors import FunctionTableError, TabulationError

_VALUE_RE = re.compile(r"-?\d+(\.\d+)?|-?\d+/\d+")


@dataclass(frozen=True)
class ArithmeticFunction:
    """An arithmetic function, either a named sieve rule or a finite table.

    ``sieve(N)`` must return exact values for indices 0..N with index 0
    equal to 0.  ``table`` holds f(0), f(1), ..., f(M) for tabulated functions.
    """

    name: str
    sieve: Callable[[int], tuple] | None = field(default=None, repr=False, compare=False)
    table: tuple[Fraction, ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        if (self.sieve is None) == (self.table is None):
            raise ValueError("give exactly one of sieve or table")
        if self.table is not None and self.table[0] != 0:
            raise ValueError("tabulated functions must have f(0) = 0")

    @property
    def max_index(self) -> int | None:
        return None if self.table is None else len(self.table) - 1

    def covers(self, N: int) -> bool:
        return self.table is None or N <= len(self.table) - 1

    def values(self, N: int) -> tuple:
        """Exact values f(0), ..., f(N)."""
        if N < 0:
            raise ValueError("N must be nonnegative")
        if self.table is not None:
            if N > len(self.table) - 1:
                raise TabulationError(
                    f"function {self.name!r} is tabulated up to n={len(self.table) - 1}, "
                    f"order {N} requested"
                )
            return self.table[: N + 1]
        return self.sieve(N)

    def float_values(self, N: int) -> np.ndarray:
        return _to_float_array(self.values(N))

    def __call__(self, n: int):
        if n == 0:
            return 0
        return self.values(n)[n]


def _to_float_array(vals) -> np.ndarray:
    return np.array([float(v) for v in vals], dtype=np.float64)


# -- sieves -------------------------------------------------------------------


@lru_cache(maxsize=32)
def _one(N: int) -> tuple:
    return (0,) + (1,) * N


@lru_cache(maxsize=64)
def _residue(r: int, m: int, N: int) -> tuple:
    return (0,) + tuple(1 if n % m == r else 0 for n in range(1, N + 1))


@lru_cache(maxsize=32)
def _totient(N: int) -> list[int]:
    phi = list(range(N + 1))
    for p in range(2, N + 1):
        if phi[p] == p:
            for k in range(p, N + 1, p):
                phi[k] -= phi[k] // p
    return phi


@lru_cache(maxsize=32)
def _phi_ratio(N: int) -> tuple:
    phi = _totient(N)
    return (0,) + tuple(Fraction(phi[n], n) for n in range(1, N + 1))


@lru_cache(maxsize=32)
def _smallest_prime_factor(N: int) -> list[int]:
    spf = list(range(N + 1))
    for p in range(2, int(N**0.5) + 1):
        if spf[p] == p:
            for k in range(p * p, N + 1, p):
                if spf[k] == k:
                    spf[k] = p
    return spf


@lru_cache(maxsize=32)
def _mobius(N: int) -> tuple:
    spf = _smallest_prime_factor(N)
    mu = [0] * (N + 1)
    if N >= 1:
        mu[1] = 1
    for n in range(2, N + 1):
        p = spf[n]
        m = n // p
        mu[n] = 0 if m % p == 0 else -mu[m]
    return tuple(mu)


@lru_cache(maxsize=32)
def _liouville(N: int) -> tuple:
    spf = _smallest_prime_factor(N)
    lam = [0] * (N + 1)
    if N >= 1:
        lam[1] = 1
    for n in range(2, N + 1):
        lam[n] = -lam[n // spf[n]]
    return tuple(lam)


@lru_cache(maxsize=32)
def _divisor_count(N: int) -> tuple:
    d = [0] * (N + 1)
    for k in range(1, N + 1):
        for m in range(k, N + 1, k):
            d[m] += 1
    return tuple(d)


@lru_cache(maxsize=32)
def _identity(N: int) -> tuple:
    return tuple(range(N + 1))


def residue_indicator(r: int, m: int) -> ArithmeticFunction:
    """Indicator of n = r (mod m)."""
    if m < 1 or not 0 <= r < m:
        raise ValueError(f"need 0 <= r < m, got r={r}, m={m}")
    return ArithmeticFunction(f"residue_{r}_{m}", sieve=lambda N: _residue(r, m, N))


BUILTINS: dict[str, ArithmeticFunction] = {
    "one": ArithmeticFunction("one", sieve=_one),
    "even_indicator": ArithmeticFunction("even_indicator", sieve=lambda N: _residue(0, 2, N)),
    "odd_indicator": ArithmeticFunction("odd_indicator", sieve=lambda N: _residue(1, 2, N)),
    "phi_ratio": ArithmeticFunction("phi_ratio", sieve=_phi_ratio),
    "mobius": ArithmeticFunction("mobius", sieve=_mobius),
    "liouville": ArithmeticFunction("liouville", sieve=_liouville),
    "divisor_count": ArithmeticFunction("divisor_count", sieve=_divisor_count),
    "identity": ArithmeticFunction("identity", sieve=_identity),
}

_RESIDUE_NAME = re.compile(r"residue_(\d+)_(\d+)$")


def builtin_names() -> list[str]:
    return sorted(BUILTINS) + ["residue_R_M"]


def get_function(name: str) -> ArithmeticFunction:
    """Resolve a builtin by name; ``residue_R_M`` is the indicator of R mod M."""
    if name in BUILTINS:
        return BUILTINS[name]
    m = _RESIDUE_NAME.match(name)
    if m:
        return residue_indicator(int(m.group(1)), int(m.group(2)))
    raise KeyError(f"unknown function {name!r}; valid: {', '.join(builtin_names())}")


def tabulated(name: str, values) -> ArithmeticFunction:
    """Tabulated function from f(1), f(2), ... (f(0) = 0 is prepended)."""
    return ArithmeticFunction(name, table=(Fraction(0),) + tuple(Fraction(v) for v in values))


def _parse_value(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ZeroDivisionError("zero denominator")
        return Fraction(int(num), int(den))
    return Fraction(text)


def load_function_table(path) -> ArithmeticFunction:
    """Read a ``n,value`` CSV with rows for n = 1, 2, ... and no gaps."""
    path = Path(path)
    values: list[Fraction] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise FunctionTableError(path, 1, "empty file")
        if [h.strip() for h in header] != ["n", "value"]:
            raise FunctionTableError(path, 1, f"expected header 'n,value', got {','.join(header)!r}")
        for row in reader:
            line = reader.line_num
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 2:
                raise FunctionTableError(path, line, f"expected 2 fields, got {len(row)}")
            n_text, v_text = (c.strip() for c in row)
            if not n_text.isdigit():
                raise FunctionTableError(path, line, f"bad index {n_text!r}")
            n = int(n_text)
            expected = len(values) + 1
            if n != expected:
                raise FunctionTableError(path, line, f"gap in n: expected {expected}, got {n}")
            if not _VALUE_RE.fullmatch(v_text):
                raise FunctionTableError(path, line, f"unparsable value {v_text!r}")
            try:
                values.append(_parse_value(v_text))
            except ZeroDivisionError:
                raise FunctionTableError(path, line, f"zero denominator in {v_text!r}") from None
    if not values:
        raise FunctionTableError(path, 2, "no data rows")
    return tabulated(path.stem, values)
