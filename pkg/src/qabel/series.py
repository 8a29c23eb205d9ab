"""Truncated power series in q over exact rationals or float64.

A :class:`TruncatedSeries` of order N stores the coefficients of
q^0, ..., q^N and represents its value modulo q^(N+1).  Values are immutable;
every operation returns a new series.  Binary operations between series of
different orders truncate to the smaller order.

The exact backend keeps integers as ``int`` and everything else as
``fractions.Fraction``; the float backend stores a read-only float64 array.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable

import numpy as np

from . import kernels
from .arith import ArithmeticFunction
from .errors import BackendMismatchError

EXACT = "exact"
FLOAT = "float"
BACKENDS = (EXACT, FLOAT)


def _exact(c):
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Rational):
        return _exact(Fraction(c.numerator, c.denominator))
    raise TypeError(f"exact backend needs int or Fraction coefficients, got {type(c).__name__}")


class TruncatedSeries:
    __slots__ = ("_c", "backend")

    def __init__(self, coeffs: Iterable, backend: str = EXACT):
        if backend == EXACT:
            c = tuple(_exact(x) for x in coeffs)
        elif backend == FLOAT:
            c = np.array(coeffs, dtype=np.float64)
            if c.ndim != 1:
                raise ValueError("coefficients must be one-dimensional")
            c.setflags(write=False)
        else:
            raise ValueError(f"unknown backend {backend!r}; valid: {', '.join(BACKENDS)}")
        if len(c) == 0:
            raise ValueError("a truncated series needs at least the constant coefficient")
        self._c = c
        self.backend = backend

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, N: int, backend: str = EXACT) -> TruncatedSeries:
        return cls([0] * (N + 1), backend)

    @classmethod
    def one(cls, N: int, backend: str = EXACT) -> TruncatedSeries:
        return cls.monomial(0, N, 1, backend)

    @classmethod
    def monomial(cls, k: int, N: int, coeff=1, backend: str = EXACT) -> TruncatedSeries:
        c = [0] * (N + 1)
        if 0 <= k <= N:
            c[k] = coeff
        return cls(c, backend)

    @classmethod
    def geometric(cls, N: int, backend: str = EXACT) -> TruncatedSeries:
        """1 + q + q^2 + ... + q^N."""
        return cls([1] * (N + 1), backend)

    @classmethod
    def _raw(cls, c, backend: str) -> TruncatedSeries:
        s = object.__new__(cls)
        if backend == FLOAT:
            c = np.asarray(c, dtype=np.float64)
            c.setflags(write=False)
        s._c = c
        s.backend = backend
        return s

    # -- access -----------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self):
        return self._c

    def __len__(self) -> int:
        return len(self._c)

    def __getitem__(self, i):
        return self._c[i]

    def __iter__(self):
        return iter(self._c)

    def __repr__(self) -> str:
        terms = []
        for i, x in enumerate(self._c):
            if x != 0:
                terms.append(f"{x}" if i == 0 else f"{x}*q^{i}")
            if len(terms) == 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body} + O(q^{self.order + 1}), backend={self.backend})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.backend != other.backend or self.order != other.order:
            return False
        if self.backend == FLOAT:
            return bool(np.array_equal(self._c, other._c))
        return self._c == other._c

    __hash__ = None

    def first_mismatch(self, other: TruncatedSeries):
        """(exponent, self coeff, other coeff) of the lowest differing term, or None.

        Compares up to the smaller order.
        """
        self._check(other)
        n = min(len(self._c), len(other._c))
        for i in range(n):
            if self._c[i] != other._c[i]:
                return i, self._c[i], other._c[i]
        return None

    # -- conversions ------------------------------------------------------

    def truncate(self, N: int) -> TruncatedSeries:
        if N < 0:
            raise ValueError("order must be nonnegative")
        if N >= self.order:
            return self
        return TruncatedSeries._raw(self._c[: N + 1], self.backend)

    def to_float(self) -> TruncatedSeries:
        if self.backend == FLOAT:
            return self
        return TruncatedSeries._raw(np.array([float(x) for x in self._c]), FLOAT)

    def with_backend(self, backend: str) -> TruncatedSeries:
        if backend == self.backend:
            return self
        if backend == FLOAT:
            return self.to_float()
        raise BackendMismatchError("float series cannot be converted to the exact backend")

    # -- ring operations --------------------------------------------------

    def _check(self, other: TruncatedSeries) -> None:
        if self.backend != other.backend:
            raise BackendMismatchError(
                f"cannot combine {self.backend} and {other.backend} series"
            )

    def _scalar(self, c):
        if self.backend == EXACT:
            return _exact(c)
        return float(c)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self + TruncatedSeries.monomial(0, self.order, self._scalar(other), self.backend)
        self._check(other)
        n = min(len(self._c), len(other._c))
        if self.backend == FLOAT:
            return TruncatedSeries._raw(self._c[:n] + other._c[:n], FLOAT)
        return TruncatedSeries._raw(tuple(_exact(a + b) for a, b in zip(self._c[:n], other._c[:n])), EXACT)

    __radd__ = __add__

    def __neg__(self):
        if self.backend == FLOAT:
            return TruncatedSeries._raw(-self._c, FLOAT)
        return TruncatedSeries._raw(tuple(-a for a in self._c), EXACT)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> TruncatedSeries:
        c = self._scalar(c)
        if self.backend == FLOAT:
            return TruncatedSeries._raw(self._c * c, FLOAT)
        if c == 0:
            return TruncatedSeries._raw((0,) * len(self._c), EXACT)
        return TruncatedSeries._raw(tuple(_exact(a * c) for a in self._c), EXACT)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        n = min(len(self._c), len(other._c))
        a, b = self._c[:n], other._c[:n]
        if self.backend == FLOAT:
            return TruncatedSeries._raw(np.convolve(a, b)[:n], FLOAT)
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j in range(n - i):
                    y = b[j]
                    if y:
                        out[i + j] += x * y
        return TruncatedSeries(out, EXACT)

    __rmul__ = __mul__

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by q^k (k >= 0), keeping the order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        n = len(self._c)
        if k == 0:
            return self
        if self.backend == FLOAT:
            out = np.zeros(n)
            if k < n:
                out[k:] = self._c[: n - k]
            return TruncatedSeries._raw(out, FLOAT)
        return TruncatedSeries._raw(((0,) * min(k, n) + self._c)[:n], EXACT)

    def invert(self) -> TruncatedSeries:
        """Multiplicative inverse modulo q^(N+1); needs a nonzero constant term."""
        c = self._c
        if c[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        n = len(c)
        if self.backend == FLOAT:
            inv = np.zeros(n)
            inv[0] = 1.0 / c[0]
            for m in range(1, n):
                inv[m] = -np.dot(c[1 : m + 1], inv[m - 1 :: -1][:m]) * inv[0]
            return TruncatedSeries._raw(inv, FLOAT)
        c0 = Fraction(c[0])
        inv = [Fraction(1) / c0]
        for m in range(1, n):
            acc = 0
            for k in range(1, m + 1):
                if c[k]:
                    acc += c[k] * inv[m - k]
            inv.append(-acc / c0)
        return TruncatedSeries(inv, EXACT)

    def substitute_power(self, k: int) -> TruncatedSeries:
        """The series S(q^k), same order."""
        if k < 1:
            raise ValueError("k must be a positive integer")
        if k == 1:
            return self
        n = len(self._c)
        if self.backend == FLOAT:
            out = np.zeros(n)
            m = (n - 1) // k + 1
            out[::k] = self._c[:m]
            return TruncatedSeries._raw(out, FLOAT)
        out = [0] * n
        for m in range((n - 1) // k + 1):
            out[k * m] = self._c[m]
        return TruncatedSeries._raw(tuple(out), EXACT)

    def mul_poch(self, a: int, b: int) -> TruncatedSeries:
        """Multiply by prod_{a <= k <= b} (1 - q^k); empty range is the identity."""
        n = len(self._c)
        lo, hi = max(a, 1), min(b, n - 1)
        if lo > hi:
            return self
        if self.backend == FLOAT:
            return TruncatedSeries._raw(kernels.mul_poch_range(self._c, lo, hi), FLOAT)
        out = list(self._c)
        for k in range(lo, hi + 1):
            for i in range(n - 1, k - 1, -1):
                if out[i - k]:
                    out[i] -= out[i - k]
        return TruncatedSeries._raw(tuple(out), EXACT)

    def div_poch(self, a: int, b: int) -> TruncatedSeries:
        """Divide by prod_{a <= k <= b} (1 - q^k)."""
        n = len(self._c)
        lo, hi = max(a, 1), min(b, n - 1)
        if lo > hi:
            return self
        if self.backend == FLOAT:
            return TruncatedSeries._raw(kernels.div_poch_range(self._c, lo, hi), FLOAT)
        out = list(self._c)
        for k in range(lo, hi + 1):
            for i in range(k, n):
                if out[i - k]:
                    out[i] += out[i - k]
        return TruncatedSeries._raw(tuple(_exact(x) for x in out), EXACT)

    def max_abs(self) -> float:
        return float(max(abs(x) for x in self._c))


# -- q-Pochhammer symbols and friends ----------------------------------------


def poch_q(n: int, N: int, backend: str = EXACT) -> TruncatedSeries:
    """(q; q)_n = prod_{k=1}^{n} (1 - q^k), truncated at order N."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return TruncatedSeries.one(N, backend).mul_poch(1, n)


def poch_inf(a: int, N: int, backend: str = EXACT) -> TruncatedSeries:
    """(q^a; q)_oo = prod_{k >= a} (1 - q^k), truncated at order N."""
    if a < 1:
        raise ValueError("(q^a; q)_oo needs a >= 1")
    return TruncatedSeries.one(N, backend).mul_poch(a, N)


def partition_gf(N: int, backend: str = EXACT) -> TruncatedSeries:
    """1 / (q; q)_oo, the partition generating function."""
    return TruncatedSeries.one(N, backend).div_poch(1, N)


def power_series(f: ArithmeticFunction, N: int, backend: str = EXACT) -> TruncatedSeries:
    """sum_{n >= 1} f(n) q^n."""
    if backend == FLOAT:
        return TruncatedSeries._raw(f.float_values(N), FLOAT)
    return TruncatedSeries(f.values(N), EXACT)


def lambert_series(f: ArithmeticFunction, N: int, backend: str = EXACT) -> TruncatedSeries:
    """sum_{n >= 1} f(n) q^n / (1 - q^n); the q^m coefficient is sum_{d | m} f(d)."""
    if backend == FLOAT:
        fv = f.float_values(N)
        out = np.zeros(N + 1)
        for d in range(1, N + 1):
            if fv[d]:
                out[d::d] += fv[d]
        return TruncatedSeries._raw(out, FLOAT)
    fv = f.values(N)
    out = [0] * (N + 1)
    for d in range(1, N + 1):
        v = fv[d]
        if v:
            for m in range(d, N + 1, d):
                out[m] += v
    return TruncatedSeries(out, EXACT)
