"""Truncated q-series for each limit form, by partition sums and by n-sums.

Every :class:`FormId` names one power series whose q -> 1 limit is studied.
:func:`build` produces its truncation at order N.  Partition-sum forms are
computed from statistics of all partitions of size <= N (bounded by an
enumeration guard); the remaining forms are computed from their n-sum or
double-sum expressions.

On the exact backend every form is built from its expression as written.
On the float backend, forms whose written expression multiplies a series with
huge coefficients (such as 1/(q;q)_n) by (q;q)_oo are rearranged so that the
prefactor is absorbed into each term first; double sums with alternating
signs are accumulated exactly and converted.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from . import kernels
from .arith import ArithmeticFunction, BUILTINS
from .errors import OrderGuardError
from .partitions import is_gap_free, multiplicity_of_largest, partitions_of
from .series import (
    EXACT,
    FLOAT,
    TruncatedSeries,
    lambert_series,
    poch_inf,
    power_series,
)

ENUMERATION_GUARD = 60


class FormId(str, Enum):
    FROBENIUS = "frobenius"
    THM1_PARTITION = "thm1_partition"
    THM1_CLOSED = "thm1_closed"
    COR1_PARTITION = "cor1_partition"
    COR1_CLOSED = "cor1_closed"
    COR1_5_DOUBLE = "cor1_5_double"
    THM2_PARTITION = "thm2_partition"
    THM2_CLOSED = "thm2_closed"
    COR2_PARTITION = "cor2_partition"
    COR2_5_SINGLE = "cor2_5_single"
    COR2_5_DOUBLE = "cor2_5_double"
    LAMBERT_NUM = "lambert_num"
    LAMBERT_DEN = "lambert_den"

    def __str__(self) -> str:
        return self.value

    @property
    def is_partition_sum(self) -> bool:
        return self in PARTITION_FORMS


PARTITION_FORMS = frozenset(
    {FormId.THM1_PARTITION, FormId.COR1_PARTITION, FormId.THM2_PARTITION, FormId.COR2_PARTITION}
)


def form_id(tag) -> FormId:
    try:
        return FormId(str(tag))
    except ValueError:
        valid = ", ".join(f.value for f in FormId)
        raise KeyError(f"unknown form {tag!r}; valid: {valid}") from None


# -- partition statistics -----------------------------------------------------

_hist_cache: dict[int, dict] = {}


def partition_statistics(N: int, guard: int = ENUMERATION_GUARD) -> dict:
    """Histograms of partition statistics for all sizes <= N (cached)."""
    if N > guard:
        raise OrderGuardError(
            f"partition enumeration to order {N} exceeds the guard {guard}; "
            "use a closed-form builder instead"
        )
    for M, h in _hist_cache.items():
        if M >= N:
            return {k: v[: N + 1, : N + 1] if v.ndim == 2 else v[: N + 1] for k, v in h.items()}
    h = kernels.partition_histograms(N)
    _hist_cache.clear()
    _hist_cache[N] = h
    return h


def _weighted_rows(table: np.ndarray, fv) -> list:
    """sum_k fv[k] * table[n, k] for each n, in exact arithmetic."""
    out = []
    for row in table:
        acc = 0
        for k in np.nonzero(row)[0]:
            v = fv[k]
            if v:
                acc += int(row[k]) * v
        out.append(acc)
    return out


def _finish(s: TruncatedSeries, backend: str) -> TruncatedSeries:
    return s if backend == EXACT else s.to_float()


def _thm1_partition(f, N, guard=ENUMERATION_GUARD):
    h = partition_statistics(N, guard)
    num = TruncatedSeries(_weighted_rows(h["by_largest"], f.values(N)))
    return num.mul_poch(1, N)


def _thm2_partition(f, N, guard=ENUMERATION_GUARD):
    h = partition_statistics(N, guard)
    num = TruncatedSeries(_weighted_rows(h["by_smallest"], f.values(N)))
    return num.mul_poch(1, N)


def _cor1_partition(f, N, guard=ENUMERATION_GUARD):
    h = partition_statistics(N, guard)
    return -TruncatedSeries(_weighted_rows(h["distinct_sign_by_smallest"], f.values(N)))


def _cor2_partition(f, N, guard=ENUMERATION_GUARD):
    h = partition_statistics(N, guard)
    return -TruncatedSeries(_weighted_rows(h["distinct_sign_by_largest"], f.values(N)))


def cor1_partition_conjugate(f: ArithmeticFunction, N: int, guard: int = ENUMERATION_GUARD) -> TruncatedSeries:
    """cor1_partition computed on the conjugate side.

    Sums over partitions g in which every integer below the largest part
    occurs, weighted by -(-1)^lg(g) f(multiplicity of the largest part).
    """
    if N > guard:
        raise OrderGuardError(f"order {N} exceeds the enumeration guard {guard}")
    fv = f.values(N)
    out = [0] * (N + 1)
    for n in range(1, N + 1):
        acc = 0
        for g in partitions_of(n):
            if is_gap_free(g):
                w = fv[multiplicity_of_largest(g)]
                if w:
                    acc += w if g.largest % 2 else -w
        out[n] = acc
    return TruncatedSeries(out)


# -- n-sum builders -----------------------------------------------------------


def _frobenius(f, N, backend):
    return power_series(f, N, backend).mul_poch(1, 1)


def _thm1_closed(f, N, backend):
    if backend == FLOAT:
        # (q;q)_N * sum f(n) q^n / (q;q)_n  =  sum f(n) q^n (q^{n+1};q)_{N-n}
        return TruncatedSeries._raw(kernels.descending_product_sum(f.float_values(N)), FLOAT)
    fv = f.values(N)
    acc = [0] * (N + 1)
    r = TruncatedSeries.one(N)
    for n in range(1, N + 1):
        r = r.div_poch(n, n)  # 1/(q;q)_n
        v = fv[n]
        if v:
            for i in range(N + 1 - n):
                if r[i]:
                    acc[i + n] += v * r[i]
    return TruncatedSeries(acc) * poch_inf(1, N)


def _accumulate_shifted(acc, series, n, v):
    """acc[n + i] += v * series[i] for i <= N - n."""
    N = len(acc) - 1
    if isinstance(acc, np.ndarray):
        acc[n:] += v * series.coeffs[: N + 1 - n]
        return
    c = series.coeffs
    for i in range(N + 1 - n):
        if c[i]:
            acc[i + n] += v * c[i]


def _new_acc(N, backend):
    return np.zeros(N + 1) if backend == FLOAT else [0] * (N + 1)


def _cor1_closed(f, N, backend):
    fv = f.values(N) if backend == EXACT else f.float_values(N)
    acc = _new_acc(N, backend)
    e = TruncatedSeries.one(N, backend)  # (q^{n+1};q)_oo, built downward from n = N
    for n in range(N, 0, -1):
        if fv[n]:
            _accumulate_shifted(acc, e, n, fv[n])
        e = e.mul_poch(n, n)
    return TruncatedSeries(acc, backend)


def _cor1_5_double_exact(f, N):
    fv = f.values(N)
    acc = [0] * (N + 1)
    r = TruncatedSeries.one(N)  # 1/(q;q)_{k-1}
    k = 1
    while k + k * (k - 1) // 2 <= N:
        if k > 1:
            r = r.div_poch(k - 1, k - 1)
        base = k * (k - 1) // 2
        sign = 1 if k % 2 else -1  # -(-1)^k
        n = 1
        while n * k + base <= N:
            v = fv[n]
            if v:
                e0 = n * k + base
                c = sign * v
                for i in range(N + 1 - e0):
                    if r[i]:
                        acc[e0 + i] += c * r[i]
            n += 1
        k += 1
    return TruncatedSeries(acc)


def _thm2_closed(f, N, backend):
    if backend == FLOAT:
        # (q;q)_oo / (q^n;q)_oo = (q;q)_{n-1}; Horner from the top:
        # H <- f(n) + q (1 - q^n) H, result q H
        fv = f.float_values(N)
        h = TruncatedSeries.zero(N, FLOAT)
        for n in range(N, 0, -1):
            h = h.mul_poch(n, n).shift(1) + float(fv[n])
        return h.shift(1)
    fv = f.values(N)
    acc = [0] * (N + 1)
    d = TruncatedSeries.one(N)  # 1/(q^n;q)_oo, built downward
    for n in range(N, 0, -1):
        d = d.div_poch(n, n)
        v = fv[n]
        if v:
            for i in range(N + 1 - n):
                if d[i]:
                    acc[i + n] += v * d[i]
    return TruncatedSeries(acc) * poch_inf(1, N)


def _cor2_5_single(f, N, backend):
    fv = f.values(N) if backend == EXACT else f.float_values(N)
    acc = _new_acc(N, backend)
    p = TruncatedSeries.one(N, backend)  # (q;q)_{n-1}
    for n in range(1, N + 1):
        if fv[n]:
            _accumulate_shifted(acc, p, n, fv[n])
        p = p.mul_poch(n, n)
    return TruncatedSeries(acc, backend)


def cor2_5_double_unnormalized(f: ArithmeticFunction, N: int, backend: str = EXACT) -> TruncatedSeries:
    """sum_{n,k >= 1} f(n) q^{nk} / (q;q)_{k-1}, without the (q;q)_oo factor.

    By the q-binomial theorem this equals thm2_closed / (q;q)_oo, so it is
    not itself a series tending to a finite limit; :data:`FormId.COR2_5_DOUBLE`
    is this series times (q;q)_oo.
    """
    fv = f.values(N)
    acc = [0] * (N + 1)
    r = TruncatedSeries.one(N)
    for k in range(1, N + 1):
        if k > 1:
            r = r.div_poch(k - 1, k - 1)
        for n in range(1, N // k + 1):
            v = fv[n]
            if v:
                e0 = n * k
                for i in range(N + 1 - e0):
                    if r[i]:
                        acc[e0 + i] += v * r[i]
    return _finish(TruncatedSeries(acc), backend)


def _cor2_5_double(f, N, backend):
    if backend == FLOAT:
        # (q;q)_oo / (q;q)_{k-1} = (q^k;q)_oo absorbed into each k-term
        fv = f.float_values(N)
        acc = np.zeros(N + 1)
        e = TruncatedSeries.one(N, FLOAT)
        for k in range(N, 0, -1):
            e = e.mul_poch(k, k)  # (q^k;q)_oo
            inner = np.zeros(N + 1)
            inner[k::k] = fv[1 : N // k + 1]
            acc += np.convolve(inner, e.coeffs)[: N + 1]
        return TruncatedSeries._raw(acc, FLOAT)
    return cor2_5_double_unnormalized(f, N) * poch_inf(1, N)


def _lambert_den(N, backend):
    return lambert_series(BUILTINS["one"], N, backend)


def build(form, f: ArithmeticFunction | None, N: int, backend: str = EXACT,
          guard: int = ENUMERATION_GUARD) -> TruncatedSeries:
    """Truncation at order N of the series named by ``form``.

    ``f`` is ignored for ``lambert_den``.  Partition-sum forms raise
    :class:`OrderGuardError` when N exceeds ``guard``.
    """
    form = form_id(form)
    if N < 0:
        raise ValueError("order must be nonnegative")
    if backend not in (EXACT, FLOAT):
        raise ValueError(f"unknown backend {backend!r}")
    if form is FormId.LAMBERT_DEN:
        return _lambert_den(N, backend)
    if f is None:
        raise ValueError(f"form {form.value} needs an arithmetic function")
    f.values(N)  # tabulation check up front
    if form.is_partition_sum:
        if N > guard:
            raise OrderGuardError(
                f"{form.value} enumerates partitions; order {N} exceeds the guard {guard}"
            )
        builder = {
            FormId.THM1_PARTITION: _thm1_partition,
            FormId.THM2_PARTITION: _thm2_partition,
            FormId.COR1_PARTITION: _cor1_partition,
            FormId.COR2_PARTITION: _cor2_partition,
        }[form]
        return _finish(builder(f, N, guard), backend)
    if form is FormId.COR1_5_DOUBLE:
        return _finish(_cor1_5_double_exact(f, N), backend)
    builder = {
        FormId.FROBENIUS: _frobenius,
        FormId.THM1_CLOSED: _thm1_closed,
        FormId.COR1_CLOSED: _cor1_closed,
        FormId.THM2_CLOSED: _thm2_closed,
        FormId.COR2_5_SINGLE: _cor2_5_single,
        FormId.COR2_5_DOUBLE: _cor2_5_double,
        FormId.LAMBERT_NUM: lambda f, N, b: lambert_series(f, N, b),
    }[form]
    return builder(f, N, backend)


def qasymp_reference(f: ArithmeticFunction, N: int, backend: str = EXACT) -> TruncatedSeries:
    """sum_{n >= 1} f(n) q^n; asymptotic to L q / (1 - q) as q -> 1."""
    return power_series(f, N, backend)


__all__ = [
    "ENUMERATION_GUARD",
    "FormId",
    "PARTITION_FORMS",
    "build",
    "cor1_partition_conjugate",
    "cor2_5_double_unnormalized",
    "form_id",
    "partition_statistics",
    "qasymp_reference",
]
