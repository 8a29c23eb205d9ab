"""Evaluation of the limit forms at a point q of the unit disk.

Two routes exist.  The series route builds float coefficients and runs
Horner; it is used for forms whose coefficients stay small (frobenius,
Lambert series, partition sums).  Near q = 1 the closed and double-sum forms
have coefficient series that grow far beyond double range, so they are
summed term by term at q instead, with q-Pochhammer products taken as sums
of log(1 - q^j).  The alternating double sum (cor1_5_double) has terms as
large as exp(c / (1 - |q|)) that cancel down to O(1); it is summed in
mpmath at a working precision chosen from the largest term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .. import kernels
from ..arith import ArithmeticFunction
from ..errors import AdequacyError
from ..forms import FormId, build, form_id
from ..series import FLOAT, TruncatedSeries

ADEQUACY = 30.0
DOUBLE_BITS = 53

SERIES_FORMS = frozenset(
    {FormId.FROBENIUS, FormId.LAMBERT_NUM, FormId.LAMBERT_DEN,
     FormId.THM1_PARTITION, FormId.THM2_PARTITION, FormId.COR1_PARTITION, FormId.COR2_PARTITION}
)


@dataclass(frozen=True)
class PointValue:
    value: complex
    tail: float


def check_point(q: complex) -> float:
    r = abs(q)
    if not r < 1:
        raise ValueError(f"|q| must be < 1, got |q| = {r}")
    return 1 - r


def eval_at(S: TruncatedSeries, q: complex) -> PointValue:
    """Horner evaluation of a truncation with tail heuristic |c_N| |q|^(N+1) / (1 - |q|)."""
    gap = check_point(q)
    c = S.to_float().coeffs
    v = kernels.horner(c, complex(q))
    r = abs(q)
    tail = abs(float(c[-1])) * r ** (len(c)) / gap
    return PointValue(v, tail)


def minimal_order(gap: float) -> int:
    """Smallest N with gap * N >= ADEQUACY, evaluated in the same float arithmetic."""
    N = max(1, math.ceil(ADEQUACY / gap))
    while gap * N < ADEQUACY:
        N += 1
    return N


def check_adequacy(q: complex, N: int, index: int | None = None) -> None:
    gap = check_point(q)
    if gap * N < ADEQUACY:
        where = f"point j={index} " if index is not None else "point "
        raise AdequacyError(
            f"{where}q={q} needs order N >= {minimal_order(gap)} "
            f"((1-|q|)*N >= {ADEQUACY:g}), got N={N}"
        )


# -- pointwise sums -----------------------------------------------------------


def _log_table(q: complex, N: int) -> np.ndarray:
    """L[j] = log(1 - q^j) for j = 0..N (L[0] unused, set to 0)."""
    j = np.arange(N + 1)
    qj = np.exp(j * np.log(complex(q)))
    L = np.log1p(-qj[1:])
    return np.concatenate([[0.0], L])


def _tail(fmax: float, q: complex, N: int) -> float:
    r = abs(q)
    return fmax * r ** (N + 1) / (1 - r)


def closed_form_terms(form, f: ArithmeticFunction, q: complex, N: int) -> np.ndarray:
    """Terms t_1..t_N (index 0 is 0) of the n-sum of a closed form at q.

    thm1_closed / cor1_closed: f(n) q^n (q^{n+1};q)_oo.
    thm2_closed / cor2_5_single: f(n) q^n (q;q)_{n-1}.
    cor2_5_double: F(q^k) (q^k;q)_oo with F(x) = sum f(n) x^n, indexed by k.
    """
    form = form_id(form)
    fv = f.float_values(N)
    L = _log_table(q, N)
    logq = np.log(complex(q))
    n = np.arange(N + 1)
    if form in (FormId.THM1_CLOSED, FormId.COR1_CLOSED):
        suffix = np.concatenate([np.cumsum(L[::-1])[::-1][1:], [0.0]])  # sum_{j > n} L[j]
        t = fv * np.exp(n * logq + suffix)
    elif form in (FormId.THM2_CLOSED, FormId.COR2_5_SINGLE):
        prefix = np.concatenate([[0.0], np.cumsum(L)[:-1]])  # sum_{j < n} L[j]
        t = fv * np.exp(n * logq + prefix)
    elif form is FormId.COR2_5_DOUBLE:
        suffix = np.cumsum(L[::-1])[::-1]  # sum_{j >= k} L[j]
        t = np.zeros(N + 1, dtype=complex)
        for k in range(1, N + 1):
            m = N // k
            F = np.dot(fv[1 : m + 1], np.exp(np.arange(1, m + 1) * (k * logq)))
            t[k] = F * np.exp(suffix[k])
    else:
        raise ValueError(f"{form.value} has no n-sum evaluator")
    t = np.asarray(t, dtype=complex)
    t[0] = 0
    return t


def _pointwise(form: FormId, f: ArithmeticFunction, q: complex, N: int) -> PointValue:
    t = closed_form_terms(form, f, q, N)
    fmax = float(np.max(np.abs(f.float_values(N)))) if N else 0.0
    tail = _tail(fmax, q, N)
    if form is FormId.COR2_5_DOUBLE:
        tail *= N
    return PointValue(complex(math.fsum(t.real) + 1j * math.fsum(t.imag)), tail)


NEGLIGIBLE_LOG = -70.0  # terms below e^-70 in absolute size are dropped


def _cor1_5_prefactor_logs(q: complex) -> list[float]:
    """log|q^{k(k-1)/2} / (q;q)_{k-1}| for k = 1, 2, ... until past the peak and negligible.

    Near q = 1 this peaks around k ~ 1/(1-|q|), well beyond the k-range needed
    for the coefficients up to q^N, so the pointwise sum runs over k by size.
    """
    logr = math.log(abs(q))
    out = [0.0]
    logpoch = 0.0
    qk = complex(q)
    k = 1
    while True:
        logpoch += math.log(abs(1 - qk))  # now log|(q;q)_k|
        qk *= q
        k += 1
        v = k * (k - 1) / 2 * logr - logpoch
        out.append(v)
        if v < NEGLIGIBLE_LOG and v < out[-2]:
            return out


def _cor1_5_double_mp(f: ArithmeticFunction, q: complex, N: int, bits: int | None) -> PointValue:
    """-sum_{n <= N, k >= 1} (-1)^k f(n) q^{nk + k(k-1)/2} / (q;q)_{k-1} at adaptive precision.

    For each n the k-sum is q^n (q^{n+1};q)_oo, so this is the order-N
    truncation in n of the same function the closed form sums.
    """
    fv = f.values(N)
    fmax = max((abs(float(v)) for v in fv[1:]), default=0.0)
    if fmax == 0:
        return PointValue(0j, 0.0)
    logs = _cor1_5_prefactor_logs(q)
    peak = max(logs)
    need = max(DOUBLE_BITS, int(peak / math.log(2)) + 80)
    bits = need if bits is None else max(bits, need)
    mlogr = -math.log(abs(q))
    logfmax = math.log(fmax)
    real = q.imag == 0
    with mpmath.workprec(bits):
        qm = mpmath.mpf(q.real) if real else mpmath.mpc(q.real, q.imag)
        fm = [mpmath.mpf(v.numerator) / v.denominator if v else 0 for v in fv]
        total = mpmath.mpf(0) if real else mpmath.mpc(0)
        pre = mpmath.mpf(1) if real else mpmath.mpc(1)  # q^{k(k-1)/2} / (q;q)_{k-1}
        qk = qm  # q^k
        for k in range(1, len(logs) + 1):
            if k > 1:
                pre = pre * qk / (1 - qk)  # advance k-1 -> k
                qk *= qm
            lp = logs[k - 1]
            if lp + logfmax - mlogr * k < NEGLIGIBLE_LOG:
                continue
            # inner terms f(n) q^{nk}: stop once they are negligible against e^-70
            m = min(N, int((lp + logfmax - NEGLIGIBLE_LOG) / (mlogr * k)) + 1)
            F = 0
            x = 1
            for n in range(1, m + 1):
                x *= qk
                c = fm[n]
                if c:
                    F += c * x
            total += pre * F if k % 2 else -(pre * F)
        val = complex(total)
    return PointValue(val, _tail(fmax, q, N))


def _series_point(form: FormId, f, q: complex, N: int) -> PointValue:
    return eval_at(build(form, f, N, FLOAT), q)


def evaluate_form(form, f: ArithmeticFunction | None, q: complex, N: int,
                  precision: int = DOUBLE_BITS, index: int | None = None) -> PointValue:
    """Value of a form at q from its order-N truncation, after the adequacy check."""
    form = form_id(form)
    check_adequacy(q, N, index)
    if precision > DOUBLE_BITS and form is not FormId.COR1_5_DOUBLE:
        return evaluate_form_mp(form, f, q, N, precision)
    if form in SERIES_FORMS:
        return _series_point(form, f, q, N)
    if form is FormId.COR1_5_DOUBLE:
        return _cor1_5_double_mp(f, q, N, None if precision <= DOUBLE_BITS else precision)
    return _pointwise(form, f, q, N)


def evaluate_form_mp(form, f, q: complex, N: int, bits: int) -> PointValue:
    """Direct summation of a form in mpmath at ``bits`` of precision."""
    form = form_id(form)
    if form in SERIES_FORMS:
        S = build(form, f, N)  # exact coefficients
        with mpmath.workprec(bits):
            qm = mpmath.mpc(q.real, q.imag)
            acc = mpmath.mpc(0)
            for c in reversed(S.coeffs):
                acc = acc * qm + mpmath.mpf(c.numerator) / c.denominator
            val = complex(acc)
        r = abs(q)
        return PointValue(val, abs(float(S.coeffs[-1])) * r ** (N + 1) / (1 - r))
    if form is FormId.COR1_5_DOUBLE:
        return _cor1_5_double_mp(f, q, N, bits)
    fv = f.values(N)
    with mpmath.workprec(bits):
        qm = mpmath.mpc(q.real, q.imag)
        one = mpmath.mpf(1)
        fm = [mpmath.mpf(v.numerator) / v.denominator for v in fv]
        powers = [one]
        for _ in range(N):
            powers.append(powers[-1] * qm)
        facs = [one] + [one - powers[j] for j in range(1, N + 1)]
        if form in (FormId.THM1_CLOSED, FormId.COR1_CLOSED):
            total, suffix = mpmath.mpc(0), mpmath.mpc(1)
            for n in range(N, 0, -1):
                total += fm[n] * powers[n] * suffix
                suffix *= facs[n]
        elif form in (FormId.THM2_CLOSED, FormId.COR2_5_SINGLE):
            total, prefix = mpmath.mpc(0), mpmath.mpc(1)
            for n in range(1, N + 1):
                total += fm[n] * powers[n] * prefix
                prefix *= facs[n]
        else:  # cor2_5_double
            suffix = [one] * (N + 2)
            for j in range(N, 0, -1):
                suffix[j] = suffix[j + 1] * facs[j]
            total = mpmath.mpc(0)
            for k in range(1, N + 1):
                F = mpmath.mpc(0)
                for nn in range(1, N // k + 1):
                    if fm[nn]:
                        F += fm[nn] * powers[nn * k]
                total += F * suffix[k]
        val = complex(total)
    fmax = max((abs(float(v)) for v in fv[1:]), default=0.0)
    return PointValue(val, _tail(fmax, q, N))

