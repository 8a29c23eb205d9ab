"""The q-bracket <a>_q = (q;q)_oo sum_lambda a(lambda) q^|lambda| and the statistic A_n(q).

A_n(q) = a((n)) + sum_{lambda nonempty, sm(lambda) >= n} [a(lambda . (n)) - a(lambda)] q^|lambda|,

with >= made strict in the printed convention when a vanishes on partitions
with a repeated part.  The expansion

    <a>_q = (q;q)_oo sum_{n >= 0} A_n(q) q^n / (q;q)_n

holds coefficientwise with the non-strict comparison for every statistic,
while the strict one breaks it for statistics such as mu_P.  :func:`a_n_series`
therefore uses >= by default and keeps the strict reading behind a flag.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .arith import ArithmeticFunction, get_function
from .errors import OrderGuardError, RegistrationError
from .forms import ENUMERATION_GUARD, FormId
from .identities import IdentityReport, compare
from .limits.engine import LimitEstimate, LimitSettings, order_for_path, resolve_method
from .limits.evaluate import _log_table, _pointwise, check_adequacy, eval_at
from .partitions import (
    EMPTY,
    Partition,
    adjoin,
    mu_p,
    partitions_of,
    partitions_up_to,
    partitions_with_parts_at_least,
)
from .series import TruncatedSeries, partition_gf, poch_inf

REGISTRATION_CHECK_SIZE = 15
DEFAULT_DEPTH = 20
QBRACKET_ORDER = 25


@dataclass(frozen=True)
class PartitionFunction:
    """A statistic a(lambda) with exact values.

    ``bracket_at(q, N)`` and ``a_k_at(k, q, N)``, when given, evaluate <a>_q
    and A_k(q) at a point from order-N data without partition enumeration;
    statistics without them are evaluated from enumerated series and are
    limited by the enumeration guard.
    """

    name: str
    eval: Callable[[Partition], int | Fraction] = field(compare=False)
    vanishes_on_repeats: bool = False
    bracket_at: Callable | None = field(default=None, compare=False, repr=False)
    a_k_at: Callable | None = field(default=None, compare=False, repr=False)

    def __call__(self, lam: Partition):
        return self.eval(lam)


def validate(a: PartitionFunction, size: int = REGISTRATION_CHECK_SIZE) -> None:
    """Reject a declared vanishes_on_repeats flag contradicted by some lambda of size <= size."""
    if not a.vanishes_on_repeats:
        return
    for lam in partitions_up_to(size):
        if lam.has_repeated_part() and a(lam) != 0:
            raise RegistrationError(
                f"{a.name} is declared to vanish on repeated parts but a{lam.parts} = {a(lam)}"
            )


_REGISTRY: dict[str, PartitionFunction] = {}


def register(a: PartitionFunction) -> PartitionFunction:
    validate(a)
    if a.name in _REGISTRY:
        raise RegistrationError(f"a partition function named {a.name!r} is already registered")
    _REGISTRY[a.name] = a
    return a


def registered() -> list[PartitionFunction]:
    return [_REGISTRY[k] for k in _REGISTRY]


def registered_names() -> list[str]:
    return list(_REGISTRY)


def get_partition_function(name: str) -> PartitionFunction:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown partition function {name!r}; valid: {', '.join(_REGISTRY)}") from None


# -- point evaluators for the builtins ----------------------------------------


def _suffix_logs(q: complex, N: int) -> np.ndarray:
    """S[a] = log (q^a;q)_N-truncated = sum_{a <= j <= N} log(1 - q^j), for a = 0..N+1."""
    L = _log_table(q, N)
    S = np.concatenate([np.cumsum(L[::-1])[::-1], [0.0]])
    S[0] = S[1]
    return S


def _exp(x):
    with np.errstate(over="ignore", invalid="ignore"):
        return complex(np.exp(x))


def _lambert_point(weights, q: complex, N: int) -> complex:
    n = np.arange(1, N + 1)
    with np.errstate(over="ignore", invalid="ignore"):
        qn = np.exp(n * np.log(complex(q)))
        return complex(np.sum(weights * qn / (1 - qn)))


def _one_bracket(q, N):
    return 1 + 0j


def _one_ak(k, q, N):
    return 1 + 0j


def _length_bracket(q, N):
    return _lambert_point(np.ones(N), q, N)


def _length_ak(k, q, N):
    return _exp(-_suffix_logs(q, N)[k])


def _size_bracket(q, N):
    return _lambert_point(np.arange(1, N + 1, dtype=float), q, N)


def _size_ak(k, q, N):
    return k * _exp(-_suffix_logs(q, N)[k])


def _mu_bracket(q, N):
    return _exp(2 * _suffix_logs(q, N)[1])


def _mu_ak(k, q, N):
    e = _exp(_suffix_logs(q, N)[min(k + 1, N + 1)])
    return 1 - 2 * e + complex(q) ** k * e


def _distinct_bracket(q, N):
    return complex(q) / (1 - complex(q))


def _distinct_ak(k, q, N):
    return _exp(-_suffix_logs(q, N)[min(k + 1, N + 1)])


_IDENTITY = get_function("identity")


def _largest_bracket(q, N):
    return _pointwise(FormId.THM1_CLOSED, _IDENTITY, q, N).value


def _largest_ak(k, q, N):
    return complex(k)


def _smallest_bracket(q, N):
    return _pointwise(FormId.THM2_CLOSED, _IDENTITY, q, N).value


def _smallest_ak(k, q, N):
    S = _suffix_logs(q, N)
    with np.errstate(over="ignore", invalid="ignore"):
        tail = np.sum(np.exp(-S[k + 1 : N + 1]) - 1)
    return complex(k - tail)


def _distinct_count(lam: Partition) -> int:
    return len(set(lam.parts))


for _pf in (
    PartitionFunction("one", lambda lam: 1, False, _one_bracket, _one_ak),
    PartitionFunction("length", lambda lam: lam.length, False, _length_bracket, _length_ak),
    PartitionFunction("size", lambda lam: lam.size, False, _size_bracket, _size_ak),
    PartitionFunction("smallest", lambda lam: lam.smallest, False, _smallest_bracket, _smallest_ak),
    PartitionFunction("largest", lambda lam: lam.largest, False, _largest_bracket, _largest_ak),
    PartitionFunction("mu_p", mu_p, True, _mu_bracket, _mu_ak),
    PartitionFunction("distinct_parts", _distinct_count, False, _distinct_bracket, _distinct_ak),
):
    register(_pf)


def by_largest_part(f: ArithmeticFunction) -> PartitionFunction:
    """a(lambda) = f(lg(lambda)); then A_k(q) = f(k) and <a>_q is the thm1 closed form of f."""

    def ev(lam):
        return f(lam.largest) if lam.parts else 0

    return PartitionFunction(
        f"largest_part[{f.name}]",
        ev,
        False,
        lambda q, N: _pointwise(FormId.THM1_CLOSED, f, q, N).value,
        lambda k, q, N: complex(float(f(k))),
    )


# -- series -------------------------------------------------------------------


def _guard(N: int, guard: int) -> None:
    if N > guard:
        raise OrderGuardError(f"q-bracket enumeration to order {N} exceeds the guard {guard}")


def a_n_series(a: PartitionFunction, n: int, N: int, strict: bool | None = False) -> TruncatedSeries:
    """A_n(q) truncated at order N.

    ``strict=False`` compares sm(lambda) >= n, ``True`` uses >, and ``None``
    follows the printed convention (strict exactly when a vanishes on
    repeated parts).  The empty partition never enters the bracketed sum for
    n >= 1 because sm(empty) = 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return TruncatedSeries.monomial(0, N, a(EMPTY))
    if strict is None:
        strict = a.vanishes_on_repeats
    c = [0] * (N + 1)
    c[0] = a(Partition((n,)))
    for lam in partitions_with_parts_at_least(N, n + 1 if strict else n):
        d = a(adjoin(lam, n)) - a(lam)
        if d:
            c[lam.size] += d
    return TruncatedSeries(c)


def _numerator(a: PartitionFunction, N: int) -> TruncatedSeries:
    c = [0] * (N + 1)
    for m in range(N + 1):
        c[m] = sum((a(lam) for lam in partitions_of(m)), 0)
    return TruncatedSeries(c)


def qbracket_series(a: PartitionFunction, N: int, method: str = "product",
                    guard: int = ENUMERATION_GUARD) -> TruncatedSeries:
    """Exact <a>_q to order N: numerator times (q;q)_oo, or divided by the partition series."""
    _guard(N, guard)
    num = _numerator(a, N)
    if method == "product":
        return num * poch_inf(1, N)
    if method == "ratio":
        return num * partition_gf(N).invert()
    raise ValueError(f"unknown method {method!r}; valid: product, ratio")


def thm3_rhs(a: PartitionFunction, N: int, strict: bool | None = False) -> TruncatedSeries:
    """(q;q)_oo sum_{n >= 0} A_n(q) q^n / (q;q)_n to order N."""
    acc = TruncatedSeries.zero(N)
    for n in range(N + 1):
        An = a_n_series(a, n, N - n, strict)
        term = An.div_poch(1, n)
        c = [0] * n + list(term.coeffs)
        acc = acc + TruncatedSeries(c[: N + 1])
    return acc * poch_inf(1, N)


def verify_thm3_identity(a: PartitionFunction, N: int, strict: bool | None = False,
                         guard: int = ENUMERATION_GUARD) -> IdentityReport:
    t0 = time.perf_counter()
    lhs = qbracket_series(a, N, guard=guard)
    rhs = thm3_rhs(a, N, strict)
    name = f"thm3[{a.name}]" if strict is False else f"thm3[{a.name},strict={strict}]"
    return compare(name, lhs, rhs, N, t0)


# -- limits -------------------------------------------------------------------


@dataclass
class QBracketLimit:
    name: str
    direct: LimitEstimate
    a_k: list[LimitEstimate]
    cesaro: list
    via_a: complex | float
    difference: float
    agree: bool
    note: str | None = None

    def to_dict(self) -> dict:
        return {
            "a": self.name,
            "direct": self.direct.to_dict(),
            "a_k": [e.value for e in self.a_k],
            "a_k_errors": [e.error_estimate for e in self.a_k],
            "cesaro": list(self.cesaro),
            "via_a": self.via_a,
            "difference": self.difference,
            "agree": self.agree,
            "note": self.note,
        }


def _estimate(raw, tails, path, method, settings, tolerance) -> LimitEstimate:
    from .limits.engine import _finish

    return _finish(list(raw), list(tails), path, method, settings, tolerance)


def qbracket_limit(a: PartitionFunction, settings: LimitSettings | None = None,
                   guard: int = ENUMERATION_GUARD) -> QBracketLimit:
    """Estimate lim <a>_q directly and through the Cesàro means of A_k = lim A_k(q).

    Statistics without point evaluators use enumerated series, so their
    paths must satisfy the adequacy rule with N <= guard.  Agreement is
    reported, not assumed: the two limits can differ when A_k(q) -> A_k is
    not uniform in k.
    """
    settings = settings or LimitSettings()
    path = settings.path()
    if len(path) == 0:
        raise ValueError("the path has no points")
    N = settings.N or order_for_path(path)
    for j, q in enumerate(path.points):
        check_adequacy(q, N, j)
    method = resolve_method(settings.accel, "qbracket")
    depth = settings.cesaro_depth or DEFAULT_DEPTH
    r = [abs(q) for q in path.points]
    tails = [x ** (N + 1) / (1 - x) for x in r]
    common = {"a": a.name, "N": N, **path.settings()}

    if a.bracket_at is not None:
        direct_raw = [a.bracket_at(q, N) for q in path.points]
    else:
        S = qbracket_series(a, N, guard=guard).to_float()
        direct_raw = [eval_at(S, q).value for q in path.points]
    direct = _estimate(direct_raw, tails, path, method, {**common, "quantity": "bracket"},
                       settings.tolerance)

    a_k = []
    for k in range(1, depth + 1):
        if a.a_k_at is not None:
            raw = [a.a_k_at(k, q, N) for q in path.points]
        else:
            _guard(N, guard)
            S = a_n_series(a, k, N).to_float()
            raw = [eval_at(S, q).value for q in path.points]
        a_k.append(_estimate(raw, tails, path, method, {**common, "quantity": f"A_{k}"},
                             settings.tolerance))
    running, cesaro = 0, []
    for i, e in enumerate(a_k, start=1):
        running += e.value
        cesaro.append(running / i)
    via_a = cesaro[-1]
    diff = abs(direct.value - via_a)
    allowance = max(settings.tolerance, 2 * max(direct.error_estimate, a_k[-1].error_estimate))
    settled = direct.warning is None and a_k[-1].warning is None
    agree = bool(settled and math.isfinite(diff) and math.isfinite(allowance) and diff <= allowance)
    note = None
    if not agree:
        note = (
            f"direct limit {direct.value!r} and Cesàro limit of A_k {via_a!r} differ by {diff:.3g}; "
            "the limits A_k(q) -> A_k need not be uniform in k"
        )
        if not settled:
            note += "; at least one sequence has not settled (see warnings)"
    return QBracketLimit(a.name, direct, a_k, cesaro, via_a, float(diff), agree, note)
