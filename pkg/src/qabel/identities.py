"""Coefficientwise verification of the q-series identities, exact backend only."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .arith import ArithmeticFunction
from .errors import BackendMismatchError
from .forms import FormId, build
from .series import EXACT, TruncatedSeries, poch_inf

CHAINS: dict[str, tuple[FormId, ...]] = {
    "eq5": (
        FormId.COR1_5_DOUBLE,
        FormId.COR1_PARTITION,
        FormId.COR1_CLOSED,
        FormId.THM1_CLOSED,
        FormId.THM1_PARTITION,
    ),
    "eq8": (
        FormId.THM2_PARTITION,
        FormId.THM2_CLOSED,
        FormId.COR2_5_SINGLE,
        FormId.COR2_PARTITION,
    ),
    "cor2_5": (FormId.COR2_5_SINGLE, FormId.COR2_5_DOUBLE),
}

QBINOMIAL_RANGE = range(1, 6)
DEFAULT_ORDER = 30


@dataclass
class IdentityReport:
    identity_name: str
    order_checked: int
    status: str
    first_mismatch: dict | None = None
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        if (self.status == "pass") != (self.first_mismatch is None):
            raise ValueError("status must be 'pass' exactly when there is no mismatch")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "identity": self.identity_name,
            "order": self.order_checked,
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            "ms": int(round(self.elapsed * 1000)) if timing else 0,
        }


def compare(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries, N: int, started: float,
            lhs_form: str | None = None, rhs_form: str | None = None) -> IdentityReport:
    """Exact coefficientwise comparison of two series mod q^(N+1)."""
    if lhs.backend != EXACT or rhs.backend != EXACT:
        raise BackendMismatchError("identity verification is exact-only")
    mm = lhs.truncate(N).first_mismatch(rhs.truncate(N))
    if mm is None:
        return IdentityReport(name, N, "pass", None, time.perf_counter() - started)
    k, a, b = mm
    info = {"exponent": k, "lhs": str(a), "rhs": str(b)}
    if lhs_form is not None:
        info["lhs_form"] = lhs_form
        info["rhs_form"] = rhs_form
    return IdentityReport(name, N, "fail", info, time.perf_counter() - started)


def euler_lhs(N: int, drop: tuple[int, ...] = ()) -> TruncatedSeries:
    """sum_{k >= 1} (-1)^k q^{k(k+1)/2} / (q;q)_k, optionally dropping some k."""
    acc = [0] * (N + 1)
    r = TruncatedSeries.one(N)
    k = 1
    while k * (k + 1) // 2 <= N:
        r = r.div_poch(k, k)
        if k not in drop:
            e0 = k * (k + 1) // 2
            sign = -1 if k % 2 else 1
            for i in range(N + 1 - e0):
                if r[i]:
                    acc[e0 + i] += sign * r[i]
        k += 1
    return TruncatedSeries(acc)


def verify_euler_identity(N: int, drop: tuple[int, ...] = ()) -> IdentityReport:
    """sum_{k>=1} (-1)^k q^{k(k+1)/2}/(q;q)_k = (q;q)_oo - 1.

    ``drop`` removes terms from the left side; it exists so the test suite
    can show that the comparator really fails on a broken identity.
    """
    if N < 0:
        raise ValueError("order must be nonnegative")
    t0 = time.perf_counter()
    lhs = euler_lhs(N, drop)
    rhs = poch_inf(1, N) - 1
    name = "euler" if not drop else "euler[drop=" + ",".join(map(str, drop)) + "]"
    return compare(name, lhs, rhs, N, t0)


def verify_qbinomial(n: int, N: int) -> IdentityReport:
    """sum_{k>=0} q^{nk}/(q;q)_k = 1/(q^n;q)_oo."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    t0 = time.perf_counter()
    acc = [0] * (N + 1)
    r = TruncatedSeries.one(N)
    k = 0
    while n * k <= N:
        if k:
            r = r.div_poch(k, k)
        e0 = n * k
        for i in range(N + 1 - e0):
            if r[i]:
                acc[e0 + i] += r[i]
        k += 1
    lhs = TruncatedSeries(acc)
    rhs = TruncatedSeries.one(N).div_poch(n, N)
    return compare(f"qbinomial[n={n}]", lhs, rhs, N, t0)


def verify_chain(chain: str, f: ArithmeticFunction, N: int) -> IdentityReport:
    """All forms of a chain agree with its first form, coefficientwise."""
    if chain not in CHAINS:
        raise KeyError(f"unknown chain {chain!r}; valid: {', '.join(CHAINS)}")
    t0 = time.perf_counter()
    forms = CHAINS[chain]
    name = f"chain_{chain}[{f.name}]"
    first = build(forms[0], f, N)
    for other in forms[1:]:
        rep = compare(name, first, build(other, f, N), N, t0, forms[0].value, other.value)
        if not rep.passed:
            return rep
    return IdentityReport(name, N, "pass", None, time.perf_counter() - t0)


def identity_names() -> list[str]:
    return ["euler", "qbinomial", *(f"chain_{c}" for c in CHAINS), "thm3"]


def verify_all(N: int = DEFAULT_ORDER, functions=(), partition_functions=None,
               backend: str = EXACT) -> list[IdentityReport]:
    """Every identity for every function; reports sorted by identity name.

    ``partition_functions`` defaults to the registered q-bracket statistics.
    """
    if backend != EXACT:
        raise BackendMismatchError("identity verification is exact-only; use --backend exact")
    from . import qbracket

    if partition_functions is None:
        partition_functions = qbracket.registered()
    reports = [verify_euler_identity(N)]
    reports += [verify_qbinomial(n, N) for n in QBINOMIAL_RANGE]
    for f in functions:
        for chain in CHAINS:
            reports.append(verify_chain(chain, f, N))
    for a in partition_functions:
        reports.append(qbracket.verify_thm3_identity(a, N))
    return sorted(reports, key=lambda r: r.identity_name)
