"""Limit estimation along Stolz paths."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..arith import ArithmeticFunction
from ..errors import AdequacyError
from ..forms import FormId, form_id
from .accel import METHODS, accelerate
from .evaluate import DOUBLE_BITS, PointValue, check_adequacy, evaluate_form, minimal_order
from .paths import DEFAULT_DELTA0, DEFAULT_M, DEFAULT_POINTS, DEFAULT_RATIO, StolzPath, stolz_points

LAMBERT = "lambert"
DENOMINATOR_FLOOR = 1e-12
DEFAULT_TOLERANCE = 1e-3

# Forms whose path values approach L like c / log(1/delta) rather than
# like a power of delta.
LOGARITHMIC_FORMS = frozenset({LAMBERT})


def limit_form_names() -> list[str]:
    return [f.value for f in FormId] + [LAMBERT]


def resolve_method(accel: str, form: str) -> str:
    """``wynn`` picks epsilon for power-law convergence and rho for the Lambert ratio."""
    if accel == "wynn":
        return "wynn_rho" if form in LOGARITHMIC_FORMS else "wynn_epsilon"
    if accel not in METHODS:
        raise ValueError(f"unknown acceleration {accel!r}; valid: wynn, {', '.join(METHODS)}")
    return accel


@dataclass
class LimitSettings:
    form: str = FormId.THM1_CLOSED.value
    N: int | None = None
    M: float = DEFAULT_M
    theta: float = 0.0
    delta0: float = DEFAULT_DELTA0
    ratio: float = DEFAULT_RATIO
    points: int = DEFAULT_POINTS
    accel: str = "wynn"
    precision: int = DOUBLE_BITS
    cesaro_depth: int | None = None
    tolerance: float = DEFAULT_TOLERANCE

    def path(self) -> StolzPath:
        return stolz_points(self.M, self.theta, self.points, self.ratio, self.delta0)


@dataclass
class LimitEstimate:
    value: complex | float
    raw_values: list
    accelerated_values: list
    method: str
    tail_bounds: list
    error_estimate: float
    settings: dict = field(default_factory=dict)
    warning: str | None = None
    cesaro_reference: float | None = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "raw_values": list(self.raw_values),
            "accelerated_values": list(self.accelerated_values),
            "tail_bounds": list(self.tail_bounds),
            "method": self.method,
            "error_estimate": self.error_estimate,
            "warning": self.warning,
            "cesaro_reference": self.cesaro_reference,
            "settings": dict(self.settings),
        }


def _realify(vals: list) -> list:
    if all(isinstance(v, complex) and v.imag == 0 for v in vals):
        return [v.real for v in vals]
    return vals


def order_for_path(path: StolzPath) -> int:
    """Smallest order satisfying the adequacy rule at every point."""
    if not path.points:
        return 0
    return max(minimal_order(g) for g in path.gaps())


def _prepare(path: StolzPath, N: int | None) -> int:
    if len(path) == 0:
        raise ValueError("the path has no points")
    if N is None:
        N = order_for_path(path)
    for j, q in enumerate(path.points):
        check_adequacy(q, N, j)
    return N


def _finish(raw: list, tails: list, path: StolzPath, method: str, settings: dict,
            tolerance: float) -> LimitEstimate:
    raw = _realify(raw)
    acc = _realify([complex(v) for v in accelerate(raw, method, path.deltas, path.ratio)])
    last = acc[-1]
    spread = abs(acc[-1] - acc[-2]) if len(acc) > 1 else math.inf
    warning = None
    if not spread <= tolerance:
        warning = (
            f"accelerated values have not settled: last difference {spread:.3g} "
            f"exceeds tolerance {tolerance:g}; the average may not converge"
        )
    elif len(raw) > 2:
        d1, d2 = abs(raw[-2] - raw[-3]), abs(raw[-1] - raw[-2])
        if not (d2 <= d1 or d2 <= tolerance):
            warning = (
                f"raw values are moving apart (last steps {d1:.3g}, {d2:.3g}); "
                "the accelerated value may be an antilimit of a divergent sequence"
            )
    return LimitEstimate(
        value=last,
        raw_values=raw,
        accelerated_values=acc,
        method=method,
        tail_bounds=list(tails),
        error_estimate=spread + tails[-1],
        settings=settings,
        warning=warning,
    )


def estimate_limit(form, f: ArithmeticFunction | None, path: StolzPath, N: int | None = None,
                   accel: str = "wynn", precision: int = DOUBLE_BITS,
                   tolerance: float = DEFAULT_TOLERANCE) -> LimitEstimate:
    """Estimate lim_{q -> 1} of a form along ``path``.

    ``N`` defaults to the smallest order meeting the adequacy rule at the
    closest point.  ``form`` may also be ``"lambert"`` for the ratio of the
    two Lambert series.
    """
    if str(form) == LAMBERT:
        return lambert_ratio_limit(f, path, N, accel, precision, tolerance)
    form = form_id(form)
    method = resolve_method(accel, form.value)
    N = _prepare(path, N)
    vals: list[PointValue] = [
        evaluate_form(form, f, q, N, precision, index=j) for j, q in enumerate(path.points)
    ]
    settings = {
        "form": form.value,
        "function": f.name if f is not None else None,
        "N": N,
        "precision": precision,
        **path.settings(),
    }
    return _finish([v.value for v in vals], [v.tail for v in vals], path, method, settings, tolerance)


def lambert_ratio_limit(f: ArithmeticFunction, path: StolzPath, N: int | None = None,
                        accel: str = "wynn", precision: int = DOUBLE_BITS,
                        tolerance: float = DEFAULT_TOLERANCE) -> LimitEstimate:
    """sum f(n) q^n/(1-q^n) divided by sum q^n/(1-q^n), along the path."""
    method = resolve_method(accel, LAMBERT)
    N = _prepare(path, N)
    raw, tails = [], []
    for j, q in enumerate(path.points):
        num = evaluate_form(FormId.LAMBERT_NUM, f, q, N, precision, index=j)
        den = evaluate_form(FormId.LAMBERT_DEN, None, q, N, precision, index=j)
        if abs(den.value) < DENOMINATOR_FLOOR:
            raise AdequacyError(f"point j={j}: Lambert denominator {abs(den.value):.3g} is below {DENOMINATOR_FLOOR:g}")
        r = num.value / den.value
        raw.append(r)
        tails.append((num.tail + abs(r) * den.tail) / abs(den.value))
    settings = {
        "form": LAMBERT,
        "function": f.name,
        "N": N,
        "precision": precision,
        **path.settings(),
    }
    return _finish(raw, tails, path, method, settings, tolerance)


def cesaro_average(f: ArithmeticFunction, depth: int) -> list[float]:
    """(1/n) sum_{k <= n} f(k) for n = 1..depth."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth == 0:
        return []
    vals = f.float_values(depth)[1:]
    sums = np.cumsum(vals)
    return [float(s / n) for n, s in enumerate(sums, start=1)]


def run(settings: LimitSettings, f: ArithmeticFunction | None) -> LimitEstimate:
    """estimate_limit driven by a settings record, with optional Cesàro reference."""
    est = estimate_limit(settings.form, f, settings.path(), settings.N, settings.accel,
                         settings.precision, settings.tolerance)
    if settings.cesaro_depth:
        est.cesaro_reference = cesaro_average(f, settings.cesaro_depth)[-1]
    return est
