"""Numerical q -> 1 limits: Stolz paths, point evaluation, acceleration, continued fractions."""

from .accel import METHODS, accelerate, richardson, wynn_epsilon, wynn_rho
from .contfrac import ContinuedFraction, cf_from_terms, euler_cf_transform, evaluate_convergents, partial_sums
from .engine import (
    LAMBERT,
    LimitEstimate,
    LimitSettings,
    cesaro_average,
    estimate_limit,
    lambert_ratio_limit,
    limit_form_names,
    order_for_path,
    resolve_method,
    run,
)
from .evaluate import ADEQUACY, PointValue, closed_form_terms, eval_at, evaluate_form, minimal_order
from .paths import StolzPath, sector_ratio, stolz_points

__all__ = [
    "ADEQUACY",
    "ContinuedFraction",
    "LAMBERT",
    "LimitEstimate",
    "LimitSettings",
    "METHODS",
    "PointValue",
    "StolzPath",
    "accelerate",
    "cesaro_average",
    "cf_from_terms",
    "closed_form_terms",
    "estimate_limit",
    "eval_at",
    "euler_cf_transform",
    "evaluate_convergents",
    "evaluate_form",
    "lambert_ratio_limit",
    "limit_form_names",
    "minimal_order",
    "order_for_path",
    "partial_sums",
    "resolve_method",
    "richardson",
    "run",
    "sector_ratio",
    "stolz_points",
    "wynn_epsilon",
    "wynn_rho",
]
