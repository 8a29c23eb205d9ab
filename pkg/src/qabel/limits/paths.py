"""Paths q_j = 1 - delta_j e^{i theta} into q = 1 inside a Stolz sector."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from ..errors import SectorError

DEFAULT_DELTA0 = 0.2
DEFAULT_RATIO = 0.5
DEFAULT_POINTS = 8
DEFAULT_M = 2.0


def sector_ratio(q: complex) -> float:
    """|1 - q| / (1 - |q|); both sides computed the same way so a radial q gives exactly 1."""
    r = abs(q)
    if r >= 1:
        return math.inf
    return abs(1 - q) / (1 - r)


@dataclass(frozen=True)
class StolzPath:
    M: float
    theta: float
    delta0: float
    ratio: float
    points: tuple[complex, ...]

    @property
    def deltas(self) -> tuple[float, ...]:
        return tuple(self.delta0 * self.ratio**j for j in range(len(self.points)))

    def __len__(self) -> int:
        return len(self.points)

    def gaps(self) -> tuple[float, ...]:
        """1 - |q_j| for each point."""
        return tuple(1 - abs(q) for q in self.points)

    def ratios(self) -> tuple[float, ...]:
        return tuple(sector_ratio(q) for q in self.points)

    def settings(self) -> dict:
        return {
            "M": self.M,
            "theta": self.theta,
            "delta0": self.delta0,
            "ratio": self.ratio,
            "points": len(self.points),
        }


def stolz_points(M: float = DEFAULT_M, theta: float = 0.0, count: int = DEFAULT_POINTS,
                 ratio: float = DEFAULT_RATIO, delta0: float = DEFAULT_DELTA0) -> StolzPath:
    """Geometric path q_j = 1 - delta0 r^j e^{i theta}, j = 0..count-1, checked point by point."""
    if not M >= 1:
        raise SectorError(f"sector constant M must be >= 1, got {M}")
    if not abs(theta) < math.pi / 2:
        raise SectorError(f"need |theta| < pi/2, got {theta}")
    if not 0 < ratio < 1:
        raise SectorError(f"ratio must lie in (0, 1), got {ratio}")
    if not delta0 > 0:
        raise SectorError(f"delta0 must be positive, got {delta0}")
    if count < 0:
        raise SectorError("count must be nonnegative")
    rot = cmath.exp(1j * theta) if theta else 1.0
    pts = []
    for j in range(count):
        d = delta0 * ratio**j
        q = complex(1 - d * rot) if theta else complex(1 - d, 0.0)
        if abs(q) >= 1:
            raise SectorError(f"point j={j} (q={q}) is not inside the unit disk")
        s = sector_ratio(q)
        if s > M:
            raise SectorError(
                f"point j={j} (q={q}) has |1-q|/(1-|q|) = {s:.6g} > M = {M}; "
                f"theta={theta} is too steep for this sector"
            )
        pts.append(q)
    return StolzPath(float(M), float(theta), float(delta0), float(ratio), tuple(pts))
