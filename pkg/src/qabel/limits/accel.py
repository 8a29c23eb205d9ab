"""Sequence acceleration on path-value sequences.

Each method maps raw values s_0..s_{n-1} to a sequence of the same length
whose i-th entry uses only s_0..s_i; the last entry is the estimate.
"""

from __future__ import annotations

import math

METHODS = ("none", "richardson", "wynn_epsilon", "wynn_rho")


def _diff_ok(d) -> bool:
    return d != 0 and math.isfinite(abs(d))


def _triangle(seq, step):
    """Generic epsilon/rho lozenge table.

    ``step(k, n, lower_left, upper, diff)`` gives column k at row n from
    column k-2 at row n+1 and the difference of column k-1 entries.
    Returns cols[k][n], with None where a division broke down.
    """
    n = len(seq)
    cols = [[0.0] * (n + 1), list(seq)]  # column -1 and column 0
    for k in range(1, n):
        prev2, prev = cols[-2], cols[-1]
        cur = []
        for i in range(n - k):
            a, b = prev[i], prev[i + 1]
            if a is None or b is None or prev2[i + 1] is None or not _diff_ok(b - a):
                cur.append(None)
            else:
                cur.append(step(k, i, prev2[i + 1], b - a))
        cols.append(cur)
    return cols[1:]  # cols[k][i] is column k at row i


def _even_estimates(cols, i):
    """Candidates (column k, value, last-difference) available after s_0..s_i."""
    out = []
    for k in range(0, i + 1, 2):
        row = i - k
        col = cols[k]
        if row < len(col) and col[row] is not None:
            prev = col[row - 1] if row >= 1 else None
            d = abs(col[row] - prev) if prev is not None else math.inf
            out.append((k, col[row], d))
    return out


def wynn_epsilon(seq) -> list:
    """Wynn epsilon: highest available even column at each prefix."""
    seq = list(seq)
    if not seq:
        return []
    cols = _triangle(seq, lambda k, i, left, d: left + 1 / d)
    out = []
    for i in range(len(seq)):
        cands = _even_estimates(cols, i)
        out.append(cands[-1][1])
    return out


def wynn_rho(seq, x) -> list:
    """Wynn rho with abscissae x_j, for logarithmically converging sequences.

    Among the even columns the entry whose last two values differ least is
    taken; the highest column is often worse on short, noisy sequences.
    """
    seq = list(seq)
    x = list(x)
    if len(x) != len(seq):
        raise ValueError("need one abscissa per sequence value")
    if not seq:
        return []
    cols = _triangle(seq, lambda k, i, left, d: left + (x[i + k] - x[i]) / d)
    out = []
    for i in range(len(seq)):
        cands = [c for c in _even_estimates(cols, i) if c[0] > 0] or _even_estimates(cols, i)
        best = min(cands, key=lambda c: (c[2], -c[0]))
        out.append(best[1])
    return out


def richardson(seq, ratio: float, power: int = 1) -> list:
    """Richardson extrapolation for errors in powers of delta, delta_j = delta_0 r^j.

    Level m removes the delta^(power + m - 1) term.
    """
    seq = list(seq)
    out = []
    table: list[list] = []
    for i, s in enumerate(seq):
        row = [s]
        for m in range(1, i + 1):
            c = ratio ** (power + m - 1)
            row.append((row[m - 1] - c * table[i - 1][m - 1]) / (1 - c))
        table.append(row)
        out.append(row[-1])
    return out


def accelerate(seq, method: str, deltas=None, ratio: float | None = None) -> list:
    if method == "none":
        return list(seq)
    if method == "wynn_epsilon":
        return wynn_epsilon(seq)
    if method == "wynn_rho":
        if deltas is None:
            raise ValueError("wynn_rho needs the path deltas")
        return wynn_rho(seq, [math.log(1 / d) for d in deltas])
    if method == "richardson":
        if ratio is None:
            raise ValueError("richardson needs the geometric ratio of the path")
        return richardson(seq, ratio)
    raise ValueError(f"unknown acceleration {method!r}; valid: {', '.join(METHODS)}")
