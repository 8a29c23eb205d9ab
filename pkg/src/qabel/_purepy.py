"""Pure Python / numpy implementations of the hot kernels.

Signatures match the compiled ``_kernels`` module exactly; ``qabel.kernels``
picks one of the two at import time.
"""

from __future__ import annotations

import numpy as np

HIST_KEYS = (
    "count",
    "by_largest",
    "by_smallest",
    "distinct_sign_by_largest",
    "distinct_sign_by_smallest",
    "length_sum",
    "distinct_sum",
)


def partition_histograms(N: int) -> dict[str, np.ndarray]:
    """Statistics of every partition of size <= N, by a single depth-first walk.

    2-D tables are indexed ``[size, k]``; ``k`` is the largest (resp.
    smallest) part, 0 for the empty partition.  The ``distinct_sign`` tables
    sum ``(-1)**length`` over partitions into distinct parts only.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    count = np.zeros(N + 1, dtype=np.int64)
    length_sum = np.zeros(N + 1, dtype=np.int64)
    distinct_sum = np.zeros(N + 1, dtype=np.int64)
    by_lg = np.zeros((N + 1, N + 1), dtype=np.int64)
    by_sm = np.zeros((N + 1, N + 1), dtype=np.int64)
    ds_lg = np.zeros((N + 1, N + 1), dtype=np.int64)
    ds_sm = np.zeros((N + 1, N + 1), dtype=np.int64)

    # python lists are much faster than numpy scalars for the inner updates
    c = [0] * (N + 1)
    ls = [0] * (N + 1)
    dsum = [0] * (N + 1)
    blg = [[0] * (N + 1) for _ in range(N + 1)]
    bsm = [[0] * (N + 1) for _ in range(N + 1)]
    dlg = [[0] * (N + 1) for _ in range(N + 1)]
    dsm = [[0] * (N + 1) for _ in range(N + 1)]

    c[0] = 1
    blg[0][0] = 1
    bsm[0][0] = 1
    dlg[0][0] = 1
    dsm[0][0] = 1

    # frame: (size, length, largest, last part, all distinct, #distinct sizes)
    stack = [(x, 1, x, x, True, 1) for x in range(N, 0, -1)]
    while stack:
        s, l, lg, p, distinct, nd = stack.pop()
        c[s] += 1
        ls[s] += l
        dsum[s] += nd
        blg[s][lg] += 1
        bsm[s][p] += 1
        if distinct:
            sg = -1 if l & 1 else 1
            dlg[s][lg] += sg
            dsm[s][p] += sg
        top = min(p, N - s)
        for x in range(top, 0, -1):
            if x < p:
                stack.append((s + x, l + 1, lg, x, distinct, nd + 1))
            else:
                stack.append((s + x, l + 1, lg, x, False, nd))

    count[:] = c
    length_sum[:] = ls
    distinct_sum[:] = dsum
    by_lg[:] = blg
    by_sm[:] = bsm
    ds_lg[:] = dlg
    ds_sm[:] = dsm
    return {
        "count": count,
        "by_largest": by_lg,
        "by_smallest": by_sm,
        "distinct_sign_by_largest": ds_lg,
        "distinct_sign_by_smallest": ds_sm,
        "length_sum": length_sum,
        "distinct_sum": distinct_sum,
    }


def mul_poch_range(c: np.ndarray, a: int, b: int) -> np.ndarray:
    """Return ``c * prod_{a <= k <= b} (1 - q^k)`` truncated to len(c)."""
    out = np.array(c, dtype=np.float64, copy=True)
    n = out.shape[0]
    for k in range(max(a, 1), min(b, n - 1) + 1):
        out[k:] -= out[: n - k].copy()
    return out


def div_poch_range(c: np.ndarray, a: int, b: int) -> np.ndarray:
    """Return ``c / prod_{a <= k <= b} (1 - q^k)`` truncated to len(c)."""
    out = np.array(c, dtype=np.float64, copy=True)
    n = out.shape[0]
    for k in range(max(a, 1), min(b, n - 1) + 1):
        # dividing by (1 - q^k) is a running sum along each residue class mod k
        rows = -(-n // k)
        pad = np.zeros(rows * k)
        pad[:n] = out
        out = np.cumsum(pad.reshape(rows, k), axis=0).reshape(-1)[:n]
    return out


def descending_product_sum(f: np.ndarray) -> np.ndarray:
    """Coefficients of ``sum_{n=1}^{N} f[n] q^n (q^{n+1}; q)_{N-n}`` mod q^{N+1}.

    Computed by the forward recurrence W <- (1 - q^m) W + f[m] q^m, which
    never forms the large partition-count series 1/(q;q)_n.
    """
    f = np.asarray(f, dtype=np.float64)
    N = f.shape[0] - 1
    w = np.zeros(N + 1)
    for m in range(1, N + 1):
        w[m:] -= w[: N + 1 - m].copy()
        w[m] += f[m]
    return w


def horner(c: np.ndarray, q: complex) -> complex:
    """Evaluate sum c[m] q^m."""
    acc = 0j
    for x in np.asarray(c, dtype=np.float64)[::-1]:
        acc = acc * q + x
    return complex(acc)
