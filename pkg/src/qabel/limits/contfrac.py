"""Euler's continued fraction for a series given by its term ratios.

For s = t_0 + t_1 + ... with t_0 = r_0 and t_k = t_{k-1} r_k,

    s = r_0 / (1 - r_1 / (1 + r_1 - r_2 / (1 + r_2 - ...)))

so the elements are b_0 = 0, (a_1, b_1) = (r_0, 1) and
(a_{k+1}, b_{k+1}) = (-r_k, 1 + r_k).  The convergent of depth m equals the
partial sum t_0 + ... + t_m exactly; that identity is the test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class ContinuedFraction:
    b0: object
    a: tuple  # partial numerators a_1, a_2, ...
    b: tuple  # partial denominators b_1, b_2, ...
    truncated: bool = False
    stopped_at: int | None = None  # index of the zero ratio that stopped the transform

    @property
    def depth(self) -> int:
        """Number of ratios after the first; convergents exist for m = 0..depth."""
        return len(self.a) - 1


def euler_cf_transform(ratios) -> ContinuedFraction:
    """Continued-fraction elements for the series with term ratios r_0, r_1, ...

    A zero ratio ends the series; the fraction is cut there and flagged.
    """
    ratios = list(ratios)
    if not ratios:
        raise ValueError("need at least the first term")
    a, b = [], []
    zero = 0 * ratios[0]
    for k, r in enumerate(ratios):
        if r == 0:
            return ContinuedFraction(zero, tuple(a), tuple(b), True, k)
        if k == 0:
            a.append(r)
            b.append(1 + zero)
        else:
            a.append(-r)
            b.append(1 + r)
    return ContinuedFraction(zero, tuple(a), tuple(b))


def cf_from_terms(terms) -> ContinuedFraction:
    """Euler transform of the series with the given terms t_0, t_1, ..."""
    terms = list(terms)
    ratios = []
    for k, t in enumerate(terms):
        if k == 0:
            ratios.append(t)
        elif terms[k - 1] == 0:
            break
        else:
            ratios.append(t / terms[k - 1] if not isinstance(t, int) else Fraction(t, terms[k - 1]))
    return euler_cf_transform(ratios)


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def evaluate_convergents(cf: ContinuedFraction, count: int | None = None) -> list:
    """Convergents of depth m = 0..count-1 by the forward three-term recurrence.

    Exact elements (int or Fraction) give exact Fraction convergents; float
    or complex elements are rescaled each step to stay in range.
    """
    n = len(cf.a) if count is None else min(count, len(cf.a))
    exact = all(map(_is_exact, (cf.b0, *cf.a, *cf.b)))
    one = Fraction(1) if exact else 1.0
    p_prev, p = one, cf.b0 * one  # A_{-1}, A_0
    q_prev, q = 0 * one, one  # B_{-1}, B_0
    out = []
    for i in range(n):
        ai, bi = cf.a[i], cf.b[i]
        p_prev, p = p, bi * p + ai * p_prev
        q_prev, q = q, bi * q + ai * q_prev
        out.append(p / q)
        if not exact:
            s = abs(q) or 1.0
            p_prev, p, q_prev, q = p_prev / s, p / s, q_prev / s, q / s
    return out


def partial_sums(terms) -> list:
    out, acc = [], 0
    for t in terms:
        acc = acc + t
        out.append(acc)
    return out
