from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qabel.arith import get_function
from qabel.errors import BackendMismatchError
from qabel.series import (
    EXACT,
    FLOAT,
    TruncatedSeries,
    lambert_series,
    partition_gf,
    poch_inf,
    poch_q,
    power_series,
)

N = 12
coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
series = st.lists(coeff, min_size=N + 1, max_size=N + 1).map(TruncatedSeries)


@settings(max_examples=60)
@given(series, series, series)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == TruncatedSeries.zero(N)
    assert a * TruncatedSeries.one(N) == a


@settings(max_examples=40)
@given(series)
def test_inverse(a):
    if a[0] == 0:
        with pytest.raises(ZeroDivisionError):
            a.invert()
    else:
        assert a * a.invert() == TruncatedSeries.one(N)


def test_pentagonal_number_theorem():
    e = poch_inf(1, 40)
    pent = {0: 1}
    for k in range(1, 6):
        for m in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            pent[m] = (-1) ** k
    assert list(e.coeffs) == [pent.get(m, 0) for m in range(41)]


def test_partition_numbers():
    assert list(partition_gf(10).coeffs) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert partition_gf(30) * poch_inf(1, 30) == TruncatedSeries.one(30)


def test_pochhammer_division_round_trip():
    s = power_series(get_function("phi_ratio"), 20)
    assert s.mul_poch(2, 7).div_poch(2, 7) == s
    assert poch_q(3, 5) == TruncatedSeries([1, -1, -1, 0, 1, 1])
    with pytest.raises(ValueError):
        poch_inf(0, 5)


def test_exact_coefficients_stay_exact():
    s = TruncatedSeries([Fraction(1, 2), 3])
    t = s * s
    assert t.coeffs == (Fraction(1, 4), 3)
    assert isinstance(t[1], int)
    with pytest.raises(TypeError):
        TruncatedSeries([0.5])


def test_backends_do_not_mix():
    a = TruncatedSeries.one(3)
    with pytest.raises(BackendMismatchError):
        a + a.to_float()
    with pytest.raises(BackendMismatchError):
        a.to_float().with_backend(EXACT)


def test_float_backend_matches_exact():
    f = get_function("mobius")
    e = lambert_series(f, 50) * partition_gf(50)
    x = lambert_series(f, 50, FLOAT) * partition_gf(50, FLOAT)
    np.testing.assert_allclose(x.coeffs, [float(c) for c in e.coeffs], rtol=1e-12)


def test_lambert_coefficients_are_divisor_sums():
    assert list(lambert_series(get_function("one"), 6).coeffs[1:]) == [1, 2, 2, 3, 2, 4]
    # sum_n mu(n) q^n/(1-q^n) = q
    assert list(lambert_series(get_function("mobius"), 20).coeffs) == [0, 1] + [0] * 19


def test_shift_substitute_truncate_and_mismatch():
    s = TruncatedSeries([1, 2, 3, 4])
    assert s.shift(2).coeffs == (0, 0, 1, 2)
    assert s.substitute_power(2).coeffs == (1, 0, 2, 0)
    assert s.truncate(1).coeffs == (1, 2)
    assert s.first_mismatch(TruncatedSeries([1, 2, 5, 4])) == (2, 3, 5)
    assert s.first_mismatch(s) is None
