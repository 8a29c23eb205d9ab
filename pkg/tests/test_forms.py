import random
from fractions import Fraction

import numpy as np
import pytest

from qabel.arith import builtin_names, get_function, tabulated
from qabel.errors import OrderGuardError, TabulationError
from qabel.forms import (
    FormId,
    build,
    cor1_partition_conjugate,
    cor2_5_double_unnormalized,
    qasymp_reference,
)
from qabel.series import FLOAT, TruncatedSeries, poch_inf

N = 30


def _functions():
    names = [n for n in builtin_names() if n != "residue_R_M"] + ["residue_1_3", "residue_2_5"]
    fs = [get_function(n) for n in names]
    rng = random.Random(1234)
    for i in range(3):
        vals = [Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for _ in range(N)]
        fs.append(tabulated(f"random{i}", vals))
    return fs


FUNCTIONS = _functions()
ids = [f.name for f in FUNCTIONS]

CHAIN5 = [FormId.COR1_5_DOUBLE, FormId.COR1_PARTITION, FormId.COR1_CLOSED, FormId.THM1_CLOSED,
          FormId.THM1_PARTITION]
CHAIN8 = [FormId.THM2_PARTITION, FormId.THM2_CLOSED, FormId.COR2_5_SINGLE, FormId.COR2_PARTITION]


@pytest.mark.parametrize("f", FUNCTIONS, ids=ids)
def test_thm1_chain(f):
    first = build(CHAIN5[0], f, N)
    for form in CHAIN5[1:]:
        assert build(form, f, N) == first, form


@pytest.mark.parametrize("f", FUNCTIONS, ids=ids)
def test_thm2_chain_and_double_sum(f):
    first = build(CHAIN8[0], f, N)
    for form in CHAIN8[1:] + [FormId.COR2_5_DOUBLE]:
        assert build(form, f, N) == first, form


@pytest.mark.parametrize("f", FUNCTIONS[:5], ids=ids[:5])
def test_conjugation_consistency(f):
    assert cor1_partition_conjugate(f, 20) == build(FormId.COR1_PARTITION, f, 20)


def test_const_one():
    # f(0) = 0, so the empty partition drops out: 1 - (q;q)_oo, which tends to 1
    one = get_function("one")
    want = TruncatedSeries.one(N) - poch_inf(1, N)
    assert build(FormId.THM1_PARTITION, one, N) == want
    assert build(FormId.THM1_CLOSED, one, N) == want
    assert list(build(FormId.FROBENIUS, one, 10).coeffs) == [0, 1] + [0] * 9


def test_single_term_function():
    delta = tabulated("delta1", [1] + [0] * 14)
    geom = TruncatedSeries([0] + [1] * 15)
    assert build(FormId.THM1_CLOSED, delta, 15) == poch_inf(1, 15) * geom


def test_unnormalised_double_sum_is_not_the_single_sum():
    # The double sum without the (q;q)_oo factor is thm2_closed / (q;q)_oo.
    f = get_function("odd_indicator")
    raw = cor2_5_double_unnormalized(f, 20)
    single = build(FormId.COR2_5_SINGLE, f, 20)
    assert raw != single
    assert raw * poch_inf(1, 20) == single


def test_examples():
    assert list(build(FormId.LAMBERT_DEN, None, 6).coeffs[1:]) == [1, 2, 2, 3, 2, 4]
    assert list(qasymp_reference(get_function("mobius"), 6).coeffs) == [0, 1, -1, -1, 0, -1, 1]
    assert qasymp_reference(get_function("one"), 5).coeffs == (0, 1, 1, 1, 1, 1)


def test_guard_and_tabulation():
    with pytest.raises(OrderGuardError):
        build(FormId.THM1_PARTITION, get_function("one"), 61)
    build(FormId.THM1_PARTITION, get_function("one"), 61, guard=61)
    with pytest.raises(TabulationError):
        build(FormId.THM1_CLOSED, tabulated("short", [1, 2]), 5)
    with pytest.raises(KeyError, match="valid"):
        build("nosuch", get_function("one"), 5)
    with pytest.raises(ValueError):
        build(FormId.THM1_CLOSED, None, 5)


FLOAT_CHECK = [get_function(n) for n in ("one", "even_indicator", "phi_ratio", "mobius")]


@pytest.mark.parametrize("form", [f for f in FormId if f is not FormId.LAMBERT_DEN])
@pytest.mark.parametrize("f", FLOAT_CHECK, ids=[f.name for f in FLOAT_CHECK])
def test_float_backend_matches_exact(form, f):
    order = 40 if form.is_partition_sum else 200
    exact = np.array([float(c) for c in build(form, f, order).coeffs])
    approx = build(form, f, order, FLOAT).coeffs
    scale = max(1.0, float(np.max(np.abs(exact))))
    assert float(np.max(np.abs(exact - approx))) / scale <= 1e-12
