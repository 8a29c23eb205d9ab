import pytest

from qabel.arith import get_function
from qabel.errors import OrderGuardError, RegistrationError
from qabel.limits import LimitSettings, eval_at
from qabel.partitions import mu_p
from qabel.qbracket import (
    PartitionFunction,
    a_n_series,
    by_largest_part,
    get_partition_function,
    qbracket_limit,
    qbracket_series,
    register,
    registered,
    registered_names,
    validate,
    verify_thm3_identity,
)
from qabel.series import TruncatedSeries, lambert_series, poch_inf

REGISTERED = registered()
names = [a.name for a in REGISTERED]


def test_registry_names():
    assert set(registered_names()) == {"one", "length", "size", "smallest", "largest", "mu_p", "distinct_parts"}
    with pytest.raises(KeyError, match="valid"):
        get_partition_function("nosuch")


def test_registration_rejects_false_flag():
    bad = PartitionFunction("length_claiming_vanishing", lambda lam: lam.length, True)
    with pytest.raises(RegistrationError):
        register(bad)
    validate(PartitionFunction("mu_copy", mu_p, True))
    with pytest.raises(RegistrationError):
        register(PartitionFunction("one", lambda lam: 1))


@pytest.mark.parametrize("a", REGISTERED, ids=names)
def test_two_computation_paths_agree(a):
    assert qbracket_series(a, 25) == qbracket_series(a, 25, "ratio")


@pytest.mark.parametrize("a", REGISTERED, ids=names)
def test_expansion_identity(a):
    assert verify_thm3_identity(a, 25).passed


def test_strict_comparison_breaks_the_expansion_for_mu_p():
    # With > in place of >= for a statistic vanishing on repeated parts the
    # expansion fails, so >= is the default.
    rep = verify_thm3_identity(get_partition_function("mu_p"), 12, strict=None)
    assert rep.status == "fail"


def test_bracket_examples():
    assert qbracket_series(get_partition_function("one"), 25) == TruncatedSeries.one(25)
    e = poch_inf(1, 25)
    assert qbracket_series(get_partition_function("mu_p"), 25) == e * e
    length = qbracket_series(get_partition_function("length"), 25)
    assert length == lambert_series(get_function("one"), 25)
    with pytest.raises(OrderGuardError):
        qbracket_series(get_partition_function("one"), 61)


def test_a_n_examples():
    one = get_partition_function("one")
    assert all(a_n_series(one, n, 10) == TruncatedSeries.one(10) for n in range(1, 6))
    assert a_n_series(get_partition_function("length"), 0, 5) == TruncatedSeries.zero(5)
    mu = get_partition_function("mu_p")
    # hand expansion over lambda in {(2), (3), (4), (2,2)} for the strict reading
    assert a_n_series(mu, 1, 4, strict=True) == TruncatedSeries([-1, 0, 2, 2, 2])
    # >= also admits (1), (2,1), (3,1) and the vanishing (1,1), (1,1,1), ...
    assert a_n_series(mu, 1, 4) == TruncatedSeries([-1, 1, 2, 1, 1])


@pytest.mark.parametrize("a", REGISTERED, ids=names)
@pytest.mark.parametrize("q", [0.2, 0.15 + 0.1j])
def test_point_evaluators_match_series(a, q):
    N = 30
    assert abs(eval_at(qbracket_series(a, N).to_float(), q).value - a.bracket_at(q, N)) < 1e-12
    for k in range(1, 6):
        series = a_n_series(a, k, N).to_float()
        assert abs(eval_at(series, q).value - a.a_k_at(k, q, N)) < 1e-12


def test_limit_for_one():
    res = qbracket_limit(get_partition_function("one"))
    assert abs(res.direct.value - 1) <= 1e-6
    assert abs(res.via_a - 1) <= 1e-6
    assert res.agree


def test_limit_for_mu_p_reports_disagreement():
    # <mu_P> = (q;q)_oo^2 -> 0 while A_k(q) -> 1 for every k
    res = qbracket_limit(get_partition_function("mu_p"))
    assert abs(res.direct.value) < 1e-12
    assert abs(res.via_a - 1) < 1e-9
    assert not res.agree
    assert "uniform" in res.note


def test_limit_for_largest_part_indicator():
    a = by_largest_part(get_function("even_indicator"))
    res = qbracket_limit(a, LimitSettings(cesaro_depth=40))
    assert abs(res.direct.value - 0.5) < 1e-6
    assert res.via_a == 0.5
    assert res.agree


def test_divergent_statistics_are_flagged():
    res = qbracket_limit(get_partition_function("distinct_parts"))
    assert res.direct.warning is not None
    assert not res.agree


def test_custom_statistic_without_evaluators_uses_series():
    a = PartitionFunction("parts_equal_to_one", lambda lam: lam.parts.count(1))
    res = qbracket_limit(a, LimitSettings(delta0=0.6, points=2, ratio=0.9, N=60, cesaro_depth=3))
    assert len(res.a_k) == 3
