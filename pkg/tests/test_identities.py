import pytest

from qabel.arith import get_function, tabulated
from qabel.errors import BackendMismatchError
from qabel.identities import (
    IdentityReport,
    euler_lhs,
    verify_all,
    verify_chain,
    verify_euler_identity,
    verify_qbinomial,
)
from qabel.series import TruncatedSeries


def test_euler_small_and_default():
    assert euler_lhs(1) == TruncatedSeries([0, -1])
    assert verify_euler_identity(1).passed
    assert verify_euler_identity(40).passed


def test_perturbed_euler_fails_at_q_cubed():
    rep = verify_euler_identity(5, drop=(2,))
    assert rep.status == "fail"
    assert rep.first_mismatch["exponent"] == 3


@pytest.mark.parametrize("n, N", [(1, 20), (2, 30), (7, 5), (3, 0)])
def test_qbinomial(n, N):
    assert verify_qbinomial(n, N).passed


def test_chains():
    assert verify_chain("eq5", get_function("one"), 30).passed
    assert verify_chain("eq8", get_function("residue_1_3"), 30).passed
    assert verify_chain("eq5", tabulated("delta1", [1] + [0] * 9), 10).passed
    with pytest.raises(KeyError):
        verify_chain("nosuch", get_function("one"), 5)


def test_report_invariant():
    with pytest.raises(ValueError):
        IdentityReport("x", 3, "pass", {"exponent": 1, "lhs": "0", "rhs": "1"})
    with pytest.raises(ValueError):
        IdentityReport("x", 3, "fail", None)


def test_verify_all():
    reps = verify_all(30, [get_function("one"), get_function("mobius")])
    assert all(r.passed for r in reps)
    names = [r.identity_name for r in reps]
    assert names == sorted(names)
    assert any(n.startswith("thm3[mu_p]") for n in names)


def test_verify_all_edge_cases():
    assert all(r.passed for r in verify_all(0, [get_function("phi_ratio")]))
    only_f_free = verify_all(10, [], partition_functions=[])
    assert {r.identity_name.split("[")[0] for r in only_f_free} == {"euler", "qbinomial"}
    with pytest.raises(BackendMismatchError):
        verify_all(10, [], backend="float")


def test_reports_are_reproducible():
    a = [r.to_dict(timing=False) for r in verify_all(12, [get_function("liouville")])]
    b = [r.to_dict(timing=False) for r in verify_all(12, [get_function("liouville")])]
    assert a == b
