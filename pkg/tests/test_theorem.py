import pytest

from model.family import FamilyError, enumerate_n4_dvdr, make_path
from model.graph6 import to_graph6
from model.sweep import sweep
from model.theorem import verify_family, verify_sweep

ALPHAS = [0.0, 0.25, 0.5, 0.75]


@pytest.mark.parametrize("n", range(3, 11))
def test_family_checks_pass(n):
    report = verify_family(n, ALPHAS)
    assert report.passed, report.failures
    names = {c.name for c in report.checks}
    assert names == {"tau_quadratic", "extremal_class", "equality_attained", "closed_form_mu", "equitable_quotient", "proof_claims"}
    assert report.sweep is None


def test_family_of_order_ten_lists_every_member():
    report = verify_family(10, [0.0])
    assert len(report.family) == 4
    assert sum(c.name == "equality_attained" for c in report.checks) == 4


def test_family_needs_three_vertices():
    with pytest.raises(FamilyError):
        verify_family(2, [0.0])


@pytest.mark.parametrize("n", [5, 6])
def test_exhaustive_sweep_confirms_the_family(n, atlas):
    swept = sweep(atlas(n), [0.0, 0.5])
    report = verify_sweep(verify_family(n, [0.0, 0.5]), swept)
    assert report.passed, report.failures
    assert report.sweep is swept
    assert report.to_dict()["sweep"]["n"] == n


def test_missing_family_member_is_reported():
    member = enumerate_n4_dvdr(8)[0]
    swept = sweep([to_graph6(member), to_graph6(make_path(8))], [0.0])
    report = verify_sweep(verify_family(8, [0.0]), swept)
    assert not report.passed
    assert [c.name for c in report.failures] == ["equality_set_is_family"]


def test_odd_order_without_an_equality_graph_fails():
    swept = sweep([to_graph6(make_path(7))], [0.0])
    report = verify_sweep(verify_family(7, [0.0]), swept)
    assert [c.name for c in report.failures] == ["equality_set_is_family", "argmin_in_equality_set"]
    assert report.to_dict()["passed"] is False
