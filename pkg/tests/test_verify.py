import pytest

from src.algorithms import (
    algorithm2,
    conjecture_probe,
    dominance_poset,
    enumerate_types,
    verify_properties,
    verify_theorem1,
)
from src.errors import InputError
from src.lattices import gross_lattice, successive_minima


def test_theorem1_is_vacuous_below_286(types61):
    report = verify_theorem1(61, types61)
    assert report.passed
    assert report.checked == 0
    assert len(report.verdicts) == 4 * 3
    assert {v.status for v in report.verdicts} == {"vacuous-p"}


def test_dominance_is_antisymmetric_at_6p(types61):
    poset = dominance_poset(61, 6 * 61, types61)
    assert poset.antisymmetric
    assert all(poset.relation[i][i] for i in range(len(types61)))
    assert poset.to_dict()["bound"] == 366


def test_small_bound_report_only(types61):
    poset = dominance_poset(61, 20, types61)
    assert all(poset.relation[i][i] for i in range(len(types61)))
    assert conjecture_probe(61, 20, types61) == poset.strict


def test_dominance_bound_must_be_positive(types61):
    with pytest.raises(InputError):
        dominance_poset(61, 0, types61)


def test_properties_at_61(types61):
    match = algorithm2(61, types=types61)
    report = verify_properties(61, types61, match)
    assert report.passed, report.failures
    names = {r.name for r in report.results}
    assert {"det_gram", "hermite", "divisibility", "kaneko", "reconstruct", "multiplicity", "mass"} <= names


@pytest.mark.slow
def test_theorem1_at_311():
    report = verify_theorem1(311)
    assert report.passed
    assert report.checked > 0


@pytest.mark.slow
@pytest.mark.parametrize("p", [101, 199])
def test_properties_kaneko_primes(p):
    report = verify_properties(p)
    assert report.passed, report.failures


@pytest.mark.slow
def test_mu_range_covers_every_type_with_d1_at_least_8():
    types = enumerate_types(311)
    report = verify_properties(311, types)
    checked = {r.type_index for r in report.results if r.name == "mu_range"}
    wanted = {i for i, order in enumerate(types.orders) if successive_minima(gross_lattice(order)).D1 >= 8}
    assert checked == wanted
    assert len(wanted) > sum(1 for r in report.results if r.name == "small_pair")
    assert all(r.passed for r in report.results if r.name == "mu_range")
