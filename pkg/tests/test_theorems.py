import random

import pytest

from orthospace import fixtures as fx, operators, theorems
from orthospace.io import Instance
from orthospace.theorems import (OPERATOR_CHECKS, PRODUCT_CHECKS, examples_check, run_builtin, run_instance,
                                 run_operator_check, run_product_check)


def test_examples():
    assert examples_check() is None


def test_builtin_small_run():
    results = run_builtin(7, 15)
    assert [r.name for r in results] == ["examples", *PRODUCT_CHECKS, *OPERATOR_CHECKS]
    assert all(r.passed for r in results)


def test_builtin_is_reproducible():
    a = [r.to_json() for r in run_builtin(3, 10)]
    b = [r.to_json() for r in run_builtin(3, 10)]
    assert a == b


def test_zero_cases_vacuous():
    assert all(r.passed for r in run_builtin(7, 0))


def test_instance_run_on_fixture():
    results = run_instance(fx.fixture_instance("kaplan"), 7, 10)
    names = [r.name for r in results]
    assert "verify[kaplan]" in names and "steinberg[kaplan]" in names
    assert all(r.passed for r in results)


def test_instance_run_flags_corrupted_tensor():
    results = {r.name: r for r in run_instance(fx.fixture_instance("corrupted"), 7, 10)}
    assert not results["steinberg[corrupted]"].passed
    assert "asymmetric" in results["steinberg[corrupted]"].counterexample


def test_suites_catch_a_broken_classifier(monkeypatch):
    # a lattice-homomorphism test that allows two nonzero entries per row must be caught by the riesz suite
    def loose(t):
        m = t.matrix
        return all(sum(1 for x in m.row(i) if x) <= 2 for i in range(m.rows))
    monkeypatch.setattr(theorems, "check_riesz", lambda pL, pM, t: (loose(t), operators.check_riesz(pL, pM, t)[1]))
    r = run_operator_check("riesz", random.Random(1), 300)
    assert not r.passed and r.counterexample


def test_product_suite_catches_a_broken_neutral_part(monkeypatch):
    from orthospace.product import NeutralPart
    monkeypatch.setattr(theorems, "neutral_basis", lambda p: NeutralPart(()))
    r = run_product_check("key", random.Random(1), 100)
    assert not r.passed


@pytest.mark.parametrize("name", list(PRODUCT_CHECKS))
def test_each_product_check_on_lex_and_cw_fixtures(name):
    products = [fx.lex2(), fx.diag_product([1, 0, 2]), fx.euclidean(3)]
    r = run_product_check(name, random.Random(0), 20, products=products)
    assert r.passed


def test_instance_without_operators():
    assert all(r.passed for r in run_instance(Instance(products={"e": fx.euclidean(2)}), 7, 5))
