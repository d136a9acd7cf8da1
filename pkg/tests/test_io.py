import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orthospace import fixtures as fx
from orthospace.io import InstanceError, dump_instance, load_instance, parse_instance

GOOD = {"products": {"p": {"domain": {"dim": 2}, "codomain": {"dim": 1},
                           "B": [[["1"], ["0"]], [["0"], ["1/2"]]]}},
        "operators": {"T": {"domain": {"dim": 2}, "codomain": {"dim": 1}, "matrix": [["1", "-3/4"]]}}}


def test_parse():
    inst = parse_instance(json.dumps(GOOD))
    assert inst.products["p"].tensor[1][1] == (Fraction(1, 2),)
    assert not inst.products["p"].verified
    assert inst.operators["T"].matrix.row(0) == (1, Fraction(-3, 4))


@pytest.mark.parametrize("name", fx.FIXTURE_NAMES)
def test_round_trip(name):
    text = dump_instance(fx.fixture_instance(name))
    assert dump_instance(parse_instance(text)) == text


@given(st.sampled_from(fx.FIXTURE_NAMES), st.integers(2, 6).filter(lambda n: n % 2 == 0))
def test_round_trip_sized(name, n):
    args = [] if name in ("lex2", "selfadjoint_2x2", "latticehom_3x3", "diag") else [str(n)]
    text = dump_instance(fx.fixture_instance(name, args))
    assert dump_instance(parse_instance(text)) == text


def _bad(mutate):
    doc = json.loads(json.dumps(GOOD))
    mutate(doc)
    return json.dumps(doc)


@pytest.mark.parametrize("mutate,where", [
    (lambda d: d.update(extra=1), "extra"),
    (lambda d: d["products"]["p"].update(C=1), "products.p.C"),
    (lambda d: d["products"]["p"]["domain"].update(dim=0), "products.p.domain.dim"),
    (lambda d: d["products"]["p"]["domain"].update(order="cyclic"), "products.p.domain.order"),
    (lambda d: d["products"]["p"]["B"].pop(), "products.p.B"),
    (lambda d: d["products"]["p"]["B"][0][1].append("1"), "products.p.B[0][1]"),
    (lambda d: d["operators"]["T"]["matrix"][0].__setitem__(0, "0.5"), "operators.T.matrix[0][0]"),
    (lambda d: d["operators"]["T"]["matrix"][0].__setitem__(0, 1), "operators.T.matrix.0.0"),
])
def test_rejections_carry_location(mutate, where):
    with pytest.raises(InstanceError) as exc:
        parse_instance(_bad(mutate))
    assert where in str(exc.value)


def test_json_syntax_error_location():
    with pytest.raises(InstanceError, match="line 2 column"):
        parse_instance('{\n  "products": ,\n}')


def test_load_stdin(monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(GOOD)))
    assert "T" in load_instance("-").operators


def test_load_file(tmp_path):
    path = tmp_path / "i.json"
    path.write_text(json.dumps(GOOD), encoding="utf-8")
    assert "p" in load_instance(str(path)).products
