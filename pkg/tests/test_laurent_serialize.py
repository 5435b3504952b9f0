import json

import numpy as np
import pytest

from attolab import SymbolPair, atto_from_pair, basis_pair, make_blaschke, membership
from attolab.laurent import SymbolParseError, laurent_samples, parse_laurent
from attolab import serialize

from conftest import cnormal, random_alpha


@pytest.mark.parametrize(
    "text, expected",
    [
        ("z", {1: 1}),
        ("2*z^2 - 1j*zbar", {2: 2, -1: -1j}),
        ("(1 + z)**2", {0: 1, 1: 2, 2: 1}),
        ("z**-3 + 0.5", {-3: 1, 0: 0.5}),
        ("z/z", {0: 1}),
        ("0", {}),
    ],
)
def test_parse_laurent(text, expected):
    assert parse_laurent(text) == {k: complex(v) for k, v in expected.items()}


@pytest.mark.parametrize("text", ["z**17", "w", "z**z", "import os", "z**0.5", "1/(1+z)"])
def test_parse_laurent_rejects(text):
    with pytest.raises(SymbolParseError):
        parse_laurent(text)


def test_laurent_samples():
    nodes = np.exp(2j * np.pi * np.arange(8) / 8)
    np.testing.assert_allclose(laurent_samples({1: 2, -1: 1j}, nodes), 2 * nodes + 1j / nodes)


def test_blaschke_json_roundtrip():
    b = make_blaschke([0.1 + 0.2j, -0.5], np.exp(0.4j))
    obj = serialize.blaschke_to_json(b)
    assert set(obj) == {"zeros", "const"}
    assert serialize.blaschke_from_json(json.loads(json.dumps(obj))) == b


def test_operator_json_roundtrip(rng):
    dom, cod = basis_pair(random_alpha(rng, 2), random_alpha(rng, 3))
    A = atto_from_pair(dom, cod, SymbolPair(dom.vector(cnormal(rng, 2)), cod.vector(cnormal(rng, 3))))
    obj = json.loads(json.dumps(serialize.operator_to_json(A)))
    assert set(obj) == {"alpha", "beta", "matrix"}
    assert len(obj["matrix"]) == 3 and len(obj["matrix"][0]) == 2
    B = serialize.operator_from_json(obj)
    np.testing.assert_array_equal(A.entries, B.entries)
    assert B.domain.same_space(dom) and B.codomain.same_space(cod)


def test_result_and_pair_json(rng):
    dom, cod = basis_pair(random_alpha(rng, 2), random_alpha(rng, 2))
    pair = SymbolPair(dom.vector(cnormal(rng, 2)), cod.vector(cnormal(rng, 2)))
    res = membership(atto_from_pair(dom, cod, pair))
    obj = serialize.result_to_json(res)
    assert set(obj) == {"variant", "verdict", "residual", "psi", "chi"}
    assert obj["variant"] == "T1" and obj["verdict"] is True
    assert len(obj["psi"]["coords"]) == 2
    back = serialize.pair_from_json(serialize.pair_to_json(pair), dom, cod)
    np.testing.assert_array_equal(back.chi.coords, pair.chi.coords)
