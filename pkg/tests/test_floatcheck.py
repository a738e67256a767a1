import numpy as np

from conftest import pipeline
from hermatlas.floatcheck import compare, float_dimensions, numeric_rank


def test_numeric_rank():
    assert numeric_rank(np.zeros((3, 3))) == 0
    assert numeric_rank(np.diag([1.0, 1e-12, 2.0])) == 2
    assert numeric_rank(np.ones((4, 2))) == 1
    assert numeric_rank(np.zeros((0, 3))) == 0


def test_compare_itemizes():
    assert compare({"a": 1, "b": [{"c": 2}]}, {"a": 1, "b": [{"c": 2}]}) == []
    assert compare({"a": 1, "b": [{"c": 2}]}, {"a": 2, "b": [{"c": 3}]}) == [
        "a: exact 1, float 2", "b[0].c: exact 2, float 3"]
    assert compare({"x": [1, 2]}, {"x": [1]}) == ["x: 2 entries exact, 1 float"]


def test_float_route_on_family_2e():
    p = pipeline("(2e)")
    fd = float_dimensions(p.action, p.factors, p.dims.trivial)
    assert (fd.zg, fd.zk, fd.zp, fd.k_derived) == (13, 5, 8, 5)
    assert [f["real_dim"] for f in fd.factors] == [2, 6]
    assert [f["rank"] for f in fd.factors] == [1, 2]
    assert all(f["commutant_real_dim"] == 2 for f in fd.factors)
    assert fd.prym == (2, 6)
