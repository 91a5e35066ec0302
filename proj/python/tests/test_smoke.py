from fractions import Fraction

import pytest

import bandlab

K4 = [[-1, -1, 1], [1, -1, 1], [1, 1, 1], [-1, 1, 1]]


def test_quadrant_is_lattice():
    s = bandlab.Space("rays", 2, [[1, 0], [0, 1]])
    assert s.m == 2
    assert s.is_lattice_rdp()["verdict"] == "yes"
    assert s.is_pervasive()["verdict"] == "yes"
    assert s.is_disjoint_def([1, 0], [0, 1])
    assert s.is_disjoint_cover([1, 0], [0, 1])


def test_k4_ray_span_is_band():
    s = bandlab.Space("inequalities", 3, K4)
    assert s.is_pervasive()["verdict"] == "no"
    assert s.is_band([[1, 0, 1]])["verdict"] == "yes"
    assert s.is_o_closed([[1, 0, 1]])["verdict"] == "yes"
    assert bandlab.to_fractions(s.disjoint_complement([[1, 0, 1]])) == [[1, 0, -1]]


def test_rationals_round_trip():
    s = bandlab.Space("rays", 2, [[1, 0], [Fraction(1, 2), "1/3"]])
    assert all(isinstance(x, str) for row in s.extreme_rays for x in row)
    assert s.order_leq([0, 0], ["1/2", "1/3"])


def test_random_cone_is_deterministic():
    assert bandlab.random_cone(7, 3, 4) == bandlab.random_cone(7, 3, 4)
    assert len(bandlab.random_cone(7, 3, 4)) == 4
    with pytest.raises(bandlab.InputError):
        bandlab.random_cone(1, 1, 1)


def test_examples_and_analyze():
    assert "ex_quad" in bandlab.example_names()
    code, report = bandlab.run_example("ex_quad")
    assert code == 0 and report["status"] == "ok"
    text = "bandlab-instance 1\n[space]\nkind = rays\nn = 2\nvector = 1 0\nvector = 0 1\n"
    code, report = bandlab.analyze(text)
    assert code == 0 and report["space"]["lattice_rdp"]["verdict"] == "yes"
    with pytest.raises(bandlab.InputError, match=":3:1:"):
        bandlab.analyze("bandlab-instance 1\n[space]\nbogus = 1\n")


def test_not_pointed_cone_is_rejected():
    with pytest.raises(bandlab.InputError):
        bandlab.Space("rays", 2, [[1, 0], [-1, 0], [0, 1]])
