from fractions import Fraction as F

import pytest

import propunit


def test_unitize_golden():
    out = propunit.unitize([(0, 3), (2, 5)])
    assert out == [(F(0), F(1)), (F(2, 3), F(5, 3))]
    assert propunit.is_unit(out)


def test_claw_certificate():
    rep = [(0, 7), (0, 1), (3, 4), (6, 7)]
    g = propunit.intersection_graph(rep)
    w = propunit.to_unit(g, rep)
    assert isinstance(w, propunit.ClawWitness)
    assert w.center == 0
    assert tuple(w.leaves) == (1, 2, 3)


def test_classify_chain():
    p = propunit.poset_from_relation(3, [(0, 1), (1, 2)])
    c = propunit.classify(p)
    assert c.cls == propunit.OrderClass.linear_order
    assert c.values == [F(0), F(2), F(4)]


def test_cycle_rejected():
    with pytest.raises(ValueError):
        propunit.poset_from_relation(2, [(0, 1), (1, 0)])


def test_bridge_identity():
    rep = [(0, 1), (F(1, 2), 2), (3, 3)]
    incomp = propunit.incomparability_graph(propunit.interval_order_of(rep))
    assert incomp == propunit.intersection_graph(rep)


def test_sweep_clean():
    st = propunit.run_sweep(4)
    assert st.graphs == 64
    assert st.clean()


def test_cap_exceeded():
    with pytest.raises(propunit.CapExceeded):
        propunit.run_sweep(9)


def test_floats_rejected():
    with pytest.raises(TypeError):
        propunit.is_unit([(0.0, 1.0)])
