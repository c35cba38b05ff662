"""Orbit engine: decomposition, homomesy, resonance, equivariance plumbing."""

from fractions import Fraction

import numpy as np
import pytest

from orbitkit import poset as ps
from orbitkit.dynamics import (ActionEscape, equivariance_check, homomesy_check,
                               orbit_decomposition, orbit_size_multiset,
                               resonance_check)
from orbitkit.partitions import PartitionSpace


def cyclic_states(n):
    return [np.array([i], dtype=np.uint16) for i in range(n)]


def test_identity_action_gives_singletons():
    dec = orbit_decomposition(cyclic_states(7), lambda s: s.copy())
    assert dec.orbit_sizes == [1] * 7 and dec.order == 1


def test_rotation_action():
    dec = orbit_decomposition(cyclic_states(6),
                              lambda s: np.array([(s[0] + 2) % 6], dtype=np.uint16))
    assert sorted(dec.orbit_sizes) == [3, 3]
    assert dec.order == 3 and dec.total == 6


def test_action_escape_detected():
    with pytest.raises(ActionEscape):
        orbit_decomposition(cyclic_states(3),
                            lambda s: np.array([int(s[0]) + 1], dtype=np.uint16))


def test_worker_counts_agree():
    sp = PartitionSpace(ps.chain_product((2, 2, 2)), 2)
    elems = list(sp.enumerate())
    base = orbit_decomposition(elems, sp.rowmotion, workers=1)
    for w in (2, 4):
        dec = orbit_decomposition(elems, sp.rowmotion, workers=w)
        assert dec.orbit_sizes == base.orbit_sizes
        assert dec.representatives == base.representatives


def test_golden_cube_orbits():
    sp = PartitionSpace(ps.chain_product((2, 2, 2)), 2)
    ms = orbit_size_multiset(list(sp.enumerate()), sp.rowmotion)
    assert dict(ms) == {5: 30, 9: 2}


def test_homomesy_exact_fractions():
    states = cyclic_states(4)
    step = lambda s: np.array([(s[0] + 1) % 4], dtype=np.uint16)
    dec = orbit_decomposition(states, step)
    lift = lambda key: np.frombuffer(key, dtype=np.uint16).copy()
    rep = homomesy_check(dec, lift, step, lambda s: int(s[0]))
    assert rep.is_homomesic and rep.c == Fraction(3, 2)
    constant = homomesy_check(dec, lift, step, lambda s: 0)
    assert constant.is_homomesic and constant.c == 0


def test_homomesy_detects_failure():
    states = cyclic_states(4)
    step = lambda s: np.array([s[0] ^ 1], dtype=np.uint16)  # two 2-cycles
    dec = orbit_decomposition(states, step)
    lift = lambda key: np.frombuffer(key, dtype=np.uint16).copy()
    rep = homomesy_check(dec, lift, step, lambda s: int(s[0]))
    assert not rep.is_homomesic and rep.c is None
    assert sorted(rep.averages) == [Fraction(1, 2), Fraction(5, 2)]


def test_resonance_verified_and_falsified():
    states = cyclic_states(3)
    step = lambda s: np.array([(s[0] + 1) % 3], dtype=np.uint16)
    proj = lambda s: tuple(1 if i == s[0] else 0 for i in range(3))
    ok = resonance_check(states, step, proj, 3, rotation="right")
    assert ok.verified
    bad = resonance_check(states, step, proj, 3, rotation="left")
    assert not bad.verified and bad.counterexample is not None


def test_resonance_degenerate():
    states = cyclic_states(3)
    step = lambda s: np.array([(s[0] + 1) % 3], dtype=np.uint16)
    rep = resonance_check(states, step, lambda s: (1, 1, 1), 3)
    assert rep.degenerate and not rep.verified


def test_resonance_length_mismatch():
    states = cyclic_states(2)
    with pytest.raises(ValueError):
        resonance_check(states, lambda s: s.copy(), lambda s: (1, 0), 3)


def test_equivariance_check():
    states = cyclic_states(5)
    step = lambda s: np.array([(s[0] + 1) % 5], dtype=np.uint16)
    shift = lambda s: np.array([(s[0] + 2) % 5], dtype=np.uint16)
    ok = equivariance_check(shift, step, step, states, target_size=5)
    assert ok.verified
    collapse = lambda s: np.array([0], dtype=np.uint16)
    bad = equivariance_check(collapse, step, step, states)
    assert not bad.verified and "injective" in bad.detail
    flip = lambda s: np.array([(5 - s[0]) % 5], dtype=np.uint16)
    wrong = equivariance_check(flip, step, step, states)
    assert not wrong.verified and wrong.witness is not None


def test_decomposition_report_shape():
    sp = PartitionSpace(ps.v_poset(), 1)
    dec = orbit_decomposition(list(sp.enumerate()), sp.rowmotion,
                              action_name="row", set_descriptor=sp.describe())
    doc = dec.to_json()
    assert doc["action"] == "row" and doc["total"] == 5
    assert sum(int(k) * v for k, v in doc["orbit_sizes"].items()) == 5
