"""Gamma poset construction, isomorphisms, and the bijection round trip."""

import numpy as np
import pytest

from orbitkit import poset as ps
from orbitkit import restriction as rs
from orbitkit.gamma import (GammaBijection, GammaError, flag_triangle_isomorphism,
                            gamma_poset, graded_isomorphism, is_column_adjacent)

GRID = [("chain:2", 2, 4), ("chain:3", 1, 5), ("V", 2, 4), ("V", 3, 3),
        ("prod:2x2", 2, 5), ("triangle:2", 2, 4)]


def test_gamma_of_chain2_is_a_square():
    P = ps.chain(2)
    G = gamma_poset(P, rs.from_global_bound(P, 4))
    assert G.poset.n == 4
    assert ps.is_isomorphic(G.poset, ps.chain_product((2, 2)))


def test_gamma_size_matches_graded_count():
    for spec, _, q in GRID:
        P = ps.build_poset(spec)
        n = P.rank_profile.top_rank
        G = gamma_poset(P, rs.from_global_bound(P, q))
        assert G.poset.n == P.n * (q - n - 1)


def test_interval_restrictions_are_column_adjacent():
    for spec, _, q in GRID:
        P = ps.build_poset(spec)
        assert is_column_adjacent(gamma_poset(P, rs.from_global_bound(P, q)))
    P = ps.chain_product((2, 3))
    assert is_column_adjacent(gamma_poset(P, rs.typea_flag(P)))


def test_gapped_restriction_not_column_adjacent():
    one = ps.chain(1)
    G = gamma_poset(one, rs.RestrictionFunction([(1, 3, 5)], consistent=True))
    assert G.poset.covers == ((1, 0),)  # label 3 covered by label 1
    assert not is_column_adjacent(G)


def test_singleton_label_sets_give_empty_columns():
    # a poset element whose only label survives contributes no gamma elements
    C3 = ps.chain(3)
    R = rs.make_consistent(
        rs.RestrictionFunction([(1, 2), (4,), (5, 6)]), C3)
    G = gamma_poset(C3, R)
    assert all(p != 1 for p, _ in G.labels)


def test_graded_isomorphism_explicit_map():
    P = ps.chain(2)
    G = gamma_poset(P, rs.from_global_bound(P, 4))
    target, mapping = graded_isomorphism(G, 4)
    m = 2
    expect = {(0, 1): (0, 2), (0, 2): (0, 1), (1, 2): (1, 2), (1, 3): (1, 1)}
    for e, (p, k) in enumerate(G.labels):
        tp, ti = divmod(int(mapping[e]), m)
        assert (tp, ti + 1) == expect[(p, k)]


def test_graded_isomorphism_round_trip_and_errors():
    for spec, _, q in GRID:
        P = ps.build_poset(spec)
        G = gamma_poset(P, rs.from_global_bound(P, q))
        target, mapping = graded_isomorphism(G, q)
        assert sorted(mapping.tolist()) == list(range(target.n))
    ungraded = ps.Poset(4, [(0, 1), (1, 2), (0, 3)], name="lopsided")
    R = rs.from_bounds(ungraded, 1, 6)
    with pytest.raises(GammaError):
        graded_isomorphism(gamma_poset(ungraded, R), 6)
    P = ps.chain(2)
    with pytest.raises(GammaError):
        graded_isomorphism(gamma_poset(P, rs.from_global_bound(P, 4)), 2)


def test_flag_triangle_isomorphism_cases():
    for a, b in ((2, 2), (2, 3), (3, 4)):
        G, target, mapping = flag_triangle_isomorphism(a, b)
        assert target.n == G.poset.n
        assert sorted(mapping.tolist()) == list(range(target.n))


def test_phi_boundary_cases():
    for spec, ell, q in GRID:
        P = ps.build_poset(spec)
        B = GammaBijection(P, ell, rs.from_global_bound(P, q))
        assert not B.forward(B.labeling_space.minimal()).any()
        assert (B.forward(B.labeling_space.maximal()) == ell).all()
        assert np.array_equal(B.inverse(B.partition_space.zeros()),
                              B.labeling_space.minimal())
        assert np.array_equal(B.inverse(B.partition_space.full()),
                              B.labeling_space.maximal())


def test_phi_round_trip_exhaustive():
    for spec, ell, q in GRID:
        P = ps.build_poset(spec)
        B = GammaBijection(P, ell, rs.from_global_bound(P, q))
        count = 0
        for f in B.labeling_space.enumerate():
            sig = B.forward(f, debug=True)  # closed form vs multichain path
            B.partition_space.validate(sig)
            assert np.array_equal(B.inverse(sig), f)
            count += 1
        assert count > 0


def test_phi_round_trip_square_family_has_twenty():
    P = ps.chain_product((2, 2))
    B = GammaBijection(P, 2, rs.from_global_bound(P, 4))
    fs = list(B.labeling_space.enumerate())
    assert len(fs) == 20
    keys = {B.partition_space.key(B.forward(f)) for f in fs}
    assert len(keys) == 20


def test_phi_multichain_is_nested_ideals():
    P = ps.chain_product((2, 2))
    B = GammaBijection(P, 2, rs.from_global_bound(P, 5))
    for f in B.labeling_space.enumerate():
        ideals = B.forward_multichain(f)
        assert len(ideals) == 2
        assert ideals[1] <= ideals[0]


def test_phi_tableau_identity():
    # single-column poset: sigma(x, k) counts row-x entries above k
    a, c, ell = 2, 3, 2
    P = ps.chain(a)
    B = GammaBijection(P, ell, rs.from_global_bound(P, a + c))
    for f in B.labeling_space.enumerate():
        sig = B.forward(f)
        for e, (p, k) in enumerate(B.gamma.labels):
            assert sig[e] == sum(1 for j in range(ell) if f[p, j] > k)


def test_flagged_bijection_round_trip():
    P = ps.chain_product((2, 3))
    B = GammaBijection(P, 2, rs.typea_flag(P))
    for f in B.labeling_space.enumerate():
        assert np.array_equal(B.inverse(B.forward(f, debug=True)), f)


def test_gamma_requires_consistent_restriction():
    with pytest.raises(GammaError):
        gamma_poset(ps.chain(2), rs.RestrictionFunction([(1, 2), (2, 3)]))


def test_gamma_json_carries_labels():
    P = ps.chain(2)
    G = gamma_poset(P, rs.from_global_bound(P, 4))
    doc = G.to_json()
    assert doc["gamma_labels"] == [list(lab) for lab in G.labels]
    assert "sets" in doc["restriction"]
