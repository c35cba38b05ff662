"""Restriction functions: bounds, flags, pruning, and the consistency oracle."""

import pytest

from orbitkit import poset as ps
from orbitkit import restriction as rs


def realizable(P, sets, p, k):
    """Exhaustive oracle: is there a strictly increasing labeling of P drawing
    from ``sets`` with value k at p?"""
    ext = P.linear_extension()
    assign = {}

    def grow(i):
        if i == len(ext):
            return True
        x = ext[i]
        options = [k] if x == p else sets[x]
        for v in options:
            if x == p and v not in sets[x]:
                return False
            if all(assign[d] < v for d in P.down[x]):
                assign[x] = v
                if grow(i + 1):
                    return True
                del assign[x]
        return False

    return grow(0)


CORPUS = [
    ("chain:2", 4), ("chain:3", 5), ("V", 3), ("V", 5),
    ("prod:2x2", 4), ("prod:2x2", 6), ("triangle:2", 4), ("staircase:2", 4),
]


def test_global_bound_examples():
    P = ps.chain(2)
    assert rs.from_global_bound(P, 4).sets == ((1, 2, 3), (2, 3, 4))
    V = ps.v_poset()
    assert rs.from_global_bound(V, 3).sets == ((1, 2), (2, 3), (2, 3))
    P22 = ps.chain_product((2, 2))
    R = rs.from_global_bound(P22, 4)
    by_coord = {P22.coords[p]: R.sets[p] for p in range(4)}
    assert by_coord == {(1, 1): (1, 2), (1, 2): (2, 3), (2, 1): (2, 3), (2, 2): (3, 4)}


def test_global_bound_set_sizes_on_graded():
    for spec, q in CORPUS:
        P = ps.build_poset(spec)
        n = P.rank_profile.top_rank
        R = rs.from_global_bound(P, q)
        assert all(len(s) == q - n for s in R.sets)
        # needed so the gamma poset has |P| * (q - n - 1) elements
        assert sum(len(s) - 1 for s in R.sets) == P.n * (q - n - 1)


def test_typea_flag_closed_form():
    P = ps.chain_product((3, 4))
    R = rs.typea_flag(P)
    for p in range(P.n):
        i, j = P.coords[p]
        assert R.sets[p] == tuple(range(i + j - 1, 2 * i + j)), (i, j)
    P2 = ps.chain_product((2, 5))
    R2 = rs.typea_flag(P2)
    for p in range(P2.n):
        i, j = P2.coords[p]
        if i == 1:
            assert R2.sets[p] == (j, j + 1)
        else:
            assert R2.sets[p] == (j + 1, j + 2, j + 3)


def test_constant_flag_equals_global_bound():
    P = ps.chain_product((2, 2))
    assert rs.from_flags(P, [4] * P.n) == rs.from_global_bound(P, 4)


def test_make_consistent_examples():
    C3 = ps.chain(3)
    R = rs.make_consistent(rs.RestrictionFunction([(1, 2, 3)] * 3), C3)
    assert R.sets == ((1,), (2,), (3,))
    C2 = ps.chain(2)
    R2 = rs.make_consistent(
        rs.RestrictionFunction([(5,), tuple(range(1, 10))]), C2)
    assert R2.sets == ((5,), (6, 7, 8, 9))


def test_pruning_is_idempotent():
    for spec, q in CORPUS:
        P = ps.build_poset(spec)
        R = rs.from_global_bound(P, q)
        assert rs.make_consistent(R, P) == R


def test_consistency_matches_brute_force_oracle():
    cases = [(spec, 1, q) for spec, q in CORPUS]
    cases += [("V", 2, 4), ("prod:2x2", 2, 5), ("chain:3", 3, 7)]
    for spec, lo, hi in cases:
        P = ps.build_poset(spec)
        R = rs.from_bounds(P, lo, hi)
        raw = {p: set(range(lo, hi + 1)) for p in range(P.n)}
        for p in range(P.n):
            for k in raw[p]:
                attained = realizable(P, [tuple(sorted(raw[x])) for x in range(P.n)], p, k)
                assert attained == (k in R.sets[p]), (spec, p, k)


def test_gapped_sets_prune_correctly():
    # middle element of the chain can only take 4: ends must avoid it
    C3 = ps.chain(3)
    R = rs.make_consistent(
        rs.RestrictionFunction([(1, 4, 9), (4,), (1, 4, 9)]), C3)
    assert R.sets == ((1,), (4,), (9,))


def test_inconsistent_bounds_raise():
    C2 = ps.chain(2)
    with pytest.raises(rs.RestrictionError):
        rs.from_global_bound(C2, 1)  # needs two distinct labels
    with pytest.raises(rs.RestrictionError):
        rs.from_bounds(C2, 3, 2)
    with pytest.raises(rs.RestrictionError):
        rs.make_consistent(rs.RestrictionFunction([(2,), (1,)]), C2)


def test_successor_predecessor_truncate():
    R = rs.RestrictionFunction([(2, 3, 5)])
    assert R.successor(0, 3) == 5
    assert R.predecessor(0, 5) == 3
    assert R.successor(0, 5) is None
    assert R.predecessor(0, 2) is None
    assert R.truncate_max(0) == (2, 3)


def test_json_round_trip():
    R = rs.RestrictionFunction([(1, 2), (2, 4, 6)])
    assert rs.RestrictionFunction.from_json(R.to_json()) == R
