"""Classical tableaux: the independent promotion oracle and its statistics."""

from math import lcm

from orbitkit import ssyt

# a frozen orbit representative in the 4x6 rectangle with entries up to 12
# realizing the documented box-count multisets
GOLDEN_T = ((2, 3, 3, 4, 7, 9),
            (3, 4, 4, 5, 10, 10),
            (5, 5, 5, 8, 11, 11),
            (6, 7, 9, 12, 12, 12))


def test_counts():
    assert len(list(ssyt.enumerate_ssyt(2, 2, 4))) == 20
    assert len(list(ssyt.enumerate_ssyt(2, 2, 5))) == 50
    assert len(list(ssyt.enumerate_ssyt(2, 3, 5))) == 175


def test_all_valid_and_unique():
    seen = set()
    for T in ssyt.enumerate_ssyt(2, 3, 5):
        assert T not in seen
        seen.add(T)
        for r in range(2):
            assert all(T[r][c] <= T[r][c + 1] for c in range(2))
        for c in range(3):
            assert T[0][c] < T[1][c]


def test_bk_is_involution_and_preserves_shape():
    for T in ssyt.enumerate_ssyt(2, 2, 4):
        for k in range(1, 4):
            U = ssyt.bender_knuth(T, k)
            assert ssyt.bender_knuth(U, k) == T
            assert all(U[0][c] < U[1][c] for c in range(2))
            assert all(U[r][0] <= U[r][1] for r in range(2))


def test_promotion_order_is_maxval_on_rectangles():
    for a, b, k in ((2, 2, 4), (2, 2, 5), (2, 3, 5), (3, 2, 5)):
        order = lcm(*(len(ssyt.promotion_orbit(T, k))
                      for T in ssyt.enumerate_ssyt(a, b, k)))
        assert order == k


def test_single_row_promotion():
    # (1,1,2) has all entries free: two 1s and one 2 swap to one 1, two 2s
    assert ssyt.bender_knuth(((1, 1, 2),), 1) == ((1, 2, 2),)
    T = ((1, 1, 2),)
    orbit = ssyt.promotion_orbit(T, 3)
    assert len(orbit) == 3


def test_box_exceed_count():
    assert ssyt.box_exceed_count(GOLDEN_T, 1, 4) == 2
    assert ssyt.box_exceed_count(GOLDEN_T, 4, 8) == 4


def test_golden_bcdist_orbit():
    assert ssyt.bcdist(GOLDEN_T, 1, 4, 12) == sorted([1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 3, 3])
    assert ssyt.bcdist(GOLDEN_T, 4, 8, 12) == sorted([3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5])
    assert ssyt.bcdist(GOLDEN_T, 4, 8, 12) == sorted(
        6 - m for m in ssyt.bcdist(GOLDEN_T, 1, 4, 12))


def test_bcdist_complement_exhaustive_small():
    a, b, k = 2, 2, 5
    for T in ssyt.enumerate_ssyt(a, b, k):
        for x in (1, 2):
            for d in range(0, k + 1):
                assert ssyt.bcdist(T, a + 1 - x, k - d, k) == sorted(
                    b - m for m in ssyt.bcdist(T, x, d, k))


def test_dist_box_complement():
    a, b, k = 2, 2, 5
    for T in ssyt.enumerate_ssyt(a, b, k):
        for r in (1, 2):
            for c in (1, 2):
                lhs = ssyt.dist_box(T, (r, c), k)
                rhs = sorted(k + 1 - m
                             for m in ssyt.dist_box(T, ssyt.rotate_box((r, c), a, b), k))
                assert lhs == rhs


def test_symmetric_subsets():
    subs = ssyt.symmetric_subsets(2, 2)
    assert len(subs) == 4 and () in subs
    assert all(sorted(ssyt.rotate_box(b, 2, 2) for b in S) == list(S) for S in subs)
    assert len(ssyt.symmetric_subsets(2, 3)) == 8
    # odd-by-odd shapes have a fixed center box
    assert ((2, 2),) in ssyt.symmetric_subsets(3, 3)
