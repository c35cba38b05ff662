"""Classical semistandard Young tableaux of rectangular shape.

Deliberately self-contained: nothing here touches the poset machinery, so
tableau promotion serves as an independent oracle for the labeling engine
(and carries its own statistics for the box-count results).
"""

from __future__ import annotations

from itertools import combinations


def enumerate_ssyt(rows: int, cols: int, maxval: int):
    """All tableaux (tuples of row tuples), rows weak, columns strict,
    entries in 1..maxval, in a fixed DFS order."""
    grid = [[0] * cols for _ in range(rows)]

    def fill(r, c):
        if r == rows:
            yield tuple(tuple(row) for row in grid)
            return
        nr, nc = (r, c + 1) if c + 1 < cols else (r + 1, 0)
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, maxval - (rows - r) + 2):
            grid[r][c] = v
            yield from fill(nr, nc)

    yield from fill(0, 0)


def bender_knuth(T, k: int):
    """The classical swap of free k and k+1 entries, row by row.

    A k is free when the cell below does not hold k+1; a k+1 is free when
    the cell above does not hold k.  In each row the free block of a k's
    and b (k+1)'s becomes b k's and a (k+1)'s.
    """
    rows = [list(r) for r in T]
    nrows = len(rows)
    for r, row in enumerate(rows):
        free = []
        for c, v in enumerate(row):
            if v == k and (r + 1 >= nrows or rows[r + 1][c] != k + 1):
                free.append(c)
            elif v == k + 1 and (r == 0 or rows[r - 1][c] != k):
                free.append(c)
        a = sum(1 for c in free if row[c] == k)
        b = len(free) - a
        for i, c in enumerate(free):
            row[c] = k if i < b else k + 1
    return tuple(tuple(r) for r in rows)


def promotion(T, maxval: int):
    for k in range(1, maxval):
        T = bender_knuth(T, k)
    return T


def promotion_orbit(T, maxval: int):
    out = [T]
    cur = promotion(T, maxval)
    while cur != T:
        out.append(cur)
        cur = promotion(cur, maxval)
    return out


def box_exceed_count(T, row: int, d: int) -> int:
    """Number of entries above d in the given 1-based row."""
    return sum(1 for v in T[row - 1] if v > d)


def bcdist(T, row: int, d: int, maxval: int) -> list[int]:
    """Multiset of box counts along maxval promotion steps."""
    out = []
    cur = T
    for _ in range(maxval):
        out.append(box_exceed_count(cur, row, d))
        cur = promotion(cur, maxval)
    return sorted(out)


def dist_box(T, box, maxval: int) -> list[int]:
    """Multiset of the entry at ``box`` (1-based (row, col)) along maxval steps."""
    r, c = box
    out = []
    cur = T
    for _ in range(maxval):
        out.append(cur[r - 1][c - 1])
        cur = promotion(cur, maxval)
    return sorted(out)


def rotate_box(box, rows: int, cols: int):
    r, c = box
    return (rows + 1 - r, cols + 1 - c)


def symmetric_subsets(rows: int, cols: int):
    """All box subsets fixed under 180-degree rotation, as sorted tuples."""
    boxes = [(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1)]
    pairs = []
    seen = set()
    for b in boxes:
        if b in seen:
            continue
        b2 = rotate_box(b, rows, cols)
        seen.add(b)
        seen.add(b2)
        pairs.append((b,) if b == b2 else (b, b2))
    out = []
    for r in range(len(pairs) + 1):
        for chosen in combinations(pairs, r):
            out.append(tuple(sorted(box for pair in chosen for box in pair)))
    return out


def chi(T, boxes) -> int:
    return sum(T[r - 1][c - 1] for r, c in boxes)
