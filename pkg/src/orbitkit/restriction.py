"""Restriction functions: per-element allowed label sets with consistency pruning.

A restriction assigns each poset element a finite sorted set of integer
labels.  It is consistent when every surviving label is attained by some
strictly increasing labeling of the poset; consistency is enforced by a
cover-local fixpoint pruning which is exact for this constraint system.
"""

from __future__ import annotations

import numpy as np

from .poset import Poset


class RestrictionError(ValueError):
    """Bounds or pruning produced an empty label set."""


class RestrictionFunction:
    """Sorted label sets per element, with a consistency flag."""

    def __init__(self, sets, consistent=False):
        self.sets = tuple(tuple(sorted(set(int(v) for v in s))) for s in sets)
        self.consistent = bool(consistent)

    def __eq__(self, other):
        return isinstance(other, RestrictionFunction) and self.sets == other.sets

    def __hash__(self):
        return hash(self.sets)

    def __repr__(self):
        return f"RestrictionFunction({list(map(list, self.sets))})"

    def successor(self, p: int, k: int):
        """Smallest label of the set at p larger than k, or None."""
        for v in self.sets[p]:
            if v > k:
                return v
        return None

    def predecessor(self, p: int, k: int):
        """Largest label of the set at p smaller than k, or None."""
        out = None
        for v in self.sets[p]:
            if v < k:
                out = v
        return out

    def truncate_max(self, p: int) -> tuple[int, ...]:
        """The set at p with its largest element removed."""
        return self.sets[p][:-1]

    def label_range(self) -> tuple[int, int]:
        lo = min(s[0] for s in self.sets)
        hi = max(s[-1] for s in self.sets)
        return lo, hi

    def is_interval(self) -> bool:
        return all(s[-1] - s[0] + 1 == len(s) for s in self.sets)

    def packed(self):
        """(ptr, values) CSR arrays for the promotion kernel."""
        ptr = np.zeros(len(self.sets) + 1, dtype=np.int32)
        for p, s in enumerate(self.sets):
            ptr[p + 1] = ptr[p] + len(s)
        vals = np.empty(ptr[-1], dtype=np.int16)
        pos = 0
        for s in self.sets:
            for v in s:
                vals[pos] = v
                pos += 1
        return ptr, vals

    def to_json(self) -> dict:
        return {"sets": [list(s) for s in self.sets]}

    @classmethod
    def from_json(cls, doc) -> "RestrictionFunction":
        return cls(doc["sets"])


def make_consistent(R: RestrictionFunction, P: Poset) -> RestrictionFunction:
    """Fixpoint pruning: drop k at p whenever some cover above p has no label
    beyond k or some cover below has none under it.  Raises if a set empties."""
    sets = [list(s) for s in R.sets]
    if len(sets) != P.n:
        raise RestrictionError("restriction size does not match poset")
    ext = P.linear_extension()
    changed = True
    while changed:
        changed = False
        for p in ext:
            kept = []
            for k in sets[p]:
                ok = all(any(v > k for v in sets[c]) for c in P.up[p])
                ok = ok and all(any(v < k for v in sets[c]) for c in P.down[p])
                if ok:
                    kept.append(k)
            if len(kept) != len(sets[p]):
                if not kept:
                    raise RestrictionError(f"labels at element {p} pruned to empty")
                sets[p] = kept
                changed = True
    return RestrictionFunction(sets, consistent=True)


def from_bounds(P: Poset, alpha, beta) -> RestrictionFunction:
    """Interval restriction alpha(p)..beta(p), consistency-pruned."""
    alpha = _per_element(P, alpha)
    beta = _per_element(P, beta)
    sets = []
    for p in range(P.n):
        if alpha[p] > beta[p]:
            raise RestrictionError(f"empty bounds at element {p}: {alpha[p]}..{beta[p]}")
        sets.append(range(alpha[p], beta[p] + 1))
    return make_consistent(RestrictionFunction(sets), P)


def from_global_bound(P: Poset, q: int) -> RestrictionFunction:
    return from_bounds(P, 1, q)


def from_flags(P: Poset, beta) -> RestrictionFunction:
    """Flag restriction: lower bound 1, per-element upper bound beta."""
    return from_bounds(P, 1, beta)


def typea_flag(P: Poset) -> RestrictionFunction:
    """The flag beta(i, j) = b + 2i - 1 on a product of two chains [a] x [b]."""
    if P.chain_lengths is None or len(P.chain_lengths) != 2:
        raise RestrictionError("typea flag needs a product of exactly two chains")
    b = P.chain_lengths[1]
    beta = [b + 2 * P.coords[p][0] - 1 for p in range(P.n)]
    return from_flags(P, beta)


def _per_element(P: Poset, v) -> list[int]:
    if isinstance(v, int):
        return [v] * P.n
    out = [int(x) for x in v]
    if len(out) != P.n:
        raise RestrictionError("per-element bound length mismatch")
    return out
