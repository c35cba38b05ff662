"""Strict labelings of stacked poset copies, and promotion via Bender-Knuth swaps.

A labeling assigns an allowed integer to every (element, copy) cell so that
each copy of the poset is strictly increasing and each element's run of
copies (its fiber) is weakly increasing.  Labelings are plain int16 arrays
of shape (elements, copies); the space object owns the poset, the copy
count and the restriction, plus the packed arrays the kernels need.
"""

from __future__ import annotations

from itertools import product as iproduct

import numpy as np

from . import _kernels
from .poset import CapExceeded, Poset
from .restriction import RestrictionFunction

DEFAULT_ENUM_CAP = 2 * 10**6


class LabelingError(ValueError):
    """A labeling violates strictness, monotonicity, or the restriction."""


class PStrictSpace:
    """All valid labelings for a fixed (poset, copies, restriction) triple."""

    def __init__(self, poset: Poset, ell: int, restriction: RestrictionFunction):
        if ell < 1:
            raise LabelingError("need at least one copy")
        if not restriction.consistent:
            raise LabelingError("restriction must be consistency-pruned first")
        if len(restriction.sets) != poset.n:
            raise LabelingError("restriction does not match poset")
        self.poset = poset
        self.ell = int(ell)
        self.restriction = restriction
        self.r_ptr, self.r_val = restriction.packed()
        self.up_ptr, self.up_idx, self.down_ptr, self.down_idx = poset._csr
        # labels for which a Bender-Knuth swap can act somewhere
        self.bk_labels = sorted({k for s in restriction.sets for k in s[:-1]})
        self._ks = np.array(self.bk_labels, dtype=np.int16)

    def describe(self) -> str:
        return f"labelings({self.poset.name}, ell={self.ell})"

    # -- construction and enumeration ---------------------------------------

    def empty(self) -> np.ndarray:
        return np.zeros((self.poset.n, self.ell), dtype=np.int16)

    def minimal(self) -> np.ndarray:
        out = self.empty()
        for p in range(self.poset.n):
            out[p, :] = self.restriction.sets[p][0]
        self.validate(out)
        return out

    def maximal(self) -> np.ndarray:
        out = self.empty()
        for p in range(self.poset.n):
            out[p, :] = self.restriction.sets[p][-1]
        self.validate(out)
        return out

    def enumerate(self, cap: int = DEFAULT_ENUM_CAP):
        """Yield every valid labeling exactly once, in a fixed DFS order."""
        ext = self.poset.linear_extension()
        cells = [(p, i) for i in range(self.ell) for p in ext]
        down = self.poset.down
        sets = self.restriction.sets
        up_maxes = [
            min((sets[c][-1] for c in self.poset.up[p]), default=None)
            for p in range(self.poset.n)
        ]
        out = self.empty()
        count = 0

        def grow(idx):
            nonlocal count
            if idx == len(cells):
                count += 1
                if count > cap:
                    raise CapExceeded(f"more than {cap} labelings")
                yield out.copy()
                return
            p, i = cells[idx]
            floor = out[p, i - 1] if i > 0 else None
            layer_floor = max((int(out[c, i]) for c in down[p]), default=None)
            cap_up = up_maxes[p]
            for v in sets[p]:
                if floor is not None and v < floor:
                    continue
                if layer_floor is not None and v <= layer_floor:
                    continue
                if cap_up is not None and v >= cap_up:
                    break
                out[p, i] = v
                yield from grow(idx + 1)

        yield from grow(0)

    def count(self, cap: int = DEFAULT_ENUM_CAP) -> int:
        return sum(1 for _ in self.enumerate(cap))

    def validate(self, labels: np.ndarray):
        if labels.shape != (self.poset.n, self.ell):
            raise LabelingError(f"bad shape {labels.shape}")
        for p in range(self.poset.n):
            allowed = set(self.restriction.sets[p])
            for i in range(self.ell):
                if int(labels[p, i]) not in allowed:
                    raise LabelingError(f"label {labels[p, i]} not allowed at ({p},{i})")
                if i > 0 and labels[p, i - 1] > labels[p, i]:
                    raise LabelingError(f"fiber of {p} decreases at copy {i}")
        for a, b in self.poset.covers:
            for i in range(self.ell):
                if labels[a, i] >= labels[b, i]:
                    raise LabelingError(f"copy {i} not strict on cover ({a},{b})")

    def key(self, labels: np.ndarray) -> bytes:
        return labels.tobytes()

    def from_key(self, data: bytes) -> np.ndarray:
        return np.frombuffer(data, dtype=np.int16).reshape(self.poset.n, self.ell).copy()

    # -- dynamics ------------------------------------------------------------

    def bender_knuth(self, labels: np.ndarray, k: int, validate: bool = False) -> np.ndarray:
        """The involution swapping free k labels with the next allowed label."""
        out = labels.copy()
        _kernels.bk_sweep(out, np.array([k], dtype=np.int16), self.r_ptr, self.r_val,
                          self.up_ptr, self.up_idx, self.down_ptr, self.down_idx)
        if validate:
            self.validate(out)
        return out

    def promotion(self, labels: np.ndarray) -> np.ndarray:
        """Bender-Knuth swaps composed over all labels, smallest first."""
        out = labels.copy()
        _kernels.bk_sweep(out, self._ks, self.r_ptr, self.r_val,
                          self.up_ptr, self.up_idx, self.down_ptr, self.down_idx)
        return out

    def promotion_power(self, labels: np.ndarray, t: int) -> np.ndarray:
        out = labels.copy()
        for _ in range(t):
            _kernels.bk_sweep(out, self._ks, self.r_ptr, self.r_val,
                              self.up_ptr, self.up_idx, self.down_ptr, self.down_idx)
        return out

    def orbit(self, labels: np.ndarray) -> list[np.ndarray]:
        start = self.key(labels)
        out = [labels.copy()]
        cur = self.promotion(labels)
        while self.key(cur) != start:
            out.append(cur)
            cur = self.promotion(cur)
        return out

    def free_cells(self, labels: np.ndarray, k: int):
        """(raisable positions, lowerable positions) per element for the swap
        pair (k, next label); mirrors what the kernel treats as free."""
        raisable, lowerable = [], []
        for p in range(self.poset.n):
            k2 = self.restriction.successor(p, k)
            if k not in self.restriction.sets[p] or k2 is None:
                continue
            for i in range(self.ell):
                v = int(labels[p, i])
                if v == k and all(labels[c, i] > k2 for c in self.poset.up[p]):
                    raisable.append((p, i))
                if v == k2 and all(labels[c, i] < k for c in self.poset.down[p]):
                    lowerable.append((p, i))
        return raisable, lowerable

    # -- literal raisable/lowerable oracle (debug) ----------------------------

    def raisable_oracle(self, labels: np.ndarray, p: int, i: int) -> bool:
        return self._mobile_oracle(labels, p, i, +1)

    def lowerable_oracle(self, labels: np.ndarray, p: int, i: int) -> bool:
        return self._mobile_oracle(labels, p, i, -1)

    def _mobile_oracle(self, labels, p, i, direction) -> bool:
        """Exhaustive form of the definition: some relabeling of the whole
        fiber of p, everything else fixed, moves cell (p, i) the right way."""
        base = int(labels[p, i])
        for fiber in iproduct(self.restriction.sets[p], repeat=self.ell):
            if direction * (fiber[i] - base) <= 0:
                continue
            if any(fiber[j] > fiber[j + 1] for j in range(self.ell - 1)):
                continue
            ok = True
            for j in range(self.ell):
                if any(labels[c, j] <= fiber[j] for c in self.poset.up[p]):
                    ok = False
                    break
                if any(labels[c, j] >= fiber[j] for c in self.poset.down[p]):
                    ok = False
                    break
            if ok:
                return True
        return False

    # -- statistics ------------------------------------------------------------

    def chi(self, labels: np.ndarray, cells) -> int:
        """Sum of labels over an iterable of (element, copy) cells."""
        return int(sum(int(labels[p, i]) for p, i in cells))

    def binary_content(self, labels: np.ndarray) -> tuple[int, ...]:
        """Word (a_1..a_q): a_v = 1 iff label value v occurs somewhere."""
        lo, hi = self.restriction.label_range()
        if lo < 1:
            raise LabelingError("binary content needs labels >= 1")
        present = set(int(v) for v in labels.ravel())
        return tuple(1 if v in present else 0 for v in range(1, hi + 1))

    def fiber_exceed_count(self, labels: np.ndarray, p: int, d: int) -> int:
        """Number of labels above d in the fiber of p."""
        return int(np.sum(labels[p, :] > d))

    def xi(self, labels: np.ndarray, p: int, b: int) -> int:
        """Weighted count sum_{k=1..b} k * #{copies with label x+y+k-1 at p},
        where (x, y) are the chain coordinates of p."""
        if self.poset.coords is None:
            raise LabelingError("xi needs chain coordinates")
        x, y = self.poset.coords[p][:2]
        total = 0
        for k in range(1, b + 1):
            total += k * int(np.sum(labels[p, :] == x + y + k - 1))
        return total

    def dist(self, labels: np.ndarray, cell, count: int | None = None) -> list[int]:
        """Multiset of the cell's labels along ``count`` promotion steps
        (defaults to the labeling's own promotion order)."""
        if count is None:
            count = len(self.orbit(labels))
        p, i = cell
        out = []
        cur = labels
        for _ in range(count):
            out.append(int(cur[p, i]))
            cur = self.promotion(cur)
        return sorted(out)

    # -- serialization ----------------------------------------------------------

    def labeling_to_json(self, labels: np.ndarray) -> dict:
        return {
            "labels": [[int(v) for v in row] for row in labels],
            "ell": self.ell,
            "restriction_ref": self.restriction.to_json(),
        }

    def labeling_from_json(self, doc) -> np.ndarray:
        arr = np.array(doc["labels"], dtype=np.int16)
        self.validate(arr)
        return arr
