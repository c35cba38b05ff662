"""Poset partitions (order-preserving maps into 0..ell) and toggle dynamics.

Values live in uint16 arrays indexed by poset element; the virtual bottom
and top of the poset contribute 0 and ell inside the toggle itself and are
never stored.  Rowmotion, toggle-promotion and hyperplane promotion are all
realized as one kernel call applying a precomputed toggle order.
"""

from __future__ import annotations

import numpy as np

from . import _kernels
from .poset import CapExceeded, Poset, PosetError

DEFAULT_ENUM_CAP = 2 * 10**6


class PartitionError(ValueError):
    """A value vector violates the order-preserving or range constraints."""


class PartitionSpace:
    """Order-preserving maps from a poset into {0, ..., ell}."""

    def __init__(self, poset: Poset, ell: int, gamma=None):
        if ell < 1:
            raise PartitionError("ell must be >= 1")
        self.poset = poset
        self.ell = int(ell)
        self.gamma = gamma  # GammaPoset when the elements carry (p, k) labels
        self.up_ptr, self.up_idx, self.down_ptr, self.down_idx = poset._csr
        ext = poset.linear_extension()
        self._row_order = np.array(ext[::-1], dtype=np.int32)

    def describe(self) -> str:
        return f"partitions({self.poset.name}, ell={self.ell})"

    # -- construction and enumeration ---------------------------------------

    def zeros(self) -> np.ndarray:
        return np.zeros(self.poset.n, dtype=np.uint16)

    def full(self) -> np.ndarray:
        return np.full(self.poset.n, self.ell, dtype=np.uint16)

    def enumerate(self, cap: int = DEFAULT_ENUM_CAP):
        """Yield every partition exactly once, in a fixed DFS order."""
        ext = self.poset.linear_extension()
        down = self.poset.down
        out = self.zeros()
        count = 0

        def grow(idx):
            nonlocal count
            if idx == len(ext):
                count += 1
                if count > cap:
                    raise CapExceeded(f"more than {cap} partitions")
                yield out.copy()
                return
            x = ext[idx]
            lo = max((int(out[d]) for d in down[x]), default=0)
            for v in range(lo, self.ell + 1):
                out[x] = v
                yield from grow(idx + 1)

        yield from grow(0)

    def count(self, cap: int = DEFAULT_ENUM_CAP) -> int:
        return sum(1 for _ in self.enumerate(cap))

    def validate(self, values: np.ndarray):
        if values.shape != (self.poset.n,):
            raise PartitionError(f"bad shape {values.shape}")
        if values.size and (values.min() < 0 or values.max() > self.ell):
            raise PartitionError("values out of range")
        for a, b in self.poset.covers:
            if values[a] > values[b]:
                raise PartitionError(f"not order-preserving on cover ({a},{b})")

    def key(self, values: np.ndarray) -> bytes:
        return values.tobytes()

    def from_key(self, data: bytes) -> np.ndarray:
        return np.frombuffer(data, dtype=np.uint16).copy()

    # -- toggles ---------------------------------------------------------------

    def apply_order(self, values: np.ndarray, order: np.ndarray) -> np.ndarray:
        out = values.copy()
        _kernels.toggle_sequence(out, order, self.up_ptr, self.up_idx,
                                 self.down_ptr, self.down_idx, self.ell)
        return out

    def toggle(self, values: np.ndarray, x: int) -> np.ndarray:
        return self.apply_order(values, np.array([x], dtype=np.int32))

    def rowmotion(self, values: np.ndarray) -> np.ndarray:
        """Toggle every element once, from the top of the poset down."""
        return self.apply_order(values, self._row_order)

    def rowmotion_inverse(self, values: np.ndarray) -> np.ndarray:
        return self.apply_order(values, self._row_order[::-1].copy())

    def rowmotion_with_extension(self, values: np.ndarray, extension) -> np.ndarray:
        """Rowmotion along an explicit linear extension (top toggled first)."""
        order = np.array(list(extension)[::-1], dtype=np.int32)
        return self.apply_order(values, order)

    def row_inverse_on_subset(self, values: np.ndarray, elements) -> np.ndarray:
        """Inverse rowmotion restricted to a subset: toggle it bottom-up in
        linear-extension order, neighbors outside the subset held fixed."""
        chosen = set(elements)
        order = [x for x in self.poset.linear_extension() if x in chosen]
        return self.apply_order(values, np.array(order, dtype=np.int32))

    def orbit(self, values: np.ndarray, step=None) -> list[np.ndarray]:
        step = step or self.rowmotion
        start = self.key(values)
        out = [values.copy()]
        cur = step(values)
        while self.key(cur) != start:
            out.append(cur)
            cur = step(cur)
        return out

    # -- toggle-promotion --------------------------------------------------------

    def togpro_order(self) -> np.ndarray:
        """Diagonal sweep order: all elements labeled k toggle together,
        k increasing.  Requires gamma labels on the space."""
        if self.gamma is None:
            raise PartitionError("toggle-promotion needs gamma labels")
        ids = sorted(range(self.poset.n), key=lambda e: (self.gamma.labels[e][1], e))
        return np.array(ids, dtype=np.int32)

    def toggle_promotion(self, values: np.ndarray) -> np.ndarray:
        return self.apply_order(values, self.togpro_order())

    # -- hyperplane promotion ------------------------------------------------------

    def check_projection(self, image: np.ndarray):
        """Lattice projections must preserve order componentwise and push
        coordinate sums up by one along covers."""
        image = np.asarray(image, dtype=np.int64)
        if image.shape[0] != self.poset.n:
            raise PosetError("projection image size mismatch")
        for a, b in self.poset.covers:
            if not (image[a] <= image[b]).all():
                raise PosetError(f"projection not order-preserving on ({a},{b})")
            if image[b].sum() - image[a].sum() != 1:
                raise PosetError(f"projection not rank-preserving on ({a},{b})")
        return image

    def hyperplane_order(self, image, v, descending: bool = True) -> np.ndarray:
        """Toggle order for promotion along the hyperplanes <image(x), v> = i.

        Elements on one hyperplane commute; hyperplanes are swept with the
        index decreasing (the convention pinned by the toggle-promotion
        comparison suite; see the report metadata).
        """
        image = self.check_projection(image)
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (image.shape[1],) or not np.isin(v, (-1, 1)).all():
            raise PosetError("direction must be a +-1 vector matching the projection")
        idx = image @ v
        sign = -1 if descending else 1
        ids = sorted(range(self.poset.n), key=lambda e: (sign * idx[e], e))
        return np.array(ids, dtype=np.int32)

    def hyperplane_promotion(self, values: np.ndarray, image, v,
                             descending: bool = True) -> np.ndarray:
        return self.apply_order(values, self.hyperplane_order(image, v, descending))

    def identity_projection(self) -> np.ndarray:
        if self.poset.coords is None:
            raise PosetError("identity projection needs coords")
        return np.array(self.poset.coords, dtype=np.int64)

    # -- statistics ----------------------------------------------------------------

    def chi(self, values: np.ndarray, elements) -> int:
        return int(sum(int(values[x]) for x in elements))

    def dist(self, values: np.ndarray, x: int, image, v, count: int,
             descending: bool = True) -> list[int]:
        """Multiset of values at x along ``count`` hyperplane-promotion steps."""
        order = self.hyperplane_order(image, v, descending)
        out = []
        cur = values
        for _ in range(count):
            out.append(int(cur[x]))
            cur = self.apply_order(cur, order)
        return sorted(out)

    # -- serialization ----------------------------------------------------------------

    def partition_to_json(self, values: np.ndarray) -> dict:
        doc = {
            "values": [int(v) for v in values],
            "ell": self.ell,
            "poset_ref": self.poset.to_json(),
        }
        if self.gamma is not None:
            doc["gamma_labels"] = [list(lab) for lab in self.gamma.labels]
        return doc

    def partition_from_json(self, doc) -> np.ndarray:
        arr = np.array(doc["values"], dtype=np.uint16)
        self.validate(arr)
        return arr


# -- graded toggle-promotion without gamma labels ------------------------------


def graded_togpro_order(P: Poset, q: int, space: PartitionSpace) -> np.ndarray:
    """Toggle-promotion order on a product space (P factor times a chain of
    q-n-1), grouping (p, i) by the diagonal index q - n + rank(p) - i."""
    profile = P.rank_profile
    if not profile.is_graded:
        raise PosetError("graded toggle-promotion needs a graded factor")
    n = profile.top_rank
    m = q - n - 1
    if m < 1 or space.poset.n != P.n * m:
        raise PosetError("space is not the product of the factor with a length q-n-1 chain")

    def diag(e):
        p, i0 = divmod(e, m)
        return q - n + profile.rank_of[p] - (i0 + 1)

    ids = sorted(range(space.poset.n), key=lambda e: (diag(e), e))
    return np.array(ids, dtype=np.int32)


def slice_decomposition_order(P: Poset, q: int, space: PartitionSpace) -> np.ndarray:
    """Inverse rowmotion applied slice by slice: the top chain layer first,
    each slice toggled bottom-up."""
    profile = P.rank_profile
    n = profile.top_rank
    m = q - n - 1
    ext = P.linear_extension()
    order = []
    for j in range(m, 0, -1):
        for p in ext:
            order.append(p * m + (j - 1))
    return np.array(order, dtype=np.int32)


# -- diff words ----------------------------------------------------------------------


def diff_word(space: PartitionSpace, values: np.ndarray) -> tuple[int, ...]:
    """Hyperplane disagreement word (a_1..a_q) of a gamma-partition: a_k = 0
    iff every column agrees across the k-1 / k diagonals, values below the
    column's label range reading ell and values at or above its maximum
    reading 0."""
    gamma = space.gamma
    if gamma is None:
        raise PartitionError("diff word needs gamma labels")
    R = gamma.restriction
    if not R.is_interval():
        raise PartitionError("diff word is defined for interval restrictions")
    lo, q = R.label_range()
    if lo < 1:
        raise PartitionError("diff word needs labels >= 1")
    ell = space.ell

    def eff(p, j):
        s = R.sets[p]
        if j < s[0]:
            return ell
        if j >= s[-1]:
            return 0
        return int(values[gamma.index[(p, j)]])

    word = []
    for k in range(1, q + 1):
        same = all(eff(p, k - 1) == eff(p, k) for p in range(len(R.sets)))
        word.append(0 if same else 1)
    return tuple(word)


def diff_word_graded(space: PartitionSpace, values: np.ndarray, P: Poset,
                     q: int) -> tuple[int, ...]:
    """Diff word computed on the product form, diagonals indexed by
    q - n - i + rank(p)."""
    profile = P.rank_profile
    n = profile.top_rank
    m = q - n - 1
    ell = space.ell

    def eff(p, i):
        if i < 1:
            return 0
        if i > m:
            return ell
        return int(values[p * m + (i - 1)])

    word = []
    for k in range(1, q + 1):
        same = True
        for p in range(P.n):
            i = q - n + profile.rank_of[p] - k
            if eff(p, i) != eff(p, i + 1):
                same = False
                break
        word.append(0 if same else 1)
    return tuple(word)
