"""The gamma poset of a restriction and the bijection between labelings of
stacked poset copies and partitions on it.

Elements of the gamma poset are pairs (p, k) with k an allowed label at p
other than its maximum; each layer of a labeling corresponds to an order
ideal, a labeling to a nested multichain of ideals, and the whole structure
collapses to the closed form sigma(p, k) = #(copies whose label at p
exceeds k).
"""

from __future__ import annotations

import numpy as np

from .labelings import PStrictSpace
from .partitions import PartitionSpace
from .poset import Poset, PosetError, product, chain
from .restriction import RestrictionFunction


class GammaError(ValueError):
    pass


class GammaPoset:
    """Pairs (p, k) ordered by the two covering clauses of the construction."""

    def __init__(self, poset: Poset, labels, source_poset: Poset,
                 restriction: RestrictionFunction):
        self.poset = poset
        self.labels = tuple(tuple(lab) for lab in labels)
        self.index = {lab: e for e, lab in enumerate(self.labels)}
        self.source_poset = source_poset
        self.restriction = restriction

    def __repr__(self):
        return f"GammaPoset({self.poset.name}: {self.poset.n} elements)"

    def column(self, p: int) -> list[int]:
        return [e for e, (pp, _) in enumerate(self.labels) if pp == p]

    def to_json(self) -> dict:
        doc = self.poset.to_json()
        doc["gamma_labels"] = [list(lab) for lab in self.labels]
        doc["restriction"] = self.restriction.to_json()
        return doc


def gamma_poset(P: Poset, R: RestrictionFunction) -> GammaPoset:
    """Build the gamma poset of (P, R).

    Covers: (p, k1) is covered by (p, k2) when k1 is the next allowed label
    after k2; and (p1, k1) is covered by (p2, k2) when p2 covers p1, k1 is
    the largest label under k2 at p1 (not p1's maximum), and k2 is the
    largest label at p2 with that property.
    """
    if not R.consistent:
        raise GammaError("gamma poset needs a consistent restriction")
    labels = [(p, k) for p in range(P.n) for k in R.truncate_max(p)]
    index = {lab: e for e, lab in enumerate(labels)}
    covers = []
    for (p2, k2), e2 in index.items():
        nxt = R.successor(p2, k2)
        if nxt is not None and (p2, nxt) in index:
            covers.append((index[(p2, nxt)], e2))
        for p1 in P.down[p2]:
            k1 = R.predecessor(p1, k2)
            if k1 is None or k1 == R.sets[p1][-1]:
                continue
            if any(R.predecessor(p1, k) == k1 for k in R.sets[p2] if k > k2):
                continue
            covers.append((index[(p1, k1)], e2))
    name = f"gamma({P.name})"
    return GammaPoset(Poset(len(labels), covers, name=name), labels, P, R)


def is_column_adjacent(G: GammaPoset) -> bool:
    """True when every cover changes the label coordinate by exactly one."""
    return all(abs(G.labels[b][1] - G.labels[a][1]) == 1 for a, b in G.poset.covers)


def graded_isomorphism(G: GammaPoset, q: int):
    """The cover-preserving bijection from the gamma poset of a graded poset
    with global bound q onto (poset) x (chain of q-n-1).

    Sends (p, k) to (p, q - n + rank(p) - k); returns (target poset, mapping
    array) and raises when the map fails to exist or preserve covers.
    """
    P = G.source_poset
    profile = P.rank_profile
    if not profile.is_graded:
        raise GammaError("graded isomorphism needs a graded source poset")
    n = profile.top_rank
    if q < n + 2:
        raise GammaError(f"global bound {q} too small for rank {n}")
    m = q - n - 1
    target = product(P, chain(m))
    if target.n != G.poset.n:
        raise GammaError("size mismatch: restriction is not the global-bound one")
    mapping = np.empty(G.poset.n, dtype=np.int64)
    for e, (p, k) in enumerate(G.labels):
        i = q - n + profile.rank_of[p] - k
        if not 1 <= i <= m:
            raise GammaError(f"image of ({p},{k}) falls outside the chain")
        mapping[e] = p * m + (i - 1)
    if len(set(mapping.tolist())) != G.poset.n:
        raise GammaError("mapping is not a bijection")
    image = {(int(mapping[a]), int(mapping[b])) for a, b in G.poset.covers}
    if image != set(target.covers):
        raise GammaError("mapping does not preserve covers both ways")
    return target, mapping


def flag_triangle_isomorphism(a: int, b: int):
    """For the flag beta(i,j) = b + 2i - 1 on [a] x [b], the gamma poset is
    isomorphic to (triangle of size a) x (chain of b) via
    ((i,j),k) -> ((i, i+j-k+a-1), j).  Returns (gamma, target, mapping)."""
    from .poset import chain_product, triangle
    from .restriction import typea_flag

    P = chain_product((a, b))
    R = typea_flag(P)
    G = gamma_poset(P, R)
    target = product(triangle(a), chain(b))
    if target.n != G.poset.n:
        raise GammaError("flag gamma poset has unexpected size")
    coord_index = {c: e for e, c in enumerate(target.coords)}
    mapping = np.empty(G.poset.n, dtype=np.int64)
    for e, (p, k) in enumerate(G.labels):
        i, j = P.coords[p]
        u = i + j - k + a - 1
        key = (i, u, j)
        if key not in coord_index:
            raise GammaError(f"image {key} of (({i},{j}),{k}) not in the triangle product")
        mapping[e] = coord_index[key]
    if len(set(mapping.tolist())) != G.poset.n:
        raise GammaError("mapping is not a bijection")
    image = {(int(mapping[x]), int(mapping[y])) for x, y in G.poset.covers}
    if image != set(target.covers):
        raise GammaError("mapping does not preserve covers both ways")
    return G, target, mapping


class GammaBijection:
    """The equivariant bijection between labelings of (P, ell, R) and
    partitions on the gamma poset of (P, R)."""

    def __init__(self, P: Poset, ell: int, R: RestrictionFunction):
        self.labeling_space = PStrictSpace(P, ell, R)
        self.gamma = gamma_poset(P, R)
        self.partition_space = PartitionSpace(self.gamma.poset, ell, gamma=self.gamma)
        self._p_of = np.array([p for p, _ in self.gamma.labels], dtype=np.int64)
        self._k_of = np.array([k for _, k in self.gamma.labels], dtype=np.int16)

    def forward(self, labels: np.ndarray, debug: bool = False) -> np.ndarray:
        """sigma(p, k) = number of copies whose label at p exceeds k."""
        values = (labels[self._p_of, :] > self._k_of[:, None]).sum(axis=1).astype(np.uint16)
        if debug:
            assert np.array_equal(values, self._forward_via_multichain(labels))
        return values

    def forward_multichain(self, labels: np.ndarray) -> list[frozenset]:
        """The nested ideals O_ell <= ... <= O_1, layer i mapping to the
        ideal of gamma elements whose label coordinate is at least the
        layer's value at that column."""
        ideals = []
        for i in range(self.labeling_space.ell):
            members = frozenset(
                e for e, (p, k) in enumerate(self.gamma.labels) if k >= labels[p, i]
            )
            ideals.append(members)
        for later, earlier in zip(ideals[1:], ideals):
            if not later <= earlier:
                raise GammaError("layer ideals fail to nest")
        down = self.gamma.poset.down
        for members in ideals:
            for e in members:
                if any(d not in members for d in down[e]):
                    raise GammaError("layer image is not an order ideal")
        return ideals

    def _forward_via_multichain(self, labels: np.ndarray) -> np.ndarray:
        ideals = self.forward_multichain(labels)
        values = np.zeros(self.gamma.poset.n, dtype=np.uint16)
        for members in ideals:
            for e in range(self.gamma.poset.n):
                if e not in members:
                    values[e] += 1
        return values

    def inverse(self, values: np.ndarray) -> np.ndarray:
        """f(p, i) = least allowed label k at p with sigma(p, k) <= ell - i,
        the column maximum always counting as 0."""
        ell = self.labeling_space.ell
        R = self.labeling_space.restriction
        labels = self.labeling_space.empty()
        for p in range(self.labeling_space.poset.n):
            col = R.sets[p]
            for i0 in range(ell):
                need = ell - (i0 + 1)
                lab = col[-1]
                for k in col[:-1]:
                    if int(values[self.gamma.index[(p, k)]]) <= need:
                        lab = k
                        break
                labels[p, i0] = lab
        return labels
