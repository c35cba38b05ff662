"""Finite posets: families, products, order ideals, rank data, isomorphism.

Elements are dense 0-based indices; the cover relation is the single source
of truth.  Optional per-element coordinate tuples are carried for
product-of-chains style posets (products, triangles, staircases) and feed
the antipode map and hyperplane projections.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from functools import cached_property

import numpy as np


class PosetError(ValueError):
    """Malformed poset construction or spec string."""


class CapExceeded(RuntimeError):
    """An enumeration outgrew its configured cap."""


DEFAULT_IDEAL_CAP = 10**6

# Full invariant validation is O(n * covers); skip it for giant J-towers.
_VALIDATE_LIMIT = 5000


@dataclass(frozen=True)
class RankProfile:
    is_graded: bool
    rank_of: tuple[int, ...]
    top_rank: int


class Poset:
    """An immutable finite poset given by its covering relation."""

    def __init__(self, n, covers, coords=None, name="", chain_lengths=None, validate=True):
        self.n = int(n)
        self.covers = tuple(sorted((int(a), int(b)) for a, b in covers))
        self.coords = None if coords is None else tuple(tuple(c) for c in coords)
        self.name = name or f"poset({self.n})"
        # set when the poset is a full product of chains, in index-lex order
        self.chain_lengths = None if chain_lengths is None else tuple(chain_lengths)
        if validate:
            self._validate()

    def _validate(self):
        if self.n < 0:
            raise PosetError("negative element count")
        seen = set()
        for a, b in self.covers:
            if not (0 <= a < self.n and 0 <= b < self.n) or a == b:
                raise PosetError(f"cover ({a},{b}) out of range")
            if (a, b) in seen:
                raise PosetError(f"duplicate cover ({a},{b})")
            seen.add((a, b))
        self.linear_extension()  # raises on cycles
        if self.coords is not None and len(self.coords) != self.n:
            raise PosetError("coords length mismatch")
        if self.n <= _VALIDATE_LIMIT:
            leq = self.leq
            for a, b in self.covers:
                # transitive reduction: no intermediate element between a cover
                for m in range(self.n):
                    if m != a and m != b and leq[a, m] and leq[m, b]:
                        raise PosetError(f"cover ({a},{b}) implied by {m}: not reduced")
            if self.coords is not None:
                for x in range(self.n):
                    for y in range(self.n):
                        cw = all(u <= v for u, v in zip(self.coords[x], self.coords[y]))
                        if bool(leq[x, y]) != cw:
                            raise PosetError("coords order disagrees with cover order")

    # -- adjacency ----------------------------------------------------------

    @cached_property
    def up(self) -> tuple[tuple[int, ...], ...]:
        """up[x] = indices covering x."""
        res = [[] for _ in range(self.n)]
        for a, b in self.covers:
            res[a].append(b)
        return tuple(tuple(sorted(r)) for r in res)

    @cached_property
    def down(self) -> tuple[tuple[int, ...], ...]:
        """down[x] = indices covered by x."""
        res = [[] for _ in range(self.n)]
        for a, b in self.covers:
            res[b].append(a)
        return tuple(tuple(sorted(r)) for r in res)

    @cached_property
    def leq(self) -> np.ndarray:
        """Boolean matrix of the full order: leq[x, y] iff x <= y."""
        m = np.eye(self.n, dtype=bool)
        for x in reversed(self.linear_extension()):
            for b in self.up[x]:
                m[x] |= m[b]
            m[x, x] = True
        return m

    @cached_property
    def _csr(self):
        """(up_ptr, up_idx, down_ptr, down_idx) int32 arrays for the kernels."""
        return (
            _csr_pack(self.up, self.n) + _csr_pack(self.down, self.n)
        )

    # -- basic structure ----------------------------------------------------

    def linear_extension(self) -> tuple[int, ...]:
        """Topological order, smallest index first among available minima."""
        indeg = [0] * self.n
        for _, b in self.covers:
            indeg[b] += 1
        up = [[] for _ in range(self.n)]
        for a, b in self.covers:
            up[a].append(b)
        heap = [x for x in range(self.n) if indeg[x] == 0]
        heapq.heapify(heap)
        out = []
        while heap:
            x = heapq.heappop(heap)
            out.append(x)
            for b in up[x]:
                indeg[b] -= 1
                if indeg[b] == 0:
                    heapq.heappush(heap, b)
        if len(out) != self.n:
            raise PosetError("cover relation has a cycle")
        return tuple(out)

    def random_linear_extension(self, rng) -> list[int]:
        indeg = [0] * self.n
        for _, b in self.covers:
            indeg[b] += 1
        avail = [x for x in range(self.n) if indeg[x] == 0]
        out = []
        while avail:
            x = avail.pop(rng.randrange(len(avail)))
            out.append(x)
            for b in self.up[x]:
                indeg[b] -= 1
                if indeg[b] == 0:
                    avail.append(b)
        return out

    @cached_property
    def rank_profile(self) -> RankProfile:
        """Longest-chain-from-bottom ranks; graded iff every maximal chain
        has the same length (covers raise rank by one and all maximal
        elements sit at the top rank)."""
        rank = [0] * self.n
        for x in self.linear_extension():
            for d in self.down[x]:
                rank[x] = max(rank[x], rank[d] + 1)
        top = max(rank, default=0)
        graded = all(rank[b] == rank[a] + 1 for a, b in self.covers)
        graded = graded and all(rank[x] == top for x in range(self.n) if not self.up[x])
        return RankProfile(graded, tuple(rank), top)

    def dual(self) -> "Poset":
        coords = None
        return Poset(self.n, [(b, a) for a, b in self.covers], coords, f"dual({self.name})")

    def maximal_elements(self) -> list[int]:
        return [x for x in range(self.n) if not self.up[x]]

    def minimal_elements(self) -> list[int]:
        return [x for x in range(self.n) if not self.down[x]]

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.n == other.n
            and self.covers == other.covers
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.n, self.covers))

    def __repr__(self):
        return f"Poset({self.name}: {self.n} elements, {len(self.covers)} covers)"

    def to_json(self) -> dict:
        doc = {"name": self.name, "element_count": self.n, "covers": [list(c) for c in self.covers]}
        doc["coords"] = None if self.coords is None else [list(c) for c in self.coords]
        return doc

    @classmethod
    def from_json(cls, doc) -> "Poset":
        return cls(doc["element_count"], [tuple(c) for c in doc["covers"]],
                   doc.get("coords"), doc.get("name", ""))


def _csr_pack(adj, n):
    ptr = np.zeros(n + 1, dtype=np.int32)
    for x in range(n):
        ptr[x + 1] = ptr[x] + len(adj[x])
    idx = np.empty(ptr[n], dtype=np.int32)
    pos = 0
    for x in range(n):
        for y in adj[x]:
            idx[pos] = y
            pos += 1
    return ptr, idx


# -- families ---------------------------------------------------------------


def chain(n: int) -> Poset:
    if n < 1:
        raise PosetError("chain size must be >= 1")
    return Poset(n, [(i, i + 1) for i in range(n - 1)],
                 coords=[(i + 1,) for i in range(n)],
                 name=f"chain:{n}", chain_lengths=(n,))


def v_poset() -> Poset:
    """Three elements a < b, a < c (one bottom, two incomparable tops)."""
    return Poset(3, [(0, 1), (0, 2)], name="V")


def product(P: Poset, Q: Poset) -> Poset:
    """Cartesian product order; coords concatenate when both sides have them."""
    n = P.n * Q.n
    covers = []
    for a, b in P.covers:
        for j in range(Q.n):
            covers.append((a * Q.n + j, b * Q.n + j))
    for i in range(P.n):
        for a, b in Q.covers:
            covers.append((i * Q.n + a, i * Q.n + b))
    coords = None
    if P.coords is not None and Q.coords is not None:
        coords = [P.coords[i] + Q.coords[j] for i in range(P.n) for j in range(Q.n)]
    lengths = None
    if P.chain_lengths is not None and Q.chain_lengths is not None:
        lengths = P.chain_lengths + Q.chain_lengths
    return Poset(n, covers, coords, f"({P.name})x({Q.name})", chain_lengths=lengths)


def chain_product(sizes) -> Poset:
    sizes = tuple(int(s) for s in sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise PosetError("product factors must be >= 1")
    P = chain(sizes[0])
    for s in sizes[1:]:
        P = product(P, chain(s))
    P.name = "prod:" + "x".join(str(s) for s in sizes)
    return P


def _coord_subposet(points, name) -> Poset:
    """Componentwise order restricted to ``points`` (sorted lexicographically)."""
    pts = sorted(points)
    index = {c: i for i, c in enumerate(pts)}
    covers = set()
    for c in pts:
        for d in range(len(c)):
            e = tuple(v + 1 if i == d else v for i, v in enumerate(c))
            if e in index:
                covers.add((index[c], index[e]))
    P = Poset(len(pts), sorted(covers), coords=pts, name=name)
    return P


def triangle(n: int) -> Poset:
    """Staircase-shaped subposet {(i, j) : 1 <= i <= n, n-i+1 <= j <= n} of [n]x[n]."""
    if n < 1:
        raise PosetError("triangle size must be >= 1")
    pts = [(i, j) for i in range(1, n + 1) for j in range(n - i + 1, n + 1)]
    return _coord_subposet(pts, f"triangle:{n}")


def staircase(k: int) -> Poset:
    """Shifted staircase {(x, y) : x <= y in [k]} under componentwise order."""
    if k < 1:
        raise PosetError("staircase size must be >= 1")
    pts = [(x, y) for x in range(1, k + 1) for y in range(x, k + 1)]
    return _coord_subposet(pts, f"staircase:{k}")


def order_ideals(P: Poset, cap: int = DEFAULT_IDEAL_CAP):
    """All order ideals of P plus their containment lattice.

    Returns (ideals, JP) where ideals is a deterministic list of frozensets
    (sorted by size then members) and JP is the poset of ideals ordered by
    containment, covers being one-element additions.
    """
    ext = P.linear_extension()
    ideals = []

    def grow(i, members):
        if len(ideals) > cap:
            raise CapExceeded(f"more than {cap} order ideals")
        if i == len(ext):
            ideals.append(frozenset(members))
            return
        x = ext[i]
        grow(i + 1, members)  # x excluded
        if all(d in members for d in P.down[x]):
            members.add(x)
            grow(i + 1, members)
            members.remove(x)

    grow(0, set())
    ideals.sort(key=lambda s: (len(s), sorted(s)))
    index = {s: i for i, s in enumerate(ideals)}
    covers = []
    for i, s in enumerate(ideals):
        for x in range(P.n):
            if x not in s:
                t = s | {x}
                j = index.get(t)
                if j is not None:
                    covers.append((i, j))
    JP = Poset(len(ideals), covers, name=f"J({P.name})", validate=False)
    return ideals, JP


def j_tower(P: Poset, k: int, cap: int = DEFAULT_IDEAL_CAP) -> Poset:
    for _ in range(k):
        _, P = order_ideals(P, cap)
    return P


def antipode(P: Poset, x: int) -> int:
    """Coordinatewise complement of x in a product of chains."""
    if P.chain_lengths is None or P.coords is None:
        raise PosetError("antipode requires a product-of-chains poset with coords")
    target = tuple(a + 1 - c for a, c in zip(P.chain_lengths, P.coords[x]))
    return P.coords.index(target)


# -- spec mini-language -----------------------------------------------------


def build_poset(spec: str, cap: int = DEFAULT_IDEAL_CAP) -> Poset:
    """Build a poset from a spec string.

    Grammar: ``chain:n``, ``prod:a1xa2x...``, ``V``, ``triangle:n``,
    ``staircase:k``, ``J^k:<spec>``, ``propeller:k``, ``cayley-moufang``,
    ``freudenthal``.
    """
    spec = spec.strip()
    try:
        if spec == "V":
            return v_poset()
        if spec == "cayley-moufang":
            P = j_tower(chain_product((3, 2)), 2, cap)
            P.name = "cayley-moufang"
            return P
        if spec == "freudenthal":
            P = j_tower(chain_product((3, 2)), 3, cap)
            P.name = "freudenthal"
            return P
        if spec.startswith("chain:"):
            return chain(int(spec[6:]))
        if spec.startswith("prod:"):
            return chain_product(int(s) for s in spec[5:].split("x"))
        if spec.startswith("triangle:"):
            return triangle(int(spec[9:]))
        if spec.startswith("staircase:"):
            return staircase(int(spec[10:]))
        if spec.startswith("propeller:"):
            k = int(spec[10:])
            if k < 1:
                raise PosetError("propeller parameter must be >= 1")
            P = j_tower(chain_product((2, 2)), k, cap)
            P.name = spec
            return P
        if spec.startswith("J^"):
            head, _, rest = spec.partition(":")
            if not rest:
                raise PosetError(f"J-tower spec needs a base poset: {spec!r}")
            k = int(head[2:])
            if k < 0:
                raise PosetError("J-tower exponent must be >= 0")
            P = j_tower(build_poset(rest, cap), k, cap)
            P.name = spec
            return P
    except PosetError:
        raise
    except (ValueError, IndexError) as exc:
        raise PosetError(f"malformed poset spec {spec!r}") from exc
    raise PosetError(f"unknown poset spec {spec!r}")


def coxeter_number(spec: str) -> int:
    """Coxeter number of a minuscule poset named by its spec string."""
    spec = spec.strip()
    if spec == "cayley-moufang":
        return 12
    if spec == "freudenthal":
        return 18
    if spec.startswith("prod:"):
        sizes = [int(s) for s in spec[5:].split("x")]
        if len(sizes) == 1:
            return sizes[0] + 1  # a chain is the rectangle [k]x[1]
        if len(sizes) == 2:
            return sizes[0] + sizes[1]
        raise PosetError(f"{spec!r} is not a minuscule poset")
    if spec.startswith("chain:"):
        return int(spec[6:]) + 1
    if spec.startswith("staircase:"):
        return 2 * int(spec[10:])
    if spec.startswith("propeller:"):
        return 2 * (int(spec[10:]) + 2)
    raise PosetError(f"{spec!r} is not a minuscule poset")


# -- isomorphism (desk scale) -----------------------------------------------


def _refine_invariants(P: Poset):
    """Iterated neighborhood invariants, used to cut the isomorphism search."""
    inv = [(len(P.down[x]), len(P.up[x])) for x in range(P.n)]
    for _ in range(P.n):
        nxt = [
            (inv[x], tuple(sorted(inv[y] for y in P.down[x])),
             tuple(sorted(inv[y] for y in P.up[x])))
            for x in range(P.n)
        ]
        codes = {v: i for i, v in enumerate(sorted(set(nxt)))}
        nxt = [codes[v] for v in nxt]
        if nxt == inv:
            break
        inv = nxt
    return inv


def find_isomorphism(P: Poset, Q: Poset):
    """A cover-preserving bijection P -> Q as a list, or None."""
    if P.n != Q.n or len(P.covers) != len(Q.covers):
        return None
    pi, qi = _refine_invariants(P), _refine_invariants(Q)
    if sorted(pi) != sorted(qi):
        return None
    q_by_inv = {}
    for y in range(Q.n):
        q_by_inv.setdefault(qi[y], []).append(y)
    order = sorted(range(P.n), key=lambda x: (len(q_by_inv.get(pi[x], ())), x))
    q_cov = set(Q.covers)
    img = [-1] * P.n
    used = [False] * Q.n

    def ok(x, y):
        for d in P.down[x]:
            if img[d] != -1 and (img[d], y) not in q_cov:
                return False
        for u in P.up[x]:
            if img[u] != -1 and (y, img[u]) not in q_cov:
                return False
        return True

    def back(i):
        if i == P.n:
            return True
        x = order[i]
        for y in q_by_inv.get(pi[x], ()):
            if not used[y] and ok(x, y):
                img[x] = y
                used[y] = True
                if back(i + 1):
                    return True
                img[x] = -1
                used[y] = False
        return False

    if not back(0):
        return None
    # cover counts match, so cover-preservation of a bijection is two-sided
    return img


def is_isomorphic(P: Poset, Q: Poset) -> bool:
    return find_isomorphism(P, Q) is not None


def dump_poset(P: Poset, path):
    with open(path, "w") as fh:
        json.dump(P.to_json(), fh, indent=2, sort_keys=True)


def load_poset(path) -> Poset:
    with open(path) as fh:
        return Poset.from_json(json.load(fh))
