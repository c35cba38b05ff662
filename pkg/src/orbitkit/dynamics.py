"""Orbit engine: decompositions, orders, homomesy, resonance, equivariance.

Actions are opaque bijections on numpy states.  States are canonicalized by
their byte serialization; orbit representatives are the byte-minimal states,
so every report is deterministic regardless of iteration order or worker
count.  Statistic averages are exact rationals throughout.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm


class ActionEscape(RuntimeError):
    """The action produced a state outside the enumerated set."""


@dataclass
class OrbitDecomposition:
    action_name: str
    set_descriptor: str
    orbit_sizes: list[int]            # aligned with representatives
    representatives: list[bytes]      # byte-minimal state per orbit, sorted
    total: int = 0

    @property
    def sizes_multiset(self) -> Counter:
        return Counter(self.orbit_sizes)

    @property
    def order(self) -> int:
        return lcm(*self.orbit_sizes) if self.orbit_sizes else 1

    def to_json(self) -> dict:
        return {
            "action": self.action_name,
            "set": self.set_descriptor,
            "total": self.total,
            "orbit_count": len(self.orbit_sizes),
            "orbit_sizes": {str(k): v for k, v in sorted(self.sizes_multiset.items())},
            "order": self.order,
        }


@dataclass
class HomomesyReport:
    statistic_name: str
    averages: list[Fraction]
    is_homomesic: bool
    c: Fraction | None

    def to_json(self) -> dict:
        return {
            "statistic": self.statistic_name,
            "is_homomesic": self.is_homomesic,
            "c": None if self.c is None else str(self.c),
            "orbit_averages": [str(a) for a in self.averages],
        }


@dataclass
class ResonanceReport:
    frequency: int
    projection_name: str
    verified: bool
    degenerate: bool = False
    rotation: str = "left"
    counterexample: list | None = None

    def to_json(self) -> dict:
        return {
            "projection": self.projection_name,
            "frequency": self.frequency,
            "verified": self.verified,
            "degenerate": self.degenerate,
            "rotation": self.rotation,
            "counterexample": self.counterexample,
        }


@dataclass
class EquivarianceReport:
    verified: bool
    witness: list | None = None
    detail: str = ""


def _walk(state, action, key, pool):
    """Keys of the orbit through ``state``; raises if a step leaves the pool."""
    start = key(state)
    keys = [start]
    cur = action(state)
    k = key(cur)
    while k != start:
        if k not in pool:
            raise ActionEscape(f"action left the set after {len(keys)} steps "
                               f"from {state.tolist()}")
        keys.append(k)
        cur = action(cur)
        k = key(cur)
    return keys


def orbit_decomposition(elements, action, *, key=None, action_name="action",
                        set_descriptor="set", workers: int = 1) -> OrbitDecomposition:
    """Decompose the set into orbits of the action.

    ``elements`` is an iterable of states; the action must be a bijection of
    the set onto itself, and any step leaving the set raises ActionEscape
    naming the offender.  With several workers, seeds are claimed through a
    shared seen-set; colliding walks are deduplicated by representative, so
    the result is identical for any worker count.
    """
    key = key or (lambda s: s.tobytes())
    pool = {}
    for s in elements:
        pool[key(s)] = s
    seen: dict[bytes, bool] = {}
    orbits: dict[bytes, int] = {}
    lock = threading.Lock()

    def run(seeds):
        for start in seeds:
            with lock:
                if start in seen:
                    continue
                seen[start] = True
            keys = _walk(pool[start], action, key, pool)
            with lock:
                for k in keys:
                    seen[k] = True
                orbits[min(keys)] = len(keys)

    all_seeds = list(pool)
    if workers <= 1:
        run(all_seeds)
    else:
        chunks = [all_seeds[i::workers] for i in range(workers)]
        errors = []

        def guarded(fn, c):
            try:
                fn(c)
            except Exception as exc:  # propagate after join
                errors.append(exc)

        threads = [threading.Thread(target=guarded, args=(run, c)) for c in chunks]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        if errors:
            raise errors[0]

    reps = sorted(orbits)
    sizes = [orbits[r] for r in reps]
    if sum(sizes) != len(pool):
        raise ActionEscape("orbit sizes do not partition the set")
    return OrbitDecomposition(action_name, set_descriptor, sizes, reps, total=len(pool))


def order_of_action(elements, action, **kw) -> int:
    return orbit_decomposition(elements, action, **kw).order


def homomesy_check(decomp: OrbitDecomposition, lift, action, statistic,
                   statistic_name="statistic") -> HomomesyReport:
    """Exact per-orbit averages of the statistic; ``lift`` turns a stored
    representative key back into a state."""
    averages = []
    for rep, size in zip(decomp.representatives, decomp.orbit_sizes):
        total = Fraction(0)
        cur = lift(rep)
        for _ in range(size):
            total += Fraction(statistic(cur))
            cur = action(cur)
        averages.append(total / size)
    homomesic = len(set(averages)) <= 1
    c = averages[0] if homomesic and averages else None
    return HomomesyReport(statistic_name, averages, homomesic, c)


def resonance_check(elements, action, projection, omega: int,
                    projection_name="projection", rotation: str = "left") -> ResonanceReport:
    """Verify projection(action(x)) is the rotation of projection(x) for all x.

    The cyclic witness must act nontrivially on the image; when every image
    word is rotation-invariant the triple is reported degenerate rather than
    verified.
    """
    nontrivial = False
    for x in elements:
        w = tuple(projection(x))
        if len(w) != omega:
            raise ValueError(f"projection word has length {len(w)}, expected {omega}")
        rot = w[1:] + w[:1] if rotation == "left" else w[-1:] + w[:-1]
        if rot != w:
            nontrivial = True
        got = tuple(projection(action(x)))
        if got != rot:
            return ResonanceReport(omega, projection_name, False, False, rotation,
                                   counterexample=[list(w), list(got)])
    if not nontrivial:
        return ResonanceReport(omega, projection_name, False, True, rotation)
    return ResonanceReport(omega, projection_name, True, False, rotation)


def equivariance_check(map_fn, action_a, action_b, elements_a,
                       key_b=None, target_size: int | None = None) -> EquivarianceReport:
    """Check map(action_a(x)) == action_b(map(x)) for every x.  The map must
    be injective first (and onto, when the target size is supplied)."""
    key_b = key_b or (lambda s: s.tobytes())
    elements_a = list(elements_a)
    images = set()
    for x in elements_a:
        ky = key_b(map_fn(x))
        if ky in images:
            return EquivarianceReport(False, detail="map is not injective")
        images.add(ky)
    if target_size is not None and len(images) != target_size:
        return EquivarianceReport(
            False, detail=f"map image has {len(images)} of {target_size} states")
    for x in elements_a:
        lhs = key_b(map_fn(action_a(x)))
        rhs = key_b(action_b(map_fn(x)))
        if lhs != rhs:
            return EquivarianceReport(False, witness=_jsonable(x), detail="actions disagree")
    return EquivarianceReport(True)


def orbit_size_multiset(elements, action, **kw) -> Counter:
    return orbit_decomposition(elements, action, **kw).sizes_multiset


def _jsonable(x):
    try:
        return x.tolist()
    except AttributeError:
        return list(x)
