"""Hot inner loops shared by the rowmotion and promotion engines.

Two kernels dominate every orbit computation: applying a sequence of
piecewise-linear toggles to a partition vector, and applying a sweep of
Bender-Knuth involutions to a labeling array.  Both are written against
plain numpy arrays so the same source runs in two modes:

* jitted with ``numba.njit`` (the default whenever numba imports), or
* as-is in pure Python/numpy when the environment variable
  ``ORBITKIT_NO_NUMBA`` is set to a truthy value.

``benchmarks/bench_kernels.py`` times the two paths against each other.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

import numpy as np

ENV_FLAG = "ORBITKIT_NO_NUMBA"


def _toggle_sequence(values, order, up_ptr, up_idx, down_ptr, down_idx, ell):
    """Toggle ``values`` at each element of ``order``, left to right, in place.

    A toggle replaces the value at x by (min over covers of x) + (max over
    elements covered by x) - value, where a missing cover above contributes
    ``ell`` and a missing cover below contributes 0.
    """
    for t in range(order.shape[0]):
        x = order[t]
        hi = ell
        for a in range(up_ptr[x], up_ptr[x + 1]):
            w = values[up_idx[a]]
            if w < hi:
                hi = w
        lo = 0
        for a in range(down_ptr[x], down_ptr[x + 1]):
            w = values[down_idx[a]]
            if w > lo:
                lo = w
        values[x] = hi + lo - values[x]
    return values


def _bk_sweep(labels, ks, r_ptr, r_val, up_ptr, up_idx, down_ptr, down_idx):
    """Apply Bender-Knuth involutions for each k in ``ks``, in order, in place.

    ``labels`` is (num elements, num copies): row p holds the weakly
    increasing fiber of poset element p.  For each k the fiber of p is
    touched only when k lies in the allowed label set of p and is not its
    maximum; k2 denotes the next allowed label.  A k entry is free when
    every cover above p carries a label exceeding k2 in the same column; a
    k2 entry is free when every cover below carries a label under k.  The
    free block of a k's followed by b k2's becomes b k's followed by a k2's.
    """
    n_p, ell = labels.shape
    for t in range(ks.shape[0]):
        k = ks[t]
        for p in range(n_p):
            pos = -1
            for a in range(r_ptr[p], r_ptr[p + 1]):
                if r_val[a] == k:
                    pos = a
                    break
                if r_val[a] > k:
                    break
            if pos < 0 or pos + 1 >= r_ptr[p + 1]:
                continue
            k2 = r_val[pos + 1]
            s = 0
            while s < ell and labels[p, s] < k:
                s += 1
            e = s
            while e < ell and labels[p, e] == k:
                e += 1
            e2 = e
            while e2 < ell and labels[p, e2] == k2:
                e2 += 1
            if s == e2:
                continue
            a_cnt = 0
            for i in range(s, e):
                ok = True
                for a in range(up_ptr[p], up_ptr[p + 1]):
                    if labels[up_idx[a], i] <= k2:
                        ok = False
                        break
                if ok:
                    a_cnt += 1
            b_cnt = 0
            for i in range(e, e2):
                ok = True
                for a in range(down_ptr[p], down_ptr[p + 1]):
                    if labels[down_idx[a], i] >= k:
                        ok = False
                        break
                if ok:
                    b_cnt += 1
            w = e - a_cnt
            for i in range(w, w + b_cnt):
                labels[p, i] = k
            for i in range(w + b_cnt, e + b_cnt):
                labels[p, i] = k2
    return labels


_PYTHON_IMPL = {
    "toggle_sequence": _toggle_sequence,
    "bk_sweep": _bk_sweep,
}


def _flag_set() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() not in ("", "0", "false", "no")


def _build_numba_impl():
    from numba import njit

    return {name: njit(cache=True)(fn) for name, fn in _PYTHON_IMPL.items()}


_NUMBA_IMPL = None
if not _flag_set():
    try:
        _NUMBA_IMPL = _build_numba_impl()
    except ImportError:
        _NUMBA_IMPL = None

BACKEND = "numba" if _NUMBA_IMPL is not None else "python"
_ACTIVE = dict(_NUMBA_IMPL if _NUMBA_IMPL is not None else _PYTHON_IMPL)


def backends() -> tuple[str, ...]:
    """Names of the kernel implementations available in this process."""
    return ("python", "numba") if _NUMBA_IMPL is not None else ("python",)


def get_impl(backend: str) -> dict:
    if backend == "python":
        return _PYTHON_IMPL
    if backend == "numba":
        if _NUMBA_IMPL is None:
            raise RuntimeError("numba backend unavailable (not importable or disabled)")
        return _NUMBA_IMPL
    raise ValueError(f"unknown kernel backend {backend!r}")


@contextmanager
def use_backend(backend: str):
    """Temporarily route the module-level kernels through ``backend``."""
    global BACKEND
    impl = get_impl(backend)
    saved, saved_name = dict(_ACTIVE), BACKEND
    _ACTIVE.update(impl)
    BACKEND = backend
    try:
        yield
    finally:
        _ACTIVE.update(saved)
        BACKEND = saved_name


def toggle_sequence(values, order, up_ptr, up_idx, down_ptr, down_idx, ell):
    return _ACTIVE["toggle_sequence"](values, order, up_ptr, up_idx, down_ptr, down_idx, ell)


def bk_sweep(labels, ks, r_ptr, r_val, up_ptr, up_idx, down_ptr, down_idx):
    return _ACTIVE["bk_sweep"](labels, ks, r_ptr, r_val, up_ptr, up_idx, down_ptr, down_idx)
