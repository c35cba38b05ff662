"""Both kernel backends must compute identical results."""

import random

import numpy as np
import pytest

from orbitkit import _kernels
from orbitkit import poset as ps
from orbitkit import restriction as rs
from orbitkit.labelings import PStrictSpace
from orbitkit.partitions import PartitionSpace


def test_backend_registry():
    assert "python" in _kernels.backends()
    assert _kernels.BACKEND in _kernels.backends()
    with pytest.raises(ValueError):
        _kernels.get_impl("gpu")


@pytest.mark.skipif(len(_kernels.backends()) < 2, reason="numba unavailable")
def test_toggle_sequence_backends_agree():
    rng = random.Random(11)
    P = ps.chain_product((3, 2, 2))
    sp = PartitionSpace(P, 3)
    up_ptr, up_idx, down_ptr, down_idx = P._csr
    for _ in range(50):
        values = np.array([rng.randrange(4) for _ in range(P.n)], dtype=np.uint16)
        values.sort()  # arbitrary but in range; toggles are total functions
        order = np.array([rng.randrange(P.n) for _ in range(25)], dtype=np.int32)
        results = []
        for backend in _kernels.backends():
            buf = values.copy()
            _kernels.get_impl(backend)["toggle_sequence"](
                buf, order, up_ptr, up_idx, down_ptr, down_idx, 3)
            results.append(buf)
        assert np.array_equal(results[0], results[1])


@pytest.mark.skipif(len(_kernels.backends()) < 2, reason="numba unavailable")
def test_bk_sweep_backends_agree():
    P = ps.build_poset("prod:2x2")
    space = PStrictSpace(P, 2, rs.from_global_bound(P, 5))
    ks = space._ks
    for f in space.enumerate():
        results = []
        for backend in _kernels.backends():
            buf = f.copy()
            _kernels.get_impl(backend)["bk_sweep"](
                buf, ks, space.r_ptr, space.r_val,
                space.up_ptr, space.up_idx, space.down_ptr, space.down_idx)
            results.append(buf)
        assert np.array_equal(results[0], results[1])


def test_use_backend_context():
    before = _kernels.BACKEND
    with _kernels.use_backend("python"):
        assert _kernels.BACKEND == "python"
        P = ps.chain(2)
        sp = PartitionSpace(P, 1)
        sigma = sp.zeros()
        assert sp.rowmotion(sigma).tolist() == [1, 1]
    assert _kernels.BACKEND == before


def test_python_backend_runs_whole_stack():
    with _kernels.use_backend("python"):
        P = ps.chain_product((2, 2))
        space = PStrictSpace(P, 2, rs.from_global_bound(P, 4))
        fs = list(space.enumerate())
        from orbitkit.dynamics import orbit_size_multiset
        assert dict(orbit_size_multiset(fs, space.promotion)) == {4: 4, 2: 2}
