#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-numpy fallback.

Two workloads drive the same code paths the orbit engine uses:

* rowmotion sweeps over every partition of a 24-element product poset, and
* full promotion sweeps over every labeling of a global-bound family.

Run:  python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from orbitkit import _kernels
from orbitkit import poset as ps
from orbitkit import restriction as rs
from orbitkit.dynamics import orbit_decomposition
from orbitkit.labelings import PStrictSpace
from orbitkit.partitions import PartitionSpace


def bench_rowmotion(repeat):
    sp = PartitionSpace(ps.chain_product((4, 3, 2)), 2)
    sigmas = list(sp.enumerate())
    order = sp._row_order
    up_ptr, up_idx, down_ptr, down_idx = sp.poset._csr

    def work():
        acc = 0
        for sigma in sigmas:
            buf = sigma.copy()
            for _ in range(repeat):
                _kernels.toggle_sequence(buf, order, up_ptr, up_idx,
                                         down_ptr, down_idx, sp.ell)
            acc += int(buf[0])
        return acc

    return f"rowmotion x{repeat} on {len(sigmas)} partitions of {sp.poset.name}", work


def bench_promotion(repeat):
    P = ps.chain_product((3, 3))
    space = PStrictSpace(P, 3, rs.from_global_bound(P, 6))
    labelings = list(space.enumerate())

    def work():
        acc = 0
        for f in labelings:
            buf = f.copy()
            for _ in range(repeat):
                _kernels.bk_sweep(buf, space._ks, space.r_ptr, space.r_val,
                                  space.up_ptr, space.up_idx,
                                  space.down_ptr, space.down_idx)
            acc += int(buf[0, 0])
        return acc

    return f"promotion x{repeat} on {len(labelings)} labelings of {P.name}", work


def bench_orbits(_repeat):
    sp = PartitionSpace(ps.chain_product((3, 3, 2)), 2)
    sigmas = list(sp.enumerate())

    def work():
        return len(orbit_decomposition(sigmas, sp.rowmotion).orbit_sizes)

    return f"orbit decomposition of {len(sigmas)} partitions of {sp.poset.name}", work


def run(name, work):
    results = {}
    for backend in _kernels.backends():
        with _kernels.use_backend(backend):
            work()  # warm up (and JIT-compile on the numba path)
            t0 = time.perf_counter()
            check = work()
            results[backend] = (time.perf_counter() - t0, check)
    checks = {c for _, c in results.values()}
    assert len(checks) == 1, f"backends disagree on {name}: {results}"
    line = f"{name}\n"
    for backend, (dt, _) in results.items():
        line += f"    {backend:>7}: {dt:8.3f}s\n"
    if len(results) == 2:
        line += (f"    speedup: {results['python'][0] / results['numba'][0]:.1f}x\n")
    print(line)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=20,
                        help="action applications per state in the sweep benches")
    args = parser.parse_args()
    print(f"available backends: {', '.join(_kernels.backends())}\n")
    for build in (bench_rowmotion, bench_promotion, bench_orbits):
        name, work = build(args.repeat)
        run(name, work)


if __name__ == "__main__":
    main()
