#!/usr/bin/env python3
"""Compare the vectorized degradability-index kernel against the scalar path.

The universal anti-degradability scans classify thousands of environment
states per gate; this shows why they run through the batched kernel.

    python benchmarks/bench_index_kernel.py [grid]
"""

import sys
import time

import numpy as np

from envcap.degradability import (
    batch_degradability_index,
    bloch_sphere_grid,
    degradability_index,
)
from envcap.linalg import haar_unitary


def main():
    grid = int(sys.argv[1]) if len(sys.argv) > 1 else 48
    rng = np.random.default_rng(0)
    gate = haar_unitary(4, rng)
    etas, _, _ = bloch_sphere_grid(grid, grid)

    t0 = time.perf_counter()
    batch = batch_degradability_index(gate, etas)
    t_batch = time.perf_counter() - t0

    t0 = time.perf_counter()
    scalar = np.array([degradability_index(gate, eta) for eta in etas])
    t_scalar = time.perf_counter() - t0

    dev = np.abs(batch - scalar).max()
    n = etas.shape[0]
    print(f"grid {grid}x{grid} ({n} states)")
    print(f"  batched kernel: {t_batch * 1e3:8.2f} ms  ({t_batch / n * 1e6:6.2f} us/state)")
    print(f"  scalar path:    {t_scalar * 1e3:8.2f} ms  ({t_scalar / n * 1e6:6.2f} us/state)")
    print(f"  speedup:        {t_scalar / t_batch:8.1f}x")
    print(f"  max deviation:  {dev:.3e}")
    if dev > 1e-10:
        raise SystemExit("kernel disagrees with the scalar path")


if __name__ == "__main__":
    main()
