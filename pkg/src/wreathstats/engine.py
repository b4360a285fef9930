"""Vectorized tallying of (des_L, rmaj_{L,n}) over C_a wr S_n.

Each letter is replaced by its integer rank under <_L, so a descent is a
plain integer comparison.  Value permutations are processed in blocks; all
a^n colorings of a block are handled at once with numpy broadcasting.  Blocks
are independent, so they can be farmed out to worker processes and the
partial tallies merged by addition.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from .perm import DEFAULT_GUARD, LOrder, check_guard

# letters per block (rows * colorings * n); keeps peak memory near 100 MB
_BLOCK_CELLS = 1 << 21


def _value_blocks(n: int, rows: int):
    perms = itertools.permutations(range(1, n + 1))
    while True:
        block = list(itertools.islice(perms, rows))
        if not block:
            return
        yield block


def _colorings(a: int, n: int) -> np.ndarray:
    grids = np.indices((a,) * n).reshape(n, -1).T
    return np.ascontiguousarray(grids, dtype=np.intp)


def _tally_block(args) -> Counter:
    a, L, n, block, tie_break = args
    order = LOrder(a, L, tie_break)
    keytab = np.array(order.key_table(n), dtype=np.int64)
    colors = _colorings(a, n)
    values = np.array(block, dtype=np.intp)
    keys = keytab[values[:, None, :], colors[None, :, :]]
    keys = np.concatenate([np.zeros(keys.shape[:2] + (1,), dtype=np.int64), keys], axis=2)
    desc = keys[..., :-1] > keys[..., 1:]
    des = desc.sum(axis=2).ravel()
    rmaj = (desc @ np.arange(n, 0, -1, dtype=np.int64)).ravel()
    width = n * (n + 1) // 2 + 1
    counts = np.bincount(des * width + rmaj, minlength=(n + 1) * width)
    return Counter({
        (int(c) // width, int(c) % width): int(counts[c]) for c in np.flatnonzero(counts)
    })


def tally(a: int, L, n: int, *, guard: int | None = DEFAULT_GUARD,
          jobs: int = 1, tie_break: str = "ascending") -> Counter:
    """Counter mapping (des_L, rmaj_{L,n}) to the number of group elements."""
    LOrder(a, L)  # validates L
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    check_guard(a, n, guard)
    if n == 0:
        return Counter({(0, 0): 1})
    rows = max(1, _BLOCK_CELLS // (a**n * n))
    tasks = ((a, frozenset(L), n, block, tie_break) for block in _value_blocks(n, rows))
    total: Counter = Counter()
    nblocks = math.ceil(math.factorial(n) / rows)
    if jobs > 1 and nblocks > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_tally_block, tasks):
                total.update(part)
    else:
        for task in tasks:
            total.update(_tally_block(task))
    return total
