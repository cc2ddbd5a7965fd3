"""Small cached lookup tables shared by both kernel implementations."""

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def rev_interleave(n: int) -> np.ndarray:
    """Map a state-space bit mask to its packed-key contribution.

    State-space masks carry qubit 1 in the most significant of n bits,
    packed keys carry qubit 1 in the lowest 2-bit field, so bit n-1-i of
    the mask lands on key bit 2*i.  The returned table covers all 2**n
    masks; a z mask uses the same table shifted left by one.
    """
    v = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        out |= ((v >> i) & 1) << (2 * (n - 1 - i))
    return out
