"""Pure numpy implementations of the hot kernels.

These are the import-time fallback when the compiled extension is not
available and the reference the extension is tested against.  All three
entry points share their contracts with kmm.kernels._ckernels:

expand_pure(amps, n)        -> float64[4**n] of r_alpha per packed key
expectations(amps, xs, zs)  -> complex <psi|sigma_(x,z)|psi> per state mask pair
star_accumulate(keys, vals, n) -> float64[4**n] symmetrized star product
"""

import numpy as np

from ._tables import rev_interleave

_I_POW = np.array([1, 1j, -1, -1j], dtype=complex)

# x rows processed per block in the batched paths, to bound temporaries
_BLOCK = 128


def _wht(mat: np.ndarray) -> np.ndarray:
    """In-place-style Walsh-Hadamard transform along the last axis."""
    rows, size = mat.shape
    out = mat.copy()
    h = 1
    while h < size:
        out = out.reshape(rows, size // (2 * h), 2, h)
        top = out[:, :, 0, :] + out[:, :, 1, :]
        bot = out[:, :, 0, :] - out[:, :, 1, :]
        out = np.stack((top, bot), axis=2).reshape(rows, size)
        h *= 2
    return out


def expand_pure(amps: np.ndarray, n: int) -> np.ndarray:
    """All 4**n Bloch components r_alpha = <psi|sigma_alpha|psi> / 2**n.

    For each X mask x the correlation vector c_x[j] = conj(psi[j^x])*psi[j]
    is Walsh-Hadamard transformed over the Z mask, then the i**|x&z| factor
    that turns X.Z words into Y factors is applied.  Cost O(n 4**n).
    """
    amps = np.ascontiguousarray(amps, dtype=np.complex128)
    dim = 1 << n
    ri = rev_interleave(n)
    js = np.arange(dim, dtype=np.int64)
    out = np.empty(4 ** n, dtype=np.float64)
    scale = 2.0 ** -n
    conj = amps.conj()
    for start in range(0, dim, _BLOCK):
        xs = js[start:start + _BLOCK]
        corr = conj[xs[:, None] ^ js[None, :]] * amps[None, :]
        trans = _wht(corr)
        phases = _I_POW[(np.bitwise_count(xs[:, None] & js[None, :]) & 3)]
        keys = ri[xs][:, None] + (ri << 1)[None, :]
        out[keys] = (trans * phases).real * scale
    return out


def expectations(amps: np.ndarray, xs: np.ndarray, zs: np.ndarray) -> np.ndarray:
    """Batch <psi|sigma_(x,z)|psi> for state-space mask pairs (no 1/2**n)."""
    amps = np.ascontiguousarray(amps, dtype=np.complex128)
    xs = np.asarray(xs, dtype=np.int64)
    zs = np.asarray(zs, dtype=np.int64)
    js = np.arange(amps.size, dtype=np.int64)
    conj = amps.conj()
    out = np.empty(xs.size, dtype=np.complex128)
    for i in range(xs.size):
        signs = 1.0 - 2.0 * ((np.bitwise_count(zs[i] & js) & 1).astype(np.float64))
        val = np.sum(conj[js ^ xs[i]] * amps * signs)
        out[i] = val * _I_POW[np.bitwise_count(np.int64(xs[i] & zs[i])) & 3]
    return out


def star_accumulate(keys: np.ndarray, vals: np.ndarray, n: int) -> np.ndarray:
    """Symmetrized structure-constant sum over all ordered support pairs.

    Returns acc with acc[g] = sum over pairs (j, k) with key_j ^ key_k = g
    of Re(i**phi(j,k)) * vals[j] * vals[k]; anticommuting pairs contribute
    nothing and cancel between (j, k) and (k, j).
    """
    keys = np.asarray(keys, dtype=np.int64)
    vals = np.asarray(vals, dtype=np.float64)
    mask = np.int64((4 ** n - 1) // 3)
    ycnt = np.bitwise_count(keys & (keys >> 1) & mask).astype(np.int64)
    xbits = keys & mask
    zbits = (keys >> 1) & mask
    acc = np.zeros(4 ** n, dtype=np.float64)
    for start in range(0, keys.size, _BLOCK):
        sl = slice(start, start + _BLOCK)
        prod = keys[sl][:, None] ^ keys[None, :]
        cross = np.bitwise_count(zbits[sl][:, None] & xbits[None, :]).astype(np.int64)
        ypro = np.bitwise_count(prod & (prod >> 1) & mask).astype(np.int64)
        phi = (ycnt[sl][:, None] + ycnt[None, :] + 2 * cross + 3 * ypro) & 3
        sign = (1 - (phi & 2)) * (1 - (phi & 1))
        contrib = sign * (vals[sl][:, None] * vals[None, :])
        acc += np.bincount(prod.ravel(), weights=contrib.ravel(), minlength=acc.size)
    return acc


def star_accumulate_sparse(keys: np.ndarray, vals: np.ndarray, n: int) -> dict:
    """Like star_accumulate but returns a key->value dict; no 4**n array.

    Used above the dense-array cap, where the support is sparse.
    """
    keys = np.asarray(keys, dtype=np.int64)
    vals = np.asarray(vals, dtype=np.float64)
    mask = np.int64((4 ** n - 1) // 3)
    ycnt = np.bitwise_count(keys & (keys >> 1) & mask).astype(np.int64)
    xbits = keys & mask
    zbits = (keys >> 1) & mask
    acc: dict[int, float] = {}
    for start in range(0, keys.size, _BLOCK):
        sl = slice(start, start + _BLOCK)
        prod = keys[sl][:, None] ^ keys[None, :]
        cross = np.bitwise_count(zbits[sl][:, None] & xbits[None, :]).astype(np.int64)
        ypro = np.bitwise_count(prod & (prod >> 1) & mask).astype(np.int64)
        phi = (ycnt[sl][:, None] + ycnt[None, :] + 2 * cross + 3 * ypro) & 3
        sign = (1 - (phi & 2)) * (1 - (phi & 1))
        contrib = sign * (vals[sl][:, None] * vals[None, :])
        uniq, inv = np.unique(prod.ravel(), return_inverse=True)
        sums = np.bincount(inv, weights=contrib.ravel(), minlength=uniq.size)
        for key, val in zip(uniq.tolist(), sums.tolist()):
            acc[key] = acc.get(key, 0.0) + val
    return acc
