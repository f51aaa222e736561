"""Numba-compiled kernels; same contracts and emission order as _numpy."""

from __future__ import annotations

import numpy as np
from numba import njit

from ._numpy import pack_words, unpack_words  # packing stays vectorized

BACKEND_NAME = "numba"

_ONE = np.uint64(1)


@njit(cache=True, nogil=True)
def _rotation_grid(a, d, n, equal_full):  # pragma: no cover - exercised via wrapper
    pos = np.empty(n, dtype=np.int64)
    for i in range(n):
        pos[i] = (i * a) % d
    out = np.zeros((d * d, 2), dtype=np.uint64)
    for j in range(d):
        for j2 in range(d):
            row = j * d + j2
            span = (j2 - j) % d
            full = equal_full and span == 0
            lo = np.uint64(0)
            hi = np.uint64(0)
            for i in range(n):
                if full or ((pos[i] - j) % d) < span:
                    if i < 64:
                        lo |= _ONE << np.uint64(i)
                    else:
                        hi |= _ONE << np.uint64(i - 64)
            out[row, 0] = lo
            out[row, 1] = hi
    return out


@njit(cache=True, nogil=True)
def _sturmian_grid(a, d, n):  # pragma: no cover - exercised via wrapper
    pos = np.empty(n, dtype=np.int64)
    for i in range(n):
        pos[i] = (i * a) % d
    out = np.zeros((d, 2), dtype=np.uint64)
    for j in range(d):
        lo = np.uint64(0)
        hi = np.uint64(0)
        for i in range(n):
            if ((pos[i] - j) % d) < a:
                if i < 64:
                    lo |= _ONE << np.uint64(i)
                else:
                    hi |= _ONE << np.uint64(i - 64)
        out[j, 0] = lo
        out[j, 1] = hi
    return out


@njit(cache=True, nogil=True)
def _pair_words(symbols, new_mask):  # pragma: no cover - exercised via wrapper
    m, n = symbols.shape
    n_new = 0
    for i in range(m):
        if new_mask[i]:
            n_new += 1
    n_old = m - n_new
    capacity = m * (m - 1) - n_old * (n_old - 1)
    words = np.zeros((capacity, 2), dtype=np.uint64)
    u_idx = np.empty(capacity, dtype=np.int32)
    v_idx = np.empty(capacity, dtype=np.int32)
    count = 0
    invalid = 0
    sums = np.empty(n, dtype=np.int16)
    for u in range(m):
        for v in range(m):
            if u == v or not (new_mask[u] or new_mask[v]):
                continue
            running = 0
            top = 0
            bottom = 0
            for k in range(n):
                running += symbols[u, k] - symbols[v, k]
                sums[k] = running
                if running > top:
                    top = running
                if running < bottom:
                    bottom = running
            if not ((bottom >= 0 and top == 1) or (top <= 0 and bottom == -1)):
                invalid += 1
                continue
            first = 1 if bottom == -1 else 0
            lo = np.uint64(first)
            hi = np.uint64(0)
            for k in range(n):
                if first + sums[k]:
                    bit = k + 1
                    if bit < 64:
                        lo |= _ONE << np.uint64(bit)
                    else:
                        hi |= _ONE << np.uint64(bit - 64)
            words[count, 0] = lo
            words[count, 1] = hi
            u_idx[count] = u
            v_idx[count] = v
            count += 1
    return words[:count], u_idx[:count], v_idx[:count], invalid


def rotation_grid_words(a: int, d: int, n: int, equal_full: bool) -> np.ndarray:
    return _rotation_grid(a, d, n, equal_full)


def sturmian_grid_words(a: int, d: int, n: int) -> np.ndarray:
    return _sturmian_grid(a, d, n)


def pair_words(symbols: np.ndarray, new_mask: np.ndarray):
    words, u_idx, v_idx, invalid = _pair_words(symbols, new_mask)
    return words, u_idx, v_idx, int(invalid)
