"""Pure-numpy kernels for grid enumeration and pair reconstruction.

All word arrays are bit-packed little-endian into two uint64 lanes: column 0
holds symbols 0..63, column 1 symbols 64..127.  Symbol matrices are uint8 with
one row per word.  These are the reference implementations; the numba backend
mirrors the signatures and emission order exactly.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "numpy"


def pack_words(symbols: np.ndarray) -> np.ndarray:
    """(m, L) symbol matrix -> (m, 2) uint64 packed words."""
    m, length = symbols.shape
    if length > 128:
        raise ValueError("kernel words are capped at 128 symbols")
    out = np.zeros((m, 2), dtype=np.uint64)
    bits = symbols.astype(np.uint64)
    lo_len = min(length, 64)
    shifts = np.arange(lo_len, dtype=np.uint64)
    out[:, 0] = (bits[:, :lo_len] << shifts).sum(axis=1, dtype=np.uint64)
    if length > 64:
        shifts = np.arange(length - 64, dtype=np.uint64)
        out[:, 1] = (bits[:, 64:] << shifts).sum(axis=1, dtype=np.uint64)
    return out


def unpack_words(packed: np.ndarray, length: int) -> np.ndarray:
    """(m, 2) packed words -> (m, length) uint8 symbol matrix."""
    m = packed.shape[0]
    out = np.empty((m, length), dtype=np.uint8)
    lo_len = min(length, 64)
    shifts = np.arange(lo_len, dtype=np.uint64)
    out[:, :lo_len] = (packed[:, :1] >> shifts[None, :]) & np.uint64(1)
    if length > 64:
        shifts = np.arange(length - 64, dtype=np.uint64)
        out[:, lo_len:] = (packed[:, 1:] >> shifts[None, :]) & np.uint64(1)
    return out


def rotation_grid_words(a: int, d: int, n: int, equal_full: bool) -> np.ndarray:
    """Rotation words of length n for slope a/d over the full arc grid.

    Arc start and end both range over {0/d, .., (d-1)/d}; row j*d + j' is the
    word of the arc [j/d, j'/d).  A start equal to the end means the full
    circle when equal_full is set, the empty arc otherwise.
    """
    pos = (np.arange(n, dtype=np.int64) * a) % d
    grid = np.arange(d, dtype=np.int64)
    span = (grid[None, :] - grid[:, None]) % d          # (j, j') arc length in grid steps
    rel = (pos[:, None] - grid[None, :]) % d            # (i, j) offset of orbit point from start
    member = rel[:, :, None] < span[None, :, :]
    if equal_full:
        member = member | (span == 0)[None, :, :]
    symbols = member.reshape(n, d * d).T.astype(np.uint8)
    return pack_words(symbols)


def sturmian_grid_words(a: int, d: int, n: int) -> np.ndarray:
    """Words of length n for slope a/d and arcs [j/d, j/d + a/d), all j."""
    pos = (np.arange(n, dtype=np.int64) * a) % d
    grid = np.arange(d, dtype=np.int64)
    member = ((pos[None, :] - grid[:, None]) % d) < a   # (j, i)
    return pack_words(member.astype(np.uint8))


def pair_words(
    symbols: np.ndarray, new_mask: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray, int]:
    """Rotation words generated by ordered pairs of distinct language words.

    Emits one word of length n+1 per ordered pair (u, v), u != v, where at
    least one side is flagged new.  Returns (packed words, u indices,
    v indices, number of invalid pairs); invalid pairs (symbol-difference
    prefix sums spreading wider than one) are skipped, not emitted.
    """
    m, n = symbols.shape
    pick = new_mask[:, None] | new_mask[None, :]
    np.fill_diagonal(pick, False)
    ui, vi = np.nonzero(pick)
    if len(ui) == 0:
        empty = np.zeros((0, 2), dtype=np.uint64)
        return empty, ui.astype(np.int32), vi.astype(np.int32), 0
    delta = symbols[ui].astype(np.int16) - symbols[vi].astype(np.int16)
    sums = np.cumsum(delta, axis=1, dtype=np.int16)
    top = sums.max(axis=1)
    bottom = sums.min(axis=1)
    valid = ((bottom >= 0) & (top == 1)) | ((top <= 0) & (bottom == -1))
    invalid = int(np.count_nonzero(~valid))
    ui = ui[valid]
    vi = vi[valid]
    first = (bottom[valid] == -1).astype(np.int16)
    out_symbols = np.concatenate([first[:, None], first[:, None] + sums[valid]], axis=1)
    words = pack_words(out_symbols.astype(np.uint8))
    return words, ui.astype(np.int32), vi.astype(np.int32), invalid
