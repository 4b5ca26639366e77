"""Hot numeric kernels with a numba fast path and a pure-Python/numpy fallback.

Every kernel exists twice: the plain Python function and its ``numba.njit``
compilation of the same source.  The environment variable
``TWINBRAIDS_DISABLE_NUMBA=1`` forces the fallback path; otherwise the JIT
path is used whenever numba imports cleanly.  ``benchmarks/bench_kernels.py``
compares the two.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False


def numba_enabled() -> bool:
    """True when kernels dispatch to their numba-compiled variants."""
    if os.environ.get("TWINBRAIDS_DISABLE_NUMBA", "") not in ("", "0"):
        return False
    return _HAVE_NUMBA


def _piling_core(letters, noncomm, out):
    # Normal form for a graph product of order-2 groups, via piles.
    #
    # letters:  int64[m], 1-based generator indices
    # noncomm:  bool[k+1, k+1], noncomm[i, j] iff i and j do NOT commute
    #           (diagonal is True; index 0 unused)
    # out:      int64[m] scratch receiving the normal form
    #
    # Phase 1 pushes letters onto per-generator token stacks: a letter x puts a
    # real token (1) on pile x and a blocker (0) on every pile that does not
    # commute with x; if the top of pile x is already a real token, the new x
    # cancels it instead (the pair is adjacent up to allowed swaps).  Phase 2
    # reads the shortlex-least representative off the pile bottoms: a generator
    # is emittable iff the bottom of its pile is a real token, and the least
    # such generator is emitted first.  Returns the output length.
    k = noncomm.shape[0] - 1
    m = letters.shape[0]
    piles = np.zeros((k + 1, m + 1), dtype=np.int8)
    tops = np.zeros(k + 1, dtype=np.int64)
    for t in range(m):
        x = letters[t]
        if tops[x] > 0 and piles[x, tops[x] - 1] == 1:
            for j in range(1, k + 1):
                if noncomm[x, j]:
                    tops[j] -= 1
        else:
            for j in range(1, k + 1):
                if noncomm[x, j]:
                    if j == x:
                        piles[j, tops[j]] = 1
                    else:
                        piles[j, tops[j]] = 0
                    tops[j] += 1
    bottoms = np.zeros(k + 1, dtype=np.int64)
    n_out = 0
    v = 1
    while v <= k:
        if bottoms[v] < tops[v] and piles[v, bottoms[v]] == 1:
            out[n_out] = v
            n_out += 1
            for j in range(1, k + 1):
                if noncomm[v, j]:
                    bottoms[j] += 1
            v = 1
            continue
        v += 1
    return n_out


def _arrangement_core(letters, arr):
    # Apply a braid word to a position->strand arrangement, in place.
    # arr: int64[n+1], arr[p] = strand currently at position p (1-based).
    for t in range(letters.shape[0]):
        i = letters[t]
        tmp = arr[i]
        arr[i] = arr[i + 1]
        arr[i + 1] = tmp


def _modp_rank_core(mat, p):
    # Rank of an integer matrix over GF(p) by in-place row echelon reduction.
    # mat: int64[nr, nc], destroyed.  p must satisfy (p-1)^2 < 2^63.
    nr, nc = mat.shape
    for i in range(nr):
        for j in range(nc):
            mat[i, j] %= p
    rank = 0
    row = 0
    for col in range(nc):
        piv = -1
        for r in range(row, nr):
            if mat[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != row:
            for j in range(col, nc):
                tmp = mat[row, j]
                mat[row, j] = mat[piv, j]
                mat[piv, j] = tmp
        # scale the pivot row so the pivot becomes 1 (Fermat inverse)
        inv = 1
        base = mat[row, col] % p
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for j in range(col, nc):
            mat[row, j] = (mat[row, j] * inv) % p
        for r in range(row + 1, nr):
            f = mat[r, col]
            if f != 0:
                for j in range(col, nc):
                    mat[r, j] = (mat[r, j] - f * mat[row, j]) % p
        rank += 1
        row += 1
        if row == nr:
            break
    return rank


if _HAVE_NUMBA:
    _piling_njit = njit(cache=True)(_piling_core)
    _arrangement_njit = njit(cache=True)(_arrangement_core)
    _modp_rank_njit = njit(cache=True)(_modp_rank_core)


def normal_form_kernel(letters: np.ndarray, noncomm: np.ndarray) -> np.ndarray:
    """Shortlex normal form of ``letters`` over the non-commutation matrix."""
    out = np.empty(letters.shape[0], dtype=np.int64)
    if numba_enabled():
        n = _piling_njit(letters, noncomm, out)
    else:
        n = _piling_core(letters, noncomm, out)
    return out[:n]


def arrangement_kernel(letters: np.ndarray, n: int) -> np.ndarray:
    """Position->strand arrangement after applying a braid word on n strands."""
    arr = np.arange(n + 1, dtype=np.int64)
    if numba_enabled():
        _arrangement_njit(letters, arr)
    else:
        _arrangement_core(letters, arr)
    return arr


def modp_rank_kernel(mat: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over GF(p); ``mat`` is copied, not destroyed."""
    work = np.array(mat, dtype=np.int64, copy=True)
    if work.size == 0:
        return 0
    if numba_enabled():
        return int(_modp_rank_njit(work, p))
    return int(_modp_rank_core(work, p))


def warmup() -> None:
    """Trigger JIT compilation of every kernel (no-op on the fallback path)."""
    noncomm = np.ones((3, 3), dtype=np.bool_)
    normal_form_kernel(np.array([1, 2, 1], dtype=np.int64), noncomm)
    arrangement_kernel(np.array([1], dtype=np.int64), 3)
    modp_rank_kernel(np.array([[1, 2], [2, 4]], dtype=np.int64), 97)
