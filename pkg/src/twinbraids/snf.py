"""Exact integer linear algebra for abelianized presentations.

The workhorse is a sparse elimination over Z that only ever pivots on +-1
entries (each step is unimodular, so the eliminated part contributes trivial
invariant factors); whatever survives without unit entries goes through the
dense Smith normal form with arbitrary-precision integers.  A mod-p rank
kernel provides an independent fast cross-check.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from .kernels import modp_rank_kernel

#: Default prime for modular rank checks; (p-1)^2 fits in int64.
DEFAULT_PRIME = 2_147_483_629


def smith_normal_form(
    mat: Iterable[Iterable[int]],
) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form with transforms: returns (d, u, v), u*m*v = d.

    d is diagonal with nonnegative entries in a divisibility chain; u and v
    are unimodular.  Dense, exact, intended for small matrices.
    """
    m = [[int(x) for x in row] for row in mat]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    u = [[int(i == j) for j in range(nr)] for i in range(nr)]
    v = [[int(i == j) for j in range(nc)] for i in range(nc)]

    def swap_rows(a, b):
        m[a], m[b] = m[b], m[a]
        u[a], u[b] = u[b], u[a]

    def swap_cols(a, b):
        for row in m:
            row[a], row[b] = row[b], row[a]
        for row in v:
            row[a], row[b] = row[b], row[a]

    def add_row(dst, src, c):  # row_dst += c * row_src
        mrow, msrc = m[dst], m[src]
        for j in range(nc):
            mrow[j] += c * msrc[j]
        urow, usrc = u[dst], u[src]
        for j in range(nr):
            urow[j] += c * usrc[j]

    def add_col(dst, src, c):  # col_dst += c * col_src
        for row in m:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(a):
        m[a] = [-x for x in m[a]]
        u[a] = [-x for x in u[a]]

    t = 0
    size = min(nr, nc)
    while t < size:
        piv = None
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = abs(m[i][j])
                if x and (best is None or x < best):
                    best, piv = x, (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, nr):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    add_row(i, t, -q)
                    if m[i][t]:  # smaller remainder becomes the new pivot
                        swap_rows(t, i)
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(t + 1, nc):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    add_col(j, t, -q)
                    if m[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the block
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if m[i][j] % m[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(t, offender, 1)
        if m[t][t] < 0:
            negate_row(t)
        t += 1
    return m, u, v


def diagonal_of(d: list[list[int]]) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


def _unit_eliminate(rows: list[dict[int, int]]) -> tuple[int, list[dict[int, int]]]:
    """Eliminate with +-1 pivots chosen by a Markowitz-style score.

    Returns (number of pivots, residual rows without unit entries).
    Deterministic: candidate rows scan in sorted order, lightest first.
    """
    row_of = {rid: dict(r) for rid, r in enumerate(rows) if r}
    col_rows: dict[int, set[int]] = {}
    for rid, r in row_of.items():
        for c in r:
            col_rows.setdefault(c, set()).add(rid)
    buckets: dict[int, set[int]] = {}
    for rid, r in row_of.items():
        buckets.setdefault(len(r), set()).add(rid)

    def rebucket(rid, old, new):
        buckets[old].discard(rid)
        if not buckets[old]:
            del buckets[old]
        if new:
            buckets.setdefault(new, set()).add(rid)

    rank = 0
    while row_of:
        pivot = None
        best_score = None
        scanned = 0
        for nnz in sorted(buckets):
            for rid in sorted(buckets[nnz]):
                r = row_of[rid]
                for c in sorted(r):
                    if abs(r[c]) == 1:
                        score = (nnz - 1) * (len(col_rows[c]) - 1)
                        if best_score is None or score < best_score:
                            best_score, pivot = score, (rid, c)
                scanned += 1
                if scanned >= 24 and pivot is not None:
                    break
            if pivot is not None and (best_score == 0 or scanned >= 24):
                break
        if pivot is None:
            # no unit entry anywhere among scanned rows; rescan everything
            for rid in sorted(row_of):
                r = row_of[rid]
                for c in sorted(r):
                    if abs(r[c]) == 1:
                        score = (len(r) - 1) * (len(col_rows[c]) - 1)
                        if best_score is None or score < best_score:
                            best_score, pivot = score, (rid, c)
            if pivot is None:
                break
        prid, pcol = pivot
        prow = row_of.pop(prid)
        rebucket(prid, len(prow), 0)
        for c in prow:
            col_rows[c].discard(prid)
        pval = prow[pcol]  # +-1
        for orid in sorted(col_rows.get(pcol, ())):
            orow = row_of[orid]
            mult = orow[pcol] * pval
            old_len = len(orow)
            for c, vv in prow.items():
                nv = orow.get(c, 0) - mult * vv
                if nv:
                    if c not in orow:
                        col_rows.setdefault(c, set()).add(orid)
                    orow[c] = nv
                else:
                    if c in orow:
                        del orow[c]
                        col_rows[c].discard(orid)
            new_len = len(orow)
            if new_len != old_len:
                rebucket(orid, old_len, new_len)
            if not orow:
                del row_of[orid]
        col_rows.pop(pcol, None)
        rank += 1
    return rank, [row_of[rid] for rid in sorted(row_of)]


def homology_of_rows(
    rows: list[dict[int, int]], ncols: int
) -> tuple[int, list[int]]:
    """(free rank, torsion) of Z^ncols modulo the row span."""
    work = [r for r in rows if r]
    rank, residual = _unit_eliminate(work)
    torsion: list[int] = []
    if residual:
        cols = sorted({c for r in residual for c in r})
        col_idx = {c: i for i, c in enumerate(cols)}
        dense = [[0] * len(cols) for _ in residual]
        for i, r in enumerate(residual):
            for c, vv in r.items():
                dense[i][col_idx[c]] = vv
        d, _, _ = smith_normal_form(dense)
        for x in diagonal_of(d):
            if x == 0:
                continue
            rank += 1
            if x > 1:
                torsion.append(x)
    return ncols - rank, sorted(torsion)


def rows_to_dense(rows: list[dict[int, int]], ncols: int) -> np.ndarray:
    dense = np.zeros((max(len(rows), 1), ncols), dtype=np.int64)
    for i, r in enumerate(rows):
        for c, vv in r.items():
            dense[i, c] = vv
    return dense


def rank_mod_p(
    rows: list[dict[int, int]], ncols: int, p: int = DEFAULT_PRIME
) -> int:
    """Matrix rank over GF(p); equals the rational rank unless p is unlucky."""
    if not rows or ncols == 0:
        return 0
    return modp_rank_kernel(rows_to_dense(rows, ncols), p)
