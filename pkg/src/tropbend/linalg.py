"""Dense exact linear algebra over a ground field: reduced row echelon form,
kernels, and enumeration of the minimal-support vectors (circuits) of a row
space.

Matrices are lists of lists of field elements (Fraction or RationalFunction);
zero tests go through truthiness.  Pivoting is plain first-nonzero: at desk
scale correctness beats speed and exact arithmetic has no stability concerns.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import List, Sequence, Tuple

from .errors import ResourceExhausted

Row = List
Matrix = List[Row]


def rref(rows: Sequence[Sequence], ncols: int) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c]:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv_lead = m[r][c]
        m[r] = [x / inv_lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[0])


def kernel_basis(rows: Sequence[Sequence], ncols: int, zero, one) -> Matrix:
    """Basis of the right kernel {v : M v = 0}, from the RREF free columns."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(v)
    return basis


def left_kernel_basis(rows: Sequence[Sequence], ncols: int, zero, one) -> Matrix:
    """Basis of {lam : lam M = 0} for M given by `rows`."""
    transposed = [[rows[i][c] for i in range(len(rows))] for c in range(ncols)]
    return kernel_basis(transposed, len(rows), zero, one)


def _support_components(rows: Sequence[Sequence], ncols: int) -> List[Tuple[List[int], List[int]]]:
    """Split columns into connected components under shared row support.

    Returns (column indices, row indices) per component; columns untouched
    by any row are omitted (the row space is identically zero there).
    Every row lies in exactly one component, so the matrix is block
    diagonal across components and circuits never straddle them.
    """
    parent = list(range(ncols))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    supports = []
    for row in rows:
        sup = [c for c in range(ncols) if row[c]]
        supports.append(sup)
        for c in sup[1:]:
            ra, rb = find(sup[0]), find(c)
            if ra != rb:
                parent[ra] = rb
    groups = {}
    for c in range(ncols):
        if any(row[c] for row in rows):
            groups.setdefault(find(c), []).append(c)
    comps = []
    for cols in groups.values():
        col_set = set(cols)
        row_idx = [i for i, sup in enumerate(supports) if sup and sup[0] in col_set]
        comps.append((cols, row_idx))
    comps.sort(key=lambda cr: cr[0][0])
    return comps


def row_space_circuits(
    rows: Sequence[Sequence],
    ncols: int,
    zero,
    one,
    max_subsets: int = 200_000,
) -> Matrix:
    """All circuits (nonzero vectors of minimal support) of the row space.

    Each circuit is the cocircuit vector attached to a rank-(m-1) flat of the
    column configuration: taking lam orthogonal to m-1 independent columns
    pins the vector up to scale.  The enumeration runs per support-connected
    block, which keeps the subset counts small for the structured matrices
    arising from graded ideal pieces.  Results are normalized to leading
    coefficient 1 and deduplicated.
    """
    reduced, _ = rref(rows, ncols)
    if not reduced:
        return []
    comps = _support_components(reduced, ncols)
    total = sum(comb(len(cols), len(ridx) - 1) for cols, ridx in comps)
    if total > max_subsets:
        raise ResourceExhausted("circuit-enumeration subset budget", max_subsets, total)

    circuits: Matrix = []
    seen = set()
    for cols, ridx in comps:
        block = [[reduced[i][c] for c in cols] for i in ridx]
        m = len(block)
        for subset in combinations(range(len(cols)), m - 1):
            sub = [[block[i][c] for c in subset] for i in range(m)]
            lams = left_kernel_basis(sub, len(subset), zero, one)
            if len(lams) != 1:
                continue
            lam = lams[0]
            vec = [zero] * ncols
            for j, c in enumerate(cols):
                acc = zero
                for i in range(m):
                    if lam[i] and block[i][j]:
                        acc = acc + lam[i] * block[i][j]
                vec[c] = acc
            support = tuple(c for c in range(ncols) if vec[c])
            if not support:
                continue
            lead = vec[support[0]]
            key = (support, tuple(vec[c] / lead for c in support))
            if key in seen:
                continue
            seen.add(key)
            circuits.append([x / lead for x in vec])
    circuits.sort(key=lambda v: tuple(c for c in range(ncols) if v[c]))
    return circuits
