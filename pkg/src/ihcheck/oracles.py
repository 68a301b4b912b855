"""Independent oracles for cross-checking the engine.

Deliberately separate code paths: ordinary (and relative) simplicial homology
by dense Gaussian elimination over exact rationals, and closed-form cone and
suspension formulas.  Nothing here touches the sparse engine, the allowability
machinery or the reduction-based Betti path.
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import SimplicialComplex


def _dense_rank(rows) -> int:
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    r = 0
    while r < len(rows) and col < ncols:
        piv = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            col += 1
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = Fraction(rows[i][col], 1) / pv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        rank += 1
        r += 1
        col += 1
    return rank


def _faces_with_signs(sigma):
    out = []
    for t in range(len(sigma)):
        out.append((sigma[:t] + sigma[t + 1:], -1 if t & 1 else 1))
    return out


def brute_betti(K: SimplicialComplex) -> list:
    """Ordinary simplicial Betti numbers by dense elimination."""
    top = K.dim
    ranks = [0] * (top + 2)
    for j in range(1, top + 1):
        lower = {s: i for i, s in enumerate(K.simplices(j - 1))}
        rows = []
        for s in K.simplices(j):
            row = [Fraction(0)] * len(lower)
            for face, sign in _faces_with_signs(s):
                row[lower[face]] += sign
            rows.append(row)
        ranks[j] = _dense_rank(rows)
    return [K.n_simplices(j) - ranks[j] - ranks[j + 1] for j in range(top + 1)]


def brute_relative_betti(K: SimplicialComplex, sub_vertices) -> list:
    """Betti numbers of the pair (K, full subcomplex on sub_vertices)."""
    vs = set(sub_vertices)
    top = K.dim
    kept = []
    for j in range(top + 1):
        kept.append([s for s in K.simplices(j) if not all(v in vs for v in s)])
    ranks = [0] * (top + 2)
    for j in range(1, top + 1):
        lower = {s: i for i, s in enumerate(kept[j - 1])}
        rows = []
        for s in kept[j]:
            row = [Fraction(0)] * len(lower)
            for face, sign in _faces_with_signs(s):
                if face in lower:
                    row[lower[face]] += sign
            rows.append(row)
        ranks[j] = _dense_rank(rows) if rows and lower else 0
    return [len(kept[j]) - ranks[j] - ranks[j + 1] for j in range(top + 1)]


def cone_formula(base_betti, l: int, p) -> list:
    """Intersection Betti numbers of the cone on a closed (l-1)-manifold base.

    Degrees below l - 1 - p_l keep the base groups; everything at or above the
    cutoff is coned off.
    """
    cutoff = l - 1 - p.top_value
    return [base_betti[j] if j < cutoff and j < len(base_betti) else 0 for j in range(l + 1)]


def suspension_formula(base_betti, l: int, p) -> list:
    """Intersection Betti numbers of the unreduced suspension of a closed
    (l-1)-manifold base: base groups below the cutoff, zero at it, shifted
    base groups above."""
    cutoff = l - 1 - p.top_value
    out = []
    for j in range(l + 1):
        if j < cutoff:
            out.append(base_betti[j] if j < len(base_betti) else 0)
        elif j == cutoff:
            out.append(0)
        else:
            out.append(base_betti[j - 1] if 0 <= j - 1 < len(base_betti) else 0)
    return out
