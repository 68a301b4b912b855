"""Exact sparse linear algebra over the rationals.

Everything here is deterministic and exact: ranks and kernels come from
fraction-free integer column reduction (rows are never scaled by anything but
exact integers, with gcd stripping to keep entries small), and reduced-echelon
bookkeeping over ``Fraction`` is used where rational coordinates are needed.

``chain_complex_betti`` is the workhorse for Betti numbers of large complexes:
it cancels invertible entries of the differentials pairwise (each cancellation
removes one basis element in two consecutive degrees and performs a Schur
update), which preserves homology, and finishes with plain elimination on the
small residue.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd


def _strip_gcd(vec: dict) -> None:
    """Divide an integer vector through by its gcd, in place."""
    g = 0
    for v in vec.values():
        g = gcd(g, v if v >= 0 else -v)
        if g == 1:
            return
    if g > 1:
        for k in vec:
            vec[k] //= g


def _to_int_columns(cols):
    """Clear denominators column by column (safe for rank and column kernels)."""
    out = []
    for col in cols:
        if any(isinstance(v, Fraction) for v in col.values()):
            denom = 1
            for v in col.values():
                f = Fraction(v)
                denom = denom * f.denominator // gcd(denom, f.denominator)
            newcol = {k: int(Fraction(v) * denom) for k, v in col.items() if v}
            newcol = {k: v for k, v in newcol.items() if v}
            _strip_gcd(newcol)
            out.append(newcol)
        else:
            out.append({k: v for k, v in col.items() if v})
    return out


def column_reduce(cols, want_kernel: bool = False):
    """Left-to-right integer column reduction.

    cols: list of sparse columns {row: value}.  Returns (rank, kernel) where
    kernel is a list of integer combination vectors {col position: coeff} with
    M @ v = 0; each kernel vector arises from one dependent column i and has
    its highest-index support exactly at i (its "free" position).  Kernel is
    None unless requested.
    """
    cols = _to_int_columns(cols)
    pivots = {}  # pivot row -> (column dict, combination dict, position)
    kernel = [] if want_kernel else None
    rank = 0
    for i, col in enumerate(cols):
        col = dict(col)
        comb = {i: 1} if want_kernel else None
        while col:
            r = min(col)
            hit = pivots.get(r)
            if hit is None:
                break
            pcol, pcomb, _ = hit
            a, b = pcol[r], col[r]
            g = gcd(a if a >= 0 else -a, b if b >= 0 else -b)
            ca, cb = a // g, b // g
            # col <- ca * col - cb * pcol   (kills row r)
            for k, v in col.items():
                col[k] = ca * v
            for k, v in pcol.items():
                col[k] = col.get(k, 0) - cb * v
            col = {k: v for k, v in col.items() if v}
            if want_kernel:
                for k in comb:
                    comb[k] = ca * comb[k]
                for k, v in pcomb.items():
                    comb[k] = comb.get(k, 0) - cb * v
                comb = {k: v for k, v in comb.items() if v}
                both = dict(col)
                both.update({("c", k): v for k, v in comb.items()})
                g2 = 0
                for v in both.values():
                    g2 = gcd(g2, v if v >= 0 else -v)
                    if g2 == 1:
                        break
                if g2 > 1:
                    col = {k: v // g2 for k, v in col.items()}
                    comb = {k: v // g2 for k, v in comb.items()}
        if col:
            r = min(col)
            pivots[r] = (col, comb, i)
            rank += 1
        elif want_kernel:
            kernel.append(comb)
    return rank, kernel


def rank_of_columns(cols) -> int:
    rank, _ = column_reduce(cols, want_kernel=False)
    return rank


def kernel_of_columns(cols):
    _, kernel = column_reduce(cols, want_kernel=True)
    return kernel


class Reducer:
    """Reduced echelon (RREF) set of rational vectors with tag bookkeeping.

    Vectors are sparse dicts over integer coordinates.  An optional tag dict
    (disjoint coordinate space) rides along with each vector; reducing returns
    the residual together with the accumulated tag combination, which lets
    callers read off coefficients of the subtracted basis vectors.  Pivots are
    the smallest coordinates, and the stored rows are kept fully reduced, so
    one pass suffices to reduce any vector.
    """

    def __init__(self):
        self.rows = {}  # pivot coord -> (vector dict with pivot value 1, tag dict)

    def reduce(self, vec, tags=None):
        vec = {k: Fraction(v) for k, v in vec.items() if v}
        tags = {k: Fraction(v) for k, v in (tags or {}).items() if v}
        for piv in sorted(k for k in vec if k in self.rows):
            c = vec.get(piv)
            if not c:
                continue
            pvec, ptags = self.rows[piv]
            for k, v in pvec.items():
                nv = vec.get(k, 0) - c * v
                if nv:
                    vec[k] = nv
                else:
                    vec.pop(k, None)
            for k, v in ptags.items():
                nv = tags.get(k, 0) - c * v
                if nv:
                    tags[k] = nv
                else:
                    tags.pop(k, None)
        return vec, tags

    def add(self, vec, tags=None) -> bool:
        """Insert a vector; returns False if it was already in the span."""
        vec, tags = self.reduce(vec, tags)
        if not vec:
            return False
        piv = min(vec)
        c = vec[piv]
        vec = {k: v / c for k, v in vec.items()}
        tags = {k: v / c for k, v in tags.items()}
        for ovec, otags in self.rows.values():
            co = ovec.get(piv)
            if co:
                for k, v in vec.items():
                    nv = ovec.get(k, 0) - co * v
                    if nv:
                        ovec[k] = nv
                    else:
                        ovec.pop(k, None)
                for k, v in tags.items():
                    nv = otags.get(k, 0) - co * v
                    if nv:
                        otags[k] = nv
                    else:
                        otags.pop(k, None)
        self.rows[piv] = (vec, tags)
        return True

    def __len__(self):
        return len(self.rows)

    def contains(self, vec) -> bool:
        residual, _ = self.reduce(dict(vec))
        return not residual


def _residual_rank(cols) -> int:
    """Rank of leftover columns (entries may be large ints or Fractions)."""
    pivots = {}
    rank = 0
    for col in cols:
        col = {k: Fraction(v) for k, v in col.items() if v}
        while col:
            r = min(col)
            p = pivots.get(r)
            if p is None:
                break
            c = col[r]
            for k, v in p.items():
                nv = col.get(k, 0) - c * v
                if nv:
                    col[k] = nv
                else:
                    col.pop(k, None)
        if col:
            r = min(col)
            c = col[r]
            pivots[r] = {k: v / c for k, v in col.items()}
            rank += 1
    return rank


def chain_complex_betti(dims: list[int], diffs: list[dict]) -> list[int]:
    """Betti numbers of a bounded chain complex C_0 <- C_1 <- ... <- C_top.

    dims[j] is the rank of C_j; diffs[j] (for j >= 1) maps column index in C_j
    to a sparse {row in C_{j-1}: value}.  diffs[0] is ignored/absent.  Values
    may be ints or Fractions.
    """
    top = len(dims) - 1
    cols = [dict() for _ in range(top + 1)]
    rows = [dict() for _ in range(top + 1)]
    for j in range(1, top + 1):
        dj = diffs[j] if j < len(diffs) and diffs[j] is not None else {}
        for c, col in dj.items():
            col = {r: v for r, v in col.items() if v}
            if col:
                cols[j][c] = dict(col)
                for r in col:
                    rows[j].setdefault(r, set()).add(c)

    cancelled = [0] * (top + 2)  # cancellations performed in D_j

    def cancel(j, r, c):
        colvec = cols[j].pop(c)
        lam = colvec.pop(r)
        for r2 in colvec:
            rows[j][r2].discard(c)
        rowset = rows[j].pop(r)
        rowset.discard(c)
        updates = []
        for y in rowset:
            vy = cols[j][y].pop(r)
            updates.append((y, vy))
        is_unit = lam == 1 or lam == -1
        for y, vy in updates:
            coly = cols[j][y]
            if is_unit:
                factor = vy if lam == 1 else -vy
                for r2, v2 in colvec.items():
                    nv = coly.get(r2, 0) - factor * v2
                    if nv:
                        if r2 not in coly:
                            rows[j].setdefault(r2, set()).add(y)
                        coly[r2] = nv
                    else:
                        coly.pop(r2, None)
                        rs = rows[j].get(r2)
                        if rs is not None:
                            rs.discard(y)
            else:
                factor = Fraction(vy, 1) / lam
                for r2, v2 in colvec.items():
                    nv = coly.get(r2, 0) - factor * v2
                    if nv:
                        if r2 not in coly:
                            rows[j].setdefault(r2, set()).add(y)
                        coly[r2] = nv
                    else:
                        coly.pop(r2, None)
                        rs = rows[j].get(r2)
                        if rs is not None:
                            rs.discard(y)
            if not coly:
                del cols[j][y]
        # row c disappears from D_{j+1}
        if j + 1 <= top:
            for y in rows[j + 1].pop(c, ()):  # no Schur correction needed
                cy = cols[j + 1][y]
                cy.pop(c, None)
                if not cy:
                    del cols[j + 1][y]
        # column r disappears from D_{j-1}
        if j - 1 >= 1:
            colr = cols[j - 1].pop(r, None)
            if colr:
                for rr in colr:
                    rs = rows[j - 1].get(rr)
                    if rs is not None:
                        rs.discard(r)
        cancelled[j] += 1

    progress = True
    while progress:
        progress = False
        for j in range(top, 0, -1):
            heap = [(len(col), c) for c, col in cols[j].items()]
            heapq.heapify(heap)
            while heap:
                nnz, c = heapq.heappop(heap)
                col = cols[j].get(c)
                if col is None:
                    continue
                if len(col) != nnz:
                    heapq.heappush(heap, (len(col), c))
                    continue
                best = None
                for r, v in col.items():
                    if v == 1 or v == -1:
                        score = len(rows[j][r])
                        if best is None or score < best[0] or (score == best[0] and r < best[1]):
                            best = (score, r)
                if best is None:
                    continue
                cancel(j, best[1], c)
                progress = True

    res_rank = [0] * (top + 2)
    for j in range(1, top + 1):
        if cols[j]:
            res_rank[j] = _residual_rank([cols[j][c] for c in sorted(cols[j])])

    betti = []
    for j in range(top + 1):
        alive = dims[j] - cancelled[j] - (cancelled[j + 1] if j + 1 <= top else 0)
        b = alive - res_rank[j] - res_rank[j + 1]
        betti.append(b)
    return betti
