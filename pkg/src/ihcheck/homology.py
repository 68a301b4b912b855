"""Exact homology over the rationals: Betti numbers, bases, induced maps,
connecting homomorphisms and exactness checking.

Betti numbers of large complexes go through pairwise cancellation of
invertible differential entries (homotopy-equivalent reduction), which never
touches basis representatives.  Everything that needs actual cycles (induced
maps, snake construction, exactness) works with explicit kernel computations
and tagged echelon reducers, and is meant for the desk-scale complexes the
verification harness feeds it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import Chain
from .linalg import Reducer, chain_complex_betti, kernel_of_columns


class NotAChainMap(ValueError):
    pass


@dataclass
class HomologyResult:
    betti: list
    provenance: str = ""
    cycles: object = None   # HomologyData when bases were computed

    def __iter__(self):
        return iter(self.betti)


def betti_numbers(C, provenance: str = "") -> HomologyResult:
    """Betti numbers of a complex exposing dims and diff(j)."""
    diffs = [None] + [C.diff(j) for j in range(1, C.top + 1)]
    betti = chain_complex_betti(list(C.dims), diffs)
    label = provenance or f"{C.variant} {C.perversity} on {getattr(C.space, 'name', '')}"
    return HomologyResult(betti, label)


def euler_characteristic(C) -> int:
    return sum((-1) ** j * d for j, d in enumerate(C.dims))


class HomologyData:
    """Cycle bases and class-membership machinery for one complex."""

    def __init__(self, C):
        self.C = C
        top = C.top
        cols = [[C.diff(j).get(pos, {}) for pos in range(C.dims[j])] if j >= 1 else None
                for j in range(top + 1)]
        kernels = []
        ranks = []
        for j in range(top + 1):
            if j == 0:
                kernels.append([{i: 1} for i in range(C.dims[0])])
                ranks.append(0)
            else:
                ker = kernel_of_columns(cols[j])
                kernels.append(ker)
                ranks.append(C.dims[j] - len(ker))
        ranks.append(0)
        self.betti = [C.dims[j] - ranks[j] - ranks[j + 1] for j in range(top + 1)]
        self.basis = []        # per degree: list of cycle vectors (complex coords)
        self.membership = []   # per degree: Reducer spanning boundaries + tagged classes
        for j in range(top + 1):
            red = Reducer()
            if j + 1 <= top:
                dj1 = C.diff(j + 1)
                for pos in sorted(dj1):
                    red.add(dj1[pos])
            classes = []
            for z in kernels[j]:
                if len(classes) == self.betti[j]:
                    break
                if red.add(z, {("h", len(classes)): 1}):
                    classes.append({k: Fraction(v) for k, v in z.items()})
            if len(classes) != self.betti[j]:
                raise RuntimeError(f"found {len(classes)} classes, expected {self.betti[j]} in degree {j}")
            self.basis.append(classes)
            self.membership.append(red)

    def class_coords(self, j: int, cycle_vec):
        """Coordinates of a cycle's class in the chosen basis of H_j."""
        residual, tags = self.membership[j].reduce(cycle_vec)
        if residual:
            return None
        return {k[1]: -v for k, v in tags.items() if v}


def homology_basis(C, j: int):
    """Representative cycles for a basis of H_j, as chains in the ambient complex."""
    hd = HomologyData(C)
    sims = C.space.complex.simplices(j)
    out = []
    for z in hd.basis[j]:
        amb = {}
        for pos, c in z.items():
            for a, v in C.basis_ambient(j, pos).items():
                nv = amb.get(a, 0) + c * v
                if nv:
                    amb[a] = nv
                else:
                    del amb[a]
        out.append(Chain(j, {sims[a]: v for a, v in amb.items()}))
    return out


def apply_matrix(mat: dict, vec: dict):
    out = {}
    for pos, c in vec.items():
        col = mat.get(pos)
        if not col or not c:
            continue
        for r, v in col.items():
            nv = out.get(r, 0) + c * v
            if nv:
                out[r] = nv
            else:
                del out[r]
    return out


def _compose(m2: dict, m1: dict):
    """Matrix of m2 after m1 (both col -> {row: val})."""
    out = {}
    for pos, col in m1.items():
        img = apply_matrix(m2, col)
        if img:
            out[pos] = img
    return out


def _mats_equal(a: dict, b: dict) -> bool:
    keys = set(a) | set(b)
    for k in keys:
        ca = {r: Fraction(v) for r, v in a.get(k, {}).items() if v}
        cb = {r: Fraction(v) for r, v in b.get(k, {}).items() if v}
        if ca != cb:
            return False
    return True


@dataclass
class ChainMap:
    """Per-degree matrices (source coords -> target coords) commuting with differentials."""

    source: object
    target: object
    mats: list

    def verify(self):
        for j in range(1, min(self.source.top, self.target.top) + 1):
            left = _compose(self.target.diff(j), self.mats[j])
            right = _compose(self.mats[j - 1], self.source.diff(j))
            if not _mats_equal(left, right):
                raise NotAChainMap(f"square fails to commute in degree {j}")
        return self


@dataclass
class InducedMap:
    """Matrix on homology in chosen bases, one degree at a time."""

    degree: int
    matrix: dict           # source class index -> {target class index: value}
    source_betti: int
    target_betti: int


def induced_map(cmap: ChainMap, j: int, hd_src: HomologyData = None, hd_tgt: HomologyData = None) -> InducedMap:
    cmap.verify()
    hd_src = hd_src or HomologyData(cmap.source)
    hd_tgt = hd_tgt or HomologyData(cmap.target)
    mat = {}
    for i, z in enumerate(hd_src.basis[j]):
        img = apply_matrix(cmap.mats[j], z)
        coords = hd_tgt.class_coords(j, img)
        if coords is None:
            raise NotAChainMap(f"image of a cycle is not a cycle class in degree {j}")
        if coords:
            mat[i] = coords
    return InducedMap(j, mat, hd_src.betti[j], hd_tgt.betti[j])


# -- long exact sequence of a short exact sequence of complexes -----------------


@dataclass
class LESNode:
    label: str
    degree: int
    betti: int


@dataclass
class LongExactSequence:
    nodes: list            # LESNode
    maps: list             # matrices between consecutive nodes (class bases)
    hd: dict               # "sub"/"total"/"quotient" -> HomologyData


def _projection_matrix(ses, j: int):
    quot = ses.quotient
    out = {}
    for pos in range(ses.total.dims[j]):
        col = quot.project(j, {pos: Fraction(1)})
        if col:
            out[pos] = col
    return out


def long_exact_sequence(ses) -> LongExactSequence:
    """The homology long exact sequence with explicit snake connecting maps."""
    hdA, hdB, hdC = HomologyData(ses.sub), HomologyData(ses.total), HomologyData(ses.quotient)
    top = ses.total.top
    incl_red = []
    for j in range(top + 1):
        red = Reducer()
        for pos in sorted(ses.incl[j]):
            red.add(ses.incl[j][pos], {("a", pos): 1})
        incl_red.append(red)

    proj = [_projection_matrix(ses, j) for j in range(top + 1)]
    nodes, maps = [], []
    for j in range(top, -1, -1):
        nodes.append(LESNode(f"H_{j}(sub)", j, hdA.betti[j]))
        im = induced_map(ChainMap(ses.sub, ses.total, ses.incl), j, hdA, hdB)
        maps.append(im.matrix)
        nodes.append(LESNode(f"H_{j}(total)", j, hdB.betti[j]))
        pm = induced_map(ChainMap(ses.total, ses.quotient, proj), j, hdB, hdC)
        maps.append(pm.matrix)
        nodes.append(LESNode(f"H_{j}(quotient)", j, hdC.betti[j]))
        if j > 0:
            delta = {}
            for i, c in enumerate(hdC.basis[j]):
                b = ses.quotient.lift(j, c)
                db = apply_matrix(ses.total.diff(j), b)
                residual, tags = incl_red[j - 1].reduce(db)
                if residual:
                    raise RuntimeError("snake lift escaped the subcomplex")
                a = {k[1]: -v for k, v in tags.items() if v}
                coords = hdA.class_coords(j - 1, a)
                if coords is None:
                    raise RuntimeError("connecting image is not a cycle class")
                if coords:
                    delta[i] = coords
            maps.append(delta)
    return LongExactSequence(nodes, maps, {"sub": hdA, "total": hdB, "quotient": hdC})


@dataclass
class ExactnessReport:
    ok: bool
    node_results: list      # (node label, im rank, ker dim, ok)
    witness: str | None = None


def check_exactness(les: LongExactSequence) -> ExactnessReport:
    """im(incoming) = ker(outgoing) at every interior node, with witnesses."""
    nodes, maps = les.nodes, les.maps
    results = []
    ok = True
    witness = None
    for i, node in enumerate(nodes):
        incoming = maps[i - 1] if i >= 1 else {}
        outgoing = maps[i] if i < len(maps) else {}
        comp = _compose(outgoing, incoming)
        comp_zero = all(not any(col.values()) for col in comp.values())
        im_rank = _matrix_rank(incoming)
        out_rank = _matrix_rank(outgoing)
        ker_dim = node.betti - out_rank
        node_ok = comp_zero and im_rank == ker_dim
        results.append((node.label, im_rank, ker_dim, node_ok))
        if not node_ok and ok:
            ok = False
            if not comp_zero:
                witness = f"composite through {node.label} is nonzero"
            else:
                witness = (f"at {node.label}: rank(im) = {im_rank} but dim(ker) = {ker_dim}; "
                           f"a class in the kernel misses the image")
    return ExactnessReport(ok, results, witness)


def _matrix_rank(mat: dict) -> int:
    cols = [mat[k] for k in sorted(mat)]
    if not cols:
        return 0
    from .linalg import rank_of_columns
    return rank_of_columns(cols)
