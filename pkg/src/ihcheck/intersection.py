"""Allowability and construction of intersection chain complexes.

A simplex is allowable in degree i when its closed intersection with each
skeleton is small enough for the perversity; on a space with declared boundary
there is a second clause testing the intersection with the boundary against
the derived boundary perversity.  Because every skeleton is a full subcomplex
(vertex-depth representation), those intersection dimensions are plain vertex
counts.

The degree-j piece of the intersection complex is the preimage of the span of
allowable (j-1)-simplices under the boundary map restricted to the span of
allowable j-simplices.  Its basis splits into "interior" unit vectors (all
faces allowable) and kernel combinations supported on the fringe; this
structure makes membership tests and differential assembly cheap.

Relative, Borel-Moore and relative-to-open-set variants are chain-level
quotients of the absolute complex; Borel-Moore homology is modelled by coning
off the removed subcomplex of a compact pair and quotienting by chains
supported in the cone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import SimplicialComplex
from .linalg import Reducer, kernel_of_columns
from .perversity import Perversity, boundary_perversity, truncate
from .stratified import NoBoundary, SpacePair, StratifiedSpace, boundary_space, subdivide_n

DEFAULT_SUBDIVISIONS = 2


class InclusionViolated(RuntimeError):
    """Boundary chains failed to be allowable in the ambient space (internal bug trap)."""


class CarrierNotSubcomplex(ValueError):
    pass


def _boundary_check_perversity(p: Perversity, l: int) -> Perversity:
    """Perversity used for chains inside the boundary of an l-dimensional space."""
    if l >= 3:
        return boundary_perversity(p)
    return Perversity(l - 1, ())


def _simplex_profiles(space: StratifiedSpace, j: int):
    """Per j-simplex: (sorted vertex depths, sorted boundary-vertex depths)."""
    cache = getattr(space, "_profiles", None)
    if cache is None:
        cache = {}
        space._profiles = cache
    if j not in cache:
        depth = space.depth
        bset = space.boundary
        rows = []
        for s in space.complex.simplices(j):
            ds = sorted(depth[v] for v in s)
            bs = sorted(depth[v] for v in s if v in bset) if bset else []
            rows.append((ds, bs))
        cache[j] = rows
    return cache[j]


def _allowable(ds, bs, i, l, p, pb) -> bool:
    # clause for the part off the boundary (closed simplex itself, unless the
    # simplex lies inside the boundary, where the clause is vacuous)
    if len(bs) != len(ds):
        for k in range(2, l + 1):
            thr = l - k
            cnt = 0
            for d in ds:
                if d <= thr:
                    cnt += 1
                else:
                    break
            if cnt and cnt - 1 > i - k + p[k]:
                return False
    # clause for the intersection with the boundary
    if bs and l >= 3:
        for m in range(2, l):
            thr = (l - 1) - m
            cnt = 0
            for d in bs:
                if d <= thr:
                    cnt += 1
                else:
                    break
            if cnt and cnt - 1 > i - m + pb[m]:
                return False
    return True


def simplex_allowable(sigma, i: int, p: Perversity, X: StratifiedSpace) -> bool:
    """Is the closed simplex allowable as part of the support of an i-chain?"""
    l = X.l
    s = tuple(sorted(sigma))
    if i < len(s) - 1:
        raise ValueError(f"degree {i} below simplex dimension {len(s) - 1}")
    ds = sorted(X.depth[v] for v in s)
    bs = sorted(X.depth[v] for v in s if v in X.boundary) if X.boundary else []
    pb = _boundary_check_perversity(p, l) if X.boundary else None
    return _allowable(ds, bs, i, l, p, pb)


@dataclass
class _Degree:
    unit_ids: list          # ambient simplex ids with every face allowable
    unit_pos: dict          # ambient id -> basis position
    combos: list            # sparse dicts over ambient ids (fringe support)
    combo_free: dict        # free ambient id -> combo index
    combo_scale: list       # value of each combo at its free coordinate
    allow: list             # bool per ambient simplex id


class AbsoluteComplex:
    """The intersection chain complex of a stratified space, with explicit basis."""

    variant = "absolute"

    def __init__(self, space: StratifiedSpace, p: Perversity):
        self.space = space
        self.perversity = p
        l = space.l
        K = space.complex
        pb = _boundary_check_perversity(p, l) if space.boundary else None
        allow = []
        for j in range(l + 1):
            profiles = _simplex_profiles(space, j)
            allow.append([_allowable(ds, bs, j, l, p, pb) for ds, bs in profiles])
        self._deg = []
        self.dims = []
        for j in range(l + 1):
            unit_ids, fringe = [], []
            if j == 0:
                unit_ids = [i for i, ok in enumerate(allow[0]) if ok]
            else:
                pairs = K.face_pairs(j)
                prev = allow[j - 1]
                for i, ok in enumerate(allow[j]):
                    if not ok:
                        continue
                    if all(prev[fi] for fi, _ in pairs[i]):
                        unit_ids.append(i)
                    else:
                        fringe.append(i)
            combos, combo_free, combo_scale = [], {}, []
            if fringe:
                pairs = K.face_pairs(j)
                prev = allow[j - 1]
                cols = []
                for fid in fringe:
                    cols.append({fi: sg for fi, sg in pairs[fid] if not prev[fi]})
                for vec in kernel_of_columns(cols):
                    amb = {fringe[pos]: val for pos, val in vec.items()}
                    free_pos = max(vec)
                    free_amb = fringe[free_pos]
                    combo_free[free_amb] = len(combos)
                    combo_scale.append(vec[free_pos])
                    combos.append(amb)
            self._deg.append(_Degree(unit_ids, {a: i for i, a in enumerate(unit_ids)},
                                     combos, combo_free, combo_scale, allow[j]))
            self.dims.append(len(unit_ids) + len(combos))
        self._diffs = None

    @property
    def top(self) -> int:
        return self.space.l

    def n_units(self, j: int) -> int:
        return len(self._deg[j].unit_ids)

    def basis_ambient(self, j: int, pos: int):
        deg = self._deg[j]
        nu = len(deg.unit_ids)
        if pos < nu:
            return {deg.unit_ids[pos]: Fraction(1)}
        return {k: Fraction(v) for k, v in deg.combos[pos - nu].items()}

    def express_ambient(self, j: int, vec):
        """Coordinates of an ambient-simplex vector in the degree-j basis, or None."""
        deg = self._deg[j]
        work = {k: Fraction(v) for k, v in vec.items() if v}
        out = {}
        nu = len(deg.unit_ids)
        free_hits = sorted(k for k in work if k in deg.combo_free)
        for amb in free_hits:
            val = work.get(amb)
            if not val:
                continue
            ci = deg.combo_free[amb]
            coeff = val / deg.combo_scale[ci]
            for k, v in deg.combos[ci].items():
                nv = work.get(k, 0) - coeff * v
                if nv:
                    work[k] = nv
                else:
                    work.pop(k, None)
            out[nu + ci] = coeff
        for amb, v in work.items():
            pos = deg.unit_pos.get(amb)
            if pos is None:
                return None
            out[pos] = v
        return out

    def diff(self, j: int):
        if self._diffs is None:
            self._build_diffs()
        return self._diffs[j]

    def _build_diffs(self):
        K = self.space.complex
        self._diffs = [dict()]
        for j in range(1, self.top + 1):
            deg = self._deg[j]
            pairs = K.face_pairs(j)
            cols = {}
            for pos, amb in enumerate(deg.unit_ids):
                vec = {}
                for fi, sg in pairs[amb]:
                    vec[fi] = vec.get(fi, 0) + sg
                coords = self.express_ambient(j - 1, vec)
                if coords is None:
                    raise InclusionViolated(f"boundary of interior simplex escaped the complex in degree {j}")
                if coords:
                    cols[pos] = coords
            nu = len(deg.unit_ids)
            for ci, combo in enumerate(deg.combos):
                vec = {}
                for amb, c in combo.items():
                    for fi, sg in pairs[amb]:
                        nv = vec.get(fi, 0) + sg * c
                        if nv:
                            vec[fi] = nv
                        else:
                            del vec[fi]
                coords = self.express_ambient(j - 1, vec)
                if coords is None:
                    raise InclusionViolated(f"boundary of kernel combination escaped the complex in degree {j}")
                if coords:
                    cols[nu + ci] = coords
            self._diffs.append(cols)


class QuotientComplex:
    """Chain-level quotient of a complex by the span of given denominator vectors."""

    def __init__(self, parent, denominators, variant: str):
        self.parent = parent
        self.space = parent.space
        self.perversity = parent.perversity
        self.variant = variant
        self.reducers = []
        self.alive = []
        self.alive_pos = []
        for j in range(parent.top + 1):
            red = Reducer()
            for vec in denominators[j] if j < len(denominators) else ():
                red.add(vec)
            self.reducers.append(red)
            alive = [pos for pos in range(parent.dims[j]) if pos not in red.rows]
            self.alive.append(alive)
            self.alive_pos.append({pos: i for i, pos in enumerate(alive)})
        self.dims = [len(a) for a in self.alive]
        self._diffs = None

    @property
    def top(self) -> int:
        return self.parent.top

    def project(self, j: int, parent_vec):
        residual, _ = self.reducers[j].reduce(parent_vec)
        out = {}
        posmap = self.alive_pos[j]
        for k, v in residual.items():
            out[posmap[k]] = v
        return out

    def lift(self, j: int, qvec):
        alive = self.alive[j]
        return {alive[i]: Fraction(v) for i, v in qvec.items() if v}

    def basis_ambient(self, j: int, pos: int):
        return self.parent.basis_ambient(j, self.alive[j][pos])

    def express_ambient(self, j: int, vec):
        pv = self.parent.express_ambient(j, vec)
        if pv is None:
            return None
        return self.project(j, pv)

    def diff(self, j: int):
        if self._diffs is None:
            self._build_diffs()
        return self._diffs[j]

    def _build_diffs(self):
        self._diffs = [dict()]
        for j in range(1, self.top + 1):
            pd = self.parent.diff(j)
            cols = {}
            for qpos, ppos in enumerate(self.alive[j]):
                col = pd.get(ppos)
                if not col:
                    continue
                qcol = self.project(j - 1, col)
                if qcol:
                    cols[qpos] = qcol
            self._diffs.append(cols)


class SpanComplex:
    """Subcomplex of a parent complex spanned by given vectors (closed under the differential)."""

    def __init__(self, parent, generators, variant: str):
        self.parent = parent
        self.space = parent.space
        self.perversity = parent.perversity
        self.variant = variant
        self.reducers = []
        self.basis_parent = []
        for j in range(parent.top + 1):
            red = Reducer()
            basis = []
            for vec in generators[j] if j < len(generators) else ():
                if red.add(vec, {("g", len(basis)): 1}):
                    basis.append({k: Fraction(v) for k, v in vec.items() if v})
            self.reducers.append(red)
            self.basis_parent.append(basis)
        self.dims = [len(b) for b in self.basis_parent]
        self._diffs = None

    @property
    def top(self) -> int:
        return self.parent.top

    def coords_in_span(self, j: int, parent_vec):
        residual, tags = self.reducers[j].reduce(parent_vec)
        if residual:
            return None
        return {k[1]: -v for k, v in tags.items()}

    def basis_ambient(self, j: int, pos: int):
        out = {}
        for ppos, c in self.basis_parent[j][pos].items():
            for amb, v in self.parent.basis_ambient(j, ppos).items():
                nv = out.get(amb, 0) + c * v
                if nv:
                    out[amb] = nv
                else:
                    out.pop(amb, None)
        return out

    def express_ambient(self, j: int, vec):
        pv = self.parent.express_ambient(j, vec)
        if pv is None:
            return None
        return self.coords_in_span(j, pv)

    def diff(self, j: int):
        if self._diffs is None:
            self._diffs = [dict()]
            for jj in range(1, self.top + 1):
                pd = self.parent.diff(jj)
                cols = {}
                for pos, bvec in enumerate(self.basis_parent[jj]):
                    img = {}
                    for ppos, c in bvec.items():
                        for r, v in pd.get(ppos, {}).items():
                            nv = img.get(r, 0) + c * v
                            if nv:
                                img[r] = nv
                            else:
                                del img[r]
                    coords = self.coords_in_span(jj - 1, img)
                    if coords is None:
                        raise InclusionViolated(f"span not closed under the differential in degree {jj}")
                    if coords:
                        cols[pos] = coords
                self._diffs.append(cols)
        return self._diffs[j]


class PaddedComplex:
    """A complex extended by zero groups up to a larger top degree."""

    def __init__(self, inner, top: int):
        self.inner = inner
        self._top = top
        self.dims = list(inner.dims) + [0] * (top - inner.top)
        self.space = inner.space
        self.perversity = inner.perversity
        self.variant = inner.variant

    @property
    def top(self) -> int:
        return self._top

    def diff(self, j: int):
        return self.inner.diff(j) if 1 <= j <= self.inner.top else {}

    def basis_ambient(self, j: int, pos: int):
        return self.inner.basis_ambient(j, pos)

    def express_ambient(self, j: int, vec):
        if j <= self.inner.top:
            return self.inner.express_ambient(j, vec)
        return None if vec else {}


@dataclass
class ShortExactSequence:
    """0 -> sub -> total -> quotient -> 0 at chain level, with the inclusion matrices."""

    sub: object
    total: object
    quotient: QuotientComplex
    incl: list  # per degree: {sub position: {total position: value}}


# -- builders -------------------------------------------------------------------


def build_intersection_complex(X: StratifiedSpace, p: Perversity,
                               subdivisions: int = DEFAULT_SUBDIVISIONS) -> AbsoluteComplex:
    X.require_valid()
    sp, _ = subdivide_n(X, subdivisions)
    return AbsoluteComplex(sp, p)


def _boundary_denominators(full: AbsoluteComplex, check_p: Perversity):
    """Intersection complex of the boundary, as vectors inside the ambient complex.

    Returns (boundary complex object, per-degree list of coordinate vectors in
    the ambient basis, inclusion matrices).  Raises InclusionViolated if some
    boundary chain fails to be allowable in the ambient space.
    """
    sp = full.space
    bsp = boundary_space(sp)
    bIC = AbsoluteComplex(bsp, check_p)
    amb_index = [sp.complex.index(j) for j in range(sp.l + 1)]
    denoms = [[] for _ in range(full.top + 1)]
    incl = [dict() for _ in range(full.top + 1)]
    for j in range(bIC.top + 1):
        bsims = bsp.complex.simplices(j)
        for pos in range(bIC.dims[j]):
            vec_own = bIC.basis_ambient(j, pos)
            vec_amb = {amb_index[j][bsims[i]]: v for i, v in vec_own.items()}
            coords = full.express_ambient(j, vec_amb)
            if coords is None:
                raise InclusionViolated(
                    f"boundary chain of degree {j} not allowable in the ambient space "
                    f"(perversity {full.perversity}, boundary check {check_p})")
            denoms[j].append(coords)
            incl[j][pos] = coords
    return bIC, denoms, incl


def build_relative_complex(X: StratifiedSpace, p: Perversity,
                           subdivisions: int = DEFAULT_SUBDIVISIONS,
                           with_ses: bool = False):
    """Quotient by the boundary's intersection complex (derived boundary perversity)."""
    if not X.boundary:
        raise NoBoundary("relative complex needs a declared boundary")
    X.require_valid()
    sp, _ = subdivide_n(X, subdivisions)
    full = AbsoluteComplex(sp, p)
    bIC, denoms, incl = _boundary_denominators(full, _boundary_check_perversity(p, sp.l))
    quot = QuotientComplex(full, denoms, "relative_boundary")
    if with_ses:
        return quot, ShortExactSequence(PaddedComplex(bIC, full.top), full, quot, incl)
    return quot


def _supported_in(full: AbsoluteComplex, vertex_set):
    """Basis of the subspace of chains supported in the full subcomplex on vertex_set."""
    sp = full.space
    vs = set(vertex_set)
    out = []
    for j in range(full.top + 1):
        deg = full._deg[j]
        sims = sp.complex.simplices(j)
        vecs = []
        nu = len(deg.unit_ids)
        for pos, amb in enumerate(deg.unit_ids):
            if all(v in vs for v in sims[amb]):
                vecs.append({pos: 1})
        inside, mixed = [], []
        for ci, combo in enumerate(deg.combos):
            outside = {amb: v for amb, v in combo.items() if not all(u in vs for u in sims[amb])}
            if not outside:
                inside.append(ci)
            elif len(outside) < len(combo):
                mixed.append((ci, outside))
        for ci in inside:
            vecs.append({nu + ci: 1})
        if mixed:
            cols = [outside for _, outside in mixed]
            for kv in kernel_of_columns(cols):
                vecs.append({nu + mixed[posn][0]: val for posn, val in kv.items()})
        out.append(vecs)
    return out


def build_bm_complex(P: SpacePair, p: Perversity,
                     subdivisions: int = DEFAULT_SUBDIVISIONS):
    """Borel-Moore complex via the cone at infinity over the removed subcomplex."""
    from .constructions import one_point_compactification

    if not P.removed:
        ic = build_intersection_complex(P.space, p, subdivisions)
        ic.variant = "borel_moore"
        return ic
    rep = P.validate()
    if not rep.ok:
        from .stratified import PairInvalid
        raise PairInvalid("; ".join(m for _, m in rep.failures))
    hat = one_point_compactification(P)
    sp, [carrier2] = subdivide_n(hat, subdivisions, [hat.cone_vertices])
    full = AbsoluteComplex(sp, p)
    denoms = _supported_in(full, carrier2)
    return QuotientComplex(full, denoms, "borel_moore")


def build_relative_open_complex(X: StratifiedSpace, w_vertices, p: Perversity,
                                include_boundary: bool = False,
                                subdivisions: int = 0):
    """Quotient by admissible chains supported in the carrier of an open star union."""
    used = X.complex.vertices_used()
    wset = frozenset(w_vertices)
    if not wset <= used:
        raise CarrierNotSubcomplex(f"carrier vertices {sorted(wset - used)} not in the complex")
    sp, [w2] = subdivide_n(X, subdivisions, [wset])
    full = AbsoluteComplex(sp, p)
    denoms = _supported_in(full, w2)
    if include_boundary:
        if not sp.boundary:
            raise NoBoundary("include_boundary requires a declared boundary")
        _, bden, _ = _boundary_denominators(full, _boundary_check_perversity(p, sp.l))
        for j in range(full.top + 1):
            denoms[j] = list(denoms[j]) + list(bden[j])
    return QuotientComplex(full, denoms, "relative_open")


def build_relative_bm_complex(P: SpacePair, p: Perversity,
                              mode: str = "check_p_down",
                              subdivisions: int = DEFAULT_SUBDIVISIONS):
    """Borel-Moore complex of the pair (X, boundary of X).

    mode selects the perversity testing chains of the boundary: the derived
    boundary perversity (check_p_down, default) or the plain truncation of p
    (check_p).  For three-dimensional spaces the two coincide.
    """
    from .constructions import one_point_compactification

    X = P.space
    if not X.boundary:
        raise NoBoundary("relative Borel-Moore complex needs a declared boundary")
    if mode not in ("check_p_down", "check_p"):
        raise ValueError(f"unknown mode {mode!r}")
    if not P.removed:
        sp, _ = subdivide_n(X, subdivisions)
        full = AbsoluteComplex(sp, p)
        check = _boundary_check_perversity(p, sp.l) if mode == "check_p_down" else truncate(p, sp.l - 1)
        _, denoms, _ = _boundary_denominators(full, check)
        return QuotientComplex(full, denoms, "relative_bm")
    hat = one_point_compactification(P)
    sp, [carrier2] = subdivide_n(hat, subdivisions, [hat.cone_vertices])
    full = AbsoluteComplex(sp, p)
    bm = QuotientComplex(full, _supported_in(full, carrier2), "borel_moore")
    check = _boundary_check_perversity(p, sp.l) if mode == "check_p_down" else truncate(p, sp.l - 1)
    _, bden, _ = _boundary_denominators(full, check)
    denoms2 = []
    for j in range(full.top + 1):
        vecs = []
        for vec in bden[j]:
            q = bm.project(j, vec)
            if q:
                vecs.append(q)
        denoms2.append(vecs)
    return QuotientComplex(bm, denoms2, "relative_bm")
