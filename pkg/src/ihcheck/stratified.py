"""Filtrations, singular-space validation, boundary declaration, subdivision.

A stratified space is a simplicial complex plus a depth label per vertex in
[0, l]: the closed skeleton X_i is the full subcomplex on vertices of depth
<= i.  This representation makes every skeleton full automatically, which is
the condition under which simplicial intersection homology computes the
PL/singular groups.  A declared boundary is a vertex set whose full subcomplex
is the boundary; its induced filtration is the restriction of the depths.

Validation is combinatorial (coface counts and skeleton comparisons) and is a
sufficient check for the desk-scale corpus, not a decision procedure for
topological local triviality.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .complexes import SimplicialComplex, barycentric_subdivision


class DepthOutOfRange(ValueError):
    pass


class BoundaryNotFull(ValueError):
    pass


class CofaceCountViolation(ValueError):
    pass


class PairInvalid(ValueError):
    pass


class ValidationRequired(ValueError):
    pass


class NoBoundary(ValueError):
    pass


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    failures: tuple = ()

    def merged(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(self.ok and other.ok, self.failures + other.failures)


@dataclass
class StratifiedSpace:
    complex: SimplicialComplex
    depth: tuple            # per vertex id; entries in [0, l]
    boundary: frozenset = frozenset()
    name: str = ""
    model_only: bool = False  # local/product models bypass global validation
    validation: ValidationReport | None = None
    _key: str = field(default="", repr=False)

    @property
    def l(self) -> int:
        return self.complex.dim

    @property
    def key(self) -> str:
        """Stable content key for memoization."""
        if not self._key:
            h = hashlib.sha1()
            for m in self.complex.maximal_simplices():
                h.update(repr(m).encode())
            h.update(repr(tuple(self.depth)).encode())
            h.update(repr(sorted(self.boundary)).encode())
            self._key = (self.name + ":" if self.name else "") + h.hexdigest()[:16]
        return self._key

    def boundary_complex(self) -> SimplicialComplex:
        return self.complex.full_subcomplex(self.boundary)

    def require_valid(self):
        if self.model_only:
            return
        if self.validation is None or not self.validation.ok:
            raise ValidationRequired(f"space {self.name or self.key} has not passed validation")


def attach_filtration(K: SimplicialComplex, depth, name: str = "") -> StratifiedSpace:
    """Wrap a complex with vertex depths (no boundary declared)."""
    l = K.dim
    if isinstance(depth, dict):
        depths = [l] * K.n_vertices
        for v, d in depth.items():
            depths[v] = d
    else:
        depths = list(depth)
        if len(depths) != K.n_vertices:
            raise DepthOutOfRange(f"need {K.n_vertices} depths, got {len(depths)}")
    for (v,) in K.simplices(0):
        if not 0 <= depths[v] <= l:
            raise DepthOutOfRange(f"vertex {v}: depth {depths[v]} outside [0, {l}]")
    return StratifiedSpace(K, tuple(depths), name=name)


def _simplex_in(vertex_set, sigma) -> bool:
    return all(v in vertex_set for v in sigma)


def _purity_failures(K: SimplicialComplex, l: int):
    """Simplices that are not faces of any top-dimensional simplex."""
    marked = [set() for _ in range(l + 1)]
    marked[l] = set(range(K.n_simplices(l)))
    for j in range(l, 0, -1):
        pairs = K.face_pairs(j)
        for i in marked[j]:
            for fi, _ in pairs[i]:
                marked[j - 1].add(fi)
    failures = []
    for j in range(l):
        if len(marked[j]) != K.n_simplices(j):
            for i in range(K.n_simplices(j)):
                if i not in marked[j]:
                    failures.append(("purity", f"simplex {K.simplices(j)[i]} is not a face of any {l}-simplex"))
                    break
    return failures


def validate_pseudomanifold(X: StratifiedSpace) -> ValidationReport:
    """Closed-case checks: purity, two cofaces per (l-1)-simplex, X_{l-1} = X_{l-2}."""
    K, l = X.complex, X.l
    failures = _purity_failures(K, l)
    # (b) coface counts
    if l >= 1:
        counts = K.coface_counts(l - 1)
        for i, c in enumerate(counts):
            if c != 2:
                failures.append(("coface", f"{l - 1}-simplex {K.simplices(l - 1)[i]} has {c} {l}-cofaces (want 2)"))
                if len([f for f in failures if f[0] == "coface"]) >= 3:
                    break
    # (c) X_{l-1} = X_{l-2}
    if l >= 1:
        deep = {v for (v,) in K.simplices(0) if X.depth[v] <= l - 1}
        deeper = {v for v in deep if X.depth[v] <= l - 2}
        if deep != deeper:
            v = sorted(deep - deeper)[0]
            failures.append(("skeleton", f"vertex {v} has depth {l - 1}; X_{l - 1} != X_{l - 2}"))
    return ValidationReport(not failures, tuple(failures))


def _validate_boundary(X: StratifiedSpace) -> ValidationReport:
    """Checks for a declared boundary: coface counts, defect dimension, boundary validity."""
    K, l, B = X.complex, X.l, X.boundary
    failures = []
    bd = X.boundary_complex()
    if bd.dim != l - 1:
        failures.append(("boundary-dim", f"boundary subcomplex has dimension {bd.dim}, want {l - 1}"))
        return ValidationReport(False, tuple(failures))
    for v in sorted(B):
        if X.depth[v] > l - 1:
            failures.append(("boundary-depth", f"boundary vertex {v} has depth {X.depth[v]} > {l - 1}"))
    # coface counts of (l-1)-simplices, split by membership in the boundary
    counts = K.coface_counts(l - 1)
    n_bad = 0
    for i, s in enumerate(K.simplices(l - 1)):
        inside = _simplex_in(B, s)
        want = 1 if inside else 2
        if counts[i] != want:
            failures.append(("coface", f"{l - 1}-simplex {s} ({'boundary' if inside else 'interior'}) has {counts[i]} cofaces (want {want})"))
            n_bad += 1
            if n_bad >= 3:
                break
    # defect locus of the boundary: (l-2)-simplices of bd with != 2 (l-1)-cofaces in bd
    if l >= 2:
        bad = []
        bcounts = bd.coface_counts(l - 2)
        for i, s in enumerate(bd.simplices(l - 2)):
            if bcounts[i] != 2:
                bad.append(s)
        if bad:
            # closure of the bad set has dimension l-2 whenever it is nonempty
            failures.append(("boundary-defect", f"non-regular locus of the boundary contains {bad[0]} (dimension {l - 2} not < {l - 2})"))
    # the boundary with its induced filtration is a closed pseudomanifold
    bspace = StratifiedSpace(bd, X.depth, name=(X.name + ":boundary") if X.name else "")
    brep = validate_pseudomanifold(bspace)
    for code, msg in brep.failures:
        failures.append(("boundary-" + code, msg))
    # off-boundary skeleton condition: simplices of X_{l-1} not inside the
    # boundary must already lie in X_{l-2}
    done = False
    for j in range(l + 1):
        if done:
            break
        for s in K.simplices(j):
            dmax = max(X.depth[v] for v in s)
            if dmax == l - 1 and not _simplex_in(B, s):
                failures.append(("skeleton", f"simplex {s} sits at filtration level {l - 1} outside the boundary"))
                done = True
                break
    failures.extend(_purity_failures(K, l))
    return ValidationReport(not failures, tuple(failures))


def declare_boundary(X: StratifiedSpace, boundary_vertices, strict: bool = True) -> StratifiedSpace:
    """Return a copy of X with the boundary declared and validated.

    With strict=True a coface violation raises; either way the validation
    report is attached to the returned space.
    """
    B = frozenset(boundary_vertices)
    used = X.complex.vertices_used()
    if not B <= used:
        raise BoundaryNotFull(f"boundary vertices {sorted(B - used)} not in the complex")
    Y = StratifiedSpace(X.complex, X.depth, boundary=B, name=X.name, model_only=X.model_only)
    report = _validate_boundary(Y)
    if strict and not report.ok:
        hard = [f for f in report.failures if f[0] in ("coface", "boundary-dim")]
        if hard:
            raise CofaceCountViolation(f"{hard[0][0]}: {hard[0][1]}")
    Y.validation = report
    return Y


def validate(X: StratifiedSpace) -> ValidationReport:
    """Validate as closed pseudomanifold or boundary-case, per the declared data."""
    report = _validate_boundary(X) if X.boundary else validate_pseudomanifold(X)
    X.validation = report
    return report


def boundary_space(X: StratifiedSpace) -> StratifiedSpace:
    """The declared boundary as a stratified space in its own right (no boundary)."""
    if not X.boundary:
        raise NoBoundary("space has empty boundary")
    bd = X.boundary_complex()
    return StratifiedSpace(bd, X.depth, name=(X.name + ":boundary") if X.name else "", model_only=True)


def subdivide_stratified(X: StratifiedSpace, aux_vertex_sets=()):
    """Barycentric subdivision carrying depths and the boundary along.

    The barycenter of a simplex gets the maximum depth of its vertices and is
    a boundary vertex iff the simplex lies in the boundary subcomplex.  Each
    auxiliary vertex set (which must span a full subcomplex) is mapped to the
    barycenters of the simplices it spans.  Returns (space, mapped_aux,
    provenance).
    """
    K2, provenance = barycentric_subdivision(X.complex)
    depth2 = []
    bverts = X.boundary
    newb = set()
    for vid, sigma in enumerate(provenance):
        depth2.append(max(X.depth[v] for v in sigma))
        if bverts and _simplex_in(bverts, sigma):
            newb.add(vid)
    mapped = []
    for aux in aux_vertex_sets:
        aset = set(aux)
        mapped.append(frozenset(vid for vid, sigma in enumerate(provenance) if _simplex_in(aset, sigma)))
    Y = StratifiedSpace(K2, tuple(depth2), boundary=frozenset(newb),
                        name=(X.name + "'") if X.name else "", model_only=X.model_only)
    # validation verdicts are preserved by subdivision (tested separately on
    # small complexes); carrying the report avoids revalidating huge complexes
    Y.validation = X.validation
    return Y, mapped, provenance


def subdivide_n(X: StratifiedSpace, n: int, aux_vertex_sets=()):
    """n barycentric subdivisions, threading auxiliary vertex sets through."""
    aux = [frozenset(a) for a in aux_vertex_sets]
    Y = X
    for _ in range(n):
        Y, aux, _ = subdivide_stratified(Y, aux)
    return Y, aux


@dataclass
class SpacePair:
    """Compact carrier (K, L) for the locally closed space |K| minus |L|.

    L is given as a vertex set spanning a full subcomplex of K.  Used as the
    computational model for Borel-Moore homology via the cone at infinity.
    """

    space: StratifiedSpace
    removed: frozenset = frozenset()
    name: str = ""

    @property
    def key(self) -> str:
        return f"pair:{self.space.key}:{','.join(map(str, sorted(self.removed)))}"

    def validate(self) -> ValidationReport:
        """Coface checks away from L (the open part must be a pseudomanifold)."""
        X = self.space
        K, l, B = X.complex, X.l, X.boundary
        failures = []
        L = self.removed
        used = K.vertices_used()
        if not L <= used:
            failures.append(("pair", f"removed vertices {sorted(L - used)} not in complex"))
            return ValidationReport(False, tuple(failures))
        counts = K.coface_counts(l - 1) if l >= 1 else []
        for i, s in enumerate(K.simplices(l - 1)):
            if _simplex_in(L, s):
                continue
            want = 1 if (B and _simplex_in(B, s)) else 2
            if counts[i] != want:
                failures.append(("pair-coface", f"{l - 1}-simplex {s} has {counts[i]} cofaces (want {want})"))
                if len(failures) >= 3:
                    break
        return ValidationReport(not failures, tuple(failures))
