"""Constructors for stratified spaces and the catalog of named examples.

The pinched examples are built by a cone-replacement surgery: to crush a full
subcomplex A to a point, remove the interior of its closed simplicial
neighborhood and glue the cone on the frontier link.  (Identifying the
vertices of A would not produce the quotient space: an affine map crushes
every chord parallel to A inside each simplex, not just A itself.)  Crushing a
regular neighborhood onto its spine is exactly coning its frontier, so the
surgery realizes the quotient whenever the closed stars are honest
neighborhoods; the constructions below arrange that by hand and every catalog
space re-validates after surgery.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .complexes import SimplicialComplex, build_complex
from .stratified import (NoBoundary, PairInvalid, SpacePair, StratifiedSpace,
                         declare_boundary, attach_filtration, validate)


class UnknownName(KeyError):
    pass


class CollapseError(ValueError):
    pass


class NotCompact(ValueError):
    pass


# -- basic complexes -------------------------------------------------------------


def circle_complex(n: int) -> SimplicialComplex:
    return build_complex([(i, (i + 1) % n) for i in range(n)], n_vertices=n)


def path_complex(n_edges: int) -> SimplicialComplex:
    return build_complex([(i, i + 1) for i in range(n_edges)], n_vertices=n_edges + 1)


def simplex_sphere(n: int) -> SimplicialComplex:
    """Boundary of the (n+1)-simplex, a triangulated n-sphere."""
    verts = range(n + 2)
    return build_complex(list(combinations(verts, n + 1)), n_vertices=n + 2)


def csaszar_torus() -> SimplicialComplex:
    """The 7-vertex triangulated torus (every pair of vertices is an edge)."""
    tris = []
    for i in range(7):
        tris.append(tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7))))
        tris.append(tuple(sorted(((i) % 7, (i + 2) % 7, (i + 3) % 7))))
    return build_complex(tris, n_vertices=7)


def fan_disk(n: int) -> SimplicialComplex:
    """Disk: an n-gon coned from one interior vertex (id n)."""
    return build_complex([(i, (i + 1) % n, n) for i in range(n)], n_vertices=n + 1)


def strip_disk8() -> SimplicialComplex:
    """Disk with hexagonal perimeter a,c1,c2,b,d2,d1 and interior edge m1-m2.

    The links of a (id 0) and b (id 3) are the paths c1-m1-d1 and c2-m2-d2
    through interior vertices, and their closed stars are disjoint; this is
    the smallest disk letting two boundary points be pinched independently in
    a product.
    """
    a, c1, c2, b, d2, d1, m1, m2 = range(8)
    tris = [(a, c1, m1), (c1, c2, m1), (c2, m2, m1), (c2, b, m2),
            (b, d2, m2), (d2, d1, m2), (d1, m1, m2), (d1, a, m1)]
    return build_complex(tris, n_vertices=8)


def ordered_product(KA: SimplicialComplex, KB: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of |KA| x |KB|.

    Vertex (a, b) gets id a * nB + b; simplices are the monotone staircases in
    sigma x tau grids over pairs of factor simplices (the ordered simplicial
    product for the integer vertex orders).
    """
    nB = KB.n_vertices
    new_max = []
    for ma in KA.maximal_simplices():
        for mb in KB.maximal_simplices():
            s, t = len(ma) - 1, len(mb) - 1
            for downs in combinations(range(s + t), s):
                i = j = 0
                cell = [ma[0] * nB + mb[0]]
                for step in range(s + t):
                    if step in downs:
                        i += 1
                    else:
                        j += 1
                    cell.append(ma[i] * nB + mb[j])
                new_max.append(tuple(sorted(cell)))
    names = [f"{KA.names[a]}.{KB.names[b]}" for a in range(KA.n_vertices) for b in range(nB)]
    return build_complex(new_max, n_vertices=KA.n_vertices * nB, names=names)


# -- stratified constructors ------------------------------------------------------


def cone(X: StratifiedSpace, apex_depth: int = 0) -> StratifiedSpace:
    """Cone with a new apex vertex.

    For a boundaryless base the declared boundary of the cone is the base and
    the result is returned subdivided once, with barycenters of mixed simplices
    (apex joined to base faces) at regular depth: the base sits at depth l-1,
    so without subdividing, the full subcomplex on deep vertices would swallow
    the interior.  For a base with boundary the declared boundary is the cone
    on the base's boundary (the local-model pair convention: the base itself
    is the frontier sphere of the cone, not part of its boundary) and the
    space is marked as a model.
    """
    from .complexes import barycentric_subdivision

    K = X.complex
    apex = K.n_vertices
    new_max = [m + (apex,) for m in K.maximal_simplices()]
    K2 = build_complex(new_max, n_vertices=apex + 1, names=K.names + ["apex"])
    name = f"cone({X.name})" if X.name else "cone"
    if X.boundary:
        depths = list(X.depth) + [apex_depth]
        return StratifiedSpace(K2, tuple(depths), boundary=frozenset(X.boundary | {apex}),
                               name=name, model_only=True)
    l = K2.dim
    K3, provenance = barycentric_subdivision(K2)
    depths3 = []
    boundary3 = set()
    for vid, sigma in enumerate(provenance):
        if sigma == (apex,):
            depths3.append(apex_depth)
        elif apex in sigma:
            depths3.append(l)
        else:
            depths3.append(max(X.depth[v] for v in sigma))
            boundary3.add(vid)
    Y = StratifiedSpace(K3, tuple(depths3), boundary=frozenset(boundary3), name=name)
    validate(Y)
    return Y


def suspension(X: StratifiedSpace, apex_depth: int = 0) -> StratifiedSpace:
    """Unreduced suspension: two cones glued along the (boundaryless) base."""
    if X.boundary:
        raise NoBoundary("suspension wants a boundaryless base")
    K = X.complex
    a1, a2 = K.n_vertices, K.n_vertices + 1
    new_max = [m + (a1,) for m in K.maximal_simplices()] + [m + (a2,) for m in K.maximal_simplices()]
    K2 = build_complex(new_max, n_vertices=a2 + 1, names=K.names + ["apex+", "apex-"])
    depths = tuple(d + 1 for d in X.depth) + (apex_depth, apex_depth)
    Y = StratifiedSpace(K2, depths, name=f"susp({X.name})" if X.name else "susp")
    validate(Y)
    return Y


def product_with_interval(X: StratifiedSpace, segments: int = 2):
    """Product with an interval: (closed product model, pair for the open product).

    The closed model carries the product stratification (every depth shifted
    up by one) and declares only the side part of the boundary, so its
    intersection homology is that of the open product; the pair removes the
    two lid copies for Borel-Moore computations.
    """
    P = path_complex(segments)
    K2 = ordered_product(X.complex, P)
    nB = P.n_vertices
    depths = [0] * K2.n_vertices
    for v in range(X.complex.n_vertices):
        for t in range(nB):
            depths[v * nB + t] = X.depth[v] + 1
    side = frozenset(v * nB + t for v in X.boundary for t in range(nB))
    closed = StratifiedSpace(K2, tuple(depths), boundary=side,
                             name=f"{X.name}xI" if X.name else "prod", model_only=True)
    lids = frozenset([v * nB for v in X.complex.vertices_used()] +
                     [v * nB + (nB - 1) for v in X.complex.vertices_used()])
    return closed, SpacePair(closed, lids, name=(closed.name + ":open"))


def double(X: StratifiedSpace) -> StratifiedSpace:
    """Two copies of X glued along the boundary; the glued regular boundary
    stratum becomes regular (depth l), deeper boundary strata keep their depth."""
    if not X.boundary:
        raise NoBoundary("double needs a nonempty boundary")
    K, l = X.complex, X.l
    interior = sorted(K.vertices_used() - X.boundary)
    copy2 = {v: K.n_vertices + i for i, v in enumerate(interior)}
    n2 = K.n_vertices + len(interior)

    def rename(m):
        return tuple(sorted(copy2.get(v, v) for v in m))

    new_max = list(K.maximal_simplices()) + [rename(m) for m in K.maximal_simplices()]
    names = list(K.names) + [K.names[v] + "'" for v in interior]
    K2 = build_complex(new_max, n_vertices=n2, names=names)
    depths = list(X.depth) + [X.depth[v] for v in interior]
    for v in X.boundary:
        if depths[v] == l - 1:
            depths[v] = l
    Y = StratifiedSpace(K2, tuple(depths), name=f"double({X.name})" if X.name else "double")
    validate(Y)
    return Y


def one_point_compactification(P: SpacePair) -> StratifiedSpace:
    """Cone at infinity over the removed subcomplex of a compact pair.

    The apex sits at depth 0 and joins the boundary exactly when the removed
    part meets it.  The vertex set of the coned-off piece is stashed on the
    result as ``cone_vertices`` (it is the carrier quotiented away by the
    Borel-Moore construction).
    """
    X, L = P.space, P.removed
    if not L:
        raise PairInvalid("nothing removed; the space is already compact")
    K = X.complex
    used = K.vertices_used()
    if not L <= used:
        raise PairInvalid(f"removed vertices {sorted(L - used)} not in the complex")
    Lsub = K.full_subcomplex(L)
    apex = K.n_vertices
    new_max = list(K.maximal_simplices()) + [m + (apex,) for m in Lsub.maximal_simplices()]
    K2 = build_complex(new_max, n_vertices=apex + 1, names=K.names + ["inf"])
    depths = tuple(X.depth) + (0,)
    boundary = set(X.boundary)
    if boundary & set(L):
        boundary.add(apex)
    Y = StratifiedSpace(K2, depths, boundary=frozenset(boundary),
                        name=f"hat({P.name or X.name})", model_only=True)
    Y.cone_vertices = frozenset(L | {apex})
    return Y


def pinch(X: StratifiedSpace, vertex_sets, pinch_depth: int = 0) -> StratifiedSpace:
    """Collapse each full subcomplex spanned by a vertex set to a fresh vertex.

    Requires the closed simplicial stars of the collapsed subcomplexes to be
    pairwise disjoint (hard error otherwise); each star is then replaced by
    the cone on its frontier link.  Depths survive unchanged, the new vertices
    get pinch_depth, and boundary membership transfers (a pinch vertex lies on
    the boundary iff its collapsed set did).
    """
    K = X.complex
    sets = [frozenset(s) for s in vertex_sets]
    used = K.vertices_used()
    for s in sets:
        if not s <= used:
            raise CollapseError(f"vertices {sorted(s - used)} not in the complex")
        if X.boundary and not (s <= X.boundary or not (s & X.boundary)):
            raise CollapseError("collapsed set straddles the boundary")
    # closed stars as simplex sets; check pairwise disjointness
    stars = []
    links = []
    for s in sets:
        meet = [m for m in K.maximal_simplices() if s & set(m)]
        star = SimplicialComplex.from_maximal(meet, n_vertices=K.n_vertices) if meet else None
        if star is None:
            raise CollapseError("collapsed set spans no simplices")
        star_sims = set()
        link_sims = []
        for j in range(star.dim + 1):
            for t in star.simplices(j):
                star_sims.add(t)
                if not (s & set(t)):
                    link_sims.append(t)
        stars.append(star_sims)
        links.append(link_sims)
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            shared = stars[i] & stars[j]
            if shared:
                raise CollapseError(f"closed stars of collapsed sets share {sorted(shared)[0]}")
    removed = frozenset().union(*sets)
    B = K.full_subcomplex(used - removed)
    new_ids = {}
    names = list(K.names)
    for i in range(len(sets)):
        new_ids[i] = K.n_vertices + i
        names.append(f"pinch{i}")
    new_max = list(B.maximal_simplices())
    for i, link_sims in enumerate(links):
        v = new_ids[i]
        new_max.extend(t + (v,) for t in link_sims)
    K2 = build_complex(new_max, n_vertices=K.n_vertices + len(sets), names=names)
    depths = list(X.depth) + [pinch_depth] * len(sets)
    boundary = set(X.boundary) - removed
    for i, s in enumerate(sets):
        if s <= X.boundary:
            boundary.add(new_ids[i])
    Y = StratifiedSpace(K2, tuple(depths), boundary=frozenset(boundary),
                        name=f"pinch({X.name})" if X.name else "pinch")
    return Y


# -- local models ------------------------------------------------------------------


@dataclass
class LocalModel:
    """Cone neighborhood of a vertex: the closed star models the small ball,
    the link models the small sphere, and the pairs model the punctured ball."""

    vertex: int
    star: StratifiedSpace           # boundary: star of v inside the ambient boundary
    link: StratifiedSpace           # depths shifted down one; boundary: link inside the ambient boundary
    punctured_pair: SpacePair       # (star, {v}): the ball minus its center
    open_star_pair: SpacePair       # (star, link vertices): the open ball, for Borel-Moore


def local_model(X: StratifiedSpace, v: int) -> LocalModel:
    star_K, link_K = X.complex.star_and_link(v)
    link_verts = link_K.vertices_used()
    for w in link_verts:
        if X.depth[w] == 0:
            raise ValueError(f"link of {v} contains another depth-0 vertex {w}; separate the strata first")
    star_boundary = frozenset((set(X.boundary) & (link_verts | {v}))) if X.boundary else frozenset()
    star = StratifiedSpace(star_K, X.depth, boundary=star_boundary,
                           name=f"{X.name}:star({X.complex.names[v]})", model_only=True)
    link_depths = tuple(max(0, d - 1) for d in X.depth)
    link_boundary = frozenset(set(X.boundary) & link_verts) if X.boundary else frozenset()
    link = StratifiedSpace(link_K, link_depths, boundary=link_boundary,
                           name=f"{X.name}:link({X.complex.names[v]})", model_only=True)
    return LocalModel(
        vertex=v,
        star=star,
        link=link,
        punctured_pair=SpacePair(star, frozenset([v]), name=star.name + ":punctured"),
        open_star_pair=SpacePair(star, frozenset(link_verts), name=star.name + ":open"),
    )


# -- the example catalog -----------------------------------------------------------


def _validated(Y: StratifiedSpace) -> StratifiedSpace:
    report = validate(Y)
    if not report.ok:
        raise RuntimeError(f"catalog space {Y.name} failed validation: {report.failures[:2]}")
    return Y


def _sphere(n: int) -> StratifiedSpace:
    K = simplex_sphere(n)
    return _validated(attach_filtration(K, [n] * K.n_vertices, name=f"sphere{n}"))


def _torus() -> StratifiedSpace:
    K = csaszar_torus()
    return _validated(attach_filtration(K, [2] * 7, name="torus"))


def _suspension_torus() -> StratifiedSpace:
    T = _torus()
    base = StratifiedSpace(T.complex, tuple(2 for _ in range(7)), name="torus")
    Y = suspension(base)
    Y.name = "suspension_torus"
    return _validated(Y)


def _product_torus(n: int, m: int) -> StratifiedSpace:
    K = ordered_product(circle_complex(n), circle_complex(m))
    return attach_filtration(K, [2] * K.n_vertices, name=f"torus{n}x{m}")


def _pinched_torus() -> StratifiedSpace:
    T = _product_torus(3, 3)
    meridian = frozenset(i * 3 + 0 for i in range(3))
    Y = pinch(T, [meridian])
    Y.name = "pinched_torus"
    return _validated(Y)


def _double_pinched_torus() -> StratifiedSpace:
    T = _product_torus(3, 6)
    m0 = frozenset(i * 6 + 0 for i in range(3))
    m3 = frozenset(i * 6 + 3 for i in range(3))
    Y = pinch(T, [m0, m3])
    Y.name = "double_pinched_torus"
    return _validated(Y)


def _solid_torus() -> StratifiedSpace:
    D = fan_disk(3)
    K = ordered_product(circle_complex(3), D)
    nB = D.n_vertices
    depths = [3 if b == 3 else 2 for a in range(3) for b in range(nB)]
    X = attach_filtration(K, depths, name="solid_torus")
    boundary = frozenset(a * nB + b for a in range(3) for b in range(3))
    return declare_boundary(X, boundary)


def _outer_pinched_solid() -> StratifiedSpace:
    D = strip_disk8()
    K = ordered_product(circle_complex(3), D)
    nB = D.n_vertices
    interior = {6, 7}  # m1, m2
    depths = [3 if b in interior else 2 for a in range(3) for b in range(nB)]
    X = attach_filtration(K, depths, name="solid8")
    boundary = frozenset(a * nB + b for a in range(3) for b in range(6))
    X = declare_boundary(X, boundary)
    circle_a = frozenset(a * nB + 0 for a in range(3))
    circle_b = frozenset(a * nB + 3 for a in range(3))
    Y = pinch(X, [circle_a, circle_b])
    Y.name = "outer_pinched_solid"
    return _validated(Y)


def _interval_pair() -> SpacePair:
    K = path_complex(4)
    X = StratifiedSpace(K, tuple([1] * K.n_vertices), name="interval", model_only=True)
    return SpacePair(X, frozenset([0, 4]), name="interval_pair")


def _circle_cylinder_pair() -> SpacePair:
    K = ordered_product(circle_complex(3), path_complex(2))
    X = StratifiedSpace(K, tuple([2] * K.n_vertices), name="cylinder", model_only=True)
    ends = frozenset([i * 3 + 0 for i in range(3)] + [i * 3 + 2 for i in range(3)])
    return SpacePair(X, ends, name="circle_cylinder_pair")


_CATALOG = {
    "sphere1": lambda: _sphere(1),
    "sphere2": lambda: _sphere(2),
    "sphere3": lambda: _sphere(3),
    "torus": _torus,
    "suspension_torus": _suspension_torus,
    "pinched_torus": _pinched_torus,
    "double_pinched_torus": _double_pinched_torus,
    "solid_torus": _solid_torus,
    "outer_pinched_solid": _outer_pinched_solid,
    "interval_pair": _interval_pair,
    "circle_cylinder_pair": _circle_cylinder_pair,
}


def catalog_names() -> list[str]:
    return sorted(_CATALOG)


def generate_example(name: str):
    """Build a named example; StratifiedSpace or SpacePair, freshly validated."""
    key = name.strip().lower().replace("(", "").replace(")", "")
    builder = _CATALOG.get(key)
    if builder is None:
        raise UnknownName(f"unknown example {name!r}; known: {', '.join(catalog_names())}")
    return builder()
