"""Finite abstract simplicial complexes and chains with exact rational coefficients.

Simplices are strictly increasing tuples of integer vertex ids; the sorted
order doubles as the orientation convention for the boundary operator.  A
complex keeps its simplices grouped by dimension in lexicographic order, which
fixes every basis used downstream (all computations are deterministic).

Complexes derived from one another (full subcomplexes, stars, links) share the
ambient vertex universe, so vertex ids, depths and boundary flags transfer
without translation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

Simplex = tuple  # strictly increasing tuple of vertex ids


class DuplicateVertexInSimplex(ValueError):
    pass


class VertexNotFound(KeyError):
    pass


class SimplicialComplex:
    """Face-closed set of abstract simplices over a fixed vertex universe."""

    __slots__ = ("n_vertices", "names", "by_dim", "_index", "_face_pairs", "_maximal", "_coface_counts")

    def __init__(self, n_vertices: int, by_dim: list[list[Simplex]], names=None):
        self.n_vertices = n_vertices
        self.by_dim = by_dim
        self.names = list(names) if names is not None else [f"v{i}" for i in range(n_vertices)]
        self._index = [None] * len(by_dim)
        self._face_pairs = [None] * len(by_dim)
        self._coface_counts = [None] * len(by_dim)
        self._maximal = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_maximal(cls, maximal, n_vertices=None, names=None) -> "SimplicialComplex":
        """Face closure of the given simplices (need not actually be maximal)."""
        tuples = []
        top = -1
        for m in maximal:
            t = tuple(sorted(m))
            if len(set(t)) != len(t):
                raise DuplicateVertexInSimplex(f"repeated vertex in {m}")
            if not t:
                continue
            tuples.append(t)
            top = max(top, len(t) - 1)
        if n_vertices is None:
            n_vertices = 1 + max((t[-1] for t in tuples), default=-1)
        per_dim = [set() for _ in range(top + 1)]
        for t in tuples:
            for size in range(1, len(t) + 1):
                per_dim[size - 1].update(combinations(t, size))
        by_dim = [sorted(s) for s in per_dim]
        return cls(n_vertices, by_dim, names=names)

    # -- basic queries -------------------------------------------------------

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        return len(self.by_dim) - 1

    def simplices(self, j: int) -> list[Simplex]:
        if 0 <= j < len(self.by_dim):
            return self.by_dim[j]
        return []

    def n_simplices(self, j: int) -> int:
        return len(self.simplices(j))

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.by_dim)

    def index(self, j: int) -> dict:
        """Simplex -> position within dimension j."""
        if self._index[j] is None:
            self._index[j] = {s: i for i, s in enumerate(self.by_dim[j])}
        return self._index[j]

    def contains(self, sigma) -> bool:
        t = tuple(sorted(sigma))
        j = len(t) - 1
        return 0 <= j < len(self.by_dim) and t in self.index(j)

    def face_pairs(self, j: int):
        """For each j-simplex: tuple of (face position in dim j-1, sign)."""
        if j <= 0 or j > self.dim:
            return []
        if self._face_pairs[j] is None:
            idx = self.index(j - 1)
            out = []
            for s in self.by_dim[j]:
                row = []
                for t in range(len(s)):
                    face = s[:t] + s[t + 1:]
                    row.append((idx[face], -1 if t & 1 else 1))
                out.append(tuple(row))
            self._face_pairs[j] = out
        return self._face_pairs[j]

    def coface_counts(self, j: int) -> list[int]:
        """Number of (j+1)-cofaces of each j-simplex."""
        if self._coface_counts[j] is None:
            counts = [0] * len(self.by_dim[j])
            for row in self.face_pairs(j + 1):
                for fi, _ in row:
                    counts[fi] += 1
            self._coface_counts[j] = counts
        return self._coface_counts[j]

    def maximal_simplices(self) -> list[Simplex]:
        if self._maximal is None:
            out = []
            for j in range(self.dim + 1):
                if j == self.dim:
                    out.extend(self.by_dim[j])
                else:
                    counts = self.coface_counts(j)
                    out.extend(s for i, s in enumerate(self.by_dim[j]) if counts[i] == 0)
            self._maximal = out
        return self._maximal

    def vertices_used(self) -> set:
        return {v for (v,) in self.simplices(0)}

    # -- derived complexes ----------------------------------------------------

    def full_subcomplex(self, vertices) -> "SimplicialComplex":
        """All simplices with every vertex in the given set; shares the universe."""
        vs = set(vertices)
        by_dim = []
        for sims in self.by_dim:
            kept = [s for s in sims if all(v in vs for v in s)]
            by_dim.append(kept)
        while by_dim and not by_dim[-1]:
            by_dim.pop()
        return SimplicialComplex(self.n_vertices, by_dim, names=self.names)

    def star_and_link(self, v: int) -> tuple["SimplicialComplex", "SimplicialComplex"]:
        """Closed star of a vertex and its link, over the same universe."""
        if not (0 <= v < self.n_vertices) or not self.contains((v,)):
            raise VertexNotFound(f"vertex {v} not in complex")
        star_max = [m for m in self.maximal_simplices() if v in m]
        star = SimplicialComplex.from_maximal(star_max, n_vertices=self.n_vertices, names=self.names)
        link_by_dim = []
        for sims in star.by_dim:
            kept = [s for s in sims if v not in s]
            link_by_dim.append(kept)
        while link_by_dim and not link_by_dim[-1]:
            link_by_dim.pop()
        link = SimplicialComplex(self.n_vertices, link_by_dim, names=self.names)
        return star, link


def build_complex(maximal, n_vertices=None, names=None) -> SimplicialComplex:
    return SimplicialComplex.from_maximal(maximal, n_vertices=n_vertices, names=names)


# -- barycentric subdivision ---------------------------------------------------


def barycentric_subdivision(K: SimplicialComplex):
    """Barycentric subdivision.

    Returns (K', provenance) where provenance[new vertex id] is the simplex of
    K it is the barycenter of.  New vertex ids enumerate the simplices of K by
    (dimension, lexicographic) order; maximal simplices of K' are the complete
    flags inside maximal simplices of K.
    """
    provenance = []
    id_of = {}
    for j in range(K.dim + 1):
        for s in K.by_dim[j]:
            id_of[s] = len(provenance)
            provenance.append(s)
    new_max = []
    for m in K.maximal_simplices():
        for perm in permutations(m):
            flag = []
            for i in range(len(perm)):
                flag.append(id_of[tuple(sorted(perm[: i + 1]))])
            new_max.append(tuple(sorted(flag)))
    names = ["b" + ".".join(str(v) for v in s) for s in provenance]
    K2 = SimplicialComplex.from_maximal(new_max, n_vertices=len(provenance), names=names)
    return K2, provenance


# -- chains ---------------------------------------------------------------------


@dataclass
class Chain:
    """Sparse chain: degree plus simplex -> nonzero rational coefficient."""

    degree: int
    coeffs: dict

    def __post_init__(self):
        self.coeffs = {s: Fraction(c) for s, c in self.coeffs.items() if c}
        for s in self.coeffs:
            if len(s) - 1 != self.degree:
                raise ValueError(f"simplex {s} has dimension {len(s) - 1}, chain degree {self.degree}")

    def __add__(self, other: "Chain") -> "Chain":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for s, c in other.coeffs.items():
            out[s] = out.get(s, 0) + c
        return Chain(self.degree, out)

    def scale(self, a) -> "Chain":
        a = Fraction(a)
        return Chain(self.degree, {s: c * a for s, c in self.coeffs.items()})

    def __neg__(self) -> "Chain":
        return self.scale(-1)

    def is_zero(self) -> bool:
        return not self.coeffs


def simplex_boundary(sigma: Simplex) -> dict:
    """Faces with alternating signs in the sorted-vertex orientation."""
    out = {}
    for t in range(len(sigma)):
        out[sigma[:t] + sigma[t + 1:]] = -1 if t & 1 else 1
    return out


def boundary_of_chain(c: Chain) -> Chain:
    out = {}
    for s, coeff in c.coeffs.items():
        for face, sign in simplex_boundary(s).items():
            out[face] = out.get(face, 0) + sign * coeff
    return Chain(c.degree - 1, out)


def support(c: Chain, n_vertices=None, names=None) -> SimplicialComplex:
    """Face closure of the simplices carrying a nonzero coefficient."""
    sims = sorted(c.coeffs.keys())
    if not sims:
        return SimplicialComplex(n_vertices or 0, [], names=names)
    return SimplicialComplex.from_maximal(sims, n_vertices=n_vertices, names=names)
