"""Finite abstract simplicial complexes and mod-2 (co)homology.

Geometry is never represented: a complex is a face-closed family of vertex
subsets, and the correspondence between a variety and its combinatorial
model is the caller's responsibility.  Simplices are stored as tuples
sorted by the position of each vertex in the complex's vertex order, and
boundary matrices are built in lexicographic simplex order, so every
matrix and every Betti computation is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import NotFaceClosed, TooManySimplices, UnknownVertex
from .gf2 import GF2Matrix, rank
from .polynomial import IntPolynomial

__all__ = [
    "SimplicialComplex",
    "Subcomplex",
    "PairSpace",
    "BettiVector",
    "disjoint_union",
    "product_complex",
    "maximal_simplices",
    "MAX_SIMPLICES",
]

MAX_SIMPLICES = 100_000

Vertex = Hashable
Simplex = tuple


class BettiVector(tuple):
    """Mod-2 Betti numbers by degree, trailing zeros trimmed."""

    def __new__(cls, dims: Iterable[int] = ()):
        ds = list(dims)
        for d in ds:
            if d < 0:
                raise ValueError("negative Betti number")
        while ds and ds[-1] == 0:
            ds.pop()
        return super().__new__(cls, ds)

    def get(self, i: int) -> int:
        return self[i] if 0 <= i < len(self) else 0

    def euler(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self))

    def as_polynomial(self) -> IntPolynomial:
        return IntPolynomial(self)

    def __repr__(self) -> str:
        return f"BettiVector({tuple(self)})"


def _closure_of(maximal: Iterable[Sequence[Vertex]]) -> set[frozenset]:
    faces: set[frozenset] = set()
    for simplex in maximal:
        fs = frozenset(simplex)
        if not fs:
            continue
        for k in range(1, len(fs) + 1):
            for face in combinations(sorted(fs, key=repr), k):
                faces.add(frozenset(face))
            if len(faces) > 4 * MAX_SIMPLICES:
                raise TooManySimplices(
                    "face closure exceeds the supported size",
                    limit=MAX_SIMPLICES,
                )
    return faces


class SimplicialComplex:
    """Immutable abstract simplicial complex with an explicit vertex order."""

    __slots__ = ("_vertices", "_index", "_simplices", "_by_dim")

    def __init__(self, vertices: Iterable[Vertex], simplices: Iterable[Sequence[Vertex]]):
        verts = tuple(vertices)
        if len(set(verts)) != len(verts):
            raise UnknownVertex("duplicate vertex in vertex list")
        index = {v: i for i, v in enumerate(verts)}
        normalized: set[Simplex] = set()
        for s in simplices:
            for v in s:
                if v not in index:
                    raise UnknownVertex(f"simplex mentions unknown vertex {v!r}", vertex=repr(v))
            t = tuple(sorted(set(s), key=index.__getitem__))
            if not t:
                continue
            normalized.add(t)
        if len(normalized) > MAX_SIMPLICES:
            raise TooManySimplices(
                f"{len(normalized)} simplices exceed the supported size",
                limit=MAX_SIMPLICES,
            )
        self._vertices = verts
        self._index = index
        self._simplices = frozenset(normalized)
        by_dim: dict[int, list[Simplex]] = {}
        for s in normalized:
            by_dim.setdefault(len(s) - 1, []).append(s)
        self._by_dim = {
            d: sorted(ss, key=lambda s: tuple(index[v] for v in s))
            for d, ss in sorted(by_dim.items())
        }
        self.validate()

    @classmethod
    def from_maximal(
        cls, vertices: Iterable[Vertex], maximal: Iterable[Sequence[Vertex]]
    ) -> SimplicialComplex:
        """Build from maximal simplices; the face closure is computed here.

        Every listed vertex becomes a 0-simplex even if no maximal simplex
        mentions it, so isolated points are representable.
        """
        verts = tuple(vertices)
        faces = _closure_of(maximal)
        for v in verts:
            faces.add(frozenset((v,)))
        return cls(verts, [tuple(f) for f in faces])

    @classmethod
    def empty(cls) -> SimplicialComplex:
        return cls((), ())

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def simplices(self) -> frozenset:
        return self._simplices

    def vertex_index(self, v: Vertex) -> int:
        return self._index[v]

    def sort_key(self, simplex: Simplex) -> tuple:
        return tuple(self._index[v] for v in simplex)

    @property
    def dim(self) -> int:
        """Dimension of the complex; -1 for the empty complex."""
        return max(self._by_dim) if self._by_dim else -1

    def n_simplices(self) -> int:
        return len(self._simplices)

    def simplices_of_dim(self, d: int) -> list[Simplex]:
        return list(self._by_dim.get(d, []))

    def simplex_counts(self) -> list[int]:
        return [len(self._by_dim.get(d, [])) for d in range(self.dim + 1)]

    def validate(self) -> None:
        """Check face closure and vertex bookkeeping; raises on violation."""
        for s in self._simplices:
            if len(s) > 1:
                for face in combinations(s, len(s) - 1):
                    if face not in self._simplices:
                        raise NotFaceClosed(
                            f"simplex {s!r} lacks face {face!r}",
                            simplex=repr(s),
                            missing_face=repr(face),
                        )
        present = {v for s in self._simplices for v in s}
        for v in self._vertices:
            if v not in present:
                raise NotFaceClosed(
                    f"vertex {v!r} has no singleton simplex", vertex=repr(v)
                )

    def contains_simplex(self, s: Sequence[Vertex]) -> bool:
        try:
            t = tuple(sorted(set(s), key=self._index.__getitem__))
        except KeyError:
            return False
        return t in self._simplices

    def boundary_matrix(self, d: int) -> GF2Matrix:
        """Mod-2 boundary from d-chains to (d-1)-chains, lexicographic bases."""
        cols = self.simplices_of_dim(d)
        rows = self.simplices_of_dim(d - 1)
        row_pos = {s: i for i, s in enumerate(rows)}
        bits = [0] * len(rows)
        for j, s in enumerate(cols):
            if len(s) == 1:
                continue
            for face in combinations(s, len(s) - 1):
                bits[row_pos[face]] ^= 1 << j
        return GF2Matrix(len(rows), len(cols), tuple(bits))

    def betti_mod2(self) -> BettiVector:
        """dim_GF(2) of each homology group (= cohomology over a field)."""
        if not self._simplices:
            return BettiVector(())
        dims = []
        ranks = [rank(self.boundary_matrix(d)) for d in range(self.dim + 2)]
        counts = self.simplex_counts()
        for d in range(self.dim + 1):
            dims.append(counts[d] - ranks[d] - ranks[d + 1])
        return BettiVector(dims)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.simplex_counts()))

    def poincare_polynomial(self) -> IntPolynomial:
        """Sum of b_i t^i; meaningful as a Poincare polynomial for models of
        compact nonsingular varieties (the caller asserts that)."""
        return self.betti_mod2().as_polynomial()

    def subcomplex(self, simplices: Iterable[Sequence[Vertex]] = (),
                   maximal: Iterable[Sequence[Vertex]] = ()) -> Subcomplex:
        """Face-closed subcomplex from explicit simplices and/or maximal ones."""
        chosen: set[Simplex] = set()
        try:
            for s in simplices:
                chosen.add(tuple(sorted(set(s), key=self._index.__getitem__)))
            for s in maximal:
                fs = set(s)
                for k in range(1, len(fs) + 1):
                    for face in combinations(sorted(fs, key=self._index.__getitem__), k):
                        chosen.add(face)
        except KeyError as exc:
            raise UnknownVertex(
                f"subcomplex mentions unknown vertex {exc.args[0]!r}",
                vertex=repr(exc.args[0]),
            ) from None
        return Subcomplex(self, frozenset(chosen))

    def full_subcomplex(self) -> Subcomplex:
        return Subcomplex(self, self._simplices)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self._vertices == other._vertices
            and self._simplices == other._simplices
        )

    def __hash__(self) -> int:
        return hash((self._vertices, self._simplices))

    def __repr__(self) -> str:
        return f"<SimplicialComplex {len(self._vertices)} vertices, {len(self._simplices)} simplices, dim {self.dim}>"


@dataclass(frozen=True)
class Subcomplex:
    """Face-closed subset of a parent complex's simplices."""

    parent: SimplicialComplex
    simplices: frozenset

    def __post_init__(self):
        for s in self.simplices:
            if s not in self.parent.simplices:
                raise UnknownVertex(
                    f"simplex {s!r} does not belong to the parent complex",
                    simplex=repr(s),
                )
            if len(s) > 1:
                for face in combinations(s, len(s) - 1):
                    if face not in self.simplices:
                        raise NotFaceClosed(
                            f"subcomplex lacks face {face!r} of {s!r}",
                            simplex=repr(s),
                            missing_face=repr(face),
                        )

    def is_empty(self) -> bool:
        return not self.simplices

    def as_complex(self) -> SimplicialComplex:
        """Standalone complex with the parent's vertex order restricted."""
        used = {v for s in self.simplices for v in s}
        verts = tuple(v for v in self.parent.vertices if v in used)
        return SimplicialComplex(verts, self.simplices)

    def union(self, other: Subcomplex) -> Subcomplex:
        if other.parent is not self.parent:
            raise ValueError("subcomplexes of different parents")
        return Subcomplex(self.parent, self.simplices | other.simplices)

    def intersection(self, other: Subcomplex) -> Subcomplex:
        if other.parent is not self.parent:
            raise ValueError("subcomplexes of different parents")
        return Subcomplex(self.parent, self.simplices & other.simplices)

    def __repr__(self) -> str:
        return f"<Subcomplex {len(self.simplices)} simplices>"


@dataclass(frozen=True)
class PairSpace:
    """Compactification pair (total, boundary) modelling |total| - |boundary|.

    Cohomology with compact supports of the open part is the relative
    cohomology of the pair, computed from cochains that vanish on the
    boundary simplices.
    """

    total: SimplicialComplex
    boundary: Subcomplex

    def __post_init__(self):
        if self.boundary.parent is not self.total:
            raise ValueError("boundary must be a subcomplex of the total complex")

    def relative_simplices_of_dim(self, d: int) -> list[Simplex]:
        return [s for s in self.total.simplices_of_dim(d) if s not in self.boundary.simplices]

    def relative_coboundary_matrix(self, q: int) -> GF2Matrix:
        """Coboundary on relative cochains: rows = (q+1)-simplices, cols = q."""
        cols = self.relative_simplices_of_dim(q)
        rows = self.relative_simplices_of_dim(q + 1)
        col_pos = {s: j for j, s in enumerate(cols)}
        bits = [0] * len(rows)
        for i, s in enumerate(rows):
            for face in combinations(s, len(s) - 1):
                j = col_pos.get(face)
                if j is not None:
                    bits[i] ^= 1 << j
        return GF2Matrix(len(rows), len(cols), tuple(bits))

    def betti_compact_supports(self) -> BettiVector:
        """dim H^i(total, boundary; GF(2)) for each i."""
        top = self.total.dim
        if top < 0:
            return BettiVector(())
        counts = [len(self.relative_simplices_of_dim(d)) for d in range(top + 1)]
        ranks = [rank(self.relative_coboundary_matrix(q)) for q in range(-1, top + 1)]
        dims = []
        for q in range(top + 1):
            # rank delta^{q-1} at index q, rank delta^q at index q+1
            dims.append(counts[q] - ranks[q + 1] - ranks[q])
        return BettiVector(dims)

    def euler_compact_supports(self) -> int:
        """Alternating sum of relative simplex counts; equals the alternating
        sum of relative cohomology dimensions."""
        top = self.total.dim
        return sum(
            (-1) ** d * len(self.relative_simplices_of_dim(d)) for d in range(top + 1)
        )


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Disjoint union; vertices are tagged only if the name sets collide."""
    if not b.simplices and not b.vertices:
        return a
    if not a.simplices and not a.vertices:
        return b
    overlap = set(a.vertices) & set(b.vertices)
    if overlap:
        tag_a = lambda v: (0, v)
        tag_b = lambda v: (1, v)
    else:
        tag_a = tag_b = lambda v: v
    verts = tuple(tag_a(v) for v in a.vertices) + tuple(tag_b(v) for v in b.vertices)
    simplices = [tuple(tag_a(v) for v in s) for s in a.simplices]
    simplices += [tuple(tag_b(v) for v in s) for s in b.simplices]
    return SimplicialComplex(verts, simplices)


def _staircase_paths(s: int, t: int):
    """Monotone unit-step lattice paths from (0, 0) to (s, t)."""
    if s == 0 and t == 0:
        yield ((0, 0),)
        return
    if s > 0:
        for path in _staircase_paths(s - 1, t):
            yield path + ((s, t),)
    if t > 0:
        for path in _staircase_paths(s, t - 1):
            yield path + ((s, t),)


def product_complex(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of |a| x |b| on the product vertex order.

    Maximal simplices are the monotone lattice paths through each product
    of maximal simplices; the Betti numbers of the result satisfy the
    Kunneth convolution formula.
    """
    if not a.simplices or not b.simplices:
        return SimplicialComplex.empty()
    verts = tuple((u, v) for u in a.vertices for v in b.vertices)
    maximal_a = maximal_simplices(a)
    maximal_b = maximal_simplices(b)
    cells = []
    for sa in maximal_a:
        for sb in maximal_b:
            s, t = len(sa) - 1, len(sb) - 1
            for path in _staircase_paths(s, t):
                cells.append(tuple((sa[i], sb[j]) for i, j in path))
    return SimplicialComplex.from_maximal(verts, cells)


def maximal_simplices(k: SimplicialComplex, simplices: Iterable[Simplex] | None = None) -> list[Simplex]:
    """Inclusion-maximal simplices of a complex (or of a simplex set), in
    lexicographic order by the complex's vertex indexing."""
    pool = k.simplices if simplices is None else frozenset(simplices)
    out = []
    for s in sorted(pool, key=lambda s: (-len(s), k.sort_key(s))):
        if not any(set(s) < set(m) for m in out):
            out.append(s)
    return sorted(out, key=k.sort_key)
