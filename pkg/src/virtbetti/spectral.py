"""Mayer-Vietoris spectral sequence over GF(2) for closed covers.

Given a complex covered by closed subcomplexes X_1..X_m, the double
complex has C^{p,q} = direct sum over (p+1)-fold intersections of their
simplicial q-cochains, with horizontal differential the (sign-free, mod 2)
sum of restrictions to deeper intersections and vertical differential the
simplicial coboundary.  The two differentials commute and each squares to
zero, so their sum is a differential on the total complex, and the
filtration by column produces the pages.

Pages are computed with the standard subspace formulas

    Z_r(p, n)   = { x in F_p T^n : D x in F_{p+r} T^(n+1) }
    dim E_r^{p,q} = dim((Z_r + F_{p+1}) / F_{p+1})
                  - dim((D Z_{r-1}(p-r+1) + F_{p+1}) / F_{p+1})

realized over GF(2) with echelon arithmetic.  Basis vectors of degree n
are ordered by descending filtration, so every F_p is a coordinate prefix
and quotienting by it is a bit mask.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .errors import ConvergenceMismatch, NotACover
from .gf2 import kernel_vectors, span_dim
from .simplicial import BettiVector, SimplicialComplex, Subcomplex

__all__ = [
    "Arrangement",
    "SpectralPage",
    "FiltrationProfile",
    "StabilizationCertificate",
    "MVSpectralSequence",
    "compute_pages",
    "converged_betti",
    "mv_filtration",
    "row_alternating_sums",
]


@dataclass(frozen=True)
class Arrangement:
    """A complex together with an ordered closed cover by subcomplexes."""

    total: SimplicialComplex
    pieces: tuple[tuple[str, Subcomplex], ...]

    def __post_init__(self):
        if not self.pieces:
            raise NotACover("an arrangement needs at least one piece")
        union = frozenset()
        for name, piece in self.pieces:
            if piece.parent is not self.total:
                raise NotACover(f"piece {name!r} is not a subcomplex of the total complex")
            union |= piece.simplices
        if union != self.total.simplices:
            missing = sorted(self.total.simplices - union, key=self.total.sort_key)
            raise NotACover(
                "pieces do not cover the total complex",
                missing=[repr(s) for s in missing[:5]],
                missing_count=len(missing),
            )

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.pieces]


@dataclass(frozen=True)
class SpectralPage:
    """Dimensions of one page; dims holds the nonzero entries only."""

    r: int
    dims: Mapping[tuple[int, int], int]

    def dim(self, p: int, q: int) -> int:
        return self.dims.get((p, q), 0)

    def max_p(self) -> int:
        return max((p for p, _ in self.dims), default=0)

    def max_q(self) -> int:
        return max((q for _, q in self.dims), default=0)

    def euler(self) -> int:
        return sum((-1) ** (p + q) * d for (p, q), d in self.dims.items())


@dataclass(frozen=True)
class FiltrationProfile:
    """w(i, j) = dim of the infinity page at column i-j, row j."""

    w: Mapping[tuple[int, int], int]
    top_degree: int

    def value(self, i: int, j: int) -> int:
        return self.w.get((i, j), 0)

    def diagonal_sums(self) -> list[int]:
        return [
            sum(self.value(i, j) for j in range(i + 1))
            for i in range(self.top_degree + 1)
        ]

    def row_alternating_sums(self) -> list[int]:
        """For each j: (-1)^j * sum_i (-1)^i w(i, j)."""
        out = []
        for j in range(self.top_degree + 1):
            s = sum(
                (-1) ** (i - j) * self.value(i, j)
                for i in range(j, self.top_degree + 1)
            )
            out.append(s)
        return out


@dataclass(frozen=True)
class StabilizationCertificate:
    """Witness that the pages are constant from stable_from on."""

    stable_from: int
    column_bound: int
    checked_zero_ranks: tuple[int, ...]
    detail: str


class MVSpectralSequence:
    """All pages, differential ranks and the induced filtration for a cover."""

    def __init__(self, arrangement: Arrangement):
        self.arrangement = arrangement
        self._m = len(arrangement.pieces)
        self._build_double_complex()
        self._z_cache: dict[tuple[int, int, int], list[int]] = {}
        self._page_cache: dict[int, SpectralPage] = {}

    # -- double complex ----------------------------------------------------

    def _build_double_complex(self):
        total = self.arrangement.total
        pieces = [sc for _, sc in self.arrangement.pieces]
        m = self._m

        inters: dict[tuple[int, ...], frozenset] = {}
        for size in range(1, m + 1):
            for subset in combinations(range(m), size):
                if size == 1:
                    inters[subset] = pieces[subset[0]].simplices
                else:
                    inters[subset] = inters[subset[:-1]] & pieces[subset[-1]].simplices

        self._intersections = inters
        max_dim = total.dim
        # basis entries per total degree n, ordered by descending filtration p
        self._basis: dict[int, list[tuple[int, tuple[int, ...], tuple]]] = {}
        self._position: dict[int, dict[tuple[int, tuple[int, ...], tuple], int]] = {}
        max_n = max_dim + m - 1 if max_dim >= 0 else -1
        for n in range(max_n + 1):
            entries = []
            for p in range(min(m - 1, n), -1, -1):
                q = n - p
                if q > max_dim:
                    continue
                for subset in combinations(range(m), p + 1):
                    simp = [s for s in inters[subset] if len(s) == q + 1]
                    simp.sort(key=total.sort_key)
                    entries.extend((p, subset, s) for s in simp)
            self._basis[n] = entries
            self._position[n] = {e: i for i, e in enumerate(entries)}

        # prefix sizes: number of entries with filtration >= p
        self._prefix: dict[int, list[int]] = {}
        for n, entries in self._basis.items():
            counts = [0] * (m + 1)
            for p, _, _ in entries:
                counts[p] += 1
            sizes = [0] * (m + 2)
            for p in range(m, -1, -1):
                sizes[p] = sizes[p + 1] + counts[p]
            self._prefix[n] = sizes

        # columns of the horizontal, vertical and total differentials
        self._cols_h: dict[int, list[int]] = {}
        self._cols_v: dict[int, list[int]] = {}
        self._cols: dict[int, list[int]] = {}
        for n, entries in self._basis.items():
            pos_next = self._position.get(n + 1, {})
            cols_h = []
            cols_v = []
            for p, subset, s in entries:
                h = 0
                members = set(subset)
                for j in range(m):
                    if j in members:
                        continue
                    bigger = tuple(sorted(subset + (j,)))
                    if s in inters[bigger]:
                        h |= 1 << pos_next[(p + 1, bigger, s)]
                v = 0
                for t in inters[subset]:
                    if len(t) == len(s) + 1 and set(s) < set(t):
                        v |= 1 << pos_next[(p, subset, t)]
                cols_h.append(h)
                cols_v.append(v)
            self._cols_h[n] = cols_h
            self._cols_v[n] = cols_v
            self._cols[n] = [h ^ v for h, v in zip(cols_h, cols_v)]

    def dim_total(self, n: int) -> int:
        return len(self._basis.get(n, []))

    def cpq_dim(self, p: int, q: int) -> int:
        """Dimension of C^{p,q} in the double complex."""
        entries = self._basis.get(p + q, [])
        return sum(1 for pp, _, _ in entries if pp == p)

    def intersection_complex(self, subset: tuple[int, ...]) -> frozenset:
        return self._intersections[tuple(sorted(subset))]

    def differentials_square_to_zero(self) -> bool:
        """d_h^2 = 0, d_v^2 = 0 and d_h d_v = d_v d_h on every basis vector."""
        for n in self._basis:
            ch, cv = self._cols_h[n], self._cols_v[n]
            nh = self._cols_h.get(n + 1, [])
            nv = self._cols_v.get(n + 1, [])
            for j in range(len(ch)):
                if self._apply(nh, ch[j]) != 0:
                    return False
                if self._apply(nv, cv[j]) != 0:
                    return False
                if self._apply(nh, cv[j]) != self._apply(nv, ch[j]):
                    return False
        return True

    # -- filtration machinery ----------------------------------------------

    def _prefix_size(self, n: int, p: int) -> int:
        sizes = self._prefix.get(n)
        if sizes is None:
            return 0
        p = max(0, min(p, self._m + 1))
        return sizes[p]

    @staticmethod
    def _apply(cols: Sequence[int], x: int) -> int:
        out = 0
        while x:
            j = (x & -x).bit_length() - 1
            out ^= cols[j]
            x &= x - 1
        return out

    def _z_space(self, r: int, p: int, n: int) -> list[int]:
        """Basis of Z_r(p, n) = {x in F_p T^n : D x in F_{p+r} T^{n+1}}."""
        key = (r, p, n)
        cached = self._z_cache.get(key)
        if cached is not None:
            return cached
        size = self._prefix_size(n, p)
        if size == 0:
            self._z_cache[key] = []
            return []
        keep_from = self._prefix_size(n + 1, p + r)
        rows = []
        mask = (1 << size) - 1
        next_basis_len = self.dim_total(n + 1)
        if next_basis_len:
            transposed = self._rows(n)
            rows = [transposed[i] & mask for i in range(keep_from, next_basis_len)]
        vectors = kernel_vectors(rows, size)
        self._z_cache[key] = vectors
        return vectors

    def _rows(self, n: int) -> list[int]:
        cache = getattr(self, "_rows_cache", None)
        if cache is None:
            cache = {}
            self._rows_cache = cache
        if n not in cache:
            cols = self._cols.get(n, [])
            out = [0] * self.dim_total(n + 1)
            for j, c in enumerate(cols):
                while c:
                    i = (c & -c).bit_length() - 1
                    out[i] |= 1 << j
                    c &= c - 1
            cache[n] = out
        return cache[n]

    def _d_of_z(self, r: int, p: int, n: int) -> list[int]:
        """D-images (degree n+1) of a basis of Z_r(p, n)."""
        size = self._prefix_size(n, p)
        if size == 0:
            return []
        cols = self._cols.get(n, [])
        if r <= 0:
            return [cols[j] for j in range(size)]
        return [self._apply(cols, z) for z in self._z_space(r, p, n)]

    # -- pages ---------------------------------------------------------------

    def entry_dim(self, r: int, p: int, q: int) -> int:
        if r < 1 or p < 0 or q < 0:
            raise ValueError("page index must be >= 1 and (p, q) nonnegative")
        n = p + q
        k = self._prefix_size(n, p + 1)
        strip = ~((1 << k) - 1)
        numerator = [z & strip for z in self._z_space(r, p, n)]
        denominator = [v & strip for v in self._d_of_z(r - 1, p - r + 1, n - 1)]
        return span_dim(numerator) - span_dim(denominator)

    def d_rank(self, r: int, p: int, q: int) -> int:
        """Rank of the induced differential E_r^{p,q} -> E_r^{p+r, q-r+1}."""
        n = p + q
        target_p = p + r
        k = self._prefix_size(n + 1, target_p + 1)
        strip = ~((1 << k) - 1)
        images = [self._apply(self._cols.get(n, []), z) & strip
                  for z in self._z_space(r, p, n)]
        boundary = [v & strip for v in self._d_of_z(r - 1, p + 1, n)]
        return span_dim(images + boundary) - span_dim(boundary)

    def page(self, r: int) -> SpectralPage:
        if r in self._page_cache:
            return self._page_cache[r]
        dims = {}
        max_dim = self.arrangement.total.dim
        for p in range(self._m):
            for q in range(max_dim + 1):
                d = self.entry_dim(r, p, q)
                if d:
                    dims[(p, q)] = d
        page = SpectralPage(r, dims)
        self._page_cache[r] = page
        return page

    def pages(self, up_to: int) -> list[SpectralPage]:
        if up_to < 1:
            raise ValueError("page index must be >= 1")
        return [self.page(r) for r in range(1, up_to + 1)]

    @property
    def infinity_index(self) -> int:
        """E_r = E_infinity for r >= number of pieces (targets leave the columns)."""
        return max(1, self._m)

    def infinity_page(self) -> SpectralPage:
        return self.page(self.infinity_index)

    def stabilization_certificate(self) -> StabilizationCertificate:
        m = self._m
        r_inf = self.infinity_index
        max_dim = self.arrangement.total.dim
        zero_from = r_inf
        for r in range(r_inf - 1, 0, -1):
            all_zero = all(
                self.d_rank(r, p, q) == 0
                for p in range(m)
                for q in range(max_dim + 1)
            )
            if all_zero and self.page(r).dims == self.page(r + 1).dims:
                zero_from = r
            else:
                break
        checked = tuple(range(zero_from, r_inf))
        detail = (
            f"differentials vanish identically from page {zero_from} on: "
            f"ranks checked zero for r in {list(checked)}; for r >= {r_inf} every "
            f"differential leaves the column range 0..{m - 1}"
        )
        return StabilizationCertificate(zero_from, m, checked, detail)

    # -- derived data ---------------------------------------------------------

    def converged_betti(self) -> BettiVector:
        """Total dimensions of the infinity page; must match direct homology."""
        inf = self.infinity_page()
        max_dim = self.arrangement.total.dim
        dims = [
            sum(inf.dim(p, n - p) for p in range(min(n, self._m - 1) + 1))
            for n in range(max_dim + 1)
        ]
        computed = BettiVector(dims)
        direct = self.arrangement.total.betti_mod2()
        if computed != direct:
            raise ConvergenceMismatch(
                "spectral sequence limit disagrees with direct homology "
                "(this indicates an implementation bug, never a valid outcome)",
                converged=list(computed),
                direct=list(direct),
            )
        return computed

    def filtration_profile(self) -> FiltrationProfile:
        inf = self.infinity_page()
        top = self.arrangement.total.dim
        w = {}
        for i in range(top + 1):
            for j in range(i + 1):
                d = inf.dim(i - j, j)
                if d:
                    w[(i, j)] = d
        return FiltrationProfile(w, top)


def compute_pages(arrangement: Arrangement, up_to: int) -> list[SpectralPage]:
    """Pages E_1..E_up_to of the Mayer-Vietoris spectral sequence."""
    return MVSpectralSequence(arrangement).pages(up_to)


def converged_betti(arrangement: Arrangement) -> BettiVector:
    return MVSpectralSequence(arrangement).converged_betti()


def mv_filtration(arrangement: Arrangement) -> FiltrationProfile:
    return MVSpectralSequence(arrangement).filtration_profile()


def row_alternating_sums(page: SpectralPage) -> list[int]:
    """For each row q: the alternating sum over p of the entry dimensions."""
    out = []
    for q in range(page.max_q() + 1):
        out.append(sum((-1) ** p * page.dim(p, q) for p in range(page.max_p() + 1)))
    return out
