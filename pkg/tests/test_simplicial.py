"""Simplicial complexes: validation, homology, pairs, unions, products."""

from __future__ import annotations

import pytest

from virtbetti import models
from virtbetti.errors import NotFaceClosed, TooManySimplices, UnknownVertex
from virtbetti.gf2 import rank
from virtbetti.simplicial import (
    BettiVector,
    PairSpace,
    SimplicialComplex,
    disjoint_union,
    product_complex,
)


def brute_force_betti(k: SimplicialComplex) -> list[int]:
    """Homology dims by enumerating every chain subspace; <= 12 simplices."""
    assert k.n_simplices() <= 12
    dims = []
    for d in range(k.dim + 1):
        chains_d = k.simplices_of_dim(d)
        boundary = k.boundary_matrix(d)
        cycles = [v for v in range(1 << len(chains_d)) if boundary.matvec(v) == 0]
        nxt = k.boundary_matrix(d + 1)
        boundaries = {0}
        for j in range(len(k.simplices_of_dim(d + 1))):
            img = nxt.matvec(1 << j)
            boundaries |= {img ^ w for w in boundaries}
        dims.append((len(cycles).bit_length() - 1) - (len(boundaries).bit_length() - 1))
    return dims


def test_validate_full_triangle():
    k = SimplicialComplex.from_maximal(("a", "b", "c"), [("a", "b", "c")])
    k.validate()
    assert k.n_simplices() == 7


def test_validate_rejects_missing_faces():
    with pytest.raises(NotFaceClosed) as err:
        SimplicialComplex(("a", "b"), [("a", "b")])
    assert "face" in str(err.value)


def test_validate_rejects_unknown_vertex():
    with pytest.raises(UnknownVertex):
        SimplicialComplex(("a",), [("a", "z")])


def test_empty_complex_is_valid():
    k = SimplicialComplex.empty()
    k.validate()
    assert k.betti_mod2() == BettiVector(())
    assert k.poincare_polynomial().is_zero()


def test_size_guardrail():
    with pytest.raises(TooManySimplices):
        SimplicialComplex.from_maximal(tuple(range(25)), [tuple(range(25))])


def test_betti_circle():
    assert tuple(models.circle(3).betti_mod2()) == (1, 1)
    assert tuple(models.circle(7).betti_mod2()) == (1, 1)


def test_betti_torus_against_rank_oracle():
    from test_gf2 import brute_force_rank

    torus = models.torus_minimal()
    assert tuple(torus.betti_mod2()) == (1, 2, 1)
    # independent route: brute-force row-span ranks of the boundary matrices
    counts = torus.simplex_counts()
    r1 = brute_force_rank(torus.boundary_matrix(1))
    r2 = brute_force_rank(torus.boundary_matrix(2))
    assert (counts[0] - r1, counts[1] - r1 - r2, counts[2] - r2) == (1, 2, 1)
    assert (r1, r2) == (rank(torus.boundary_matrix(1)), rank(torus.boundary_matrix(2)))


def test_betti_spheres():
    assert tuple(models.sphere(0).betti_mod2()) == (2,)
    assert tuple(models.sphere(2).betti_mod2()) == (1, 0, 1)
    assert tuple(models.sphere(3).betti_mod2()) == (1, 0, 0, 1)


def test_betti_projective_plane_mod2():
    assert tuple(models.projective_plane().betti_mod2()) == (1, 1, 1)


def test_betti_surface_union(surface):
    assert tuple(surface.total.betti_mod2()) == (1, 1, 8)


@pytest.mark.parametrize(
    "maker",
    [
        lambda: models.points(2),
        lambda: models.circle(3),
        lambda: SimplicialComplex.from_maximal(("a", "b", "c"), [("a", "b", "c")]),
        lambda: SimplicialComplex.from_maximal(
            ("a", "b", "c", "d"), [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
        ),
    ],
)
def test_homology_matches_brute_force(maker):
    k = maker()
    assert list(k.betti_mod2()) + [0] * (k.dim + 1 - len(k.betti_mod2())) == brute_force_betti(k)


def test_field_duality_homology_equals_cohomology():
    for k in (models.circle(4), models.torus_minimal(), models.projective_plane()):
        for d in range(k.dim + 1):
            m = k.boundary_matrix(d)
            assert rank(m) == rank(m.transpose())


@pytest.mark.parametrize(
    "maker,expected",
    [
        (models.point, 1),
        (lambda: models.circle(3), 0),
        (lambda: models.sphere(2), 2),
        (models.torus_minimal, 0),
        (models.projective_plane, 1),
    ],
)
def test_euler_consistency(maker, expected):
    k = maker()
    assert k.euler_characteristic() == expected
    assert k.betti_mod2().euler() == expected


def test_boundary_matrices_are_deterministic():
    a = models.torus_minimal().boundary_matrix(1)
    b = models.torus_minimal().boundary_matrix(1)
    assert a == b


# -- pairs -------------------------------------------------------------------


def line_pair():
    circle = models.circle(3)
    return PairSpace(circle, circle.subcomplex(maximal=[("v0",)]))


def test_pair_circle_minus_point():
    assert tuple(line_pair().betti_compact_supports()) == (0, 1)
    assert line_pair().euler_compact_supports() == -1


def test_pair_empty_boundary_reduces_to_betti():
    k = models.torus_minimal()
    pair = PairSpace(k, k.subcomplex())
    assert pair.betti_compact_supports() == k.betti_mod2()


def test_pair_full_boundary_is_trivial():
    k = models.circle(4)
    pair = PairSpace(k, k.full_subcomplex())
    assert tuple(pair.betti_compact_supports()) == ()
    assert pair.euler_compact_supports() == 0


def test_pair_euler_matches_homological_value(scene):
    for name in ("line", "plane", "space-3", "sphere-pair-1", "circle-minus-two"):
        pair = scene.pair(name)
        homological = pair.betti_compact_supports().euler()
        assert pair.euler_compact_supports() == homological


def test_pair_long_exact_sequence_euler(scene):
    # chi_c(open part) + chi(boundary) = chi(total)
    for name in ("line", "plane", "sphere-pair-2", "surface-sphere1-smooth"):
        pair = scene.pair(name)
        total = pair.total.euler_characteristic()
        boundary = pair.boundary.as_complex().euler_characteristic()
        assert pair.euler_compact_supports() + boundary == total


def test_pair_sphere_minus_sphere_compact_supports(scene):
    # complement of S^1 in S^2 is two open disks: H^2_c has dimension 2
    pair = scene.pair("sphere-pair-1")
    assert tuple(pair.betti_compact_supports()) == (0, 0, 2)


# -- disjoint unions and products ---------------------------------------------


def test_disjoint_union_adds_betti():
    two = disjoint_union(models.circle(3), models.circle(3))
    assert tuple(two.betti_mod2()) == (2, 2)
    assert two.euler_characteristic() == 0


def test_disjoint_union_with_empty_is_identity():
    k = models.circle(3)
    assert disjoint_union(k, SimplicialComplex.empty()) is k
    assert disjoint_union(SimplicialComplex.empty(), k) is k


def test_product_with_point_is_unit():
    k = product_complex(models.circle(3), models.point())
    assert tuple(k.betti_mod2()) == (1, 1)


def test_product_of_circles_is_a_torus():
    k = product_complex(models.circle(3), models.circle(3))
    assert tuple(k.betti_mod2()) == (1, 2, 1)
    assert k.euler_characteristic() == 0


def test_product_with_empty_is_empty():
    k = product_complex(SimplicialComplex.empty(), models.circle(3))
    assert k.n_simplices() == 0


@pytest.mark.parametrize(
    "a,b",
    [
        (lambda: models.points(2), lambda: models.circle(3)),
        (lambda: models.circle(3), lambda: models.circle(4)),
        (lambda: models.sphere(2), lambda: models.points(3)),
        (lambda: models.circle(3), lambda: models.sphere(2)),
    ],
)
def test_kunneth_convolution(a, b):
    ka, kb = a(), b()
    product = product_complex(ka, kb)
    expected = ka.poincare_polynomial() * kb.poincare_polynomial()
    assert product.poincare_polynomial() == expected


def test_subcomplex_must_be_face_closed():
    k = models.circle(3)
    with pytest.raises(NotFaceClosed):
        from virtbetti.simplicial import Subcomplex

        Subcomplex(k, frozenset({("v0", "v1")}))


def test_surface_piece_homology(surface):
    assert tuple(surface.sphere1.as_complex().betti_mod2()) == (1, 0, 1)
    assert tuple(surface.sphere2.as_complex().betti_mod2()) == (1, 0, 1)
    assert tuple(surface.torus.as_complex().betti_mod2()) == (1, 2, 1)
    for curve in (surface.curve12, surface.curve13, surface.curve23):
        assert tuple(curve.as_complex().betti_mod2()) == (1, 1)
    assert len(surface.triple_points.simplices) == 4


def test_surface_intersections_are_exactly_the_curves(surface):
    assert surface.sphere1.intersection(surface.sphere2).simplices == surface.curve12.simplices
    assert surface.sphere1.intersection(surface.torus).simplices == surface.curve13.simplices
    assert surface.sphere2.intersection(surface.torus).simplices == surface.curve23.simplices
    triple = (
        surface.sphere1.intersection(surface.sphere2).intersection(surface.torus)
    )
    assert triple.simplices == surface.triple_points.simplices


def test_surface_cell_counts(surface):
    # 84 vertices, 324 edges, 248 triangles; Euler characteristic 8
    assert surface.total.simplex_counts() == [84, 324, 248]
    assert surface.total.euler_characteristic() == 8


def _is_boundary(k, cycle_edges):
    """Is the given 1-cycle a mod-2 boundary in k?"""
    from virtbetti.gf2 import GF2Matrix, rank

    edges = k.simplices_of_dim(1)
    pos = {e: i for i, e in enumerate(edges)}
    z = 0
    for e in cycle_edges:
        t = tuple(sorted(e, key=k.vertex_index))
        z |= 1 << pos[t]
    boundary = k.boundary_matrix(2)
    cols = list(boundary.transpose().row_bits)  # columns of d2 as edge vectors
    base = rank(GF2Matrix(len(cols), len(edges), tuple(cols)))
    augmented = rank(GF2Matrix(len(cols) + 1, len(edges), tuple(cols) + (z,)))
    return base == augmented


def test_surface_first_homology_generated_by_core_parallel_circle(surface):
    # the torus circle parallel to the core survives in the union ...
    k = surface.total
    core_parallel = [(f"t5_{j}", f"t5_{(j + 1) % 8}") for j in range(8)]
    assert not _is_boundary(k, core_parallel)
    # ... while the meridian bounds (it is the core of the leftover annulus)
    meridian = [(f"t{i}_0", f"t{(i + 1) % 8}_0") for i in range(8)]
    assert _is_boundary(k, meridian)
    # sanity: on the torus alone both classes are nonzero
    torus = surface.torus.as_complex()
    assert not _is_boundary(torus, core_parallel)
    assert not _is_boundary(torus, meridian)
