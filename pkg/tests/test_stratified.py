"""Stratified evaluation: open strata, additivity, refinements, diagnostics."""

from __future__ import annotations

import pytest

from virtbetti import models
from virtbetti.errors import (
    DimensionMismatch,
    InvalidStratification,
    MissingBoundaryData,
    MissingIntersection,
    NotAPartition,
)
from virtbetti.polynomial import IntPolynomial, parse_polynomial
from virtbetti.stratified import (
    CompactModel,
    DeclaredBeta,
    OpenModel,
    StratifiedSpec,
    StratumRecord,
    beta_of_stratified,
    beta_of_stratum,
    inclusion_exclusion,
    refinement_check,
)

P = parse_polynomial


def test_open_stratum_line(scene):
    s = StratumRecord("line", 1, OpenModel(scene.pair("line")))
    assert beta_of_stratum(s, strict=True) == P("t")


def test_compact_stratum_torus():
    s = StratumRecord("torus", 2, CompactModel(models.torus_minimal()))
    assert beta_of_stratum(s, strict=True) == P("1 + 2*t + t^2")


def test_open_stratum_punctured_spheres(scene):
    for n in range(0, 4):
        s = StratumRecord("c", n + 1, OpenModel(scene.pair(f"sphere-pair-{n}")))
        want = IntPolynomial.monomial(1, n + 1) - IntPolynomial.monomial(1, n)
        assert beta_of_stratum(s, strict=True) == want


def test_declared_beta_stratum():
    s = StratumRecord("declared", 2, DeclaredBeta(P("t^2")))
    assert beta_of_stratum(s, strict=True) == P("t^2")


def test_missing_boundary_data(scene):
    s = StratumRecord(
        "bad", 2,
        OpenModel(scene.pair("surface-sphere1-smooth"), boundary_nonsingular=False),
    )
    with pytest.raises(MissingBoundaryData):
        beta_of_stratum(s)


def test_dimension_mismatch_is_warning_then_error(scene):
    s = StratumRecord("mislabelled", 3, OpenModel(scene.pair("line")))
    warnings: list[str] = []
    beta = beta_of_stratum(s, warnings=warnings)
    assert beta == P("t") and len(warnings) == 1
    with pytest.raises(DimensionMismatch):
        beta_of_stratum(s, strict=True)


def test_figure_eight_stratification(scene):
    assert beta_of_stratified(scene.stratification("figure-eight-x"), strict=True) == P("t")


def test_one_stratum_spec_is_poincare():
    spec = StratifiedSpec("t", (StratumRecord("torus", 2, CompactModel(models.torus_minimal())),))
    assert beta_of_stratified(spec, strict=True) == P("1 + 2*t + t^2")


def test_surface_stratification(scene):
    assert beta_of_stratified(scene.stratification("surface-443"), strict=True) == P("4 - t + 3*t^2")


def test_stratification_independence(scene):
    coarse = beta_of_stratified(scene.stratification("figure-eight-x"), strict=True)
    fine = beta_of_stratified(scene.stratification("figure-eight-x-fine"), strict=True)
    assert coarse == fine


def test_compactification_independence(scene):
    # the same open variety through two different compactification models
    a = beta_of_stratum(StratumRecord("a", 2, OpenModel(scene.pair("plane"))), strict=True)
    b = beta_of_stratum(StratumRecord("b", 2, OpenModel(scene.pair("plane-oct"))), strict=True)
    assert a == b == P("t^2")


def test_additivity_on_fixture_pairs(scene):
    # beta(X) = beta(X minus Y) + beta(Y) for modelled closed pairs
    cases = [
        ("circle", "line", P("1")),
        ("sphere-2", "plane", P("1")),
    ]
    for total_name, open_name, boundary_beta in cases:
        total = scene.complex(total_name).poincare_polynomial()
        open_part = beta_of_stratum(
            StratumRecord("u", total.degree, OpenModel(scene.pair(open_name))),
            strict=True,
        )
        assert total == open_part + boundary_beta


def test_frontier_must_decrease_dimension():
    pt = StratumRecord("p", 0, CompactModel(models.point()))
    arc = StratumRecord("arc", 1, DeclaredBeta(P("t")))
    with pytest.raises(InvalidStratification):
        StratifiedSpec("bad", (pt, arc), {"p": frozenset({"arc"})})


def test_inclusion_exclusion_examples():
    circle = P("1 + t")
    # two ellipses meeting in four points
    ellipses = inclusion_exclusion(
        [("E1", circle), ("E2", circle)], {frozenset({0, 1}): P("4")}
    )
    assert ellipses == P("-2 + 2*t")
    single = inclusion_exclusion([("X", P("1 + 2*t + t^2"))], {})
    assert single == P("1 + 2*t + t^2")


def test_inclusion_exclusion_surface():
    sphere, torus, circle, four = P("1 + t^2"), P("1 + 2*t + t^2"), P("1 + t"), P("4")
    beta = inclusion_exclusion(
        [("X1", sphere), ("X2", sphere), ("X3", torus)],
        {
            frozenset({0, 1}): circle,
            frozenset({0, 2}): circle,
            frozenset({1, 2}): circle,
            frozenset({0, 1, 2}): four,
        },
    )
    assert beta == P("4 - t + 3*t^2")


def test_inclusion_exclusion_missing_intersection():
    with pytest.raises(MissingIntersection) as err:
        inclusion_exclusion([("A", P("1")), ("B", P("1"))], {})
    assert err.value.context["subset"] == [0, 1]


def test_refinement_identity(scene):
    spec = scene.stratification("circle-as-two")
    v = refinement_check(spec, spec, {"arc": ["arc"], "pt": ["pt"]})
    assert v.holds


def test_refinement_circle_two_ways(scene):
    v = refinement_check(
        scene.stratification("circle-as-one"),
        scene.stratification("circle-as-two"),
        {"circle": ["arc", "pt"]},
    )
    assert v.holds


def test_refinement_wrong_mapping_fails(scene):
    v = refinement_check(
        scene.stratification("figure-eight-x"),
        scene.stratification("figure-eight-x-fine"),
        {"smooth": ["arc3"], "node": ["node-fine", "extra-point"]},
    )
    assert not v.holds
    assert "smooth" in v.detail


def test_refinement_not_a_partition(scene):
    with pytest.raises(NotAPartition):
        refinement_check(
            scene.stratification("figure-eight-x"),
            scene.stratification("figure-eight-x-fine"),
            {"smooth": ["arc3", "extra-point", "arc3"], "node": ["node-fine"]},
        )


def test_degree_law_on_stratified_fixtures(scene):
    for name in ("figure-eight-x", "circle-as-one", "circle-as-two", "surface-443"):
        spec = scene.stratification(name)
        beta = beta_of_stratified(spec, strict=True)
        assert beta.degree == max(s.dim for s in spec.strata)
        assert beta.leading_coefficient > 0


def test_dimension_zero_strata_count_points(scene):
    spec = StratifiedSpec(
        "points", (StratumRecord("four", 0, CompactModel(models.points(4))),)
    )
    assert beta_of_stratified(spec, strict=True) == P("4")
