"""Scissor calculus on classes of real algebraic varieties.

Expressions are trees over named atoms with disjoint-union, product,
closed-difference and blowup nodes.  They are evaluated, never normalized:
the computable invariants are the virtual Poincare polynomial (a ring
homomorphism to Z[t]) and the compactly-supported Euler characteristic
(its value at t = -1, recomputed independently over Z as a cross-check).

Closedness of the removed part in a difference, and correctness of a
blowup quadruple, are caller assertions recorded in atom provenance; they
are not verified geometrically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import UnknownAtom, Verdict
from .polynomial import IntPolynomial
from .simplicial import SimplicialComplex

__all__ = [
    "AtomRecord",
    "AtomRegistry",
    "Atom",
    "DisjointUnion",
    "Product",
    "ClosedDifference",
    "Blowup",
    "Empty",
    "ScissorExpr",
    "evaluate_beta",
    "evaluate_chi_c",
    "check_blowup_relation",
    "degree_report",
    "atoms_used",
]

PROVENANCE_KINDS = ("declared", "model", "recursive")


@dataclass(frozen=True)
class AtomRecord:
    """A named variety class with known invariants.

    provenance is "declared" (user-supplied analytically), "model:<name>"
    (computed from a simplicial model), or "recursive" (computed by the
    stratified engine).  chi_c is kept separately from beta so that Euler
    characteristics can be recomputed without touching polynomials.
    """

    name: str
    beta: IntPolynomial
    chi_c: int
    provenance: str = "declared"
    compact_nonsingular: bool = False

    def __post_init__(self):
        kind = self.provenance.split(":", 1)[0]
        if kind not in PROVENANCE_KINDS:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.compact_nonsingular and any(c < 0 for c in self.beta.coeffs):
            raise ValueError(
                f"atom {self.name!r} is flagged compact nonsingular but its "
                f"polynomial {self.beta} has a negative coefficient"
            )

    @property
    def declared(self) -> bool:
        return self.provenance == "declared"


class AtomRegistry:
    """Name -> AtomRecord map; treat as immutable once populated."""

    def __init__(self, records: dict[str, AtomRecord] | None = None):
        self._records: dict[str, AtomRecord] = dict(records or {})

    def register(self, record: AtomRecord) -> AtomRecord:
        if record.name in self._records:
            raise ValueError(f"atom {record.name!r} already registered")
        self._records[record.name] = record
        return record

    def declare(self, name: str, beta: IntPolynomial, *, chi_c: int | None = None,
                compact_nonsingular: bool = False) -> AtomRecord:
        if chi_c is None:
            chi_c = beta.evaluate(-1)
        return self.register(AtomRecord(name, beta, chi_c, "declared", compact_nonsingular))

    def from_model(self, name: str, model: SimplicialComplex,
                   model_name: str | None = None) -> AtomRecord:
        """Register a compact nonsingular atom computed from a simplicial model.

        chi_c comes from the alternating simplex count, independently of the
        homology ranks behind beta.
        """
        beta = model.poincare_polynomial()
        chi = model.euler_characteristic()
        return self.register(AtomRecord(
            name, beta, chi, f"model:{model_name or name}", compact_nonsingular=True,
        ))

    def recursive(self, name: str, beta: IntPolynomial, *, chi_c: int | None = None) -> AtomRecord:
        if chi_c is None:
            chi_c = beta.evaluate(-1)
        return self.register(AtomRecord(name, beta, chi_c, "recursive"))

    def lookup(self, name: str) -> AtomRecord:
        try:
            return self._records[name]
        except KeyError:
            raise UnknownAtom(f"atom {name!r} is not registered", atom=name) from None

    def __contains__(self, name: str) -> bool:
        return name in self._records

    def names(self) -> list[str]:
        return sorted(self._records)

    def records(self) -> list[AtomRecord]:
        return [self._records[n] for n in self.names()]

    def __eq__(self, other) -> bool:
        return isinstance(other, AtomRegistry) and self._records == other._records


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class DisjointUnion:
    left: "ScissorExpr"
    right: "ScissorExpr"


@dataclass(frozen=True)
class Product:
    left: "ScissorExpr"
    right: "ScissorExpr"


@dataclass(frozen=True)
class ClosedDifference:
    """[total minus closed_part] with closed_part closed in total (asserted)."""

    total: "ScissorExpr"
    closed_part: "ScissorExpr"


@dataclass(frozen=True)
class Blowup:
    """Blowup of `base` along `center` with exceptional divisor `exceptional`.

    The node denotes the blown-up variety (optionally labelled); its class
    is base - center + exceptional, the rewriting form of the blowup
    relation.
    """

    base: "ScissorExpr"
    center: "ScissorExpr"
    exceptional: "ScissorExpr"
    label: str | None = None


@dataclass(frozen=True)
class Empty:
    pass


ScissorExpr = Union[Atom, DisjointUnion, Product, ClosedDifference, Blowup, Empty]


def atoms_used(expr: ScissorExpr) -> set[str]:
    out: set[str] = set()
    stack = [expr]
    while stack:
        node = stack.pop()
        if isinstance(node, Atom):
            out.add(node.name)
        elif isinstance(node, (DisjointUnion, Product)):
            stack.extend((node.left, node.right))
        elif isinstance(node, ClosedDifference):
            stack.extend((node.total, node.closed_part))
        elif isinstance(node, Blowup):
            stack.extend((node.base, node.center, node.exceptional))
    return out


def evaluate_beta(expr: ScissorExpr, registry: AtomRegistry) -> IntPolynomial:
    """Virtual Poincare polynomial of the expression."""
    if isinstance(expr, Atom):
        return registry.lookup(expr.name).beta
    if isinstance(expr, DisjointUnion):
        return evaluate_beta(expr.left, registry) + evaluate_beta(expr.right, registry)
    if isinstance(expr, Product):
        return evaluate_beta(expr.left, registry) * evaluate_beta(expr.right, registry)
    if isinstance(expr, ClosedDifference):
        return evaluate_beta(expr.total, registry) - evaluate_beta(expr.closed_part, registry)
    if isinstance(expr, Blowup):
        return (
            evaluate_beta(expr.base, registry)
            - evaluate_beta(expr.center, registry)
            + evaluate_beta(expr.exceptional, registry)
        )
    if isinstance(expr, Empty):
        return IntPolynomial.zero()
    raise TypeError(f"not a scissor expression: {expr!r}")


def evaluate_chi_c(expr: ScissorExpr, registry: AtomRegistry) -> int:
    """Compactly-supported Euler characteristic, recursed independently over Z."""
    if isinstance(expr, Atom):
        return registry.lookup(expr.name).chi_c
    if isinstance(expr, DisjointUnion):
        return evaluate_chi_c(expr.left, registry) + evaluate_chi_c(expr.right, registry)
    if isinstance(expr, Product):
        return evaluate_chi_c(expr.left, registry) * evaluate_chi_c(expr.right, registry)
    if isinstance(expr, ClosedDifference):
        return evaluate_chi_c(expr.total, registry) - evaluate_chi_c(expr.closed_part, registry)
    if isinstance(expr, Blowup):
        return (
            evaluate_chi_c(expr.base, registry)
            - evaluate_chi_c(expr.center, registry)
            + evaluate_chi_c(expr.exceptional, registry)
        )
    if isinstance(expr, Empty):
        return 0
    raise TypeError(f"not a scissor expression: {expr!r}")


def check_blowup_relation(
    x: IntPolynomial, c: IntPolynomial, bl: IntPolynomial, e: IntPolynomial
) -> Verdict:
    """Does blowup - exceptional = base - center hold coefficientwise?"""
    lhs, rhs = bl - e, x - c
    if lhs == rhs:
        return Verdict(True, "blowup relation holds")
    diff = lhs - rhs
    bad = next(d for d, coeff in enumerate(diff.coeffs) if coeff != 0)
    return Verdict(
        False,
        f"blowup relation fails first at degree {bad}: "
        f"(bl - e) has t^{bad} coefficient {lhs.coefficient(bad)}, "
        f"(x - c) has {rhs.coefficient(bad)}",
    )


def degree_report(expr: ScissorExpr, registry: AtomRegistry, claimed_dim: int) -> Verdict:
    """Check degree = claimed dimension with positive leading coefficient.

    A nonempty variety has nonzero class, degree equal to its dimension and
    positive top virtual Betti number; the verdict flags any violation.
    """
    beta = evaluate_beta(expr, registry)
    if beta.is_zero():
        return Verdict(False, "polynomial is zero: the class of a nonempty variety is never zero")
    if beta.degree != claimed_dim:
        return Verdict(
            False,
            f"degree {beta.degree} does not match claimed dimension {claimed_dim}",
        )
    if beta.leading_coefficient <= 0:
        return Verdict(
            False,
            f"leading coefficient {beta.leading_coefficient} is not positive",
        )
    return Verdict(
        True,
        f"degree {claimed_dim} with leading coefficient {beta.leading_coefficient} > 0",
    )
