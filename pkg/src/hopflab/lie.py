"""Lie algebras and Lie coalgebras by structure constants.

A Lie algebra is a bracket matrix ``[-,-] : L (x) L -> L`` (dim x dim^2)
satisfying, as exact matrix identities,

    antisymmetry   [-,-] (id + c) = 0
    Jacobi         [-,-] (id (x) [-,-]) (id + t_c + w_c) = 0

where ``c`` is the symmetry of ``L (x) L`` and ``t_c``, ``w_c`` are the two
3-cycles on ``L (x) L (x) L`` built from it.  A Lie coalgebra is the formal
dual: a cobracket ``Y : C -> C (x) C`` with the transposed axioms.  With a
parity vector the symmetry carries Koszul signs and the same formulas define
Lie superalgebras.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import InvalidStructureError, ShapeError
from .fields import FieldSpec, same_field
from .hopf import AlgebraSC, CoalgebraSC, check_algebra, check_coalgebra, default_names, require_valid, tensor_label
from .linalg import Matrix, Parity, swap_map, tensor
from .report import VerificationReport, matrix_axiom


@dataclass(frozen=True)
class LieAlgebraSC:
    field: FieldSpec
    dim: int
    bracket: Matrix  # dim x dim^2
    parity: Optional[Parity] = None
    basis_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        n = self.dim
        if self.bracket.shape != (n, n * n):
            raise ShapeError(f"bracket must be {n}x{n * n}, got {self.bracket.shape}")
        same_field(self.field, self.bracket.field)
        if self.parity is not None and len(self.parity) != n:
            raise ShapeError("parity length does not match dim")

    @property
    def names(self) -> Tuple[str, ...]:
        return self.basis_names if self.basis_names is not None else default_names(self.dim)


@dataclass(frozen=True)
class LieCoalgebraSC:
    field: FieldSpec
    dim: int
    cobracket: Matrix  # dim^2 x dim
    parity: Optional[Parity] = None
    basis_names: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        n = self.dim
        if self.cobracket.shape != (n * n, n):
            raise ShapeError(f"cobracket must be {n * n}x{n}, got {self.cobracket.shape}")
        same_field(self.field, self.cobracket.field)
        if self.parity is not None and len(self.parity) != n:
            raise ShapeError("parity length does not match dim")

    @property
    def names(self) -> Tuple[str, ...]:
        return self.basis_names if self.basis_names is not None else default_names(self.dim)


def _cycles(field: FieldSpec, dim: int, parity: Optional[Parity]) -> Tuple[Matrix, Matrix]:
    """The two 3-cycles on the triple tensor power, with Koszul signs."""
    ident = Matrix.identity(field, dim)
    c = swap_map(field, dim, dim, parity, parity)
    c_left = tensor(c, ident)
    c_right = tensor(ident, c)
    return c_left @ c_right, c_right @ c_left


def check_lie(l: LieAlgebraSC) -> VerificationReport:
    rep = VerificationReport("lie-algebra")
    f, n = l.field, l.dim
    ident2 = Matrix.identity(f, n * n)
    ident3 = Matrix.identity(f, n ** 3)
    ident = Matrix.identity(f, n)
    c = swap_map(f, n, n, l.parity, l.parity)
    lab1 = tensor_label(l.names, 1)
    lab2 = tensor_label(l.names, 2)
    lab3 = tensor_label(l.names, 3)
    matrix_axiom(
        rep,
        "antisymmetry",
        l.bracket @ (ident2 + c),
        Matrix.zeros(f, n, n * n),
        lab1,
        lab2,
    )
    t_c, w_c = _cycles(f, n, l.parity)
    matrix_axiom(
        rep,
        "jacobi",
        l.bracket @ tensor(ident, l.bracket) @ (ident3 + t_c + w_c),
        Matrix.zeros(f, n, n ** 3),
        lab1,
        lab3,
    )
    return rep


def check_lie_coalgebra(c: LieCoalgebraSC) -> VerificationReport:
    rep = VerificationReport("lie-coalgebra")
    f, n = c.field, c.dim
    ident2 = Matrix.identity(f, n * n)
    ident3 = Matrix.identity(f, n ** 3)
    ident = Matrix.identity(f, n)
    sw = swap_map(f, n, n, c.parity, c.parity)
    lab1 = tensor_label(c.names, 1)
    lab2 = tensor_label(c.names, 2)
    lab3 = tensor_label(c.names, 3)
    matrix_axiom(
        rep,
        "co-antisymmetry",
        (ident2 + sw) @ c.cobracket,
        Matrix.zeros(f, n * n, n),
        lab2,
        lab1,
    )
    t_c, w_c = _cycles(f, n, c.parity)
    matrix_axiom(
        rep,
        "co-jacobi",
        (ident3 + t_c + w_c) @ tensor(ident, c.cobracket) @ c.cobracket,
        Matrix.zeros(f, n ** 3, n),
        lab3,
        lab1,
    )
    return rep


def commutator_lie(a: AlgebraSC, validate: bool = True) -> LieAlgebraSC:
    """The commutator Lie algebra of an associative algebra: m - m c."""
    if validate:
        require_valid(a, check_algebra, "commutator_lie input")
    c = swap_map(a.field, a.dim, a.dim, a.parity, a.parity)
    return LieAlgebraSC(
        field=a.field,
        dim=a.dim,
        bracket=a.mult - a.mult @ c,
        parity=a.parity,
        basis_names=a.basis_names,
    )


def cocommutator_lie_coalgebra(c: CoalgebraSC, validate: bool = True) -> LieCoalgebraSC:
    """The commutator Lie cobracket of a coalgebra: Delta - c Delta."""
    if validate:
        require_valid(c, check_coalgebra, "cocommutator input")
    sw = swap_map(c.field, c.dim, c.dim, c.parity, c.parity)
    return LieCoalgebraSC(
        field=c.field,
        dim=c.dim,
        cobracket=c.comult - sw @ c.comult,
        parity=c.parity,
        basis_names=c.basis_names,
    )


def dual_lie(c: LieCoalgebraSC, validate: bool = True) -> LieAlgebraSC:
    """The Lie algebra on the dual of a Lie coalgebra: transposed cobracket."""
    if validate:
        rep = check_lie_coalgebra(c)
        if not rep.ok:
            raise InvalidStructureError("dual_lie input fails axioms", rep)
    return LieAlgebraSC(
        field=c.field,
        dim=c.dim,
        bracket=c.cobracket.transpose(),
        parity=c.parity,
        basis_names=c.basis_names,
    )


def lie_morphism_check(f: Matrix, l1: LieAlgebraSC, l2: LieAlgebraSC) -> bool:
    """True iff f [x,y] = [f x, f y] as matrices."""
    same_field(f.field, l1.field, l2.field)
    if f.shape != (l2.dim, l1.dim):
        raise ShapeError("morphism shape does not match the Lie algebras")
    return f @ l1.bracket == l2.bracket @ tensor(f, f)


# -- group-indexed families ---------------------------------------------------


@dataclass(frozen=True)
class FamilyOfLieAlgebras:
    """A collection of Lie algebras indexed by the elements of a finite group.

    Components are kept in the group's canonical element order.  The family
    bracket is the componentwise one, so the family satisfies the Lie axioms
    iff every component does; this is verified at construction.
    """

    group: "FiniteGroup"  # noqa: F821 - forward ref to hopflab.turaev
    components: Tuple[LieAlgebraSC, ...]

    def __post_init__(self) -> None:
        if len(self.components) != self.group.order:
            raise ShapeError("one component per group element required")
        for g, comp in enumerate(self.components):
            rep = check_lie(comp)
            if not rep.ok:
                raise InvalidStructureError(
                    f"component {self.group.element_names[g]} fails Lie axioms", rep
                )


@dataclass(frozen=True)
class FamilyOfLieCoalgebras:
    group: "FiniteGroup"  # noqa: F821
    components: Tuple[LieCoalgebraSC, ...]

    def __post_init__(self) -> None:
        if len(self.components) != self.group.order:
            raise ShapeError("one component per group element required")
        for g, comp in enumerate(self.components):
            rep = check_lie_coalgebra(comp)
            if not rep.ok:
                raise InvalidStructureError(
                    f"component {self.group.element_names[g]} fails Lie coalgebra axioms", rep
                )
