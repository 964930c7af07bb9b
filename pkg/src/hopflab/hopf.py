"""Algebras, coalgebras, bialgebras and Hopf algebras by structure constants.

A structure is a handful of dense matrices over an exact field:

* multiplication  m : H (x) H -> H   as a (dim x dim^2) matrix,
* unit            u : k -> H         as a column vector,
* comultiplication D : H -> H (x) H  as a (dim^2 x dim) matrix,
* counit          e : H -> k         as a row vector,
* antipode        S : H -> H         as a square matrix.

Storing full matrices (rather than rank-3 coefficient tables) makes every
axiom a matrix identity, verified exactly by ``check_*`` with per-axiom
witnesses.  An optional parity vector turns on the Koszul sign rule: the
braiding used in the bialgebra compatibility axiom, commutators and opposites
then picks up a -1 on odd (x) odd.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional, Tuple

from .errors import InvalidStructureError, ShapeError
from .fields import FieldSpec, same_field
from .linalg import (
    Matrix,
    Parity,
    Subspace,
    apply_middle_swap,
    nullspace,
    solve_particular,
    swap_map,
    tensor,
)
from .report import VerificationReport, matrix_axiom


def _check_parity(parity: Optional[Parity], dim: int) -> None:
    if parity is not None and len(parity) != dim:
        raise ShapeError("parity length does not match dimension")


def default_names(dim: int) -> Tuple[str, ...]:
    return tuple(f"e{i}" for i in range(dim))


def dual_name(name: str) -> str:
    """Involutive renaming for dual bases: append '*' / strip a trailing '*'."""
    return name[:-1] if name.endswith("*") else name + "*"


def tensor_label(names: Tuple[str, ...], factors: int) -> Callable[[int], str]:
    n = len(names)

    def label(idx: int) -> str:
        parts = []
        for _ in range(factors):
            parts.append(names[idx % n])
            idx //= n
        return "(x)".join(reversed(parts))

    return label


@dataclass(frozen=True)
class AlgebraSC:
    """Unital associative algebra given by structure constants."""

    field: FieldSpec
    dim: int
    basis_names: Tuple[str, ...]
    mult: Matrix  # dim x dim^2
    unit: Matrix  # dim x 1
    parity: Optional[Parity] = None

    def __post_init__(self) -> None:
        n = self.dim
        if len(self.basis_names) != n:
            raise ShapeError("basis_names length does not match dim")
        if self.mult.shape != (n, n * n):
            raise ShapeError(f"mult must be {n}x{n * n}, got {self.mult.shape}")
        if self.unit.shape != (n, 1):
            raise ShapeError(f"unit must be {n}x1, got {self.unit.shape}")
        same_field(self.field, self.mult.field, self.unit.field)
        _check_parity(self.parity, n)

    def product(self, i: int, j: int) -> Tuple:
        """Structure constants of e_i * e_j as a coefficient vector."""
        return self.mult.col(i * self.dim + j)


@dataclass(frozen=True)
class CoalgebraSC:
    """Counital coassociative coalgebra given by structure constants."""

    field: FieldSpec
    dim: int
    basis_names: Tuple[str, ...]
    comult: Matrix  # dim^2 x dim
    counit: Matrix  # 1 x dim
    parity: Optional[Parity] = None

    def __post_init__(self) -> None:
        n = self.dim
        if len(self.basis_names) != n:
            raise ShapeError("basis_names length does not match dim")
        if self.comult.shape != (n * n, n):
            raise ShapeError(f"comult must be {n * n}x{n}, got {self.comult.shape}")
        if self.counit.shape != (1, n):
            raise ShapeError(f"counit must be 1x{n}, got {self.counit.shape}")
        same_field(self.field, self.comult.field, self.counit.field)
        _check_parity(self.parity, n)


@dataclass(frozen=True)
class BialgebraSC:
    """Algebra and coalgebra on one carrier with the compatibility axioms."""

    field: FieldSpec
    dim: int
    basis_names: Tuple[str, ...]
    mult: Matrix
    unit: Matrix
    comult: Matrix
    counit: Matrix
    parity: Optional[Parity] = None

    def __post_init__(self) -> None:
        self.algebra  # shape validation happens in the part constructors
        self.coalgebra

    @property
    def algebra(self) -> AlgebraSC:
        return AlgebraSC(self.field, self.dim, self.basis_names, self.mult, self.unit, self.parity)

    @property
    def coalgebra(self) -> CoalgebraSC:
        return CoalgebraSC(
            self.field, self.dim, self.basis_names, self.comult, self.counit, self.parity
        )

    @property
    def braiding(self) -> Matrix:
        """The (parity-aware) symmetry H (x) H -> H (x) H."""
        return swap_map(self.field, self.dim, self.dim, self.parity, self.parity)


@dataclass(frozen=True)
class HopfAlgebraSC(BialgebraSC):
    """Bialgebra with an antipode matrix attached.

    The antipode is required input and is *not* solved for here; see
    :func:`solve_antipode` for the convenience solver.
    """

    antipode: Matrix = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.antipode is None or self.antipode.shape != (self.dim, self.dim):
            raise ShapeError("antipode must be a dim x dim matrix")
        same_field(self.field, self.antipode.field)

    @property
    def bialgebra(self) -> BialgebraSC:
        return BialgebraSC(
            self.field,
            self.dim,
            self.basis_names,
            self.mult,
            self.unit,
            self.comult,
            self.counit,
            self.parity,
        )


# -- axiom checks ------------------------------------------------------------


def check_algebra(a: AlgebraSC) -> VerificationReport:
    rep = VerificationReport("algebra")
    n = a.dim
    ident = Matrix.identity(a.field, n)
    lab1 = tensor_label(a.basis_names, 1)
    lab2 = tensor_label(a.basis_names, 2)
    lab3 = tensor_label(a.basis_names, 3)
    matrix_axiom(
        rep,
        "associativity",
        a.mult @ tensor(a.mult, ident),
        a.mult @ tensor(ident, a.mult),
        lab1,
        lab3,
    )
    matrix_axiom(rep, "unit.left", a.mult @ tensor(a.unit, ident), ident, lab1, lab1)
    matrix_axiom(rep, "unit.right", a.mult @ tensor(ident, a.unit), ident, lab1, lab1)
    return rep


def check_coalgebra(c: CoalgebraSC) -> VerificationReport:
    rep = VerificationReport("coalgebra")
    n = c.dim
    ident = Matrix.identity(c.field, n)
    lab1 = tensor_label(c.basis_names, 1)
    lab3 = tensor_label(c.basis_names, 3)
    matrix_axiom(
        rep,
        "coassociativity",
        tensor(c.comult, ident) @ c.comult,
        tensor(ident, c.comult) @ c.comult,
        lab3,
        lab1,
    )
    matrix_axiom(rep, "counit.left", tensor(c.counit, ident) @ c.comult, ident, lab1, lab1)
    matrix_axiom(rep, "counit.right", tensor(ident, c.counit) @ c.comult, ident, lab1, lab1)
    return rep


def check_bialgebra(b: BialgebraSC) -> VerificationReport:
    rep = VerificationReport("bialgebra")
    rep.merge(check_algebra(b.algebra))
    rep.merge(check_coalgebra(b.coalgebra))
    n = b.dim
    ident = Matrix.identity(b.field, n)
    lab2 = tensor_label(b.basis_names, 2)
    braided = apply_middle_swap(
        tensor(b.comult, b.comult), n, n, n, n, b.parity, b.parity
    )  # (H (x) c (x) H) (Delta (x) Delta), without the quartic matrix
    matrix_axiom(
        rep,
        "compat.comult_mult",
        b.comult @ b.mult,
        tensor(b.mult, b.mult) @ braided,
        lab2,
        lab2,
    )
    matrix_axiom(rep, "compat.comult_unit", b.comult @ b.unit, tensor(b.unit, b.unit), lab2)
    matrix_axiom(
        rep, "compat.counit_mult", b.counit @ b.mult, tensor(b.counit, b.counit), None, lab2
    )
    one = Matrix.from_rows(b.field, [[1]])
    matrix_axiom(rep, "compat.counit_unit", b.counit @ b.unit, one)
    return rep


def check_hopf(h: HopfAlgebraSC) -> VerificationReport:
    rep = VerificationReport("hopf")
    rep.merge(check_bialgebra(h.bialgebra))
    n = h.dim
    ident = Matrix.identity(h.field, n)
    lab1 = tensor_label(h.basis_names, 1)
    target = h.unit @ h.counit
    matrix_axiom(
        rep,
        "antipode.left",
        h.mult @ tensor(h.antipode, ident) @ h.comult,
        target,
        lab1,
        lab1,
    )
    matrix_axiom(
        rep,
        "antipode.right",
        h.mult @ tensor(ident, h.antipode) @ h.comult,
        target,
        lab1,
        lab1,
    )
    return rep


def require_valid(obj, checker, what: str):
    rep = checker(obj)
    if not rep.ok:
        names = ", ".join(c.name for c in rep.failures)
        raise InvalidStructureError(f"{what} fails axioms: {names}", rep)
    return obj


# -- operations ----------------------------------------------------------------


def convolution(f: Matrix, g: Matrix, c: CoalgebraSC, a: AlgebraSC) -> Matrix:
    """Convolution product m (f (x) g) Delta of two maps C -> A."""
    same_field(f.field, g.field, c.field, a.field)
    if f.shape != (a.dim, c.dim) or g.shape != (a.dim, c.dim):
        raise ShapeError("convolution operands must be maps C -> A")
    return a.mult @ tensor(f, g) @ c.comult


def convolution_unit(c: CoalgebraSC, a: AlgebraSC) -> Matrix:
    return a.unit @ c.counit


def dual_hopf(h: HopfAlgebraSC, validate: bool = True) -> HopfAlgebraSC:
    """The dual Hopf algebra on the dual basis.

    Structure constants transpose: multiplication of the dual is the
    transposed comultiplication and so on.  Dualizing twice gives back the
    input bit-exactly.
    """
    if validate:
        require_valid(h, check_hopf, "dual_hopf input")
    return HopfAlgebraSC(
        field=h.field,
        dim=h.dim,
        basis_names=tuple(dual_name(s) for s in h.basis_names),
        mult=h.comult.transpose(),
        unit=h.counit.transpose(),
        comult=h.mult.transpose(),
        counit=h.unit.transpose(),
        parity=h.parity,
        antipode=h.antipode.transpose(),
    )


def opposite(h: HopfAlgebraSC) -> HopfAlgebraSC:
    """Multiplication reversed through the braiding; same antipode attached.

    The antipode axiom of the result is not asserted; re-run
    :func:`check_hopf` if it matters for the use at hand.
    """
    return replace(h, mult=h.mult @ h.braiding)


def coopposite(h: HopfAlgebraSC) -> HopfAlgebraSC:
    """Comultiplication reversed through the braiding; same antipode attached."""
    return replace(h, comult=h.braiding @ h.comult)


def left_integrals(h: HopfAlgebraSC, validate: bool = True) -> Subspace:
    """Left integrals on H: functionals t with f * t = f(1) t for all f.

    Returned as a subspace of the dual (coordinates in the dual basis),
    computed as the nullspace of the linear system obtained by letting f
    range over the dual basis.
    """
    if validate:
        require_valid(h, check_hopf, "left_integrals input")
    f = h.field
    n = h.dim
    unit_coeffs = h.unit.col(0)
    rows = []
    # Row (i, j): sum_l Delta[(i,l),j] t_l - unit_i t_j = 0.
    for i in range(n):
        for j in range(n):
            row = [h.comult.data[i * n + l][j] for l in range(n)]
            row[j] = f.sub(row[j], unit_coeffs[i])
            rows.append(row)
    return nullspace(Matrix.from_rows(f, rows))


def solve_antipode(b: BialgebraSC) -> Optional[Matrix]:
    """Solve m (S (x) id) Delta = u e for S and confirm the right-hand axiom.

    Returns the antipode when the bialgebra admits one, else None.  A matrix
    satisfying both convolution-inverse axioms is unique, so the solution, if
    it verifies, is the antipode.
    """
    f = b.field
    n = b.dim
    ident = Matrix.identity(f, n)
    columns = []
    for r in range(n):
        for c in range(n):
            basis_mat = Matrix.from_rows(
                f, [[1 if (i, j) == (r, c) else 0 for j in range(n)] for i in range(n)]
            )
            image = b.mult @ tensor(basis_mat, ident) @ b.comult
            columns.append(image.flat())
    system = Matrix.from_rows(f, columns).transpose()  # n^2 x n^2
    target = (b.unit @ b.counit).flat()
    flat = solve_particular(system, target)
    if flat is None:
        return None
    s = Matrix(f, n, n, tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(n)))
    right = b.mult @ tensor(ident, s) @ b.comult
    if right != b.unit @ b.counit:
        return None
    return s
