"""Deterministic constructors for the worked examples used throughout.

Every constructor output passes its full axiom suite exactly, and identical
inputs give bit-identical serializations.  The characteristic-p examples are
the ones with nonzero primitive/indecomposable spaces: over a field of
characteristic 0 every finite-dimensional Hopf algebra has P = 0.

Taft algebras beyond the 4-dimensional one are deliberately absent: they
need primitive roots of unity, and the scalar types here stop at Q and F_p
(no cyclotomic extensions).
"""

from __future__ import annotations

from math import comb
from typing import Dict, Tuple

from .fields import FieldSpec
from .hopf import AlgebraSC, CoalgebraSC, HopfAlgebraSC, dual_hopf
from .linalg import Matrix
from .turaev import FiniteGroup, HopfGroupAlgebra, trivial_group


def group_algebra(g: FiniteGroup, f: FieldSpec) -> HopfAlgebraSC:
    """The group algebra kG: grouplike basis, S the inversion permutation."""
    n = g.order
    zero, one = f.zero, f.one
    mult = [[zero] * (n * n) for _ in range(n)]
    for a in range(n):
        for b in range(n):
            mult[g.mul(a, b)][a * n + b] = one
    comult = [[zero] * n for _ in range(n * n)]
    for a in range(n):
        comult[a * n + a][a] = one
    antipode = [[zero] * n for _ in range(n)]
    for a in range(n):
        antipode[g.inv(a)][a] = one
    unit = [one if a == g.identity else zero for a in range(n)]
    return HopfAlgebraSC(
        field=f,
        dim=n,
        basis_names=g.element_names,
        mult=Matrix(f, n, n * n, tuple(tuple(r) for r in mult)),
        unit=Matrix.column(f, unit),
        comult=Matrix(f, n * n, n, tuple(tuple(r) for r in comult)),
        counit=Matrix.row_vector(f, [one] * n),
        antipode=Matrix(f, n, n, tuple(tuple(r) for r in antipode)),
    )


def function_hopf(g: FiniteGroup, f: FieldSpec) -> HopfAlgebraSC:
    """Functions on G with pointwise product: the dual of the group algebra."""
    return dual_hopf(group_algebra(g, f), validate=False)


def sweedler4(f: FieldSpec) -> HopfAlgebraSC:
    """The 4-dimensional Hopf algebra with g^2 = 1, x^2 = 0, x g = -g x.

    Its antipode has order 4, so it separates S^2 from the identity.  Needs
    characteristic different from 2.
    """
    if f.characteristic == 2:
        raise ValueError("this algebra degenerates in characteristic 2")
    names = ("1", "g", "x", "gx")
    one = f.one
    minus = f.neg(one)
    prods: Dict[Tuple[int, int], Dict[int, object]] = {}
    for j in range(4):
        prods[(0, j)] = {j: one}
        prods[(j, 0)] = {j: one}
    prods[(1, 1)] = {0: one}
    prods[(1, 2)] = {3: one}
    prods[(1, 3)] = {2: one}
    prods[(2, 1)] = {3: minus}
    prods[(2, 2)] = {}
    prods[(2, 3)] = {}
    prods[(3, 1)] = {2: minus}
    prods[(3, 2)] = {}
    prods[(3, 3)] = {}
    zero = f.zero
    mult = [[zero] * 16 for _ in range(4)]
    for (i, j), terms in prods.items():
        for k, c in terms.items():
            mult[k][i * 4 + j] = c
    comult = [[zero] * 4 for _ in range(16)]
    for i, terms in {
        0: {(0, 0): one},
        1: {(1, 1): one},
        2: {(2, 0): one, (1, 2): one},
        3: {(3, 1): one, (0, 3): one},
    }.items():
        for (a, b), c in terms.items():
            comult[a * 4 + b][i] = c
    antipode = [[zero] * 4 for _ in range(4)]
    antipode[0][0] = one
    antipode[1][1] = one
    antipode[3][2] = minus
    antipode[2][3] = one
    return HopfAlgebraSC(
        field=f,
        dim=4,
        basis_names=names,
        mult=Matrix(f, 4, 16, tuple(tuple(r) for r in mult)),
        unit=Matrix.column(f, [one, zero, zero, zero]),
        comult=Matrix(f, 16, 4, tuple(tuple(r) for r in comult)),
        counit=Matrix.row_vector(f, [one, one, zero, zero]),
        antipode=Matrix(f, 4, 4, tuple(tuple(r) for r in antipode)),
    )


def truncated_poly(p: int) -> HopfAlgebraSC:
    """F_p[x]/(x^p) with x primitive and binomial comultiplication.

    The flagship small example with nonzero primitives at finite dimension:
    the binomial coefficients below p never vanish, so P = span{x}.
    """
    f = FieldSpec.prime(p)
    names = tuple("1" if k == 0 else ("x" if k == 1 else f"x{k}") for k in range(p))
    zero, one = f.zero, f.one
    mult = [[zero] * (p * p) for _ in range(p)]
    for i in range(p):
        for j in range(p):
            if i + j < p:
                mult[i + j][i * p + j] = one
    comult = [[zero] * p for _ in range(p * p)]
    for k in range(p):
        for j in range(k + 1):
            comult[j * p + (k - j)][k] = f.coerce(comb(k, j))
    antipode = [[zero] * p for _ in range(p)]
    for k in range(p):
        antipode[k][k] = f.coerce((-1) ** k)
    return HopfAlgebraSC(
        field=f,
        dim=p,
        basis_names=names,
        mult=Matrix(f, p, p * p, tuple(tuple(r) for r in mult)),
        unit=Matrix.column(f, [one] + [zero] * (p - 1)),
        comult=Matrix(f, p * p, p, tuple(tuple(r) for r in comult)),
        counit=Matrix.row_vector(f, [one] + [zero] * (p - 1)),
        antipode=Matrix(f, p, p, tuple(tuple(r) for r in antipode)),
    )


def _wedge_sign(s: int, t: int) -> int:
    """Sign of merging sorted index sets (bitmasks) s and t by transpositions."""
    sign = 1
    for b_t in range(t.bit_length()):
        if t >> b_t & 1:
            higher_in_s = bin(s >> (b_t + 1)).count("1")
            if higher_in_s % 2:
                sign = -sign
    return sign


def exterior_super(n: int) -> HopfAlgebraSC:
    """The exterior algebra on n odd primitive generators, over Q.

    Basis indexed by subsets (bitmasks) of {0..n-1}; all generators are odd,
    so the Koszul sign rule is what makes x_i^2 = 0 compatible with
    Delta(x_i) = x_i (x) 1 + 1 (x) x_i.  Parity mode is mandatory: with all
    parities forced even the bialgebra compatibility fails.
    """
    if n < 1:
        raise ValueError("need at least one generator")
    f = FieldSpec.rationals()
    dim = 1 << n
    zero, one = f.zero, f.one

    def subset_name(s: int) -> str:
        if s == 0:
            return "1"
        return "".join(f"x{i}" for i in range(n) if s >> i & 1)

    names = tuple(subset_name(s) for s in range(dim))
    parity = tuple(bin(s).count("1") % 2 for s in range(dim))

    mult = [[zero] * (dim * dim) for _ in range(dim)]
    for s in range(dim):
        for t in range(dim):
            if s & t:
                continue
            mult[s | t][s * dim + t] = f.coerce(_wedge_sign(s, t))

    comult = [[zero] * dim for _ in range(dim * dim)]
    for s in range(dim):
        # Expand the product of (x_i (x) 1 + 1 (x) x_i) over i in s, using the
        # Koszul product (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
        terms: Dict[Tuple[int, int], int] = {(0, 0): 1}
        for i in range(n):
            if not (s >> i & 1):
                continue
            new: Dict[Tuple[int, int], int] = {}
            for (a, b), c in terms.items():
                if not (a & (1 << i)):
                    sign = (-1) ** bin(b).count("1") * _wedge_sign(a, 1 << i)
                    key = (a | (1 << i), b)
                    new[key] = new.get(key, 0) + c * sign
                if not (b & (1 << i)):
                    sign = _wedge_sign(b, 1 << i)
                    key = (a, b | (1 << i))
                    new[key] = new.get(key, 0) + c * sign
            terms = {k: v for k, v in new.items() if v}
        for (a, b), c in terms.items():
            comult[a * dim + b][s] = f.coerce(c)

    antipode = [[zero] * dim for _ in range(dim)]
    for s in range(dim):
        antipode[s][s] = f.coerce((-1) ** (bin(s).count("1")))
    return HopfAlgebraSC(
        field=f,
        dim=dim,
        basis_names=names,
        mult=Matrix(f, dim, dim * dim, tuple(tuple(r) for r in mult)),
        unit=Matrix.column(f, [one] + [zero] * (dim - 1)),
        comult=Matrix(f, dim * dim, dim, tuple(tuple(r) for r in comult)),
        counit=Matrix.row_vector(f, [one] + [zero] * (dim - 1)),
        parity=parity,
        antipode=Matrix(f, dim, dim, tuple(tuple(r) for r in antipode)),
    )


def diagonal_group_algebra(g: FiniteGroup, f: FieldSpec) -> HopfGroupAlgebra:
    """kG spread out as a graded family of lines: H_g = k.g.

    The total Hopf algebra of this family is the plain group algebra, and it
    is the smallest family with nonzero degreewise indecomposables in
    characteristic p.
    """
    one_mat = Matrix.from_rows(f, [[1]])
    components = tuple(
        CoalgebraSC(
            field=f,
            dim=1,
            basis_names=(g.element_names[a],),
            comult=one_mat,
            counit=one_mat,
        )
        for a in g.elements()
    )
    graded_mult = tuple(tuple(one_mat for _ in g.elements()) for _ in g.elements())
    antipodes = tuple(one_mat for _ in g.elements())
    return HopfGroupAlgebra(
        group=g,
        components=components,
        graded_mult=graded_mult,
        unit=one_mat,
        antipodes=antipodes,
    )


def matrix_algebra(n: int, f: FieldSpec) -> AlgebraSC:
    """The full matrix algebra on matrix units: E_ij E_kl = [j=k] E_il."""
    if n < 1:
        raise ValueError("need n >= 1")
    dim = n * n
    zero, one = f.zero, f.one
    names = tuple(f"E{i}{j}" for i in range(n) for j in range(n))
    mult = [[zero] * (dim * dim) for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        mult[i * n + l][(i * n + j) * dim + (k * n + l)] = one
    unit = [one if i == j else zero for i in range(n) for j in range(n)]
    return AlgebraSC(
        field=f,
        dim=dim,
        basis_names=names,
        mult=Matrix(f, dim, dim * dim, tuple(tuple(r) for r in mult)),
        unit=Matrix.column(f, unit),
    )


def trivial_hopf(f: FieldSpec) -> HopfAlgebraSC:
    """The base field as a Hopf algebra."""
    return group_algebra(trivial_group(), f)
