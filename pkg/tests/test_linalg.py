from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopflab.errors import FieldMismatchError, ShapeError
from hopflab.fields import FieldSpec
from hopflab.linalg import (
    Matrix,
    Subspace,
    membership,
    nullspace,
    quotient,
    rank,
    rref,
    solve_particular,
    subspace_intersection,
    subspace_sum,
    swap_map,
    tensor,
)

Q = FieldSpec.rationals()
F2 = FieldSpec.prime(2)
F5 = FieldSpec.prime(5)


def M(field, rows):
    return Matrix.from_rows(field, rows)


class TestRref:
    def test_rank_one_forced(self):
        red, piv = rref(M(Q, [[2, 4], [1, 2]]))
        assert red == M(Q, [[1, 2], [0, 0]])
        assert piv == (0,)

    def test_identity(self):
        red, piv = rref(Matrix.identity(Q, 3))
        assert red == Matrix.identity(Q, 3)
        assert piv == (0, 1, 2)

    def test_mod2_hand_reduction(self):
        # [[1,1],[1,0]] over F2: r2 += r1 gives [[1,1],[0,1]], then clear up.
        red, piv = rref(M(F2, [[1, 1], [1, 0]]))
        assert red == Matrix.identity(F2, 2)
        assert piv == (0, 1)

    def test_fraction_pivots(self):
        red, piv = rref(M(Q, [["1/2", 1], [1, 3]]))
        assert red == Matrix.identity(Q, 2)


class TestNullspace:
    def test_zero_map(self):
        ns = nullspace(Matrix.zeros(Q, 2, 3))
        assert ns == Subspace.full(Q, 3)

    def test_identity(self):
        ns = nullspace(Matrix.identity(Q, 4))
        assert ns.dim == 0

    def test_hand_solve(self):
        ns = nullspace(M(Q, [[1, 1]]))
        assert ns.basis == M(Q, [[1, -1]])

    def test_mod5(self):
        ns = nullspace(M(F5, [[1, 2]]))
        # x = -2y = 3y; canonical basis scales the pivot to 1.
        assert ns.basis == M(F5, [[1, 2]])
        assert ns.contains([3, 1])


@st.composite
def small_matrix(draw):
    field = draw(st.sampled_from([Q, F2, F5]))
    rows = draw(st.integers(1, 4))
    cols = draw(st.integers(1, 4))
    if field.is_rational:
        scalars = st.integers(-6, 6).map(Fraction)
    else:
        scalars = st.integers(0, field.characteristic - 1)
    data = draw(
        st.lists(st.lists(scalars, min_size=cols, max_size=cols), min_size=rows, max_size=rows)
    )
    return Matrix.from_rows(field, data)


class TestProperties:
    @given(small_matrix())
    @settings(max_examples=120, deadline=None)
    def test_rank_nullity(self, m):
        assert rank(m) + nullspace(m).dim == m.cols

    @given(small_matrix())
    @settings(max_examples=60, deadline=None)
    def test_nullspace_annihilated(self, m):
        ns = nullspace(m)
        for row in ns.basis.data:
            assert all(x == 0 for x in m.apply(row))

    @given(small_matrix(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_canonical_equality(self, m, data):
        # Shuffling and rescaling generators must not change the basis.
        space = Subspace.from_vectors(m.field, m.cols, list(m.data))
        perm = data.draw(st.permutations(list(m.data)))
        scaled = []
        for row in perm:
            c = data.draw(st.sampled_from([1, 2, 3]))
            scaled.append([m.field.mul(m.field.coerce(c), x) for x in row])
            scaled.append(row)
        again = Subspace.from_vectors(m.field, m.cols, scaled)
        assert space == again


class TestTensor:
    def test_identities(self):
        assert tensor(Matrix.identity(Q, 2), Matrix.identity(Q, 3)) == Matrix.identity(Q, 6)

    def test_scalars_multiply(self):
        assert tensor(M(Q, [[2]]), M(Q, [[3]])) == M(Q, [[6]])

    def test_strict_associativity(self):
        a = M(Q, [[1, 2], [0, 1]])
        b = M(Q, [[3], [1]])
        c = M(Q, [[1, 1, 0]])
        assert tensor(a, tensor(b, c)) == tensor(tensor(a, b), c)

    def test_functoriality(self):
        a = M(Q, [[1, 2], [3, 4]])
        c = M(Q, [[0, 1], [1, 1]])
        b = M(Q, [[2, 0], [1, 1]])
        d = M(Q, [[1, 1], [0, 2]])
        assert tensor(a @ c, b @ d) == tensor(a, b) @ tensor(c, d)

    def test_field_mismatch(self):
        with pytest.raises(FieldMismatchError):
            tensor(Matrix.identity(Q, 2), Matrix.identity(F2, 2))


class TestSwap:
    def test_trivial(self):
        assert swap_map(Q, 1, 1) == M(Q, [[1]])

    def test_involution(self):
        s = swap_map(Q, 2, 2)
        assert s @ s == Matrix.identity(Q, 4)

    def test_both_odd_gives_sign(self):
        assert swap_map(Q, 1, 1, (1,), (1,)) == M(Q, [[-1]])

    def test_signed_involution(self):
        pa, pb = (0, 1), (1, 1)
        s_ab = swap_map(Q, 2, 2, pa, pb)
        s_ba = swap_map(Q, 2, 2, pb, pa)
        assert s_ba @ s_ab == Matrix.identity(Q, 4)

    def test_rectangular(self):
        s = swap_map(Q, 2, 3)
        t = swap_map(Q, 3, 2)
        assert t @ s == Matrix.identity(Q, 6)

    def test_parity_length_checked(self):
        with pytest.raises(ShapeError):
            swap_map(Q, 2, 2, (0,), None)


class TestSubspaceOps:
    def test_sum(self):
        e1 = Subspace.from_vectors(Q, 3, [[1, 0, 0]])
        e2 = Subspace.from_vectors(Q, 3, [[0, 1, 0]])
        assert subspace_sum(e1, e2) == Subspace.from_vectors(Q, 3, [[1, 0, 0], [0, 1, 0]])

    def test_intersection_trivial(self):
        diag = Subspace.from_vectors(Q, 2, [[1, 1]])
        e1 = Subspace.from_vectors(Q, 2, [[1, 0]])
        assert subspace_intersection(diag, e1).dim == 0

    def test_intersection_nontrivial(self):
        a = Subspace.from_vectors(Q, 3, [[1, 0, 0], [0, 1, 0]])
        b = Subspace.from_vectors(Q, 3, [[0, 1, 0], [0, 0, 1]])
        assert subspace_intersection(a, b) == Subspace.from_vectors(Q, 3, [[0, 1, 0]])

    def test_membership(self):
        s = Subspace.from_vectors(Q, 3, [[1, 0, 0], [0, 1, 0]])
        assert membership(s, [1, 1, 0])
        assert not membership(s, [0, 0, 1])

    def test_coordinates(self):
        s = Subspace.from_vectors(Q, 3, [[1, 0, 2], [0, 1, 1]])
        assert s.coordinates_of([2, 3, 7]) == (Fraction(2), Fraction(3))
        with pytest.raises(ValueError):
            s.coordinates_of([0, 0, 1])

    def test_dimension_mismatch(self):
        with pytest.raises(ShapeError):
            subspace_sum(Subspace.zero(Q, 2), Subspace.zero(Q, 3))


class TestQuotient:
    def test_picks_second_coordinate(self):
        q = quotient(2, Subspace.from_vectors(Q, 2, [[1, 0]]))
        assert q.projection == M(Q, [[0, 1]])
        assert q.dim == 1

    def test_zero_subspace(self):
        q = quotient(3, Subspace.zero(Q, 3))
        assert q.projection == Matrix.identity(Q, 3)
        assert q.section == Matrix.identity(Q, 3)

    def test_diagonal_line(self):
        q = quotient(2, Subspace.from_vectors(Q, 2, [[1, 1]]))
        assert q.projection == M(Q, [[-1, 1]])
        assert q.projection @ q.section == Matrix.identity(Q, 1)

    @given(small_matrix())
    @settings(max_examples=60, deadline=None)
    def test_projection_section_laws(self, m):
        s = Subspace.from_vectors(m.field, m.cols, list(m.data))
        q = quotient(m.cols, s)
        assert q.projection @ q.section == Matrix.identity(m.field, q.dim)
        # nullspace of the projection is exactly the subspace
        assert nullspace(q.projection) == s
        # section . projection - id has image inside the subspace
        defect = q.section @ q.projection - Matrix.identity(m.field, m.cols)
        for j in range(m.cols):
            assert s.contains(defect.col(j))


class TestSolve:
    def test_particular_solution_is_canonical(self):
        a = M(Q, [[1, 1, 0]])
        assert solve_particular(a, [5]) == (Fraction(5), Fraction(0), Fraction(0))

    def test_inconsistent(self):
        a = M(Q, [[1, 0], [1, 0]])
        assert solve_particular(a, [1, 2]) is None
