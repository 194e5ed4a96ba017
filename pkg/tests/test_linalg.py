"""Exact linear algebra: frozen worked examples plus lattice-law properties.

Expected matrices and bases for the 4x4 corpus projectors were derived by
hand Gaussian elimination and are frozen here; the randomized loops check
the subspace lattice laws on small dimensions.
"""

from fractions import Fraction
from random import Random

import pytest

from kscontext import (Matrix, Projector, Subspace, Vector, column_space,
                       complement, contains, is_orthogonal, join, meet,
                       member, null_space, orthocomplement,
                       projector_from_span, rref)

from _gen import random_subspace, random_vector

H = Fraction(1, 2)
Q = Fraction(1, 4)

P1_1 = Matrix([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1]])
P1_2 = Matrix([[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
P1_3 = Matrix([[H, 0, H, 0], [0, 0, 0, 0], [H, 0, H, 0], [0, 0, 0, 0]])
P1_4 = Matrix([[H, 0, -H, 0], [0, 0, 0, 0], [-H, 0, H, 0], [0, 0, 0, 0]])
P6_1 = Matrix([[Q, -Q, -Q, Q], [-Q, Q, Q, -Q], [-Q, Q, Q, -Q], [Q, -Q, -Q, Q]])
P6_2 = Matrix([[Q] * 4] * 4)
P6_3 = Matrix([[H, 0, 0, -H], [0, 0, 0, 0], [0, 0, 0, 0], [-H, 0, 0, H]])
P6_4 = Matrix([[0, 0, 0, 0], [0, H, -H, 0], [0, -H, H, 0], [0, 0, 0, 0]])


def span(*rows):
    return Subspace.from_span([Vector(r) for r in rows], dim_ambient=4)


class TestRref:
    def test_identity_already_canonical(self):
        assert rref(Matrix.identity(4)) == Matrix.identity(4)

    def test_zero(self):
        assert rref(Matrix.zero(4)) == Matrix.zero(4)

    def test_rank_one_projector_matrix(self):
        # hand elimination: normalize row 1, clear row 3, zero rows sink
        expected = Matrix([[1, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
        assert rref(P1_3) == expected

    def test_idempotent(self):
        m = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        assert rref(rref(m)) == rref(m)


class TestColumnAndNullSpace:
    def test_column_space_of_rank_one(self):
        assert column_space(P1_1) == span((0, 0, 0, 1))
        assert column_space(P6_2) == span((1, 1, 1, 1))

    def test_column_space_of_zero(self):
        assert column_space(Matrix.zero(4)).rank == 0

    def test_null_space_is_three_dimensional(self):
        # all (-c, b, c, d): canonical basis rows below
        assert null_space(P1_3) == span((1, 0, -1, 0), (0, 1, 0, 0), (0, 0, 0, 1))
        # all (b, c, c, d)
        assert null_space(P6_4) == span((1, 0, 0, 0), (0, 1, 1, 0), (0, 0, 0, 1))

    def test_null_space_of_identity(self):
        assert null_space(Matrix.identity(4)).is_zero()

    def test_null_space_equals_complement_column_space(self):
        for m in (P1_1, P1_3, P6_1, P6_3):
            p = Projector(m)
            assert null_space(m) == column_space(complement(p).matrix)


class TestProjectorFromSpan:
    @pytest.mark.parametrize("ray,expected", [
        ((0, 0, 0, 1), P1_1),
        ((1, 0, 1, 0), P1_3),
        ((1, -1, -1, 1), P6_1),
    ])
    def test_rank_one_matches_worked_matrices(self, ray, expected):
        assert projector_from_span([Vector(ray)]).matrix == expected

    def test_dependent_span_reduced_not_rejected(self):
        p = projector_from_span([Vector((1, 0, 1, 0)), Vector((2, 0, 2, 0))])
        assert p.matrix == P1_3
        assert p.rank == 1

    def test_higher_rank(self):
        p = projector_from_span([Vector((0, 0, 0, 1)), Vector((0, 1, 0, 0))])
        assert p.rank == 2
        assert p.matrix == Matrix([[0, 0, 0, 0], [0, 1, 0, 0],
                                   [0, 0, 0, 0], [0, 0, 0, 1]])

    def test_mixed_dimension_rejected(self):
        with pytest.raises(ValueError):
            projector_from_span([Vector((1, 0)), Vector((1, 0, 0))])

    def test_non_orthonormal_spanners(self):
        p = projector_from_span([Vector((1, 1, 0, 0)), Vector((1, 2, 0, 0))])
        assert p.rank == 2
        assert p.matrix == Matrix([[1, 0, 0, 0], [0, 1, 0, 0],
                                   [0, 0, 0, 0], [0, 0, 0, 0]])


class TestComplement:
    def test_rank_one(self):
        assert complement(Projector(P1_1)).matrix == Matrix(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]])

    def test_zero(self):
        assert complement(Projector.zero(4)).matrix == Matrix.identity(4)

    def test_subtracted_by_hand(self):
        expected = Matrix([[H, 0, 0, H], [0, 1, 0, 0], [0, 0, 1, 0], [H, 0, 0, H]])
        assert complement(Projector(P6_3)).matrix == expected

    def test_involution_and_resolution(self):
        p = Projector(P6_1, label="p")
        assert complement(complement(p)) == p
        assert p.matrix + complement(p).matrix == Matrix.identity(4)


class TestMeetJoinOrthocomplement:
    def test_meets_with_first_context_ray(self):
        a = column_space(P1_1)
        for m in (P6_1, P6_2, P6_3, P6_4):
            assert meet(a, column_space(m)).is_zero()

    def test_meet_with_complement_ranges(self):
        a = column_space(P1_1)
        for m in (P6_1, P6_2, P6_3):
            assert meet(a, null_space(m)).is_zero()
        inter = meet(a, null_space(P6_4))
        assert inter == a
        assert contains(null_space(P6_4), a)

    def test_meet_idempotent(self):
        s = span((1, 2, 3, 4), (0, 1, 0, 1))
        assert meet(s, s) == s

    def test_join_of_orthogonal_lines(self):
        assert join(column_space(P1_1), column_space(P1_2)) == \
            span((0, 1, 0, 0), (0, 0, 0, 1))

    def test_join_with_zero_is_identity_element(self):
        s = span((1, 2, 3, 4))
        assert join(s, Subspace.zero(4)) == s

    def test_resolution_joins_to_full_space(self):
        total = Subspace.zero(4)
        for m in (P1_1, P1_2, P1_3, P1_4):
            total = join(total, column_space(m))
        assert total.is_full()

    def test_orthocomplement_of_line(self):
        assert orthocomplement(span((0, 0, 0, 1))) == \
            span((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0))
        assert orthocomplement(span((1, 0, 0, -1))) == \
            span((1, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0))

    def test_orthocomplement_of_full_space(self):
        assert orthocomplement(Subspace.full(4)).is_zero()

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            meet(span((1, 0, 0, 0)), Subspace.full(3))


class TestMembership:
    def test_state_in_range(self):
        assert member(Vector((0, 0, 0, 1)), column_space(P1_1))
        assert not member(Vector((0, 0, 0, 1)), column_space(P6_1))

    def test_contains_zero(self):
        assert contains(span((1, 2, 0, 0)), Subspace.zero(4))

    def test_scaling_irrelevant(self):
        assert member(Vector((0, 0, 0, 7)), column_space(P1_1))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            member(Vector((1, 0)), column_space(P1_1))


class TestOrthogonality:
    def test_same_context_pairs(self):
        assert is_orthogonal(Projector(P1_1), Projector(P1_2))

    def test_cross_context_pair_fails(self):
        # e4 is not in the kernel of the (1,0,0,-1) projector
        assert not is_orthogonal(Projector(P1_1), Projector(P6_3))

    def test_zero_orthogonal_to_all(self):
        assert is_orthogonal(Projector(P6_1), Projector.zero(4))


class TestProjectorValidation:
    def test_not_idempotent(self):
        with pytest.raises(ValueError):
            Projector(Matrix([[1, 0], [0, 2]]))

    def test_not_symmetric(self):
        with pytest.raises(ValueError):
            Projector(Matrix([[1, 1], [0, 0]]))

    def test_not_square(self):
        with pytest.raises(ValueError):
            Projector(Matrix([[1, 0, 0], [0, 1, 0]]))


class TestLatticeLaws:
    """Randomized lattice-law checks; the full 1000-case battery is in the
    acceptance suite, this is the fast smoke version."""

    def test_laws_on_random_subspaces(self):
        rng = Random(20260810)
        for _ in range(150):
            d = rng.randint(1, 5)
            a, b, c = (random_subspace(rng, d) for _ in range(3))
            assert meet(a, b) == meet(b, a)
            assert join(a, b) == join(b, a)
            assert meet(a, meet(b, c)) == meet(meet(a, b), c)
            assert join(a, join(b, c)) == join(join(a, b), c)
            assert join(a, meet(a, b)) == a
            assert meet(a, join(a, b)) == a
            assert orthocomplement(orthocomplement(a)) == a
            assert meet(a, orthocomplement(a)).is_zero()
            assert join(a, orthocomplement(a)).is_full()
            assert join(a, b) == orthocomplement(
                meet(orthocomplement(a), orthocomplement(b)))
            assert meet(a, b).rank + join(a, b).rank <= a.rank + b.rank

    def test_commuting_product_formula(self):
        # diagonal 0/1 projectors commute; the product formula must agree
        rng = Random(4242)
        for _ in range(100):
            d = rng.randint(2, 5)
            pa = Projector(Matrix([[1 if (i == j and rng.random() < 0.5) else 0
                                    for j in range(d)] for i in range(d)]))
            pb = Projector(Matrix([[1 if (i == j and rng.random() < 0.5) else 0
                                    for j in range(d)] for i in range(d)]))
            assert pa.matrix @ pb.matrix == pb.matrix @ pa.matrix
            assert meet(pa.range, pb.range) == column_space(pa.matrix @ pb.matrix)

    def test_member_stable_under_double_complement(self):
        rng = Random(99)
        for _ in range(60):
            d = rng.randint(1, 4)
            s = random_subspace(rng, d)
            v = random_vector(rng, d, nonzero=False)
            assert member(v, s) == member(v, orthocomplement(orthocomplement(s)))
