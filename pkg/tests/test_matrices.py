"""
Tests for graded matrix blocks and sparse graded matrices.
"""

import random

import pytest

from lpa_graded.grading.matrices import (
    AnchorKind,
    BaseKind,
    GradedMatrix,
    MatrixBlock,
    entry_degree,
    random_block,
    random_homogeneous_matrix,
)
from lpa_graded.utils.errors import GradingError


@pytest.fixture
def laurent_block():
    return MatrixBlock(BaseKind.LAURENT, 1, (0, 1, 2), AnchorKind.CYCLE, "v13", anchor_cycle=("c",))


@pytest.fixture
def field_block():
    return MatrixBlock(BaseKind.FIELD, 1, (0, 1, 1), AnchorKind.SINK, "w")


class TestMatrixBlock:
    """Text and JSON forms of a block."""

    def test_describe(self, laurent_block, field_block):
        assert laurent_block.describe() == "M_3(K[x,x^-1])(0,1,2)"
        assert field_block.describe() == "M_3(K)(0,1,1)"
        assert laurent_block.size == 3

    def test_period_ring(self):
        block = MatrixBlock(BaseKind.LAURENT, 4, (0, 1), AnchorKind.CYCLE, "c1", anchor_cycle=("a", "b", "c", "d"))
        assert block.ring() == "K[x^4,x^-4]"

    def test_infinite_block(self):
        block = MatrixBlock(BaseKind.FIELD, 1, (0, 1, 1), AnchorKind.SINK, "w", infinite=True, bound=2)
        assert block.size is None
        assert block.describe() == "M_inf(K)(0,1,1,...; bound 2)"
        assert block.to_dict()["index"] == {"kind": "infinite", "sample": [0, 1, 1], "bound": 2}

    def test_to_dict(self, laurent_block, field_block):
        assert laurent_block.to_dict() == {
            "base": {"kind": "laurent", "period": 1},
            "index": {"kind": "finite", "gradings": [0, 1, 2]},
            "anchor": {"kind": "cycle", "vertex": "v13", "cycle": ["c"]},
        }
        assert field_block.to_dict()["base"] == {"kind": "field"}
        assert field_block.to_dict()["anchor"] == {"kind": "sink", "vertex": "w"}


class TestEntryDegree:
    """deg e_ij(x^k) = k + δ_i - δ_j."""

    def test_laurent(self, laurent_block):
        assert entry_degree(laurent_block, 1, 3, 0) == -2
        assert entry_degree(laurent_block, 3, 1, -1) == 1
        assert entry_degree(laurent_block, 2, 2, 5) == 5

    def test_field(self, field_block):
        assert entry_degree(field_block, 2, 1, 0) == 1
        with pytest.raises(GradingError, match="only constant entries"):
            entry_degree(field_block, 1, 1, 1)

    def test_period(self):
        block = MatrixBlock(BaseKind.LAURENT, 4, (0, 1), AnchorKind.CYCLE, "c1", anchor_cycle=("a", "b", "c", "d"))
        assert entry_degree(block, 1, 2, 8) == 7
        with pytest.raises(GradingError, match="not a multiple of the period 4"):
            entry_degree(block, 1, 2, 2)

    def test_index_range(self, laurent_block):
        with pytest.raises(GradingError, match="out of range 1..3"):
            entry_degree(laurent_block, 0, 1, 0)
        with pytest.raises(GradingError):
            entry_degree(laurent_block, 1, 4, 0)


class TestGradedMatrix:
    """Matrix units multiply like e_ij e_kl = δ_jk e_il with exponents adding."""

    def test_unit_products(self, laurent_block):
        e12 = GradedMatrix.unit(laurent_block, 0, 1, 1)
        e23 = GradedMatrix.unit(laurent_block, 1, 2, -3)
        assert e12 @ e23 == GradedMatrix.unit(laurent_block, 0, 2, -2)
        assert (e12 @ e12).is_zero()

    def test_addition_cancels(self, laurent_block):
        e = GradedMatrix.unit(laurent_block, 0, 0, 2)
        assert (e + e.scaled(-1)).is_zero()
        assert e + e == GradedMatrix.unit(laurent_block, 0, 0, 2, coef=2)

    def test_repr(self, laurent_block):
        assert repr(GradedMatrix.unit(laurent_block, 0, 0)) == "GradedMatrix(1*e11(x^0))"
        assert repr(GradedMatrix.for_block(laurent_block)) == "GradedMatrix(0)"

    def test_homogeneous_degree(self, laurent_block):
        gradings = laurent_block.gradings
        unit = GradedMatrix.unit(laurent_block, 2, 0, 1)
        assert unit.homogeneous_degree(gradings) == 3
        mixed = unit + GradedMatrix.unit(laurent_block, 0, 0, 0)
        assert mixed.homogeneous_degree(gradings) is None

    def test_field_rejects_exponents(self, field_block):
        with pytest.raises(GradingError):
            GradedMatrix.unit(field_block, 0, 0, 1)

    def test_out_of_range(self, field_block):
        with pytest.raises(GradingError, match="out of range"):
            GradedMatrix.unit(field_block, 3, 0)

    def test_incompatible(self, laurent_block, field_block):
        with pytest.raises(GradingError, match="different graded algebras"):
            GradedMatrix.unit(laurent_block, 0, 0) + GradedMatrix.unit(field_block, 0, 0)


class TestDegreeAdditivity:
    """Products of homogeneous matrices are homogeneous of the summed degree."""

    @pytest.mark.parametrize("base", [BaseKind.FIELD, BaseKind.LAURENT])
    def test_random_products(self, base):
        rng = random.Random(2024)
        checked = 0
        while checked < 200:
            block = random_block(rng)
            if block.base is not base:
                continue
            a, deg_a = random_homogeneous_matrix(block, rng)
            b, deg_b = random_homogeneous_matrix(block, rng)
            assert a.homogeneous_degree(block.gradings) == deg_a
            assert b.homogeneous_degree(block.gradings) == deg_b
            product = a @ b
            if not product.is_zero():
                assert product.degrees(block.gradings) == {deg_a + deg_b}
            checked += 1

    def test_generated_entries_respect_the_base(self):
        rng = random.Random(5)
        block = MatrixBlock(BaseKind.LAURENT, 3, (0, 1, 2), AnchorKind.CYCLE, "c1", anchor_cycle=("a", "b", "c"))
        for _ in range(50):
            matrix, _ = random_homogeneous_matrix(block, rng)
            assert all(exponent % 3 == 0 for poly in matrix.entries.values() for exponent in poly)
