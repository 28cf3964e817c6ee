import pytest

from flatmodels.core.errors import ValidationError
from flatmodels.counting.census import (
    CaseTag,
    PartitionSizes,
    census,
    census_count,
    closed_form_partition_sizes,
    h_histogram,
    h_st,
    max_h,
    partition_sizes,
    partition_table,
    r_st,
    valuation_threshold,
)
from flatmodels.counting.formula import coefficient_table, model_count, moduli_dimension
from flatmodels.counting.inputs import ModelCount, decompose_e, decompose_n

PRIMES = [3, 5, 7, 11, 13]
SWEEP = [(p, e) for p in PRIMES for e in range(1, 41)]


class TestCells:
    def test_r_examples(self):
        for p, e in [(3, 1), (5, 4), (7, 30)]:
            assert r_st(decompose_e(p, e), 0, 0) == 0
        assert r_st(decompose_e(5, 7), 1, 1) == 0
        assert r_st(decompose_e(3, 4), 1, 2) == 0

    def test_h_examples(self):
        inp = decompose_e(5, 7)
        cell = h_st(inp, 0, 1)
        assert (cell.case_tag, cell.h) == (CaseTag.LOW_LT, 1)
        cell = h_st(inp, 1, 1)
        assert (cell.case_tag, cell.h) == (CaseTag.HIGH_GE, 0)
        cell = h_st(inp, 1, 0)
        assert (cell.case_tag, cell.h) == (CaseTag.LOW_GE, 0)

    def test_threshold(self):
        inp = decompose_e(5, 7)
        assert valuation_threshold(inp, 0, 0) == 0
        assert valuation_threshold(inp, 1, 1) == 1

    def test_cell_outside_range(self):
        with pytest.raises(ValidationError):
            r_st(decompose_e(5, 7), 2, 0)
        with pytest.raises(ValidationError):
            h_st(decompose_e(5, 7), 0, -1)

    def test_census_examples(self):
        cells = census(decompose_e(5, 7))
        assert [(c.s, c.t) for c in cells] == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert sorted(c.h for c in cells) == [0, 0, 0, 1]

        cells = census(decompose_e(5, 2))
        assert len(cells) == 1 and cells[0].h == 0

        assert h_histogram(decompose_e(3, 2))[:2] == [3, 1]

    def test_census_count_examples(self):
        assert census_count(decompose_e(5, 4), 5) == ModelCount(8)
        assert census_count(decompose_e(5, 7), 5).value == 8
        assert census_count(decompose_e(5, 7), 25).value == 28

    def test_row_shape(self):
        assert h_st(decompose_e(5, 7), 0, 1).as_row() == [0, 1, "LOW_LT", 0, 1]


class TestPartitions:
    def test_examples(self):
        inp = decompose_e(5, 7)
        assert partition_sizes(inp, 0) == PartitionSizes(0, 2, 0, 1, 0)
        assert partition_sizes(inp, 1) == PartitionSizes(1, 0, 1, 0, 0)
        assert partition_sizes(inp, 12).total == 0

    def test_negative_weight(self):
        with pytest.raises(ValidationError):
            partition_sizes(decompose_e(5, 7), -1)

    def test_closed_form_small_case(self):
        inp = decompose_e(3, 4)
        sizes = [closed_form_partition_sizes(inp, n) for n in range(3)]
        assert [s.total for s in sizes] == [6, 3, 0]


@pytest.mark.parametrize("p", PRIMES)
def test_formula_equals_histogram(p):
    for e in range(1, 41):
        inp = decompose_e(p, e)
        assert list(coefficient_table(inp).c) == h_histogram(inp), inp
        assert census_count(inp, p) == model_count(inp, p)
        assert census_count(inp, p * p) == model_count(inp, p * p)


@pytest.mark.parametrize("p", PRIMES)
def test_partition_identities(p):
    for e in range(1, 41):
        inp = decompose_e(p, e)
        table = coefficient_table(inp)
        for sizes in partition_table(inp):
            n = sizes.n
            assert sizes.unprimed == table.a[n], (inp, n)
            assert sizes.primed == table.a_prime[n], (inp, n)
            assert closed_form_partition_sizes(inp, n) == sizes, (inp, n)
            w = decompose_n(inp, n)
            if w.n_1 != 1:
                assert sizes.s_n2 == 0
            if w.n_1p != 1:
                assert sizes.s_n2p == 0


@pytest.mark.parametrize("p,e", SWEEP[::7])
def test_region_split_matches_threshold(p, e):
    inp = decompose_e(p, e)
    for cell in census(inp):
        assert cell.case_tag.is_low == (cell.s + cell.t <= inp.e_0)
        assert cell.case_tag.is_low == (valuation_threshold(inp, cell.s, cell.t) == 0)
        assert cell.h == cell.r + (0 if cell.case_tag.reaches_threshold else 1)


def test_dimension_is_largest_cell_weight():
    for p, e in SWEEP:
        inp = decompose_e(p, e)
        assert moduli_dimension(inp) == max_h(inp)
