from fractions import Fraction

import pytest

import oracle
from contour_duo.model import SystemParams
from contour_duo.theory import (
    PredictedRegime,
    collapse_possible,
    free_movement_possible,
    lemma2_states,
    predict,
    spectrum_grid,
)


class TestPredict:
    def test_free_region(self):
        p = predict(SystemParams(10, 5, 3, 7))
        assert p.regime is PredictedRegime.FREE
        assert p.v == 1
        assert p.period is None

    def test_cluster_region(self):
        p = predict(SystemParams(10, 3, 4, 7))
        assert p.regime is PredictedRegime.CLUSTER
        assert p.period == 11
        assert p.v == Fraction(10, 11)

    def test_collapse_region(self):
        p = predict(SystemParams(10, 3, 8, 9))
        assert p.regime is PredictedRegime.COLLAPSE
        assert p.v == 0

    def test_velocity_reduced(self):
        p = predict(SystemParams(10, 3, 4, 8))
        assert (p.v.numerator, p.v.denominator) == (5, 6)
        assert p.period == 12  # period stays l1+l2 even when v reduces

    def test_partition_and_symmetry_exhaustive(self):
        for n, d, l1, l2 in oracle.param_space(2, 12):
            p = predict(SystemParams(n, d, l1, l2))
            q = predict(SystemParams(n, d, l2, l1))
            assert p == q
            if l1 + l2 <= n:
                assert p.regime is PredictedRegime.FREE
            elif min(l1, l2) > n - d:
                assert p.regime is PredictedRegime.COLLAPSE
            else:
                assert p.regime is PredictedRegime.CLUSTER
                # spectrum: n < l1+l2 <= 2n-2 puts v strictly inside (1/2, 1)
                assert Fraction(1, 2) < p.v < 1

    def test_regions_disjoint(self):
        # min > n-d together with 2d <= n forces l1+l2 > n
        for n, d, l1, l2 in oracle.param_space(2, 12):
            assert not (l1 + l2 <= n and min(l1, l2) > n - d)


class TestRegimePredicates:
    @pytest.mark.parametrize(
        "n,d,l1,l2,expected",
        [(10, 5, 3, 7, True), (10, 5, 4, 7, False), (2, 1, 1, 1, True)],
    )
    def test_free_movement_possible(self, n, d, l1, l2, expected):
        assert free_movement_possible(SystemParams(n, d, l1, l2)) is expected

    @pytest.mark.parametrize(
        "n,d,l1,l2,expected",
        [(10, 3, 8, 9, True), (10, 3, 4, 7, False), (4, 2, 3, 3, True)],
    )
    def test_collapse_possible(self, n, d, l1, l2, expected):
        assert collapse_possible(SystemParams(n, d, l1, l2)) is expected


class TestLemma2States:
    @pytest.mark.parametrize(
        "n,d,l1,l2,expected",
        [
            (10, 3, 4, 7, [(4, 0), (0, 7), (7, 3), (3, 0)]),
            (7, 2, 2, 6, [(2, 0), (0, 6), (4, 2), (2, 1)]),
            (4, 2, 1, 1, [(1, 0), (0, 1), (3, 2), (2, 3)]),
        ],
    )
    def test_examples(self, n, d, l1, l2, expected):
        got = lemma2_states(SystemParams(n, d, l1, l2))
        assert [tuple(s) for s in got] == expected


class TestSpectrumGrid:
    def test_cells_match_predict(self):
        grid = spectrum_grid(20, 5)
        assert grid[(10, 10)].regime is PredictedRegime.FREE
        assert grid[(16, 16)].regime is PredictedRegime.COLLAPSE
        cell = grid[(6, 15)]
        assert cell.regime is PredictedRegime.CLUSTER
        assert cell.v == Fraction(20, 21)
        assert len(grid.cells) == 19 * 19
        for (l1, l2), cell in grid.cells.items():
            assert cell == predict(SystemParams(20, 5, l1, l2))

    def test_swap_symmetric(self):
        grid = spectrum_grid(12, 3)
        for (l1, l2), cell in grid.cells.items():
            assert cell == grid[(l2, l1)]

    def test_invalid_geometry(self):
        with pytest.raises(ValueError):
            spectrum_grid(10, 6)
        with pytest.raises(ValueError):
            spectrum_grid(1, 1)
