"""Test dominance ranking and hypervolume selection"""

import numpy as np

from qbench.solvers.ranking import (
    binary_tournament,
    boundary_mask,
    crowding_distance,
    dominance_matrix,
    fast_nondominated_sort,
    hypervolume_order,
    nondominated_ranks,
    reduce_by_contribution,
    selection_reference,
)

VALUES = np.array(
    [
        [1.0, 4.0],
        [2.0, 2.0],
        [4.0, 1.0],
        [3.0, 3.0],
        [5.0, 5.0],
    ]
)


class TestSorting:
    """Tests for nondominated sorting"""

    def test_dominance_matrix(self) -> None:
        dom = dominance_matrix(VALUES)
        assert dom[1, 3] and dom[3, 4]
        assert not dom[0, 1] and not dom[1, 0]
        assert not dom.diagonal().any()

    def test_fronts(self) -> None:
        fronts = fast_nondominated_sort(VALUES)
        assert [front.tolist() for front in fronts] == [[0, 1, 2], [3], [4]]
        assert nondominated_ranks(VALUES).tolist() == [0, 0, 0, 1, 2]

    def test_identical_points_share_a_front(self) -> None:
        fronts = fast_nondominated_sort(np.array([[1.0, 1.0], [1.0, 1.0]]))
        assert [front.tolist() for front in fronts] == [[0, 1]]


class TestCrowding:
    """Tests for crowding distance and tournaments"""

    def test_boundary_points_infinite(self) -> None:
        distance = crowding_distance(VALUES[:3])
        assert np.isinf(distance[0]) and np.isinf(distance[2])
        assert distance[1] == (4.0 - 1.0) / 3.0 + (4.0 - 1.0) / 3.0

    def test_small_fronts(self) -> None:
        assert np.all(np.isinf(crowding_distance(VALUES[:2])))

    def test_tournament_prefers_lower_rank(self) -> None:
        ranks = np.array([0, 1])
        crowding = np.array([0.0, 10.0])
        winners = binary_tournament(ranks, crowding, 200, np.random.default_rng(0))
        # index 1 can only win against itself
        pairs_with_zero = winners == 0
        assert pairs_with_zero.mean() > 0.6


class TestHypervolumeSelection:
    """Tests for hypervolume-based ordering and reduction"""

    def test_reference(self) -> None:
        np.testing.assert_array_equal(selection_reference(VALUES), [6.0, 6.0])

    def test_order_by_rank_then_contribution(self) -> None:
        order = hypervolume_order(VALUES)
        assert order[-2:].tolist() == [3, 4]
        assert sorted(order[:3].tolist()) == [0, 1, 2]

    def test_reduce_keeps_whole_fronts(self) -> None:
        keep = reduce_by_contribution(VALUES, 4)
        assert sorted(keep.tolist()) == [0, 1, 2, 3]

    def test_reduce_drops_least_contributor(self) -> None:
        front = np.array([[0.0, 3.0], [1.0, 2.9], [2.0, 1.0], [3.0, 0.0]])
        keep = reduce_by_contribution(front, 3, np.array([4.0, 4.0]))
        assert sorted(keep.tolist()) == [0, 2, 3]

    def test_boundary_mask_marks_both_extremes(self) -> None:
        front = np.array([[0.0, 3.0], [1.0, 2.9], [2.0, 1.0], [3.0, 0.0]])
        assert boundary_mask(front).tolist() == [True, False, False, True]
        assert boundary_mask(front[:1]).tolist() == [True]
        assert boundary_mask(np.empty((0, 2))).tolist() == []

    def test_extremes_survive_a_small_raw_contribution(self) -> None:
        """f2 spans eight orders of magnitude more than f1, so the f1-extreme box is tiny"""
        front = np.array([[0.0, 1e8], [1.0, 5e7], [2.0, 1e7], [1000.0, 0.0]])
        keep = reduce_by_contribution(front, 3)
        assert sorted(keep.tolist()) == [0, 2, 3]
        keep = reduce_by_contribution(front, 2)
        assert sorted(keep.tolist()) == [0, 3]

    def test_survivors_do_not_depend_on_objective_scale(self) -> None:
        t = np.sort(np.random.default_rng(3).uniform(0.0, 1.0, 30))
        front = np.column_stack((t**2, (1 - t) ** 2))
        scaled = front * np.array([1.0, 2.0**20])
        for keep in (3, 10, 20):
            np.testing.assert_array_equal(
                np.sort(reduce_by_contribution(front, keep)),
                np.sort(reduce_by_contribution(scaled, keep)),
            )

    def test_order_lists_extremes_first_within_a_front(self) -> None:
        front = np.array([[0.0, 1e8], [1.0, 5e7], [2.0, 1e7], [1000.0, 0.0]])
        order = hypervolume_order(front)
        assert sorted(order[:2].tolist()) == [0, 3]
