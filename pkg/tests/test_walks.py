import random

import pytest

from trisect.errors import NotGood
from trisect.homology import CutSystem, SymplecticSpace, Type0Move, pairing
from trisect.walks import (check_entry_bounds, random_matched_pair,
                           random_moves, run_entry_bound_trials,
                           verify_row_stability, walk_trace)


@pytest.fixture
def matched_genus2():
    space = SymplecticSpace(2)
    start = CutSystem.from_classes([space.a(0), space.a(1)])
    reference = CutSystem.from_classes([space.b(0), space.b(1)])
    return start, reference


class TestWalkTrace:
    def test_empty_walk_has_matched_matrix(self, matched_genus2):
        start, reference = matched_genus2
        trace = walk_trace(start, reference, [])
        assert trace.matrices == (((1, 0), (0, 1)),)
        assert check_entry_bounds(trace)

    def test_single_move_row_update(self, matched_genus2):
        start, reference = matched_genus2
        trace = walk_trace(start, reference, [Type0Move(1, (1, 1))])
        assert trace.matrices[1] == ((1, 0), (1, 1))
        assert check_entry_bounds(trace)

    def test_last_touch_semantics(self, matched_genus2):
        start, reference = matched_genus2
        moves = [Type0Move(1, (1, 1)), Type0Move(0, (1, 1)),
                 Type0Move(1, (1, 1))]
        trace = walk_trace(start, reference, moves)
        assert trace.rho[0] == (0, 0)
        assert trace.rho[3] == (2, 3)

    def test_negative_unit_is_orientation_flip(self, matched_genus2):
        start, reference = matched_genus2
        plus = walk_trace(start, reference, [Type0Move(1, (1, 1))])
        minus = walk_trace(start, reference, [Type0Move(1, (-1, -1))])
        assert plus.matrices == minus.matrices

    def test_matrices_agree_with_direct_pairings(self, matched_genus2):
        start, reference = matched_genus2
        rng = random.Random(4)
        trace = walk_trace(start, reference, random_moves(2, 6, rng))
        for rows, system in zip(trace.matrices, trace.systems):
            direct = tuple(tuple(pairing(c, r) for r in reference.classes)
                           for c in system.classes)
            assert rows == direct

    def test_unnormalized_pair_rejected(self, matched_genus2):
        start, reference = matched_genus2
        with pytest.raises(NotGood):
            walk_trace(reference, start, [])    # pairings are -1

    def test_doubled_column_rejected(self):
        space = SymplecticSpace(2)
        start = CutSystem.from_classes([space.a(0), space.a(1)])
        bad_ref = CutSystem.from_classes(
            [space.b(0), space.b(0) + space.b(1)])
        with pytest.raises(NotGood):
            walk_trace(start, bad_ref, [])


class TestEntryBounds:
    def test_row_stability_everywhere(self):
        rng = random.Random(12)
        for _ in range(100):
            g = rng.randint(1, 5)
            start, reference = random_matched_pair(g, rng)
            trace = walk_trace(start, reference,
                               random_moves(g, rng.randint(0, 8), rng))
            assert verify_row_stability(trace)
            assert check_entry_bounds(trace)

    def test_untouched_rows_stay_matched(self):
        rng = random.Random(31)
        for _ in range(100):
            g = rng.randint(2, 5)
            start, reference = random_matched_pair(g, rng)
            trace = walk_trace(start, reference,
                               random_moves(g, rng.randint(0, 6), rng))
            final = trace.matrices[-1]
            for i in range(g):
                if trace.rho[-1][i] == 0:
                    hot = [v for v in final[i] if v]
                    assert len(hot) <= 1 and all(v == 1 for v in hot)

    def test_bound_detects_forged_trace(self, matched_genus2):
        start, reference = matched_genus2
        trace = walk_trace(start, reference, [Type0Move(1, (1, 1))])
        forged = trace.__class__(
            genus=trace.genus,
            matrices=(trace.matrices[0], ((1, 0), (5, 1))),
            rho=trace.rho, move_indices=trace.move_indices,
            systems=trace.systems)
        assert not check_entry_bounds(forged)


class TestHarness:
    def test_seeded_reproducibility(self):
        first = run_entry_bound_trials(4, 6, 200, seed=7)
        second = run_entry_bound_trials(4, 6, 200, seed=7)
        assert first == second

    def test_different_seed_changes_nothing_observable(self):
        summary = run_entry_bound_trials(4, 6, 200, seed=8)
        assert summary["failed"] == 0 and summary["passed"] == 200
