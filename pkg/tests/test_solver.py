import random

import pytest

from luminous.board import Config, GridDims, PressVector, apply_presses
from luminous.errors import DomainError
from luminous.solver import (
    board_from_press,
    enumerate_solutions,
    hint,
    is_solvable,
    random_press_vector,
    random_solvable,
    solve_full,
    SolveReport,
    _splitmix64,
)

from oracles import brute_force_solutions, press_image_table

DIMS_2X5 = GridDims(2, 5)
C0 = Config.from_string(DIMS_2X5, "0101001010")
C_PRIME = Config.from_string(DIMS_2X5, "1000000000")


class TestIsSolvable:
    def test_worked_board(self):
        assert is_solvable(2, 5, C0)

    def test_unreachable_board(self):
        assert not is_solvable(2, 5, C_PRIME)

    def test_dark_board(self):
        assert is_solvable(4, 3, Config(GridDims(4, 3), 0))

    def test_dims_mismatch(self):
        with pytest.raises(DomainError):
            is_solvable(3, 3, C0)


class TestSolveFull:
    def test_worked_board_report(self):
        report = solve_full(2, 5, C0)
        assert report.solvable
        assert report.nullity == 1
        assert report.solution_count == 2
        assert report.minimal.buttons() == (3, 8)
        assert report.minimal_weight == 2
        assert report.certified

    def test_worked_board_solution_set(self):
        found = {tuple(x.buttons()) for x in enumerate_solutions(2, 5, C0)}
        assert found == {(3, 8), (1, 5, 6, 10)}

    def test_unreachable_board_report(self):
        report = solve_full(2, 5, C_PRIME)
        assert not report.solvable
        assert report.solution_count == 0
        assert report.particular is None and report.minimal is None

    def test_unique_single_press(self):
        dims = GridDims(3, 3)
        config = board_from_press(dims, PressVector.from_buttons(dims, [5]))
        report = solve_full(3, 3, config)
        assert report.solution_count == 1
        assert report.minimal.buttons() == (5,)
        assert report.minimal_weight == 1

    def test_lexicographic_tie_break(self):
        # both cosets elements {1,3,5} and {6,8,10} have weight 3; the
        # bit string starting with 0 wins
        dims = DIMS_2X5
        config = board_from_press(dims, PressVector.from_buttons(dims, [1, 3, 5]))
        sols = brute_force_solutions(2, 5, config.bits)
        weights = sorted(s.bit_count() for s in sols)
        assert weights == [3, 3]
        report = solve_full(2, 5, config)
        assert report.minimal.to_string() == min(
            PressVector(dims, s).to_string() for s in sols
        )
        assert report.minimal.buttons() == (6, 8, 10)

    def test_greedy_fallback_past_cap(self):
        dims = GridDims(4, 4)
        config = board_from_press(dims, PressVector.from_buttons(dims, [1, 6, 11]))
        capped = solve_full(4, 4, config, cap=2)
        assert capped.solvable and not capped.certified
        # still a genuine solution
        assert apply_presses(config, capped.minimal).is_zero()
        full = solve_full(4, 4, config)
        assert full.certified
        assert full.minimal_weight <= capped.minimal_weight

    def test_count_and_minimality_match_exhaustion(self):
        rng = random.Random(4242)
        for m, n in [(2, 4), (3, 3), (2, 5), (4, 3), (2, 6)]:
            table = press_image_table(m, n)
            q = m * n
            dims = GridDims(m, n)
            for _ in range(20):
                bits = rng.getrandbits(q)
                report = solve_full(m, n, Config(dims, bits))
                if bits not in table:
                    assert not report.solvable
                    continue
                count, best = table[bits]
                assert report.solvable
                assert report.solution_count == count
                assert report.minimal_weight == best

    def test_report_invariant(self):
        with pytest.raises(DomainError):
            SolveReport(
                dims=GridDims(1, 1),
                solvable=True,
                nullity=0,
                solution_count=1,
                particular=None,
                minimal=None,
                minimal_weight=None,
                certified=True,
            )


class TestHint:
    def test_worked_board(self):
        assert hint(2, 5, C0) == 3

    def test_dark_board(self):
        assert hint(2, 5, Config(DIMS_2X5, 0)) is None

    def test_unreachable_board(self):
        assert hint(2, 5, C_PRIME) is None


class TestRandomSolvable:
    def test_deterministic(self):
        assert random_solvable(3, 4, 99) == random_solvable(3, 4, 99)

    def test_always_solvable_and_round_trips(self):
        rng = random.Random(7)
        for _ in range(200):
            m = rng.randint(1, 8)
            n = rng.randint(1, 8)
            seed = rng.getrandbits(64)
            config, _ = random_solvable(m, n, seed)
            report = solve_full(m, n, config)
            assert report.solvable
            assert apply_presses(config, report.particular).is_zero()

    def test_injected_press_recreates_worked_board(self):
        x = PressVector.from_buttons(DIMS_2X5, [3, 8])
        assert board_from_press(DIMS_2X5, x) == C0

    def test_splitmix_reference_stream(self):
        # first three outputs of the reference stream for seed 0
        state = 0
        words = []
        for _ in range(3):
            state, word = _splitmix64(state)
            words.append(word)
        assert words == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_press_vector_fits_grid(self):
        dims = GridDims(5, 13)
        x = random_press_vector(dims, 123456789)
        assert 0 <= x.bits < (1 << 65)
        assert x.dims == dims

    def test_sixteen_square_certified_solve(self):
        # 256-cell grid with an 8-dimensional null space: the coset walk
        # stays exhaustive and the report certified
        config, _ = random_solvable(16, 16, 7)
        report = solve_full(16, 16, config)
        assert report.solvable and report.certified
        assert report.nullity == 8
        assert report.solution_count == 256
        assert apply_presses(config, report.minimal).is_zero()
