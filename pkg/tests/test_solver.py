import numpy as np

from abalone_solver.canonical import canonicalize, negate, transform
from abalone_solver.geometry import BoardShape, symmetry_group
from abalone_solver.rules import (
    Color,
    Constellation,
    GameConfig,
    apply_move,
    legal_moves,
    parse_constellation,
)
from abalone_solver.solver import (
    OutcomeClass,
    Result,
    SolvedDatabase,
    solve,
)
from oracles import UNKNOWN, WIN, LOSS, minimax_probe, reference_solve, space_constellations


def test_value_examples(db222, fixtures):
    b11 = fixtures.board("B11")
    assert db222.value(b11, Color.BLACK).result is Result.BLACK_WIN
    assert db222.value(b11, Color.GRAY).result is Result.BLACK_WIN
    b0 = fixtures.board("B0")
    assert db222.value(b0, Color.BLACK).result is Result.BLACK_WIN
    assert db222.value(b0, Color.GRAY).result is Result.GRAY_WIN
    b5 = fixtures.board("B5")
    assert db222.value(b5, Color.BLACK).result is Result.BLACK_WIN
    assert db222.value(b5, Color.GRAY).result is Result.DRAW


def test_outcome_class_examples(db222, db223, fixtures):
    assert db222.outcome_class(fixtures.board("B1")) is OutcomeClass.D
    assert db222.outcome_class(fixtures.board("-B12")) is OutcomeClass.NCHECK
    assert db223.outcome_class(fixtures.board("C0")) is OutcomeClass.D


def test_terminal_states_labeled_with_winner(db223):
    # Any constellation with gray down k marbles is a black win at distance 0.
    one_gone = parse_constellation("2,2,3:..BB..B.GG")
    for mover in Color:
        val = db223.value(one_gone, mover)
        assert val.result is Result.BLACK_WIN and val.distance == 0


def test_solve_with_terminal_like_initial_is_still_valid(kernels_warm):
    # The database covers the whole space regardless of the start used.
    b0 = parse_constellation("2,2,2:BB...GG")
    db = solve(GameConfig(BoardShape(2, 2, 2), 1, b0))
    assert db.outcome_class(b0) is OutcomeClass.N


def test_best_moves_b0_reach_b11(db222, fixtures):
    b0 = fixtures.board("B0")
    ranked = db222.best_moves(b0, Color.BLACK)
    top_value = ranked[0][1]
    assert top_value.result is Result.BLACK_WIN
    b11 = canonicalize(fixtures.board("B11"))
    for move, val in ranked:
        if (val.result, val.distance) == (top_value.result, top_value.distance):
            assert canonicalize(apply_move(b0, move)) == b11


def test_best_moves_c0_draw_set_is_c1(db223, fixtures):
    c0 = fixtures.board("C0")
    c1 = canonicalize(fixtures.board("C1"))
    for move, val in db223.best_moves(c0, Color.BLACK):
        succ = canonicalize(apply_move(c0, move))
        assert (val.result is Result.DRAW) == (succ == c1)


def test_immediate_winning_push_ranks_first(db223):
    c = parse_constellation("2,2,3:B..GBB..GG")  # black e,f can eject d
    ranked = db223.best_moves(c, Color.BLACK)
    move, val = ranked[0]
    assert move.ejects
    assert val == db223.value(apply_move(c, move), Color.GRAY)
    assert val.result is Result.BLACK_WIN and val.distance == 0
    assert db223.value(c, Color.BLACK).distance == 1


def test_first_move_value_matches_state_value(db223):
    # The top move's successor value equals the state's value one ply on.
    for c in space_constellations(db223.config)[::97]:
        for mover in Color:
            state_val = db223.value(c, mover)
            move, succ_val = db223.best_moves(c, mover)[0]
            if state_val.result is Result.DRAW:
                assert succ_val.result is Result.DRAW
            else:
                assert succ_val.result is state_val.result
                assert succ_val.distance == state_val.distance - 1


def test_class_census_222(db222):
    census = db222.class_census(2, 2)
    assert census[OutcomeClass.L] == 1
    assert census[OutcomeClass.R] == 1
    assert census[OutcomeClass.N] == 2
    assert census[OutcomeClass.D] == 11
    assert census[OutcomeClass.NHAT] == 4
    assert census[OutcomeClass.NCHECK] == 4
    assert sum(census.values()) == 23
    assert not any(oc.label.startswith("X") for oc in census)


def test_class_census_223_totals(db223):
    census = db223.class_census(3, 3)
    assert sum(census.values()) == 1080


def test_verify_fixpoint_clean(db222, db223):
    assert db222.verify_fixpoint().violations == 0
    assert db223.verify_fixpoint().violations == 0


def test_verify_fixpoint_detects_perturbation(db222):
    values = db222.values.copy()
    # Flip one decisively-valued state to the other winner.
    target = int(np.flatnonzero(values == 1)[17])
    values[target] = 2
    broken = SolvedDatabase(
        config=db222.config,
        values=values,
        distances=db222.distances.copy(),
        stalemate_count=db222.stalemate_count,
    )
    assert broken.verify_fixpoint().violations >= 1


def test_every_draw_has_a_draw_successor(db223):
    for c in space_constellations(db223.config):
        for mover in Color:
            if db223.value(c, mover).result is not Result.DRAW:
                continue
            succ_results = {
                db223.value(apply_move(c, m), mover.other).result
                for m in legal_moves(c, mover, db223.config)
            }
            assert Result.DRAW in succ_results


def _assert_negation_and_isomorphism(db):
    group = symmetry_group(db.board)
    for c in space_constellations(db.config):
        for mover in Color:
            val = db.value(c, mover)
            flipped = db.value(negate(c), mover.other)
            assert flipped.result is val.result.swapped
            assert flipped.distance == val.distance
            for sym in group:
                image_val = db.value(transform(c, sym), mover)
                assert image_val.result is val.result
                assert image_val.distance == val.distance


def test_negation_and_isomorphism_invariance_222(db222):
    _assert_negation_and_isomorphism(db222)


def test_negation_and_isomorphism_invariance_223(db223):
    _assert_negation_and_isomorphism(db223)


def _assert_matches_reference(db):
    reference = reference_solve(db.config)
    for (contents, mover), ref in reference.items():
        c = Constellation(
            db.board,
            contents,
            black_lost=db.config.marbles_per_side - contents.count(1),
            gray_lost=db.config.marbles_per_side - contents.count(2),
        )
        got = db.value(c, mover).result
        want = Result.DRAW if ref is None else Result.win_for(ref)
        assert got is want, (c.notation(), mover)


def test_matches_reference_solver_222(db222):
    """Full-database equality against a naive fixpoint iterator."""
    _assert_matches_reference(db222)


def test_matches_reference_solver_multi_stratum(kernels_warm, fixtures):
    """k=2 on the 10-cell board exercises cross-stratum un-ejections."""
    config = GameConfig(BoardShape(2, 2, 3), 2, fixtures.board("C0"))
    db = solve(config)
    assert db.verify_fixpoint().violations == 0
    _assert_matches_reference(db)


def test_matches_reference_solver_three_on_two_pushes(kernels_warm):
    """The 5-cell middle column of 2x2x4 makes 3-on-2 sumito reachable."""
    initial = parse_constellation("2,2,4:G.BG..B.G.B..")
    config = GameConfig(BoardShape(2, 2, 4), 1, initial)
    db = solve(config)
    report = db.verify_fixpoint(sample=4000)
    assert report.violations == 0, report.examples


def test_minimax_oracle_agreement(db222, db223):
    """Depth-6 win/loss-only minimax agrees with the database on every
    state decided within 6 plies; draws stay unknown to the oracle."""
    for db in (db222, db223):
        memo = {}
        for c in space_constellations(db.config):
            for mover in Color:
                val = db.value(c, mover)
                probe = minimax_probe(c, mover, 6, db.config, memo)
                win = Result.win_for(mover)
                if val.result is Result.DRAW:
                    assert probe == UNKNOWN
                elif val.distance <= 6:
                    assert probe == (WIN if val.result is win else LOSS)
                elif probe != UNKNOWN:
                    # Deeper knowledge must at least agree in direction.
                    assert probe == (WIN if val.result is win else LOSS)


def test_worker_count_determinism(config223):
    one = solve(config223, workers=1)
    two = solve(config223, workers=2)
    assert np.array_equal(one.values, two.values)
    assert np.array_equal(one.distances, two.distances)
    assert one.stalemate_count == two.stalemate_count


def test_win_distances_are_tight(db222):
    """Wins take 1 + min over loss replies; losses 1 + max over win replies."""
    for c in space_constellations(db222.config):
        for mover in Color:
            val = db222.value(c, mover)
            if val.result is Result.DRAW:
                continue
            succ_vals = [
                db222.value(apply_move(c, m), mover.other)
                for m in legal_moves(c, mover, db222.config)
            ]
            if not succ_vals:
                assert val.distance == 0
                continue
            win = Result.win_for(mover)
            if val.result is win:
                best = min(
                    v.distance for v in succ_vals if v.result is win
                )
                assert val.distance == best + 1
            else:
                assert all(v.result is not win for v in succ_vals)
                assert val.distance == max(v.distance for v in succ_vals) + 1


def test_stalemate_counts(db222, db223):
    assert db222.stalemate_count == 0
    # Four corner-wedged placements exist in the unrestricted 10-cell space.
    assert db223.stalemate_count == 4
    for c in space_constellations(db223.config):
        for mover in Color:
            if not legal_moves(c, mover, db223.config):
                val = db223.value(c, mover)
                assert val.result is Result.win_for(mover.other)
                assert val.distance == 0
