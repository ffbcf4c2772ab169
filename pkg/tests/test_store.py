import numpy as np
import pytest

from abalone_solver.geometry import BoardShape
from abalone_solver.rules import Color, Constellation
from abalone_solver.store import (
    StoreError,
    load,
    save,
    state_index,
    state_space,
    unrank_state,
)
from oracles import space_constellations


def test_round_trip_identity(config223):
    c0 = config223.initial
    for mover in Color:
        idx = state_index(c0, mover, config223)
        back, back_mover = unrank_state(idx, config223)
        assert back.contents == c0.contents
        assert back_mover is mover


def test_all_222_states_distinct(config222):
    space = state_space(config222)
    assert space.n_states == 420  # C(7,2) * C(5,2) * 2 movers
    seen = set()
    for c in space_constellations(config222):
        for mover in Color:
            seen.add(state_index(c, mover, config222))
    assert seen == set(range(420))


def test_223_space_size(config223):
    assert state_space(config223).n_states == 8400  # C(10,3) * C(7,3) * 2


def test_index_monotone_in_scan_serialization(config223):
    space = state_space(config223)
    strings = []
    for rank in range(0, space.n_constellations, 13):
        c, _ = unrank_state(rank << 1, config223)
        strings.append(c.cells_string())
    assert strings == sorted(strings)


def test_multi_stratum_space_counts(fixtures):
    config = fixtures.standard_config(BoardShape(2, 3, 3))
    space = state_space(config)
    # Sides hold 4 or 5 marbles each while the game is live.
    from math import comb

    expected = 0
    for nb in (4, 5):
        for ng in (4, 5):
            expected += comb(14, nb) * comb(14 - nb, ng)
    assert space.n_constellations == expected
    assert space.n_states == 2 * expected == 1933932


def test_out_of_space_state_rejected(config223):
    board = config223.board
    empty = Constellation(board, bytes(board.n))
    with pytest.raises(StoreError):
        state_index(empty, Color.BLACK, config223)
    with pytest.raises(StoreError):
        unrank_state(10**9, config223)


def test_save_load_round_trip(tmp_path, db222):
    path = tmp_path / "b222.db"
    save(db222, path)
    loaded = load(path)
    assert loaded.config == db222.config
    assert np.array_equal(loaded.values, db222.values)
    assert np.array_equal(loaded.distances, db222.distances)
    assert loaded.stalemate_count == db222.stalemate_count


def test_save_load_without_distances(tmp_path, db223):
    from abalone_solver.solver import SolvedDatabase

    slim = SolvedDatabase(
        config=db223.config,
        values=db223.values,
        distances=None,
        stalemate_count=db223.stalemate_count,
    )
    path = tmp_path / "c223.db"
    save(slim, path)
    loaded = load(path)
    assert loaded.distances is None
    assert np.array_equal(loaded.values, db223.values)
    c0 = db223.config.initial
    assert loaded.value(c0, Color.BLACK).result.value == "draw"


def test_truncated_file_rejected(tmp_path, db222):
    path = tmp_path / "b222.db"
    save(db222, path)
    blob = path.read_bytes()
    path.write_bytes(blob[: len(blob) // 2])
    with pytest.raises(StoreError):
        load(path)


def test_corrupted_file_rejected(tmp_path, db222):
    path = tmp_path / "b222.db"
    save(db222, path)
    blob = bytearray(path.read_bytes())
    blob[60] ^= 0xFF
    path.write_bytes(bytes(blob))
    with pytest.raises(StoreError):
        load(path)


def test_bad_magic_rejected(tmp_path, db222):
    import struct
    import zlib

    path = tmp_path / "b222.db"
    save(db222, path)
    blob = bytearray(path.read_bytes())
    blob[:4] = b"NOPE"
    payload = bytes(blob[:-4])
    path.write_bytes(payload + struct.pack("<I", zlib.crc32(payload)))
    with pytest.raises(StoreError, match="magic"):
        load(path)


def test_full_size_board_constructible_but_not_solvable():
    """The official 61-cell game builds as data; its state space is far
    past the index and is rejected up front instead of overflowing."""
    from abalone_solver.geometry import BoardShape as Shape, build_board

    board = build_board(Shape(5, 5, 5))
    assert board.n == 61
    contents = bytearray(61)
    for i in range(14):
        contents[i] = 1
        contents[60 - i] = 2
    from abalone_solver.rules import GameConfig as Config

    config = Config(Shape(5, 5, 5), 6, Constellation(board, bytes(contents)))
    with pytest.raises(StoreError, match="overflows"):
        state_space(config)


def test_333_database_fits_100mb(fixtures):
    """Value storage for the full 3x3x3 k=2 space at 2 bits per state."""
    config = fixtures.standard_config(BoardShape(3, 3, 3))
    space = state_space(config)
    assert 2.7e8 < space.n_states < 2.9e8
    packed_bytes = (space.n_states + 3) // 4
    assert packed_bytes <= 100 * 1024 * 1024


def test_ranking_matches_enumeration_order(config222):
    """Every constellation of the space ranks into a distinct slot and
    unranks back to itself."""
    space = state_space(config222)
    ranks = set()
    for c in space_constellations(config222):
        r = space.rank(c.contents)
        assert space.unrank(r) == c.contents
        ranks.add(r)
    assert ranks == set(range(space.n_constellations))
