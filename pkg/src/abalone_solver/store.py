"""Compact state indexing and the solved-database file format.

A state is (constellation contents, side to move).  For a config with M
marbles per side and win threshold K, the solved space holds every
placement where each color has between M-K+1 and M marbles on the board
(terminal constellations, where a side has lost K, are excluded and
valued on the fly).  Contents are ranked by a completion-counting walk
over the scan-order string, which makes the index monotone in the
serialization for a fixed mover; the mover occupies the low bit.
"""

from __future__ import annotations

import struct
import zlib
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .rules import Color, Constellation, GameConfig

MAGIC = b"ABDB"
FORMAT_VERSION = 1
FLAG_DISTANCES = 1


class StoreError(Exception):
    """Bad database file or out-of-space state."""


@dataclass(frozen=True)
class StateSpace:
    """Ranking tables for one game config."""

    config: GameConfig
    table: np.ndarray  # int64[(n+1), M+2, M+2] completion counts
    n_constellations: int

    @property
    def n_states(self) -> int:
        return 2 * self.n_constellations

    @property
    def lo(self) -> int:
        return self.config.marbles_per_side - self.config.k + 1

    @property
    def hi(self) -> int:
        return self.config.marbles_per_side

    def in_space(self, constellation: Constellation) -> bool:
        nb = constellation.count(Color.BLACK)
        ng = constellation.count(Color.GRAY)
        return self.lo <= nb <= self.hi and self.lo <= ng <= self.hi

    def rank(self, contents: bytes) -> int:
        t = self.table
        r = 0
        bu = gu = 0
        for i, v in enumerate(contents):
            if v:
                r += t[i + 1, bu, gu]
                if v == 2:
                    r += t[i + 1, bu + 1, gu]
                    gu += 1
                else:
                    bu += 1
        return int(r)

    def unrank(self, rank: int) -> bytes:
        if not 0 <= rank < self.n_constellations:
            raise StoreError(f"rank {rank} out of range")
        t = self.table
        out = bytearray(self.config.board.n)
        bu = gu = 0
        for i in range(len(out)):
            skip = t[i + 1, bu, gu]
            if rank < skip:
                continue
            rank -= skip
            skip = t[i + 1, bu + 1, gu]
            if rank < skip:
                out[i] = 1
                bu += 1
            else:
                rank -= skip
                out[i] = 2
                gu += 1
        return bytes(out)


def _completion_table(n: int, m: int, k: int) -> np.ndarray:
    """table[i, bu, gu] = number of ways to finish a scan string after
    position i so the final counts land in [m-k+1, m] for both colors."""
    lo = m - k + 1
    table = np.zeros((n + 1, m + 2, m + 2), dtype=np.int64)
    for bu in range(lo, m + 1):
        for gu in range(lo, m + 1):
            table[n, bu, gu] = 1
    for i in range(n - 1, -1, -1):
        for bu in range(m + 1):
            for gu in range(m + 1):
                table[i, bu, gu] = (
                    table[i + 1, bu, gu]
                    + table[i + 1, bu + 1, gu]
                    + table[i + 1, bu, gu + 1]
                )
    return table


def _exact_state_count(n: int, m: int, k: int) -> int:
    from math import comb

    total = 0
    for nb in range(m - k + 1, m + 1):
        for ng in range(m - k + 1, m + 1):
            total += comb(n, nb) * comb(n - nb, ng)
    return 2 * total


@lru_cache(maxsize=32)
def _space_cached(config: GameConfig) -> StateSpace:
    n = config.board.n
    m = config.marbles_per_side
    # Exact count first: the int64 table would overflow silently on
    # boards far beyond the index (the full 61-cell game, for one).
    if _exact_state_count(n, m, config.k) >= 2**32:
        raise StoreError(
            f"state space of {config.shape} k={config.k} overflows the 32-bit index"
        )
    table = _completion_table(n, m, config.k)
    table.setflags(write=False)
    return StateSpace(config, table, int(table[0, 0, 0]))


def state_space(config: GameConfig) -> StateSpace:
    return _space_cached(config)


def state_index(
    constellation: Constellation, to_move: Color, config: GameConfig
) -> int:
    """Index of a state in the config's space; inverse of unrank_state."""
    space = state_space(config)
    if not space.in_space(constellation):
        raise StoreError(
            f"{constellation.notation()} is outside the {config.shape} k={config.k} space"
        )
    mover_bit = 0 if to_move is Color.BLACK else 1
    return (space.rank(constellation.contents) << 1) | mover_bit


def unrank_state(index: int, config: GameConfig) -> tuple[Constellation, Color]:
    space = state_space(config)
    if not 0 <= index < space.n_states:
        raise StoreError(f"state index {index} out of range")
    contents = space.unrank(index >> 1)
    m = config.marbles_per_side
    constellation = Constellation(
        config.board,
        contents,
        black_lost=m - contents.count(1),
        gray_lost=m - contents.count(2),
    )
    return constellation, Color.BLACK if index % 2 == 0 else Color.GRAY


def _pack_values(values: np.ndarray) -> bytes:
    """2 bits per state, little-endian within each byte."""
    n = len(values)
    padded = np.zeros((n + 3) // 4 * 4, dtype=np.uint8)
    padded[:n] = values
    quads = padded.reshape(-1, 4)
    packed = quads[:, 0] | (quads[:, 1] << 2) | (quads[:, 2] << 4) | (quads[:, 3] << 6)
    return packed.astype(np.uint8).tobytes()


def _unpack_values(blob: bytes, n: int) -> np.ndarray:
    packed = np.frombuffer(blob, dtype=np.uint8)
    out = np.empty(len(packed) * 4, dtype=np.uint8)
    out[0::4] = packed & 3
    out[1::4] = (packed >> 2) & 3
    out[2::4] = (packed >> 4) & 3
    out[3::4] = (packed >> 6) & 3
    return out[:n].copy()


_HEADER = struct.Struct("<4sHHIIIIIIQQ")  # magic, version, flags, a,b,c, k, cells, marbles, states, stalemates


def save(db, path) -> None:
    """Write a solved database; see load for the inverse."""
    from .solver import SolvedDatabase  # local import to avoid a cycle

    assert isinstance(db, SolvedDatabase)
    config = db.config
    flags = FLAG_DISTANCES if db.distances is not None else 0
    header = _HEADER.pack(
        MAGIC,
        FORMAT_VERSION,
        flags,
        config.shape.a,
        config.shape.b,
        config.shape.c,
        config.k,
        config.board.n,
        config.marbles_per_side,
        db.space.n_states,
        db.stalemate_count,
    )
    initial = db.config.initial.cells_string().encode("ascii")
    body = [header, initial, _pack_values(db.values)]
    if db.distances is not None:
        body.append(db.distances.astype("<u2").tobytes())
    payload = b"".join(body)
    checksum = struct.pack("<I", zlib.crc32(payload))
    with open(path, "wb") as fh:
        fh.write(payload)
        fh.write(checksum)


def load(path) -> "SolvedDatabase":
    """Read a database written by save, validating its checksum."""
    from .geometry import BoardShape, build_board
    from .rules import parse_cells
    from .solver import SolvedDatabase

    with open(path, "rb") as fh:
        blob = fh.read()
    if len(blob) < _HEADER.size + 4:
        raise StoreError(f"{path}: truncated database file")
    payload, checksum = blob[:-4], blob[-4:]
    if struct.unpack("<I", checksum)[0] != zlib.crc32(payload):
        raise StoreError(f"{path}: checksum mismatch")
    (
        magic,
        version,
        flags,
        a,
        b,
        c,
        k,
        cells,
        marbles,
        n_states,
        stalemates,
    ) = _HEADER.unpack_from(payload)
    if magic != MAGIC:
        raise StoreError(f"{path}: bad magic {magic!r}")
    if version != FORMAT_VERSION:
        raise StoreError(f"{path}: unsupported format version {version}")
    shape = BoardShape(a, b, c)
    board = build_board(shape)
    if board.n != cells:
        raise StoreError(f"{path}: cell count {cells} does not match shape {shape}")
    offset = _HEADER.size
    initial_cells = payload[offset : offset + cells].decode("ascii")
    offset += cells
    initial = Constellation(board, parse_cells(board, initial_cells))
    config = GameConfig(shape, k, initial)
    space = state_space(config)
    if space.n_states != n_states:
        raise StoreError(
            f"{path}: state count {n_states} does not match shape/k (expected {space.n_states})"
        )
    packed_len = (n_states + 3) // 4
    values = _unpack_values(payload[offset : offset + packed_len], n_states)
    offset += packed_len
    distances = None
    if flags & FLAG_DISTANCES:
        dist_len = 2 * n_states
        distances = np.frombuffer(
            payload[offset : offset + dist_len], dtype="<u2"
        ).astype(np.uint16)
        offset += dist_len
    if offset != len(payload):
        raise StoreError(f"{path}: trailing or missing data")
    return SolvedDatabase(
        config=config,
        values=values,
        distances=distances,
        stalemate_count=stalemates,
    )
