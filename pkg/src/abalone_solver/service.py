"""HTTP facade over a loaded database for interactive play.

Sessions are held in memory (optionally snapshotted to a JSON file) and
serialize their own requests; the database is shared read-only.  Every
legal move is served with its successor's perfect-play value so a client
can show what-if annotations before committing a move.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .display import render
from .geometry import DIRECTION_NAMES, BoardShape
from .rules import (
    Color,
    Constellation,
    GameConfig,
    Move,
    apply_move,
    is_terminal,
    legal_moves,
    parse_constellation,
)
from .solver import GameValue, SolvedDatabase

ACTIVE = "active"
DRAW_BY_CAP = "draw-by-cap"


class CreateSessionRequest(BaseModel):
    shape: str
    k: int
    human: str = "black"
    ply_cap: Optional[int] = None


class MoveRequest(BaseModel):
    move: str  # uid from GET /sessions/{id}/moves


def move_uid(move: Move, constellation: Constellation) -> str:
    cells = "".join(constellation.board.label(i) for i in move.cells)
    return f"{cells}>{DIRECTION_NAMES[move.direction]}"


def _value_json(value: GameValue) -> dict:
    return {"result": value.result.value, "distance": value.distance}


@dataclass
class Session:
    id: str
    config: GameConfig
    human: Color
    ply_cap: int
    current: Constellation = field(init=False)
    to_move: Color = Color.BLACK
    history: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self) -> None:
        self.current = self.config.initial

    @property
    def ply(self) -> int:
        return len(self.history)

    def status(self) -> str:
        winner = is_terminal(self.current, self.config)
        if winner is not None:
            return f"{winner}-win"
        if self.ply >= self.ply_cap:
            return DRAW_BY_CAP
        return ACTIVE


class PlayService:
    def __init__(
        self,
        db: SolvedDatabase,
        ply_cap: int = 200,
        snapshot_path: Optional[str] = None,
    ):
        self.db = db
        self.default_ply_cap = ply_cap
        self.snapshot_path = snapshot_path
        self.sessions: dict[str, Session] = {}
        self._registry_lock = threading.Lock()
        if snapshot_path and Path(snapshot_path).exists():
            self._load_snapshot()

    # -- session bookkeeping ------------------------------------------------

    def create_session(self, req: CreateSessionRequest) -> Session:
        try:
            shape = BoardShape.parse(req.shape)
            human = Color[req.human.upper()]
        except (ValueError, KeyError) as exc:
            raise HTTPException(422, str(exc)) from None
        if shape != self.db.config.shape or req.k != self.db.config.k:
            raise HTTPException(
                503,
                f"no database loaded for {shape} k={req.k} "
                f"(serving {self.db.config.shape} k={self.db.config.k})",
            )
        session = Session(
            id=uuid.uuid4().hex[:12],
            config=self.db.config,
            human=human,
            ply_cap=req.ply_cap or self.default_ply_cap,
        )
        with self._registry_lock:
            self.sessions[session.id] = session
        self._save_snapshot()
        return session

    def get(self, session_id: str) -> Session:
        try:
            return self.sessions[session_id]
        except KeyError:
            raise HTTPException(404, f"unknown session {session_id}") from None

    # -- views ----------------------------------------------------------------

    def state_json(self, s: Session) -> dict:
        winner = is_terminal(s.current, s.config)
        return {
            "session": s.id,
            "shape": str(s.config.shape),
            "k": s.config.k,
            "board": s.current.notation(),
            "rendered": render(s.current),
            "to_move": str(s.to_move),
            "human": str(s.human),
            "ply": s.ply,
            "ply_cap": s.ply_cap,
            "status": s.status(),
            "winner": str(winner) if winner else None,
            "outcome_class": self.db.outcome_class(s.current).label
            if winner is None
            else None,
            "history": s.history,
        }

    def moves_json(self, s: Session) -> list[dict]:
        if s.status() != ACTIVE:
            return []
        out = []
        for move, value in self.db.best_moves(s.current, s.to_move):
            succ = apply_move(s.current, move)
            out.append(
                {
                    "uid": move_uid(move, s.current),
                    "cells": [s.current.board.label(i) for i in move.cells],
                    "direction": DIRECTION_NAMES[move.direction],
                    "kind": move.kind.value,
                    "pushed": move.pushed,
                    "ejects": move.ejects,
                    "label": move.describe(s.current.board),
                    "successor": succ.notation(),
                    "value": _value_json(value),
                }
            )
        return out

    # -- play -----------------------------------------------------------------

    def _apply(self, s: Session, move: Move) -> None:
        succ = apply_move(s.current, move)
        s.history.append(
            {
                "ply": s.ply,
                "color": str(s.to_move),
                "move": move_uid(move, s.current),
                "board": succ.notation(),
            }
        )
        s.current = succ
        s.to_move = s.to_move.other

    def play_human(self, s: Session, req: MoveRequest) -> dict:
        with s.lock:
            if s.status() != ACTIVE:
                raise HTTPException(409, f"session is {s.status()}")
            if s.to_move is not s.human:
                raise HTTPException(409, f"not {s.human}'s turn")
            for move in legal_moves(s.current, s.to_move, s.config):
                if move_uid(move, s.current) == req.move:
                    self._apply(s, move)
                    self._save_snapshot()
                    return self.state_json(s)
            raise HTTPException(409, f"illegal move {req.move!r}")

    def play_engine(self, s: Session) -> dict:
        with s.lock:
            if s.status() != ACTIVE:
                raise HTTPException(409, f"session is {s.status()}")
            if s.to_move is s.human:
                raise HTTPException(409, "it is the human's turn")
            ranked = self.db.best_moves(s.current, s.to_move)
            self._apply(s, ranked[0][0])
            self._save_snapshot()
            return self.state_json(s)

    # -- snapshots --------------------------------------------------------------

    def _save_snapshot(self) -> None:
        if not self.snapshot_path:
            return
        with self._registry_lock:
            blob = {
                sid: {
                    "human": str(s.human),
                    "ply_cap": s.ply_cap,
                    "to_move": str(s.to_move),
                    "board": s.current.notation(),
                    "history": s.history,
                }
                for sid, s in self.sessions.items()
            }
        Path(self.snapshot_path).write_text(json.dumps(blob, indent=1))

    def _load_snapshot(self) -> None:
        blob = json.loads(Path(self.snapshot_path).read_text())
        for sid, data in blob.items():
            session = Session(
                id=sid,
                config=self.db.config,
                human=Color[data["human"].upper()],
                ply_cap=data["ply_cap"],
            )
            board = parse_constellation(data["board"], self.db.config.board)
            m = self.db.config.marbles_per_side
            session.current = Constellation(
                self.db.config.board,
                board.contents,
                black_lost=m - board.count(Color.BLACK),
                gray_lost=m - board.count(Color.GRAY),
            )
            session.to_move = Color[data["to_move"].upper()]
            session.history = data["history"]
            self.sessions[sid] = session


def create_app(
    db: SolvedDatabase,
    ply_cap: int = 200,
    snapshot_path: Optional[str] = None,
    ui_dir: Optional[str] = None,
) -> FastAPI:
    service = PlayService(db, ply_cap=ply_cap, snapshot_path=snapshot_path)
    app = FastAPI(title="abalone oracle")
    app.state.service = service

    # Local analysis tool: let browser clients on other ports (dev
    # servers, test harnesses) talk to the oracle directly.
    from fastapi.middleware.cors import CORSMiddleware

    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.get("/config")
    def get_config():
        return {
            "shape": str(db.config.shape),
            "k": db.config.k,
            "initial": db.config.initial.notation(),
            "has_distances": db.distances is not None,
        }

    @app.post("/sessions", status_code=201)
    def create_session(req: CreateSessionRequest):
        session = service.create_session(req)
        return service.state_json(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str):
        return service.state_json(service.get(session_id))

    @app.get("/sessions/{session_id}/moves")
    def get_moves(session_id: str):
        return service.moves_json(service.get(session_id))

    @app.post("/sessions/{session_id}/moves")
    def post_move(session_id: str, req: MoveRequest):
        return service.play_human(service.get(session_id), req)

    @app.post("/sessions/{session_id}/engine-move")
    def post_engine_move(session_id: str):
        return service.play_engine(service.get(session_id))

    if ui_dir and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
