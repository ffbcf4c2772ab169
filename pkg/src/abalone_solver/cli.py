"""Command line interface: solving, counting, classifying, table
reproduction, text-mode play and conjecture exploration."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .canonical import burnside_count, enumerate_classes, negate
from .display import render
from .fixtures import CONJECTURE_SHAPES, STANDARD_GAMES, load_fixtures
from .geometry import BoardShape, build_board
from .rules import Color, GameConfig, apply_move, is_terminal, parse_constellation
from .solver import OutcomeClass, SolvedDatabase, solve
from .store import StoreError, load, save, state_space

# Census rows print in this fixed order so output is byte-stable.
_CLASS_ORDER = [
    OutcomeClass.L,
    OutcomeClass.R,
    OutcomeClass.D,
    OutcomeClass.N,
    OutcomeClass.NHAT,
    OutcomeClass.NCHECK,
    OutcomeClass.X_PREV_WIN,
    OutcomeClass.X_GD,
    OutcomeClass.X_DB,
]


class CliError(Exception):
    pass


def _load_db(path: str) -> SolvedDatabase:
    if not Path(path).exists():
        raise CliError(f"database {path} not found (run 'abalone solve' first)")
    try:
        return load(path)
    except StoreError as exc:
        raise CliError(str(exc)) from None


def _game_config(args) -> GameConfig:
    shape = BoardShape.parse(args.shape)
    fixtures = load_fixtures(getattr(args, "fixtures", None))
    if args.initial:
        initial = parse_constellation(args.initial)
        if initial.board.shape != shape:
            raise CliError(f"--initial is on {initial.board.shape}, not {shape}")
    elif shape in STANDARD_GAMES:
        initial = fixtures.board(STANDARD_GAMES[shape][1])
    else:
        raise CliError(f"no standard start for {shape}; pass --initial")
    k = args.k if args.k is not None else STANDARD_GAMES.get(shape, (None,))[0]
    if k is None:
        raise CliError(f"no standard win threshold for {shape}; pass --k")
    return GameConfig(shape, k, initial)


def cmd_solve(args) -> int:
    config = _game_config(args)
    space = state_space(config)
    print(f"solving {config.shape} k={config.k}: {space.n_states} states")
    db = solve(config, workers=args.workers, keep_distances=not args.no_distances)
    print(f"stalemate states: {db.stalemate_count}")
    start = config.initial
    oc = db.outcome_class(start)
    detail = (
        f"black to move: {db.value(start, Color.BLACK)}; "
        f"gray to move: {db.value(start, Color.GRAY)}"
    )
    if config.shape in CONJECTURE_SHAPES:
        print(f"CONJECTURE: o(start) = {oc.label} ({detail})")
    else:
        print(f"o(start) = {oc.label} ({detail})")
    if args.out:
        save(db, args.out)
        print(f"wrote {args.out}")
    return 0


def cmd_enumerate(args) -> int:
    board = build_board(BoardShape.parse(args.shape))
    counts = {}
    if args.method in ("burnside", "both"):
        counts["burnside"] = burnside_count(
            board, args.black, args.gray, args.identify_negation
        )
    if args.method in ("orbit", "both"):
        counts["orbit"] = enumerate_classes(
            board, args.black, args.gray, args.identify_negation
        )
    if len(counts) == 2 and counts["orbit"] != counts["burnside"]:
        print(
            f"MISMATCH: orbit enumeration {counts['orbit']} != "
            f"Burnside {counts['burnside']}",
            file=sys.stderr,
        )
        return 1
    print(next(iter(counts.values())))
    return 0


def cmd_classify(args) -> int:
    db = _load_db(args.db)
    constellation = parse_constellation(args.board)
    if constellation.board.shape != db.config.shape:
        raise CliError(
            f"board is on {constellation.board.shape}, database is {db.config.shape}"
        )
    print(db.outcome_class(constellation).label)
    return 0


def cmd_table(args) -> int:
    db = _load_db(args.db)
    fixtures = load_fixtures(args.fixtures)
    names = fixtures.names_for_shape(db.config.shape)
    if not names:
        raise CliError(f"no fixtures on shape {db.config.shape}")
    width = max(5, max(len(n) for n in names))
    print(f"{'board'.ljust(width)}  o(C)  o(-C)")
    for name in names:
        c = fixtures.board(name)
        oc = db.outcome_class(c).label
        ocn = db.outcome_class(negate(c)).label
        print(f"{name.ljust(width)}  {oc.ljust(4)}  {ocn}")
    return 0


def cmd_census(args) -> int:
    db = _load_db(args.db)
    m = db.config.marbles_per_side
    black = args.black if args.black is not None else m
    gray = args.gray if args.gray is not None else m
    census = db.class_census(black, gray)
    total = 0
    for oc in _CLASS_ORDER:
        n = census.get(oc, 0)
        total += n
        print(f"{oc.label:<10} {n}")
    print(f"{'total':<10} {total}")
    return 0


def cmd_verify(args) -> int:
    db = _load_db(args.db)
    report = db.verify_fixpoint(sample=args.sample)
    print(f"checked {report.checked} states: {report.violations} violations")
    for example in report.examples:
        print(f"  {example}")
    print(f"stalemate states recorded at solve time: {db.stalemate_count}")
    return 0 if report.ok else 1


def cmd_play(args) -> int:
    db = _load_db(args.db)
    config = db.config
    human = None if args.human == "none" else Color[args.human.upper()]
    current = config.initial
    to_move = Color.BLACK
    ply = 0
    print(render(current))
    while True:
        winner = is_terminal(current, config)
        if winner is not None:
            print(f"{winner} wins")
            return 0
        if ply >= args.ply_cap:
            print(f"draw by ply cap ({args.ply_cap})")
            return 0
        ranked = db.best_moves(current, to_move)
        print(f"[ply {ply}] {to_move} to move; o = {db.outcome_class(current).label}")
        if to_move is human:
            for i, (move, val) in enumerate(ranked):
                print(f"  {i}: {move.describe(current.board)}  -> {val}")
            line = sys.stdin.readline()
            if not line or line.strip() in ("q", "quit"):
                print("bye")
                return 0
            try:
                choice = int(line)
                move, _ = ranked[choice]
            except (ValueError, IndexError):
                print("pick a listed move number")
                continue
        else:
            move, val = ranked[0]
            print(f"  engine: {move.describe(current.board)}  -> {val}")
        current = apply_move(current, move)
        to_move = to_move.other
        ply += 1
        print(render(current))


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    db = _load_db(args.db)
    app = create_app(
        db, ply_cap=args.ply_cap, snapshot_path=args.snapshot, ui_dir=args.ui
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def _verify_fixtures(path) -> int:
    fixtures = load_fixtures(path)
    problems = fixtures.verify()
    if problems:
        for p in problems:
            print(f"FIXTURE ERROR: {p}", file=sys.stderr)
        return 1
    boards = len(fixtures.boards)
    print(f"fixtures ok: {boards} boards, {len(fixtures.patterns)} patterns")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abalone",
        description="Perfect-play databases for small-board Abalone variants.",
    )
    parser.add_argument(
        "--verify-fixtures",
        action="store_true",
        help="re-check the shipped fixture transcriptions and exit",
    )
    parser.add_argument("--fixtures", help="fixture file (default: packaged set)")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("solve", help="build a perfect-play database")
    p.add_argument("--shape", required=True, help="board sides, e.g. 2,2,3")
    p.add_argument("--k", type=int, help="marbles to push off to win")
    p.add_argument("--initial", help="starting board notation (default: standard)")
    p.add_argument("--out", help="write the database to this path")
    p.add_argument("--workers", type=int, help="solver threads (default: all cores)")
    p.add_argument(
        "--no-distances",
        action="store_true",
        help="drop distance-to-end data (halves big databases)",
    )
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("enumerate", help="count nonisomorphic placements")
    p.add_argument("--shape", required=True)
    p.add_argument("--black", type=int, required=True)
    p.add_argument("--gray", type=int, required=True)
    p.add_argument("--identify-negation", action="store_true")
    p.add_argument(
        "--method",
        choices=("orbit", "burnside", "both"),
        default="both",
        help="'both' cross-checks the two counters (default)",
    )
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="outcome class of one board")
    p.add_argument("--db", required=True)
    p.add_argument("--board", required=True, help="board notation a,b,c:cells")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="outcome table for the named fixtures")
    p.add_argument("--db", required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("census", help="outcome-class census over canonical classes")
    p.add_argument("--db", required=True)
    p.add_argument("--black", type=int)
    p.add_argument("--gray", type=int)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="re-check the fixpoint conditions of a database")
    p.add_argument("--db", required=True)
    p.add_argument("--sample", type=int, help="check a random sample of states")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("play", help="text-mode play against the database")
    p.add_argument("--db", required=True)
    p.add_argument("--human", choices=("black", "gray", "none"), default="black")
    p.add_argument("--ply-cap", type=int, default=200)
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("serve", help="HTTP play service")
    p.add_argument("--db", required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--ply-cap", type=int, default=200)
    p.add_argument("--snapshot", help="persist sessions to this JSON file")
    p.add_argument("--ui", help="serve a built browser client from this directory")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verify_fixtures:
            return _verify_fixtures(args.fixtures)
        if not getattr(args, "command", None):
            parser.print_help()
            return 2
        return args.func(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
