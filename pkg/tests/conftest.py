import pytest

from abalone_solver import (
    BoardShape,
    GameConfig,
    build_board,
    load_fixtures,
    parse_constellation,
    solve,
)


@pytest.fixture(scope="session")
def fixtures():
    return load_fixtures()


@pytest.fixture(scope="session")
def kernels_warm():
    """Compile the solver kernels on a 3-cell board so timed tests measure
    the algorithm, not the JIT."""
    tiny = parse_constellation("1,2,2:B..G")
    solve(GameConfig(BoardShape(1, 2, 2), 1, tiny))
    return True


@pytest.fixture(scope="session")
def config222(fixtures):
    return fixtures.standard_config(BoardShape(2, 2, 2))


@pytest.fixture(scope="session")
def config223(fixtures):
    return fixtures.standard_config(BoardShape(2, 2, 3))


@pytest.fixture(scope="session")
def db222(config222, kernels_warm):
    return solve(config222)


@pytest.fixture(scope="session")
def db223(config223, kernels_warm):
    return solve(config223)


@pytest.fixture(scope="session")
def board222():
    return build_board(BoardShape(2, 2, 2))


@pytest.fixture(scope="session")
def board223():
    return build_board(BoardShape(2, 2, 3))
