import pytest

from qmaze import build_fitness_table, generate_maze


@pytest.fixture(scope="session")
def maze2():
    return generate_maze(2, 42)


@pytest.fixture(scope="session")
def maze3():
    return generate_maze(3, 11)


@pytest.fixture(scope="session")
def maze4():
    return generate_maze(4, 3)


@pytest.fixture(scope="session")
def table2_n4(maze2):
    return build_fitness_table(maze2, (0, 0), (1, 1), 4)


@pytest.fixture(scope="session")
def table3_n6(maze3):
    return build_fitness_table(maze3, (0, 0), (2, 2), 6)


@pytest.fixture(scope="session")
def table4_n6(maze4):
    return build_fitness_table(maze4, (0, 0), (3, 3), 6)
