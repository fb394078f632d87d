import pytest

from qmaze import (Direction, format_path, index_to_path, parse_path,
                   path_length, path_to_index)

N, E, S, W = Direction.N, Direction.E, Direction.S, Direction.W


def test_length_diagonal():
    assert path_length((0, 0), (2, 2)) == 8


def test_length_same_room():
    assert path_length((3, 1), (3, 1)) == 0


def test_length_straight():
    assert path_length((0, 0), (0, 3)) == 6


def test_length_symmetric_and_positive():
    coords = [(0, 0), (1, 3), (4, 2), (2, 2), (5, 0)]
    for a in coords:
        for b in coords:
            assert path_length(a, b) == path_length(b, a)
            assert (path_length(a, b) == 0) == (a == b)


def test_index_all_north_is_zero():
    assert path_to_index([N, N]) == 0


def test_index_east_west():
    # E=01, W=11, first step most significant: 0b0111
    assert path_to_index([E, W]) == 7


def test_index_lexicographic_order():
    n = 3
    paths = [index_to_path(i, n) for i in range(4**n)]
    assert paths == sorted(paths, key=lambda p: tuple(int(d) for d in p))


def test_bijection_exhaustive_n4():
    for idx in range(4**4):
        assert path_to_index(index_to_path(idx, 4)) == idx


def test_bijection_exhaustive_n8():
    for idx in range(4**8):
        assert path_to_index(index_to_path(idx, 8)) == idx


def test_roundtrip_from_paths():
    for steps in [(), (S,), (E, E, S, S), (W, N, W, N, E, S)]:
        assert index_to_path(path_to_index(steps), len(steps)) == tuple(steps)


def test_index_rejects_out_of_range():
    with pytest.raises(ValueError):
        index_to_path(-1, 2)
    with pytest.raises(ValueError):
        index_to_path(16, 2)
    with pytest.raises(ValueError):
        index_to_path(0, -1)


def test_index_rejects_length_mismatch():
    with pytest.raises(ValueError):
        path_to_index([N, E], n=3)


def test_parse_format_roundtrip():
    for text in ["", "N", "EENN", "NESWWSEN"]:
        assert format_path(parse_path(text)) == text


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse_path("NEX")
