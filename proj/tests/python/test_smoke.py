import pytest

import aztec_tilings as az


def test_counts_by_method():
    assert az.count(0, 0, 4) == 1024
    assert az.count(2, 2, 0, method="dense") == 2
    assert az.count(2, 3, 0, method="oracle") == 3
    assert az.count(1, 1, 2) == 0
    assert az.count(0, 0, 10) == 2**55


def test_large_counts_are_python_ints():
    value = az.count(3, 2, 4)
    assert isinstance(value, int)
    assert value == az.count(3, 2, 4, method="dense")


def test_closed_forms():
    assert [az.aztec_closed_form(n) for n in range(4)] == [1, 2, 8, 64]
    assert [az.delannoy_closed_form(n) for n in range(4)] == [1, 3, 13, 63]
    assert all(az.count(1, 0, n) == az.delannoy_closed_form(n) for n in range(1, 6))


def test_region():
    assert az.row_lengths(3, 2, 4) == [5, 7, 9, 11, 11, 11, 11, 9, 7, 5]
    assert az.square_count(3, 2, 4) == 86
    assert sorted(az.cells(0, 0, 1)) == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_matrices():
    assert az.bar_A(1) == [[0, 1], [1, 0]]
    assert az.central_C(0) == [[1]]
    assert az.lower_L(2) == [[1, 0, 0, 1]]
    assert az.upper_U(2) == [[1], [0], [0], [1]]
    assert az.state_index("ba") == 3
    assert az.state_word(2, 2) == "ab"


def test_oracle():
    tilings = az.enumerate_tilings(0, 0, 1)
    assert len(tilings) == 2
    assert tilings[0] == [((1, 1), (2, 1)), ((1, 2), (2, 2))]
    assert az.count_mosaics_bruteforce(1, 0, 1) == 3


def test_errors():
    with pytest.raises(az.CapacityError):
        az.count(0, 0, 7, method="dense")
    with pytest.raises(az.CapacityError):
        az.count(0, 0, 4, method="vector", vector_cap=6)
    with pytest.raises(ValueError):
        az.count(0, 0, 1, method="magic")
    with pytest.raises(ValueError):
        az.count(-1, 0, 0)
