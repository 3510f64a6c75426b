import itertools
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from youngcurv.perm_algebra import (
    GroupRingElement,
    alternator,
    ring_multiply,
    star,
)
from youngcurv.young import (
    Partition,
    YoungTableau,
    essential_factor,
    horizontal_group,
    partitions,
    standard_tableaux,
    verify_ring_decomposition,
    vertical_group,
    young_symmetrizer,
)

CURV = YoungTableau([[1, 3], [2, 4]])


def brute_standard(shape):
    """All fillings of the frame, filtered for increasing rows and columns."""
    r = sum(shape)
    out = []
    for perm in itertools.permutations(range(1, r + 1)):
        rows, k = [], 0
        for length in shape:
            rows.append(perm[k:k + length])
            k += length
        t = YoungTableau(rows)
        if t.is_standard():
            out.append(t)
    return out


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])
    assert Partition([2, 1, 0]).parts == (2, 1)


def test_partitions_of_five():
    assert len(partitions(5)) == 7
    assert partitions(3)[0].parts == (3,)


@pytest.mark.parametrize("shape, count", [((3,), 1), ((2, 1), 2), ((2, 2), 2), ((3, 1), 3)])
def test_standard_tableaux_counts(shape, count):
    ts = standard_tableaux(shape)
    assert len(ts) == count
    assert set(ts) == set(brute_standard(shape))


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
def test_hook_formula_matches_enumeration(r):
    for lam in partitions(r):
        assert lam.num_standard_tableaux() == len(brute_standard(lam.parts))


def test_curvature_tableau_is_standard():
    assert CURV in standard_tableaux((2, 2))
    assert CURV.is_standard()


def test_standard_tableaux_are_ordered():
    words = [[x for row in t.rows for x in row] for t in standard_tableaux((3, 2))]
    assert words == sorted(words)


def test_horizontal_group_of_curvature_tableau():
    expected = {(1, 2, 3, 4), (3, 2, 1, 4), (1, 4, 3, 2), (3, 4, 1, 2)}
    assert {tuple(p) for p in horizontal_group(CURV)} == expected


def test_trivial_groups():
    col = YoungTableau([[1], [2], [3]])
    row = YoungTableau([[1, 2, 3]])
    assert len(horizontal_group(col)) == 1
    assert len(vertical_group(row)) == 1


@pytest.mark.parametrize("r", [2, 3, 4])
def test_group_orders(r):
    for lam in partitions(r):
        for t in standard_tableaux(lam):
            assert len(horizontal_group(t)) == prod(factorial(len(row)) for row in t.rows)
            assert len(vertical_group(t)) == prod(factorial(len(c)) for c in t.columns)


def test_single_box():
    assert young_symmetrizer(YoungTableau([[1]])) == GroupRingElement.identity(1)


def test_column_symmetrizer_is_alternator():
    y = young_symmetrizer(YoungTableau([[1], [2], [3]]))
    assert y == alternator(3)
    a = y / 6
    assert ring_multiply(a, a) == a


def test_curvature_tableau_symmetrizer():
    y = young_symmetrizer(CURV)
    assert len(y) == 16
    assert ring_multiply(y, y) == y * 12


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_essential_idempotency(r):
    for lam in partitions(r):
        for t in standard_tableaux(lam):
            y = young_symmetrizer(t)
            mu = essential_factor(y)
            assert mu == factorial(r) // lam.num_standard_tableaux()
            ys = star(y)
            assert ring_multiply(ys, ys) == ys * mu


def test_nonstandard_tableau_still_essentially_idempotent():
    t = YoungTableau([[3, 1], [2]])
    assert not t.is_standard()
    assert essential_factor(young_symmetrizer(t)) == 3


@pytest.mark.parametrize("r, total", [(1, 1), (3, 6), (4, 24)])
def test_ring_decomposition(r, total):
    rep = verify_ring_decomposition(r)
    assert rep["sum_f_squared"] == total
    assert rep["left_translate_rank"] == total
    assert rep["pass"]


def test_sum_f_squared_r5():
    assert sum(l.num_standard_tableaux() ** 2 for l in partitions(5)) == 120


def test_tableau_parse_and_json():
    t = YoungTableau.parse("1,3;2,4")
    assert t == CURV
    assert t.to_json() == [[1, 3], [2, 4]]
    with pytest.raises(ValueError):
        YoungTableau([[1, 3], [2, 5]])
