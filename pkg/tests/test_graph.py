import pytest

import brute
from superd.counting import complexity_recursive
from superd.errors import CapExceeded
from superd.graph import (
    build_adjacency,
    complexity_graph,
    enumerate_rainbow,
    initial_latin_matrix,
    latin_union,
    reach_matrix,
    warshall_latin,
    warshall_paths,
)
from superd.words import parse_word, render_word

A_6_2 = [
    [0, 0, 1, 1, 1, 1],
    [0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
]
W_6_2 = [
    [0, 0, 1, 1, 2, 3],
    [0, 0, 0, 1, 1, 2],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0],
]
R_6_2 = [
    [1, 0, 1, 1, 2, 3],
    [0, 1, 0, 1, 1, 2],
    [0, 0, 1, 0, 1, 1],
    [0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
]


def cells(layout):
    """{(row, col): "ag adg"} with 1-based indices -> expected set matrix entries."""
    return {k: {parse_word(w) for w in v.split()} for k, v in layout.items()}


# nonempty cells of the n=8, d=3 result; every other cell is empty
LATIN_8_3 = cells(
    {
        (1, 4): "ad", (1, 5): "ae", (1, 6): "af", (1, 7): "ag adg", (1, 8): "ah adh aeh",
        (2, 5): "be", (2, 6): "bf", (2, 7): "bg", (2, 8): "bh beh",
        (3, 6): "cf", (3, 7): "cg", (3, 8): "ch",
        (4, 7): "dg", (4, 8): "dh",
        (5, 8): "eh",
    }
)  # fmt: skip


def test_adjacency():
    assert build_adjacency(6, 2) == A_6_2
    assert build_adjacency(3, 5) == [[0] * 3 for _ in range(3)]
    assert build_adjacency(4, 1) == [[1 if j > i else 0 for j in range(4)] for i in range(4)]


def test_warshall_worked_example():
    assert warshall_paths(A_6_2) == W_6_2
    assert reach_matrix(6, 2) == R_6_2
    assert complexity_graph(6, 2) == 20


def test_warshall_zero_matrix():
    Z = [[0] * 5 for _ in range(5)]
    assert warshall_paths(Z) == Z


def test_warshall_does_not_mutate_input():
    A = build_adjacency(5, 1)
    before = [row[:] for row in A]
    warshall_paths(A)
    assert A == before


@pytest.mark.parametrize("n,d,want", [(1, 3, 1), (12, 6, 33), (8, 3, 27)])
def test_complexity_graph(n, d, want):
    assert complexity_graph(n, d) == want


@pytest.mark.parametrize("n", range(1, 13))
def test_warshall_equals_matrix_power_sum(n):
    for d in range(1, n + 1):
        A = build_adjacency(n, d)
        assert warshall_paths(A) == brute.power_sum(A)


def test_graph_agrees_with_recursion():
    for n in range(1, 31):
        for d in range(1, n + 1):
            assert complexity_graph(n, d) == complexity_recursive(n, d)


def test_latin_worked_example():
    W = warshall_latin(initial_latin_matrix(range(8), 3))
    for i in range(8):
        for j in range(8):
            assert set(W[i][j]) == LATIN_8_3.get((i + 1, j + 1), set()), (i + 1, j + 1)


def test_latin_initial_matrix_8_3():
    M = initial_latin_matrix(range(8), 3)
    assert M[0][3] == {parse_word("ad")}
    assert M[0][2] == set()
    assert M[4][7] == {parse_word("eh")}


def test_latin_empty_matrix():
    E = [[frozenset()] * 4 for _ in range(4)]
    assert warshall_latin(E) == E


def test_latin_abcdef_nontrivial():
    assert len(latin_union(warshall_latin(initial_latin_matrix(range(6), 2)))) == 14


@pytest.mark.parametrize("n", range(1, 11))
def test_cell_sizes_equal_path_counts(n):
    for d in range(1, n + 1):
        W = warshall_paths(build_adjacency(n, d))
        L = warshall_latin(initial_latin_matrix(range(n), d))
        for i in range(n):
            for j in range(n):
                assert len(L[i][j]) == W[i][j]
                for w in L[i][j]:
                    assert w[0] == i and w[-1] == j
                    assert all(b - a >= d for a, b in zip(w, w[1:]))


ABCDEF_2 = "a ac ad ae af ace acf adf b bd be bf bdf c ce cf d df e f".split()


def test_enumerate_abcdef():
    assert {render_word(w) for w in enumerate_rainbow(6, 2)} == set(ABCDEF_2)


def test_enumerate_small():
    assert enumerate_rainbow(1, 1) == {(0,)}
    assert len(enumerate_rainbow(8, 3)) == 27


def test_enumerate_counts_match_formula():
    for n in range(1, 15):
        for d in range(1, n + 1):
            assert len(enumerate_rainbow(n, d)) == complexity_recursive(n, d)


def test_enumerate_matches_brute_force():
    for n, d in [(7, 1), (9, 2), (10, 4)]:
        assert enumerate_rainbow(n, d) == brute.subwords(tuple(range(n)), d)


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        enumerate_rainbow(31, 1)
    with pytest.raises(CapExceeded):
        enumerate_rainbow(12, 1, cap=10)
    assert len(enumerate_rainbow(12, 1, cap=12)) == 4095
