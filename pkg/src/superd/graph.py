"""Gap digraph of a word and Warshall-style path counting / enumeration.

Vertex ``i`` is position ``i`` of the word; there is an edge ``i -> j`` when
``j - i >= d``.  Every directed path spells a super-d-subword of length >= 2.

Words are tuples of letter indices.  For the rainbow word of length n the
letter at position i is simply ``i`` (rendered a, b, c, ...).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from superd.counting import _check_length, check_gap, complexity_middle, complexity_power_of_two
from superd.errors import CapExceeded

Word = tuple[int, ...]
Matrix = list[list[int]]
SetMatrix = list[list[frozenset[Word]]]

DEFAULT_ENUM_CAP = 30


def build_adjacency(n: int, d: int) -> Matrix:
    """0/1 adjacency matrix of the gap DAG on ``n`` vertices."""
    _check_length(n, allow_zero=False)
    check_gap(d)
    return [[1 if j - i >= d else 0 for j in range(n)] for i in range(n)]


def warshall_paths(A: Sequence[Sequence[int]]) -> Matrix:
    """Count directed paths between every pair of vertices of an acyclic graph.

    ``w[i][j] += w[i][k] * w[k][j]`` with ``k`` outermost, then ``i``, then ``j``.
    Zero products are skipped, which leaves the result unchanged.
    """
    n = len(A)
    W = [list(row) for row in A]
    for k in range(n):
        row_k = W[k]
        for i in range(n):
            w_ik = W[i][k]
            if not w_ik:
                continue
            row_i = W[i]
            for j in range(n):
                if row_k[j]:
                    row_i[j] += w_ik * row_k[j]
    return W


def reach_matrix(n: int, d: int) -> Matrix:
    """R = I + W for the gap DAG; ``R[i][j]`` counts paths of length >= 0."""
    W = warshall_paths(build_adjacency(n, d))
    for i in range(n):
        W[i][i] += 1
    return W


def complexity_graph(n: int, d: int) -> int:
    """S(n, d) as the sum of all entries of R = I + W."""
    return sum(map(sum, reach_matrix(n, d)))


def initial_latin_matrix(word: Sequence[int], d: int) -> SetMatrix:
    """Cell (i, j) holds the two-letter word ``x_i x_j`` when ``j - i >= d``, else nothing."""
    check_gap(d)
    n = len(word)
    empty: frozenset[Word] = frozenset()
    return [
        [frozenset({(word[i], word[j])}) if j - i >= d else empty for j in range(n)]
        for i in range(n)
    ]


def warshall_latin(M: Sequence[Sequence[Iterable[Word]]]) -> SetMatrix:
    """Close a matrix of word sets under path concatenation.

    Whenever cells (i, k) and (k, j) are both nonempty, every ``u`` from (i, k)
    is joined to every ``v`` from (k, j) with ``v``'s first letter dropped,
    since it repeats the last letter of ``u``.
    """
    n = len(M)
    W = [[set(cell) for cell in row] for row in M]
    for k in range(n):
        row_k = W[k]
        for i in range(n):
            left = W[i][k]
            if not left:
                continue
            row_i = W[i]
            for j in range(n):
                right = row_k[j]
                if right:
                    row_i[j].update(u + v[1:] for u in left for v in right)
    return [[frozenset(cell) for cell in row] for row in W]


def latin_union(W: Sequence[Sequence[Iterable[Word]]]) -> set[Word]:
    """Union of all cells; duplicates across cells collapse here."""
    out: set[Word] = set()
    for row in W:
        for cell in row:
            out.update(cell)
    return out


def check_enum_cap(n: int, d: int, cap: int = DEFAULT_ENUM_CAP) -> None:
    """Refuse enumerations larger than all subwords of a length-``cap`` rainbow word at d = 1."""
    budget = complexity_power_of_two(cap)
    if complexity_middle(n, d) > budget:
        raise CapExceeded(
            f"enumerating n={n}, d={d} would produce more than {budget} words "
            f"(cap {cap}); raise the cap to proceed"
        )


def enumerate_rainbow(n: int, d: int, cap: int = DEFAULT_ENUM_CAP) -> set[Word]:
    """All super-d-subwords of the rainbow word ``0 1 ... n-1``, single letters included.

    With the default cap this refuses ``n > 30`` at ``d = 1``.
    """
    _check_length(n, allow_zero=False)
    check_gap(d)
    check_enum_cap(n, d, cap)
    words = latin_union(warshall_latin(initial_latin_matrix(range(n), d)))
    words.update((i,) for i in range(n))
    return words
