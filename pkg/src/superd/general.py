"""Super-d-complexity of arbitrary words and the maximum over all words.

``oracle_enumerate`` is the literal definition: walk every increasing index
sequence whose consecutive gaps are at least ``d`` and collect the words they
spell.  It shares no code with the rainbow counters.

``max_complexity`` searches canonical words only (restricted-growth strings:
letter ``k + 1`` never appears before letter ``k``).  Renaming letters does not
change the complexity, so one word per renaming class suffices.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from superd.counting import _check_length, check_gap, complexity_middle
from superd.errors import CapExceeded
from superd.graph import DEFAULT_ENUM_CAP, check_enum_cap, initial_latin_matrix, latin_union, warshall_latin

Word = tuple[int, ...]

DEFAULT_ORACLE_CAP = 18
DEFAULT_SEARCH_CAP = 16


def oracle_enumerate(w: Sequence[int], d: int, cap: int = DEFAULT_ORACLE_CAP) -> set[Word]:
    """Every distinct super-d-subword of ``w``, by brute force over index sequences."""
    check_gap(d)
    n = len(w)
    if n > cap:
        raise CapExceeded(f"oracle enumeration is limited to words of length <= {cap}, got {n}")
    found: set[Word] = set()
    # stack of (last index used, letters so far)
    stack: list[tuple[int, Word]] = [(i, (w[i],)) for i in range(n)]
    while stack:
        last, prefix = stack.pop()
        found.add(prefix)
        for nxt in range(last + d, n):
            stack.append((nxt, prefix + (w[nxt],)))
    return found


def complexity_leftmost(w: Sequence[int], d: int) -> int:
    """Count distinct super-d-subwords without listing them.

    A word embeds with gaps >= d iff its greedy leftmost embedding does, so
    distinct subwords correspond one-to-one to greedy embeddings.  ``tail[p]``
    counts the words whose greedy embedding starts at position ``p``.
    """
    check_gap(d)
    n = len(w)
    tail = [0] * n
    first_at: dict[int, int] = {}  # letter -> first position >= the scan point
    ahead: list[dict[int, int]] = [{} for _ in range(n + 1)]
    for p in range(n - 1, -1, -1):
        first_at[w[p]] = p
        ahead[p] = dict(first_at)
    for p in range(n - 1, -1, -1):
        q = p + d
        tail[p] = 1 + (sum(tail[r] for r in ahead[q].values()) if q < n else 0)
    return sum(tail[r] for r in ahead[0].values()) if n else 0


def complexity_general(
    w: Sequence[int], d: int, method: str = "oracle", cap: int | None = None
) -> int:
    """S_w(d), the number of distinct super-d-subwords of ``w``.

    ``method="oracle"`` counts the brute-force set.  ``method="latin"`` runs the
    Warshall-Latin closure on the word's gap matrix, merges all cells into one
    set (repeated letters make cells overlap) and adds the distinct letters.
    """
    check_gap(d)
    if method == "oracle":
        return len(oracle_enumerate(w, d, DEFAULT_ORACLE_CAP if cap is None else cap))
    if method == "latin":
        return len(latin_enumerate(w, d, cap))
    raise ValueError(f"unknown method {method!r}; expected 'oracle' or 'latin'")


def latin_enumerate(w: Sequence[int], d: int, cap: int | None = None) -> set[Word]:
    """All distinct super-d-subwords of ``w`` through the Warshall-Latin closure."""
    check_gap(d)
    if not w:
        return set()
    check_enum_cap(len(w), d, DEFAULT_ENUM_CAP if cap is None else cap)
    words = latin_union(warshall_latin(initial_latin_matrix(w, d)))
    words.update((x,) for x in w)
    return words


def complexity_bounds(w: Sequence[int], d: int) -> tuple[int, int]:
    """(ceil(|w| / d), S(|w|, d)): the constant word and the rainbow word attain them."""
    check_gap(d)
    n = len(w)
    return -(-n // d), complexity_middle(n, d)


def canonical_words(m: int, n: int) -> Iterator[Word]:
    """Restricted-growth words of length ``n`` over at most ``m`` letters, in lexicographic order."""
    if n == 0:
        yield ()
        return
    word = [0] * n
    # ceiling[i] = 1 + largest letter among word[:i]
    ceiling = [1] * (n + 1)
    while True:
        yield tuple(word)
        i = n - 1
        while i > 0 and (word[i] + 1 >= m or word[i] + 1 > ceiling[i]):
            i -= 1
        if i == 0:
            return
        word[i] += 1
        for j in range(i + 1, n):
            word[j] = 0
        for j in range(i, n):
            ceiling[j + 1] = max(ceiling[j], word[j] + 1)


def canonical_count(m: int, n: int) -> int:
    """Number of restricted-growth words: sum of Stirling numbers S2(n, k) for k <= m."""
    if n == 0:
        return 1
    row = [1] + [0] * m  # S2(0, k)
    for i in range(1, n + 1):
        new = [0] * (m + 1)
        for k in range(1, min(i, m) + 1):
            new[k] = k * row[k] + row[k - 1]
        row = new
    return sum(row)


@dataclass(frozen=True)
class MaxComplexityResult:
    m: int
    n: int
    d: int
    value: int
    witness: Word
    candidates: int = field(default=0, compare=False)


def _score_chunk(args: tuple[list[Word], int]) -> list[int]:
    words, d = args
    return [complexity_leftmost(w, d) for w in words]


def max_complexity(
    m: int, n: int, d: int, cap: int = DEFAULT_SEARCH_CAP, workers: int = 1
) -> MaxComplexityResult:
    """f(m, n, d): the largest super-d-complexity of a length-n word over ``m`` letters.

    Words may use fewer than ``m`` distinct letters.  The witness is the
    lexicographically least canonical word reaching the maximum.  The search is
    refused when it has more candidates than binary words of length ``cap``.
    ``workers > 1`` scores candidates in a process pool; the result does not
    depend on it.
    """
    _check_length(m, allow_zero=False)
    _check_length(n, allow_zero=False)
    check_gap(d)
    total = canonical_count(m, n)
    budget = canonical_count(2, cap)
    if total > budget:
        raise CapExceeded(
            f"searching m={m}, n={n} means {total} canonical words, above the limit of "
            f"{budget} (binary words of length {cap}); raise the cap to proceed"
        )
    words = list(canonical_words(m, n))
    if workers > 1 and len(words) > 1:
        size = math.ceil(len(words) / (workers * 4))
        chunks = [(words[i : i + size], d) for i in range(0, len(words), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            scores = [s for part in pool.map(_score_chunk, chunks) for s in part]
    else:
        scores = _score_chunk((words, d))
    best = max(scores)
    witness = words[scores.index(best)]
    return MaxComplexityResult(m, n, d, best, witness, candidates=total)


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    n: int
    d: int
    expected: int | None
    observed: int

    @property
    def status(self) -> str:
        if self.expected is None:
            return "reported"
        return "pass" if self.observed == self.expected else "fail"


@dataclass
class IdentityReport:
    checks: list[IdentityCheck]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def by_identity(self, name: str) -> list[IdentityCheck]:
        return [c for c in self.checks if c.identity == name]


F2_IDENTITIES = {
    "f2(n,n-1)=3": "f(2,n,n-1) = 3 for n >= 3",
    "f2(n,n-2)=5": "f(2,n,n-2) = 5 for n >= 4",
    "f2(n,d)=6": "f(2,n,d) = 6 for ceil(n/2) <= d <= n-3, n >= 6",
    "f2(n,(n-2)/2)=10": "f(2,n,(n-2)/2) = 10 for even n >= 6",
    "f2(n,(n-1)/2)": "f(2,n,(n-1)/2) for odd n >= 5 (value reported, not asserted)",
}


def _f2_cases(n: int) -> Iterator[tuple[str, int, int | None]]:
    if n >= 3:
        yield "f2(n,n-1)=3", n - 1, 3
    if n >= 4:
        yield "f2(n,n-2)=5", n - 2, 5
    if n >= 6:
        for d in range(-(-n // 2), n - 2):
            yield "f2(n,d)=6", d, 6
    if n >= 6 and n % 2 == 0:
        yield "f2(n,(n-2)/2)=10", (n - 2) // 2, 10
    if n >= 5 and n % 2 == 1:
        yield "f2(n,(n-1)/2)", (n - 1) // 2, None


def verify_f2_identities(n_max: int, cap: int = DEFAULT_SEARCH_CAP) -> IdentityReport:
    """Brute-force each listed identity for f(2, n, d) at every applicable n <= n_max."""
    _check_length(n_max, allow_zero=False)
    cache: dict[tuple[int, int], int] = {}
    checks = []
    for n in range(1, n_max + 1):
        for name, d, expected in _f2_cases(n):
            if (n, d) not in cache:
                cache[n, d] = max_complexity(2, n, d, cap=cap).value
            checks.append(IdentityCheck(name, n, d, expected, cache[n, d]))
    return IdentityReport(checks)
