"""Counting super-d-subwords of rainbow words.

Every function here works on the length ``n`` of a rainbow word and the gap
``d`` only, because the count does not depend on which distinct letters are
used.  All counts are exact Python ints.

Positions are 1-based in docstrings and 0-based in storage.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence


def check_gap(d: int) -> int:
    """Validate a gap parameter and return it unchanged."""
    if isinstance(d, bool) or not isinstance(d, int):
        raise TypeError(f"gap must be an int, got {type(d).__name__}")
    if d < 1:
        raise ValueError(f"gap d must be >= 1, got {d}")
    return d


def _check_length(n: int, *, allow_zero: bool) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"length must be an int, got {type(n).__name__}")
    lowest = 0 if allow_zero else 1
    if n < lowest:
        raise ValueError(f"length n must be >= {lowest}, got {n}")
    return n


@dataclass(frozen=True)
class BeginCountVector:
    """Begin-counts ``b(1..n)`` of a rainbow word of length ``n``.

    ``counts[i - 1]`` is the number of super-d-subwords starting at position i.
    """

    n: int
    d: int
    counts: tuple[int, ...]

    def at(self, i: int) -> int:
        """1-based access."""
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside 1..{self.n}")
        return self.counts[i - 1]

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.counts)


_UNSET = None


def _begin_fill(n: int, d: int, start: int, b: list[int | None], order: list[int] | None = None) -> None:
    # Algorithm B with the call stack made explicit.  A frame is
    # (position, next k to inspect, partial sum).
    stack = [[start, start + d, 1]]
    while stack:
        frame = stack[-1]
        i, k, p = frame
        while k < n and b[k] is not _UNSET:
            p += b[k]
            k += 1
        if k < n:
            frame[1], frame[2] = k, p
            stack.append([k, k + d, 1])
            continue
        b[i] = p
        if order is not None:
            order.append(i)
        stack.pop()


def begin_counts(n: int, d: int) -> BeginCountVector:
    """Return ``b_{n,d}(i)`` for every position ``i`` of a length-n rainbow word.

    Follows the memoised recursion ``b(i) = 1 + b(i+d) + ... + b(n)``; positions
    with ``i > n - d`` get the empty sum, i.e. 1.
    """
    _check_length(n, allow_zero=False)
    check_gap(d)
    b: list[int | None] = [_UNSET] * n
    for i in range(n):
        if b[i] is _UNSET:
            _begin_fill(n, d, i, b)
    return BeginCountVector(n, d, tuple(b))  # type: ignore[arg-type]


def begin_fill_order(n: int, d: int, i: int = 1) -> list[tuple[int, int]]:
    """Trace a single call ``B(n, d, i)``: the (1-based position, value) pairs in the order they are set."""
    _check_length(n, allow_zero=False)
    check_gap(d)
    if not 1 <= i <= n:
        raise ValueError(f"start position {i} outside 1..{n}")
    b: list[int | None] = [_UNSET] * n
    order: list[int] = []
    _begin_fill(n, d, i - 1, b, order)
    return [(pos + 1, b[pos]) for pos in order]  # type: ignore[misc]


def complexity_recursive(n: int, d: int) -> int:
    """S(n, d) as the sum of all begin-counts. ``S(0, d) == 0``."""
    _check_length(n, allow_zero=True)
    check_gap(d)
    if n == 0:
        return 0
    return sum(begin_counts(n, d).counts)


def middle_term(n: int, d: int) -> int:
    """The n-th term of the d-middle sequence.

    ``M(0) = 0``, ``M(1) = ... = M(d-1) = 1`` and ``M(n) = M(n-1) + M(n-d)``.
    Uses a rolling buffer of ``d`` cells.  For ``d == 1`` the initial block is
    empty and ``M(n) = 2**(n-1)`` is used instead.
    """
    _check_length(n, allow_zero=True)
    check_gap(d)
    if n == 0:
        return 0
    if d == 1:
        return 1 << (n - 1)
    buf = [0] + [1] * (d - 1)
    if n < d:
        return buf[n]
    for i in range(d, n + 1):
        buf[i % d] = buf[(i - 1) % d] + buf[(i - d) % d]
    return buf[n % d]


def complexity_middle(n: int, d: int) -> int:
    """S(n, d) = M(n + d) - 1, applied for every n >= 1."""
    _check_length(n, allow_zero=True)
    check_gap(d)
    if n == 0:
        return 0
    return middle_term(n + d, d) - 1


def complexity_binomial(n: int, d: int) -> int:
    """S(n, d) as the sum over k of C(n - (d-1)k, k + 1)."""
    _check_length(n, allow_zero=False)
    check_gap(d)
    total = 0
    k = 0
    while n - (d - 1) * k >= k + 1:
        total += comb(n - (d - 1) * k, k + 1)
        k += 1
    return total


def begin_count_binomial(n: int, d: int) -> int:
    """b_{n,d}(1) as the sum over k of C(n - 1 - (d-1)k, k)."""
    _check_length(n, allow_zero=False)
    check_gap(d)
    top = n - 1
    total = 0
    k = 0
    while top - (d - 1) * k >= k:
        total += comb(top - (d - 1) * k, k)
        k += 1
    return total


def complexity_power_of_two(n: int) -> int:
    """S(n, 1) = 2**n - 1: every nonempty subsequence of a rainbow word."""
    _check_length(n, allow_zero=True)
    return (1 << n) - 1


def series_divide(numerator: Sequence[int], denominator: Sequence[int], count: int) -> list[int]:
    """First ``count`` coefficients of ``numerator / denominator`` as formal power series.

    The denominator must have constant term 1 so the division stays integral.
    """
    if not denominator or denominator[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out: list[int] = []
    for j in range(count):
        c = numerator[j] if j < len(numerator) else 0
        for t in range(1, min(j, len(denominator) - 1) + 1):
            if denominator[t]:
                c -= denominator[t] * out[j - t]
        out.append(c)
    return out


def middle_series(d: int, N: int) -> list[int]:
    """Coefficients of z^0..z^N of ``z / (1 - z - z^d)`` by series long division."""
    check_gap(d)
    _check_length(N, allow_zero=True)
    if d < 2:
        raise ValueError("middle_series needs d >= 2")
    denominator = [1] + [0] * d
    denominator[1] -= 1
    denominator[d] -= 1
    return series_divide([0, 1], denominator, N + 1)
