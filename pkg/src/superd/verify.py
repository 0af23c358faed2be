"""Cross-method and identity checks, as run by ``superd verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass

from superd.counting import (
    begin_count_binomial,
    begin_counts,
    complexity_binomial,
    complexity_middle,
    complexity_power_of_two,
    complexity_recursive,
    middle_series,
    middle_term,
)
from superd.general import complexity_general, oracle_enumerate, verify_f2_identities
from superd.graph import complexity_graph


@dataclass
class CheckResult:
    name: str
    cases: int
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures


def _fib(count: int) -> list[int]:
    # F_0..F_{count-1}
    out = [0, 1]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


def method_agreement(n_max: int, d_max: int) -> CheckResult:
    fails, cases = [], 0
    for n in range(1, n_max + 1):
        for d in range(1, min(n, d_max) + 1):
            cases += 1
            values = (
                complexity_recursive(n, d),
                complexity_middle(n, d),
                complexity_binomial(n, d),
                complexity_graph(n, d),
            )
            if len(set(values)) != 1:
                fails.append(f"S({n},{d}): recursive/middle/binomial/graph = {values}")
    return CheckResult("four-way method agreement", cases, fails)


def begin_count_agreement(n_max: int, d_max: int) -> CheckResult:
    fails, cases = [], 0
    for n in range(1, n_max + 1):
        for d in range(1, min(n, d_max) + 1):
            cases += 1
            values = (begin_counts(n, d).at(1), middle_term(n, d), begin_count_binomial(n, d))
            if len(set(values)) != 1:
                fails.append(f"b_{{{n},{d}}}(1): {values}")
    return CheckResult("begin-count agreement", cases, fails)


def oracle_rainbow(n_max: int, cap: int) -> CheckResult:
    fails, cases = [], 0
    for n in range(1, n_max + 1):
        for d in range(1, n + 1):
            cases += 1
            got = len(oracle_enumerate(range(n), d, cap=cap))
            want = complexity_middle(n, d)
            if got != want:
                fails.append(f"rainbow n={n}, d={d}: oracle {got} != {want}")
    return CheckResult("oracle equivalence (rainbow)", cases, fails)


def random_general_words(count: int, n_max: int = 12, m_max: int = 4, seed: int = 0):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, n_max)
        m = rng.randint(2, m_max)
        d = rng.randint(1, n)
        yield tuple(rng.randrange(m) for _ in range(n)), d


def oracle_general(count: int, seed: int = 0) -> CheckResult:
    fails = []
    for w, d in random_general_words(count, seed=seed):
        a = complexity_general(w, d, "oracle")
        b = complexity_general(w, d, "latin")
        if a != b:
            fails.append(f"word {w}, d={d}: oracle {a} != latin {b}")
    return CheckResult("oracle equivalence (general words)", count, fails)


def fibonacci_identities(n_max: int) -> CheckResult:
    F = _fib(n_max + 3)
    fails = []
    for n in range(1, n_max + 1):
        if middle_term(n, 2) != F[n]:
            fails.append(f"M({n},2) != F_{n}")
        if complexity_middle(n, 2) != F[n + 2] - 1:
            fails.append(f"S({n},2) != F_{n + 2} - 1")
    return CheckResult("Fibonacci identities", n_max, fails)


def sum_identity(n_max: int, d_max: int) -> CheckResult:
    fails, cases = [], 0
    for d in range(2, d_max + 1):
        running = 0
        for n in range(1, n_max + 1):
            running += middle_term(n, d)
            cases += 1
            if running != middle_term(n + d, d) - 1:
                fails.append(f"sum M(1..{n},{d}) != M({n + d},{d}) - 1")
    return CheckResult("middle-sequence sum identity", cases, fails)


def incremental_identity(n_max: int, d_max: int) -> CheckResult:
    fails, cases = [], 0
    for d in range(1, d_max + 1):
        for n in range(0, n_max):
            cases += 1
            if complexity_middle(n + 1, d) != complexity_middle(n, d) + begin_count_binomial(n + 1, d):
                fails.append(f"S({n + 1},{d}) != S({n},{d}) + b_{{{n + 1},{d}}}(1)")
    return CheckResult("incremental identity", cases, fails)


def series_agreement(n_max: int, d_max: int) -> CheckResult:
    fails, cases = [], 0
    for d in range(2, d_max + 1):
        coeffs = middle_series(d, n_max)
        for n, c in enumerate(coeffs):
            cases += 1
            if c != middle_term(n, d):
                fails.append(f"[z^{n}] series(d={d}) = {c} != M({n},{d})")
    return CheckResult("generating-function coefficients", cases, fails)


def power_of_two(n_max: int) -> CheckResult:
    fails = [f"S({n},1)" for n in range(n_max + 1) if complexity_middle(n, 1) != complexity_power_of_two(n)]
    return CheckResult("S(n,1) = 2^n - 1", n_max + 1, fails)


def f2_identities(n_max: int) -> CheckResult:
    report = verify_f2_identities(n_max)
    fails = [
        f"{c.identity} at n={c.n}, d={c.d}: got {c.observed}, expected {c.expected}"
        for c in report.checks
        if c.status == "fail"
    ]
    return CheckResult("f(2,n,d) identities", len(report.checks), fails)


def run_all(
    n_max: int = 30,
    d_max: int = 30,
    oracle_max: int = 14,
    oracle_cap: int = 18,
    random_words: int = 200,
    f2_max: int = 12,
    seed: int = 0,
) -> list[CheckResult]:
    return [
        method_agreement(n_max, d_max),
        begin_count_agreement(n_max, d_max),
        oracle_rainbow(min(n_max, oracle_max), oracle_cap),
        oracle_general(random_words, seed),
        fibonacci_identities(n_max),
        sum_identity(2 * n_max, min(d_max, 10)),
        incremental_identity(n_max, d_max),
        series_agreement(n_max, min(d_max, 10)),
        power_of_two(n_max),
        f2_identities(min(n_max, f2_max)),
    ]
