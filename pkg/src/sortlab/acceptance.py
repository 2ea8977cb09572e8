"""Acceptance gate: the binding correctness and complexity checks.

Each criterion is a function returning a :class:`CheckResult`; the runner
executes all of them in order and emits one pass/fail line per criterion.
Operation counts are the binding signal; the wall-time tables are
informational because absolute timing is machine-dependent.

The full gate takes several minutes in CPython: the instrumented
quadratic baseline at n=10^4 and the 20-seed scaling sweep dominate.
"""

from __future__ import annotations

import io
import statistics
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Optional

from . import models
from .bench import ALGORITHMS, fit_scaling_exponent, run_suite, write_csv
from .datagen import DatasetSpec, derive_seed, generate
from .stats import SortStats

BASE_SEED = 20210621
AVG_TRIALS = 20


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    report_only: bool = False

    def line(self) -> str:
        tag = "INFO" if self.report_only else ("PASS" if self.passed else "FAIL")
        return f"{tag}  {self.number:2d}. {self.name}: {self.detail}"


Cache = Dict[str, object]


def _counts(algo: str, spec: DatasetSpec) -> SortStats:
    work = generate(spec)
    stats = SortStats()
    ALGORITHMS[algo](work, stats=stats)
    if work != sorted(work):
        raise AssertionError(f"{algo} failed to sort {spec!r}")
    return stats


def _mean_counts(algo: str, kind: str, n: int, label: str, trials: int = AVG_TRIALS):
    comps = []
    assigns = []
    for t in range(trials):
        seed = derive_seed(BASE_SEED, label, algo, kind, n, t)
        st = _counts(algo, DatasetSpec(kind, n, seed=seed))
        comps.append(st.comparisons)
        assigns.append(st.assignments)
    return statistics.fmean(comps), statistics.fmean(assigns)


def check_correctness(cache: Cache) -> CheckResult:
    """Exhaustive small inputs plus randomized oracle equivalence."""
    import random

    cases = 0
    for length in range(11):
        for tup in product((0, 1, 2), repeat=length):
            expected = sorted(tup)
            for algo, sort in ALGORITHMS.items():
                work = list(tup)
                sort(work, stats=SortStats())
                if work != expected:
                    return CheckResult(
                        1, "correctness", False, f"{algo} failed on {tup!r}"
                    )
            cases += 1
    rng = random.Random(derive_seed(BASE_SEED, "oracle"))
    for _ in range(1000):
        n = rng.randrange(0, 2001)
        data = [rng.randrange(0, 2**31) for _ in range(n)]
        expected = sorted(data)
        for algo, sort in ALGORITHMS.items():
            work = list(data)
            sort(work, stats=SortStats())
            if work != expected:
                return CheckResult(
                    1, "correctness", False, f"{algo} failed on random n={n}"
                )
        cases += 1
    return CheckResult(1, "correctness", True, f"{cases} cases, zero failures")


def check_all_equal_linear(cache: Cache) -> CheckResult:
    worst = 0.0
    for n in (10**3, 10**4, 10**5, 10**6):
        st = _counts("bcis", DatasetSpec("equal", n, seed=derive_seed(BASE_SEED, "eq", n)))
        if st.comparisons > 2 * n or st.sort_trips != 1 or not st.terminated_by_equal:
            return CheckResult(
                2,
                "all-equal linearity",
                False,
                f"n={n}: comps={st.comparisons} trips={st.sort_trips}",
            )
        worst = max(worst, st.comparisons / n)
    return CheckResult(
        2, "all-equal linearity", True, f"comps <= 2n (max comps/n={worst:.3f}), 1 trip"
    )


def check_sorted_bound(cache: Cache) -> CheckResult:
    ratios = {}
    for n in (10**4, 10**5):
        st = _counts("bcis", DatasetSpec("sorted", n))
        ratios[n] = st.comparisons / n
        if not 2 <= ratios[n] <= 6:
            return CheckResult(
                3, "sorted-array bound", False, f"n={n}: comps/n={ratios[n]:.3f}"
            )
    detail = ", ".join(f"n={n}: comps/n={r:.3f}" for n, r in ratios.items())
    return CheckResult(3, "sorted-array bound", True, detail + " in [2, 6]")


def check_reverse_bound(cache: Cache) -> CheckResult:
    ratios = {}
    for n in (10**3, 10**4):
        st = _counts("bcis", DatasetSpec("reverse", n))
        ratios[n] = st.comparisons / models.bcis_worst_reverse(n)
        if not 0.8 <= ratios[n] <= 1.3:
            return CheckResult(
                4, "reverse-sorted bound", False, f"n={n}: ratio={ratios[n]:.3f}"
            )
    detail = ", ".join(f"n={n}: {r:.4f}" for n, r in ratios.items())
    return CheckResult(4, "reverse-sorted bound", True, detail + " in [0.8, 1.3]")


def check_worst_construction(cache: Cache) -> CheckResult:
    worst_ratio = 0.0
    for n in (10, 50, 99):
        target = models.bcis_worst_small(n)
        for t in range(AVG_TRIALS):
            seed = derive_seed(BASE_SEED, "worst", n, t)
            st = _counts("bcis", DatasetSpec("worst_small", n, seed=seed))
            ratio = st.comparisons / target
            if not 0.9 <= ratio <= 1.1:
                return CheckResult(
                    5,
                    "small-n worst construction",
                    False,
                    f"n={n} seed#{t}: comps={st.comparisons} vs {target:.0f}",
                )
            worst_ratio = max(worst_ratio, abs(ratio - 1))
    return CheckResult(
        5,
        "small-n worst construction",
        True,
        f"comps within 10% of n(n-1)/2 (max deviation {worst_ratio:.1%})",
    )


def check_best_construction(cache: Cache) -> CheckResult:
    for n in (10, 50, 99):
        for t in range(AVG_TRIALS):
            seed = derive_seed(BASE_SEED, "best", n, t)
            st = _counts("bcis", DatasetSpec("best_small", n, seed=seed))
            if st.comparisons > 3 * n or st.assignments > 3 * n:
                return CheckResult(
                    6,
                    "small-n best construction",
                    False,
                    f"n={n} seed#{t}: comps={st.comparisons} assigns={st.assignments} > 3n={3*n}",
                )
    return CheckResult(
        6, "small-n best construction", True, "comps and assigns <= 3n at n in {10,50,99}"
    )


def check_average_scaling(cache: Cache) -> CheckResult:
    means = []
    for e in range(10, 18):
        n = 2**e
        mc, ma = _mean_counts("bcis", "uniform", n, "scaling")
        if not ma < mc:
            return CheckResult(
                7, "average-case scaling", False, f"n={n}: assigns {ma:.0f} >= comps {mc:.0f}"
            )
        means.append((n, mc))
        if n == 2**13:
            model = models.bcis_avg_comparisons(n)
            if not model / 2 <= mc <= model * 2:
                return CheckResult(
                    7,
                    "average-case scaling",
                    False,
                    f"n=2^13: comps {mc:.0f} not within 2x of model {model:.0f}",
                )
            factor_213 = mc / model
    slope = fit_scaling_exponent(means)
    if not 1.35 <= slope <= 1.65:
        return CheckResult(7, "average-case scaling", False, f"slope={slope:.3f}")
    return CheckResult(
        7,
        "average-case scaling",
        True,
        f"slope={slope:.3f} in [1.35, 1.65]; assigns < comps; "
        f"2^13 measured/model={factor_213:.3f}",
    )


def _is_uniform_means(cache: Cache, n: int) -> float:
    key = f"is_uniform_{n}"
    if key not in cache:
        mc, _ = _mean_counts("is", "uniform", n, "isbase")
        cache[key] = mc
    return cache[key]  # type: ignore[return-value]


def check_is_fidelity(cache: Cache) -> CheckResult:
    ratios = {}
    for n in (10**3, 10**4):
        ratios[n] = _is_uniform_means(cache, n) / (n * n / 4)
        if not 0.9 <= ratios[n] <= 1.1:
            return CheckResult(
                8, "insertion-sort fidelity", False, f"n={n}: ratio={ratios[n]:.4f}"
            )
    detail = ", ".join(f"n={n}: {r:.4f}" for n, r in ratios.items())
    return CheckResult(8, "insertion-sort fidelity", True, detail + " in [0.9, 1.1]")


def check_count_ratio(cache: Cache) -> CheckResult:
    n = 10**4
    bcis_mean, _ = _mean_counts("bcis", "uniform", n, "cmpratio")
    ratio = bcis_mean / _is_uniform_means(cache, n)
    ok = 0.02 <= ratio <= 0.10
    return CheckResult(
        9,
        "bcis/is comparison ratio",
        ok,
        f"n=10^4: {ratio:.4f} {'in' if ok else 'outside'} [0.02, 0.10]",
    )


# (function, args, expected) substitution table; expectations are the
# documented point values of each model.
MODEL_POINTS = [
    (models.is_avg_comparisons, (1,), 0.0),
    (models.is_avg_comparisons, (10,), 31.5),
    (models.is_avg_comparisons, (10000,), 25_007_499.0),
    (models.is_avg_assignments, (0,), 3.0),
    (models.is_avg_assignments, (10,), 45.5),
    (models.is_avg_assignments, (100,), 2678.0),
    (models.bcis_trip_comparisons, (4,), 1.5),
    (models.bcis_trip_comparisons, (8,), 6.0),
    (models.bcis_trip_comparisons, (16,), 21.0),
    (models.bcis_trip_assignments, (4,), 8.5),
    (models.bcis_trip_assignments, (8,), 15.0),
    (models.bcis_trip_assignments, (16,), 34.0),
    (models.bcis_general_comparisons, (10, 2), 40.0),
    (models.bcis_general_comparisons, (8, 8), 12.0),
    (models.bcis_general_comparisons, (100, 10), 1080.0),
    (models.bcis_avg_comparisons, (4,), 4.0),
    (models.bcis_avg_comparisons, (10000,), 1_122_300.0),
    (models.bcis_avg_assignments, (4,), 24.0),
    (models.bcis_avg_assignments, (10000,), 143_300.0),
    (models.bcis_best_small, (1,), 1.0),
    (models.bcis_best_small, (50,), 50.0),
    (models.bcis_best_small, (99,), 99.0),
    (models.bcis_best_sorted, (100,), 400.0),
    (models.bcis_best_sorted, (10**4,), 4.0 * 10**4),
    (models.bcis_best_sorted, (0,), 0.0),
    (models.bcis_worst_small, (2,), 1.0),
    (models.bcis_worst_small, (10,), 45.0),
    (models.bcis_worst_small, (99,), 4851.0),
    (models.bcis_worst_reverse, (6,), 15.0),
    (models.bcis_worst_reverse, (100,), 100**2 / 6 + 150),
    (models.bcis_worst_reverse, (10**4,), 10**8 / 6 + 1.5 * 10**4),
]


def check_cost_models(cache: Cache) -> CheckResult:
    for func, args, expected in MODEL_POINTS:
        got = func(*args)
        err = abs(got - expected) / max(abs(expected), 1.0)
        if err > 1e-12:
            return CheckResult(
                10, "cost-model units", False, f"{func.__name__}{args} = {got}, want {expected}"
            )
    # The k-sweep minimum must sit near sqrt(n).
    for n in (10**2, 10**4, 10**6):
        root = n**0.5
        ks = sorted({max(2, min(n, round(root * 2**i))) for i in range(-8, 9)} | {2, n})
        best_k = min(ks, key=lambda k: models.bcis_general_comparisons(n, k))
        at_root = models.bcis_general_comparisons(n, root)
        if not root / 4 <= best_k <= root * 4:
            return CheckResult(
                10, "cost-model units", False, f"n={n}: k-sweep minimum at {best_k}"
            )
        if at_root > models.bcis_general_comparisons(n, 2) or at_root > models.bcis_general_comparisons(n, n):
            return CheckResult(
                10, "cost-model units", False, f"n={n}: sqrt(n) load not below endpoints"
            )
    return CheckResult(
        10, "cost-model units", True, f"{len(MODEL_POINTS)} substitutions exact; k-sweep minimum near sqrt(n)"
    )


def _time_ratio_rows(grid, trials: int) -> List[str]:
    rows = []
    for spec in grid:
        records = run_suite(
            [("bcis", spec, trials), ("qs", spec, trials)], mode="time", base_seed=BASE_SEED
        )
        med = {
            algo: statistics.median(
                r.elapsed_ns for r in records if r.algo == algo
            )
            for algo in ("bcis", "qs")
        }
        label = spec.kind if spec.k_param is None else f"{spec.kind}(k={spec.k_param})"
        rows.append(
            f"    {label:<16} n={spec.n:<8} bcis/qs time = {med['bcis'] / med['qs']:.3f}"
            f"  (medians over {trials} trials, ns: {med['bcis']:.0f} / {med['qs']:.0f})"
        )
    return rows


def check_timing_report(cache: Cache) -> CheckResult:
    """Report-only wall-time ratios; never fails."""
    small = [DatasetSpec("uniform", n) for n in (64, 128, 256, 512, 1024, 1400)]
    dup = [
        DatasetSpec("k_distinct", n, k_param=50) for n in (10**4, 10**5, 10**6)
    ]
    lines = ["bcis/qs wall-time ratios (machine-dependent, informational):"]
    lines += _time_ratio_rows(small, trials=5)
    lines += _time_ratio_rows(dup[:2], trials=5)
    lines += _time_ratio_rows(dup[2:], trials=3)
    return CheckResult(
        11, "wall-time ratio tables", True, "\n".join(lines), report_only=True
    )


def check_determinism(cache: Cache) -> CheckResult:
    grid = [
        ("bcis", DatasetSpec("uniform", 500), 3),
        ("is", DatasetSpec("uniform", 500), 3),
        ("qs", DatasetSpec("k_distinct", 300, k_param=7), 2),
        ("bcis", DatasetSpec("equal", 200), 1),
    ]
    blobs = []
    for _ in range(2):
        buf = io.StringIO()
        write_csv(run_suite(grid, mode="count", base_seed=BASE_SEED), buf)
        blobs.append(buf.getvalue().encode("utf-8"))
    ok = blobs[0] == blobs[1]
    return CheckResult(
        12,
        "count-mode determinism",
        ok,
        "identical invocations give byte-identical CSV" if ok else "CSV bytes differ",
    )


CRITERIA: List[Callable[[Cache], CheckResult]] = [
    check_correctness,
    check_all_equal_linear,
    check_sorted_bound,
    check_reverse_bound,
    check_worst_construction,
    check_best_construction,
    check_average_scaling,
    check_is_fidelity,
    check_count_ratio,
    check_cost_models,
    check_timing_report,
    check_determinism,
]


def run_acceptance(
    emit: Optional[Callable[[str], None]] = print,
    skip_timing: bool = False,
) -> List[CheckResult]:
    """Run every criterion; returns all results in order.

    ``skip_timing`` drops the informational wall-time tables (criterion
    11), which cannot fail but take a while.
    """
    results = []
    cache: Cache = {}
    for check in CRITERIA:
        if skip_timing and check is check_timing_report:
            result = CheckResult(
                11, "wall-time ratio tables", True, "skipped", report_only=True
            )
        else:
            result = check(cache)
        results.append(result)
        if emit is not None:
            emit(result.line())
    return results


def passed(results: List[CheckResult]) -> bool:
    return all(r.passed for r in results)
