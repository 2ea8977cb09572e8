"""Unit tests for the benchmark harness."""

import io

import pytest

from sortlab import (
    CSV_HEADER,
    DatasetSpec,
    SummaryRow,
    TrialRecord,
    VerificationError,
    fit_scaling_exponent,
    ratio_table,
    read_csv,
    run_suite,
    run_trial,
    write_csv,
)
from sortlab.bench import _verify


def _record(algo="bcis", n=100, trial=0, comparisons=10, assignments=5, **kw):
    defaults = dict(
        algo=algo,
        dist="uniform",
        n=n,
        k_param=None,
        seed=1,
        trial=trial,
        comparisons=comparisons,
        assignments=assignments,
        swaps=1,
        sort_trips=2,
        terminated_by_equal=False,
        elapsed_ns=None,
    )
    defaults.update(kw)
    return TrialRecord(**defaults)


class TestRunTrial:
    def test_equal_input_linear(self):
        rec = run_trial("bcis", DatasetSpec("equal", 1000, seed=5), "count")
        assert rec.terminated_by_equal
        assert rec.comparisons <= 2000
        assert rec.elapsed_ns is None

    def test_is_on_sorted_input(self):
        rec = run_trial("is", DatasetSpec("sorted", 100), "count")
        assert rec.comparisons == 99

    def test_bcis_sorted_comparisons_per_item(self):
        rec = run_trial("bcis", DatasetSpec("sorted", 10**4), "count")
        assert 2 <= rec.comparisons / 10**4 <= 6

    def test_time_mode(self):
        rec = run_trial("qs", DatasetSpec("uniform", 200, seed=1), "time")
        assert rec.elapsed_ns is not None and rec.elapsed_ns > 0
        assert rec.comparisons is None

    def test_both_mode(self):
        rec = run_trial("bcis", DatasetSpec("uniform", 200, seed=1), "both")
        assert rec.elapsed_ns is not None
        assert rec.comparisons is not None

    def test_unknown_algo(self):
        with pytest.raises(ValueError):
            run_trial("heapsort", DatasetSpec("uniform", 10), "count")

    def test_verifier_catches_corruption(self):
        with pytest.raises(VerificationError):
            _verify([1, 2, 3], [3, 2, 1], DatasetSpec("uniform", 3), "bcis")
        with pytest.raises(VerificationError):
            _verify([1, 2, 3], [1, 2, 4], DatasetSpec("uniform", 3), "bcis")


class TestRunSuite:
    def test_trial_seeds_distinct(self):
        records = run_suite([("bcis", DatasetSpec("uniform", 50), 3)])
        assert len(records) == 3
        assert len({r.seed for r in records}) == 3
        assert [r.trial for r in records] == [0, 1, 2]

    def test_deterministic(self):
        grid = [("is", DatasetSpec("uniform", 80), 2)]
        assert run_suite(grid, base_seed=7) == run_suite(grid, base_seed=7)
        assert run_suite(grid, base_seed=7) != run_suite(grid, base_seed=8)

    def test_empty_grid(self):
        with pytest.raises(ValueError):
            run_suite([])


class TestRatioTable:
    def test_identical_records_give_unit_ratio(self):
        records = [_record(algo=a, trial=t) for a in ("bcis", "is") for t in range(4)]
        rows = ratio_table(records, "bcis", "is", "comparisons")
        assert len(rows) == 1
        assert rows[0].ratio == 1.0
        assert rows[0].trials == 4
        assert rows[0].dispersion == 0.0

    def test_symmetry(self):
        records = [
            _record(algo=a, trial=t, comparisons=c)
            for a, cs in (("bcis", (10, 12, 9)), ("is", (100, 95, 105)))
            for t, c in enumerate(cs)
        ]
        fwd = ratio_table(records, "bcis", "is", "comparisons")[0].ratio
        back = ratio_table(records, "is", "bcis", "comparisons")[0].ratio
        assert abs(fwd * back - 1) < 1e-9

    def test_missing_counterpart(self):
        with pytest.raises(ValueError):
            ratio_table([_record(algo="bcis")], "bcis", "is", "comparisons")

    def test_missing_metric(self):
        records = [
            _record(algo=a, comparisons=None, elapsed_ns=None) for a in ("bcis", "is")
        ]
        with pytest.raises(ValueError):
            ratio_table(records, "bcis", "is", "comparisons")

    def test_end_to_end_counts(self):
        grid = [
            (algo, DatasetSpec("uniform", n), 5)
            for algo in ("bcis", "is")
            for n in (200, 400)
        ]
        rows = ratio_table(run_suite(grid), "bcis", "is", "comparisons")
        assert [r.n for r in rows] == [200, 400]
        assert all(0 < r.ratio < 1 for r in rows)


class TestFitScalingExponent:
    def test_exact_square(self):
        assert fit_scaling_exponent([(10, 100), (100, 10**4), (1000, 10**6)]) == pytest.approx(2.0)

    def test_exact_linear(self):
        assert fit_scaling_exponent([(2, 2), (4, 4), (8, 8)]) == pytest.approx(1.0)

    def test_model_slope(self):
        from sortlab import models

        points = [(2**e, models.bcis_avg_comparisons(2**e)) for e in range(10, 21)]
        slope = fit_scaling_exponent(points)
        # the negative lower-order terms push the fit a hair above 1.5
        assert 1.45 <= slope <= 1.51

    def test_rejects_bad_points(self):
        with pytest.raises(ValueError):
            fit_scaling_exponent([(1, 1), (2, 2)])
        with pytest.raises(ValueError):
            fit_scaling_exponent([(1, 1), (2, 0), (3, 3)])


class TestCsv:
    def test_header_only_for_empty(self):
        buf = io.StringIO()
        write_csv([], buf)
        assert buf.getvalue() == CSV_HEADER + "\n"

    def test_one_record_two_lines(self):
        buf = io.StringIO()
        write_csv([_record()], buf)
        lines = buf.getvalue().split("\n")
        assert lines[0] == CSV_HEADER
        assert len(lines) == 3 and lines[2] == ""

    def test_round_trip(self):
        records = run_suite(
            [("bcis", DatasetSpec("k_distinct", 60, k_param=4), 2),
             ("qs", DatasetSpec("equal", 10), 1)]
        )
        buf = io.StringIO()
        write_csv(records, buf)
        assert read_csv(io.StringIO(buf.getvalue())) == records

    def test_inapplicable_fields_empty(self):
        buf = io.StringIO()
        write_csv([_record(k_param=None, elapsed_ns=None)], buf)
        row = buf.getvalue().split("\n")[1].split(",")
        header = CSV_HEADER.split(",")
        assert row[header.index("k_param")] == ""
        assert row[header.index("elapsed_ns")] == ""
        assert row[header.index("terminated_by_equal")] == "false"

    def test_summary_rows(self):
        buf = io.StringIO()
        write_csv(
            [SummaryRow(100, "bcis", "is", "comparisons", 0.5, 3, 0.01)], buf
        )
        assert buf.getvalue().startswith("n,numerator,denominator,metric,ratio,trials,dispersion\n")

    def test_rejects_foreign_header(self):
        with pytest.raises(ValueError):
            read_csv(io.StringIO("a,b,c\n1,2,3\n"))
