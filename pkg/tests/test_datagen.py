"""Unit tests for the dataset generators."""

import pytest

from sortlab import DatasetSpec, DatasetSpecError, SortStats, bcis_sort, generate, validate
from sortlab.datagen import derive_seed, sweep_sizes


class TestValidate:
    def test_ok(self):
        assert validate(DatasetSpec("uniform", 10, seed=1)) == []

    def test_small_construction_size_limit(self):
        violations = validate(DatasetSpec("best_small", 200))
        assert len(violations) == 1
        assert "n < 100" in violations[0]

    def test_k_param_bounds(self):
        assert validate(DatasetSpec("k_distinct", 10, k_param=0))
        assert validate(DatasetSpec("k_distinct", 10, k_param=11))
        assert validate(DatasetSpec("k_distinct", 10)) != []
        assert validate(DatasetSpec("k_distinct", 10, k_param=10)) == []

    def test_unknown_kind(self):
        assert validate(DatasetSpec("normal", 10))

    def test_k_param_rejected_elsewhere(self):
        assert validate(DatasetSpec("uniform", 10, k_param=5))

    def test_empty_value_range(self):
        assert validate(DatasetSpec("uniform", 10, value_range=(5, 4)))

    def test_generate_raises_with_violations(self):
        with pytest.raises(DatasetSpecError) as err:
            generate(DatasetSpec("worst_small", 100))
        assert err.value.violations


class TestGenerate:
    def test_sorted(self):
        assert generate(DatasetSpec("sorted", 5)) == [1, 2, 3, 4, 5]

    def test_reverse(self):
        assert generate(DatasetSpec("reverse", 5)) == [5, 4, 3, 2, 1]

    def test_equal(self):
        data = generate(DatasetSpec("equal", 4, seed=9))
        assert len(set(data)) == 1 and len(data) == 4
        assert data == generate(DatasetSpec("equal", 4, seed=9))

    def test_empty(self):
        for kind in ("uniform", "sorted", "reverse", "equal"):
            assert generate(DatasetSpec(kind, 0)) == []

    def test_determinism(self):
        spec = DatasetSpec("uniform", 1000, seed=42)
        assert generate(spec) == generate(spec)
        other = DatasetSpec("uniform", 1000, seed=43)
        assert generate(spec) != generate(other)

    def test_uniform_range(self):
        data = generate(DatasetSpec("uniform", 500, seed=3, value_range=(10, 20)))
        assert all(10 <= v <= 20 for v in data)

    def test_k_distinct_counts(self):
        data = generate(DatasetSpec("k_distinct", 10**4, seed=8, k_param=50))
        assert len(set(data)) == 50
        tiny = generate(DatasetSpec("k_distinct", 3, seed=8, k_param=3))
        assert len(set(tiny)) <= 3


class TestSmallConstructions:
    @pytest.mark.parametrize("n", [2, 3, 6, 10, 50, 99])
    @pytest.mark.parametrize("kind", ["best_small", "worst_small"])
    def test_distinct_values_and_sortable(self, kind, n):
        data = generate(DatasetSpec(kind, n, seed=4))
        assert len(set(data)) == n
        work = list(data)
        bcis_sort(work, stats=SortStats())
        assert work == sorted(data)

    @pytest.mark.parametrize("n", [10, 50, 99])
    def test_best_insertions_are_cheap(self, n):
        # every insertion goes left at constant cost: linear totals
        for t in range(20):
            spec = DatasetSpec("best_small", n, seed=derive_seed(0, n, t))
            stats = SortStats()
            work = generate(spec)
            bcis_sort(work, stats=stats)
            assert stats.sort_trips == 1
            assert stats.comparisons <= 3 * n
            assert stats.assignments <= 3 * n

    @pytest.mark.parametrize("n", [10, 50, 99])
    def test_worst_costs_quadratic(self, n):
        target = n * (n - 1) / 2
        for t in range(20):
            spec = DatasetSpec("worst_small", n, seed=derive_seed(1, n, t))
            stats = SortStats()
            work = generate(spec)
            bcis_sort(work, stats=stats)
            assert 0.9 * target <= stats.comparisons <= 1.1 * target

    def test_worst_n6_hand_trace(self):
        # layout pre-inverted against the first boundary swap: undoing it
        # must leave max at the right end, second max at the left end and
        # the rest descending in between
        data = generate(DatasetSpec("worst_small", 6, seed=0))
        mid = 1 + (6 - 1) // 2
        data[mid - 1], data[5] = data[5], data[mid - 1]
        v = sorted(data)
        assert data[5] == v[5]
        assert data[0] == v[4]
        assert data[1:5] == [v[3], v[2], v[1], v[0]]

    def test_best_layout_restored_after_boundary_swap(self):
        data = generate(DatasetSpec("best_small", 9, seed=2))
        mid = 1 + (9 - 1) // 2
        data[mid - 1], data[8] = data[8], data[mid - 1]
        v = sorted(data)
        assert data[8] == v[8]
        assert data[0] == v[7]
        assert data[1:8] == v[:7]


class TestSeedDerivation:
    def test_deterministic_and_distinct(self):
        a = derive_seed(1, "bcis", "uniform", 100, 0)
        assert a == derive_seed(1, "bcis", "uniform", 100, 0)
        assert a != derive_seed(1, "bcis", "uniform", 100, 1)
        assert a != derive_seed(2, "bcis", "uniform", 100, 0)


class TestSweepSizes:
    def test_comma_list(self):
        assert sweep_sizes("10,20,30") == [10, 20, 30]

    def test_geometric(self):
        assert sweep_sizes("100:1000:2") == [100, 200, 400, 800]
        assert sweep_sizes("100:800:2") == [100, 200, 400, 800]

    def test_bad_inputs(self):
        for text in ("", "1:2", "0:10:2", "10:5:2", "10:100:1", "a,b"):
            with pytest.raises(ValueError):
                sweep_sizes(text)
