"""Instrumented sorting laboratory: a bidirectional conditional insertion
sort, classical baselines, closed-form cost models, seeded dataset
generators and a benchmark CLI."""

from .stats import SortStats
from .bcis import (
    ALL_EQUAL,
    PRESCAN_SPAN,
    bcis_sort,
    guarded_prescan,
    insert_left,
    insert_right,
    is_equal_scan,
    swap,
)
from .baselines import insertion_sort, quicksort_mo3
from .datagen import DatasetSpec, DatasetSpecError, derive_seed, generate, validate
from .bench import (
    ALGORITHMS,
    CSV_HEADER,
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
from . import models

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "ALL_EQUAL",
    "CSV_HEADER",
    "DatasetSpec",
    "DatasetSpecError",
    "PRESCAN_SPAN",
    "SortStats",
    "SummaryRow",
    "TrialRecord",
    "VerificationError",
    "bcis_sort",
    "derive_seed",
    "fit_scaling_exponent",
    "generate",
    "guarded_prescan",
    "insert_left",
    "insert_right",
    "insertion_sort",
    "is_equal_scan",
    "models",
    "quicksort_mo3",
    "ratio_table",
    "read_csv",
    "run_suite",
    "run_trial",
    "swap",
    "validate",
    "write_csv",
]
