"""Deterministic, seeded input generators for the benchmark harness.

Every dataset is described declaratively by a :class:`DatasetSpec`; the
same spec always generates the same sequence, across runs and platforms.
The PRNG is Python's Mersenne Twister (``random.Random``), which is
portable and stable; per-trial seeds are split from a base seed with
BLAKE2b (see :func:`derive_seed`).
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

#: Recognized dataset kinds.
KINDS = (
    "uniform",
    "sorted",
    "reverse",
    "equal",
    "k_distinct",
    "best_small",
    "worst_small",
)

#: Spans at and above this defeat the small-n best/worst constructions,
#: because the sorter's guarded pre-scan displaces their comparators.
SMALL_CONSTRUCTION_LIMIT = 100

DEFAULT_VALUE_RANGE: Tuple[int, int] = (0, 2**31 - 1)


class DatasetSpecError(ValueError):
    """Raised when a dataset spec violates its invariants."""

    def __init__(self, violations: List[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


@dataclass(frozen=True)
class DatasetSpec:
    kind: str
    n: int
    seed: int = 0
    k_param: Optional[int] = None
    value_range: Tuple[int, int] = field(default=DEFAULT_VALUE_RANGE)


def validate(spec: DatasetSpec) -> List[str]:
    """Return the list of invariant violations (empty when valid)."""
    out: List[str] = []
    if spec.kind not in KINDS:
        out.append(f"kind must be one of {KINDS}, got {spec.kind!r}")
        return out
    if spec.n < 0:
        out.append(f"n must be nonnegative, got {spec.n}")
    if spec.kind == "k_distinct":
        if spec.k_param is None:
            out.append("k_distinct requires k_param")
        elif not 1 <= spec.k_param <= max(spec.n, 1):
            out.append(
                f"k_param must be in [1, n], got k_param={spec.k_param} n={spec.n}"
            )
    elif spec.k_param is not None:
        out.append(f"k_param only applies to k_distinct, got kind={spec.kind!r}")
    if spec.kind in ("best_small", "worst_small") and spec.n >= SMALL_CONSTRUCTION_LIMIT:
        out.append(
            f"{spec.kind} requires n < {SMALL_CONSTRUCTION_LIMIT}, got n={spec.n}"
        )
    lo, hi = spec.value_range
    if lo > hi:
        out.append(f"value_range is empty: ({lo}, {hi})")
    elif spec.kind == "k_distinct" and spec.k_param is not None:
        if spec.k_param > hi - lo + 1:
            out.append("value_range too narrow for k_param distinct values")
    return out


def derive_seed(base: int, *parts: object) -> int:
    """Split a 64-bit child seed from a base seed and arbitrary labels."""
    h = hashlib.blake2b(digest_size=8)
    h.update(repr((base,) + parts).encode("utf-8"))
    return int.from_bytes(h.digest(), "big")


def generate(spec: DatasetSpec) -> List[int]:
    """Materialize the sequence described by ``spec``.

    Raises :class:`DatasetSpecError` when the spec is invalid.
    """
    violations = validate(spec)
    if violations:
        raise DatasetSpecError(violations)

    n = spec.n
    rng = random.Random(spec.seed)
    lo, hi = spec.value_range

    if spec.kind == "uniform":
        return [rng.randrange(lo, hi + 1) for _ in range(n)]
    if spec.kind == "sorted":
        return list(range(1, n + 1))
    if spec.kind == "reverse":
        return list(range(n, 0, -1))
    if spec.kind == "equal":
        value = rng.randrange(lo, hi + 1)
        return [value] * n
    if spec.kind == "k_distinct":
        pool = rng.sample(range(lo, hi + 1), min(spec.k_param, n) or 1)
        return [rng.choice(pool) for _ in range(n)]
    if spec.kind == "best_small":
        return _small_construction(n, rng, ascending=True)
    if spec.kind == "worst_small":
        return _small_construction(n, rng, ascending=False)
    raise AssertionError(spec.kind)


def _small_construction(n: int, rng: random.Random, ascending: bool) -> List[int]:
    """Layouts that make every sweep insertion go left at extreme cost.

    Position n carries the maximum, position 1 the second maximum, and the
    remaining values sit in between, ascending (one cheap shift per
    insertion) or descending (a full shift cascade per insertion).  The
    sorter swaps the window middle to the right boundary before reading
    its comparators, so the layout is pre-inverted against that move:
    positions mid and n are exchanged here and the first trip restores
    them.
    """
    base = rng.randrange(0, 2**31 - n) if n else 0
    values = list(range(base, base + n))
    if n < 2:
        return values
    middle = values[: n - 2] if ascending else values[n - 3 :: -1]
    arr = [values[n - 2]] + middle + [values[n - 1]]
    mid = 1 + (n - 1) // 2  # 1-based window middle for a full range
    arr[mid - 1], arr[n - 1] = arr[n - 1], arr[mid - 1]
    return arr


def sweep_sizes(text: str) -> List[int]:
    """Parse a size list: either comma-separated or ``start:stop:factor``
    (geometric, inclusive of stop when hit exactly)."""
    if ":" in text:
        fields = text.split(":")
        if len(fields) != 3:
            raise ValueError(f"expected start:stop:factor, got {text!r}")
        start, stop, factor = (int(f) for f in fields)
        if start <= 0 or stop < start or factor < 2:
            raise ValueError(f"bad geometric sweep {text!r}")
        out = []
        n = start
        while n <= stop:
            out.append(n)
            n *= factor
        return out
    sizes = [int(f) for f in text.split(",") if f.strip()]
    if not sizes or any(n < 0 for n in sizes):
        raise ValueError(f"bad size list {text!r}")
    return sizes
