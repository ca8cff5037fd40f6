"""Box-search campaigns over assignments, checking the membership predicate.

Every evaluated determinant must land in {16m+1} union 2^14 * Z; a
violation would contradict the classification and therefore flags an
implementation bug.  Work is chunked along the enumeration order, so
results are deterministic for a given seed and independent of the worker
count.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field

import numpy as np

from .blockeval import (
    decode_box_indices,
    membership_block,
    needs_object_dtype,
    products_block,
)

DEFAULT_CHUNK_SIZE = 1 << 16
SMALL_ODD_CAP = 1 << 12  # |value| cap for the achieved-small-odd report field
MAX_RECORDED_VIOLATIONS = 100


@dataclass(frozen=True)
class SearchConfig:
    box_low: int
    box_high: int
    mode: str = "exhaustive"  # exhaustive | random
    samples: int = 0  # random mode only
    parallelism: int = 1
    seed: int = 0
    chunk_size: int = DEFAULT_CHUNK_SIZE

    def __post_init__(self) -> None:
        if self.box_low > self.box_high:
            raise ValueError("box_low must be <= box_high")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode: {self.mode}")
        if self.mode == "random" and self.samples <= 0:
            raise ValueError("random mode needs samples > 0")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")

    @property
    def total(self) -> int:
        if self.mode == "random":
            return self.samples
        return (self.box_high - self.box_low + 1) ** 16

    @property
    def abs_bound(self) -> int:
        return max(abs(self.box_low), abs(self.box_high))


@dataclass
class SearchReport:
    evaluated: int = 0
    distinct_values: int = 0
    membership_violations: list[tuple[int, ...]] = field(default_factory=list)
    min_value: int | None = None
    max_value: int | None = None
    achieved_small_odd: tuple[int, ...] = ()
    runtime_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "evaluated": self.evaluated,
            "distinct_values": self.distinct_values,
            "membership_violations": [list(v) for v in self.membership_violations],
            "min_value": self.min_value,
            "max_value": self.max_value,
            "achieved_small_odd": list(self.achieved_small_odd),
            "runtime_ms": self.runtime_ms,
        }


_WORKER_CONFIG: SearchConfig | None = None


def _init_worker(config: SearchConfig) -> None:
    global _WORKER_CONFIG
    _WORKER_CONFIG = config


def _chunk_assignments(config: SearchConfig, chunk_index: int) -> np.ndarray:
    as_object = needs_object_dtype(config.abs_bound)
    start = chunk_index * config.chunk_size
    stop = min(start + config.chunk_size, config.total)
    if config.mode == "exhaustive":
        width = config.box_high - config.box_low + 1
        return decode_box_indices(start, stop, config.box_low, width, as_object)
    rng = np.random.default_rng([config.seed, chunk_index])
    a = rng.integers(config.box_low, config.box_high + 1, size=(stop - start, 16))
    return a.astype(object) if as_object else a.astype(np.int64)


def _run_chunk(chunk_index: int, config: SearchConfig | None = None):
    cfg = config if config is not None else _WORKER_CONFIG
    assert cfg is not None
    a = _chunk_assignments(cfg, chunk_index)
    values = products_block(a)
    ok = membership_block(values)
    violations = [tuple(int(x) for x in row) for row in a[~ok][:MAX_RECORDED_VIOLATIONS]]
    odd_mask = values % 2 == 1
    small = values[odd_mask & (np.abs(values) <= SMALL_ODD_CAP)]
    return (
        len(values),
        np.unique(values),
        violations,
        int(values.min()),
        int(values.max()),
        np.unique(small),
    )


def run_search(config: SearchConfig) -> SearchReport:
    """Run the campaign and aggregate a report; deterministic per seed."""
    t0 = time.perf_counter()
    total = config.total
    if total > 1 << 62:
        raise ValueError(f"box too large to enumerate: {total} assignments")
    n_chunks = (total + config.chunk_size - 1) // config.chunk_size

    report = SearchReport()
    unique_parts: list[np.ndarray] = []
    small_odd_parts: list[np.ndarray] = []

    def absorb(result) -> None:
        count, uniq, violations, vmin, vmax, small = result
        report.evaluated += count
        if len(report.membership_violations) < MAX_RECORDED_VIOLATIONS:
            report.membership_violations.extend(violations)
        report.min_value = vmin if report.min_value is None else min(report.min_value, vmin)
        report.max_value = vmax if report.max_value is None else max(report.max_value, vmax)
        unique_parts.append(uniq)
        if len(small):
            small_odd_parts.append(small)
        # bound memory during long campaigns
        if sum(len(u) for u in unique_parts) > 5_000_000:
            unique_parts[:] = [np.unique(np.concatenate(unique_parts))]

    if config.parallelism == 1 or n_chunks == 1:
        for i in range(n_chunks):
            absorb(_run_chunk(i, config))
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(
            processes=config.parallelism,
            initializer=_init_worker,
            initargs=(config,),
        ) as pool:
            for result in pool.imap(_run_chunk, range(n_chunks), chunksize=4):
                absorb(result)

    report.distinct_values = (
        len(np.unique(np.concatenate(unique_parts))) if unique_parts else 0
    )
    if small_odd_parts:
        merged = np.unique(np.concatenate(small_odd_parts))
        report.achieved_small_odd = tuple(int(v) for v in merged)
    report.membership_violations = report.membership_violations[:MAX_RECORDED_VIOLATIONS]
    report.runtime_ms = (time.perf_counter() - t0) * 1000.0
    return report
