"""Exhaustive minS/maxS/AS computation over the full hypercube.

The hypercube is swept in reflected Gray-code order so the weight-sum
residue needs one +-j (mod n) update per input, and each of the n flip
checks per input is O(1) (see ``_kernel``).  Parallel runs fix the top
bits of the mask into independent chunks; the merge is a pure fold with
canonical (smallest-encoding) witness tie-breaking, so results are
identical for any worker count and schedule.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterator, List, Optional

import numpy as np

from . import _kernel
from .core import BitVector
from .errors import ContractViolationError, ExhaustiveLimitError
from .wsf import MinSPrediction, SimplifiedWSF, classify_min_sensitivity

#: Default cap on exhaustive work (2^32 inputs x n flips is already days).
DEFAULT_HARD_LIMIT = 32
#: Absolute cap: masks are signed 64-bit words inside the kernel.
KERNEL_MAX_N = 62
#: Chunks per worker; any value yields identical results.
OVERSUBSCRIPTION = 4

TARGET_MIN = "min"
TARGET_MAX = "max"
TARGET_ALL = "all"


def hard_limit_from_env(default: int = DEFAULT_HARD_LIMIT) -> int:
    """Hard limit, honoring the SENSILAB_MAX_EXHAUSTIVE_N override."""
    raw = os.environ.get("SENSILAB_MAX_EXHAUSTIVE_N")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ContractViolationError(
            f"SENSILAB_MAX_EXHAUSTIVE_N must be a positive integer, got {raw!r}"
        )
    if value < 1:
        raise ContractViolationError(
            f"SENSILAB_MAX_EXHAUSTIVE_N must be a positive integer, got {raw!r}"
        )
    return value


@dataclass(frozen=True)
class SearchConfig:
    n: int
    target: str = TARGET_ALL
    worker_count: int = 1
    early_exit_threshold: Optional[int] = None
    hard_limit: int = DEFAULT_HARD_LIMIT
    force: bool = False

    def validate(self) -> None:
        if self.n < 1:
            raise ContractViolationError(f"n must be positive, got {self.n}")
        if self.worker_count < 1:
            raise ContractViolationError(
                f"worker_count must be at least 1, got {self.worker_count}"
            )
        if self.target not in (TARGET_MIN, TARGET_MAX, TARGET_ALL):
            raise ContractViolationError(f"unknown target {self.target!r}")
        if self.early_exit_threshold is not None and not (
            0 <= self.early_exit_threshold <= self.n
        ):
            raise ContractViolationError(
                f"early_exit_threshold {self.early_exit_threshold} outside [0, {self.n}]"
            )
        if self.n > self.hard_limit and not self.force:
            raise ExhaustiveLimitError(
                f"n={self.n} exceeds the exhaustive hard limit {self.hard_limit}; "
                f"pass force to override"
            )
        if self.n > KERNEL_MAX_N:
            raise ExhaustiveLimitError(
                f"n={self.n} exceeds the engine's absolute limit {KERNEL_MAX_N}"
            )


@dataclass(frozen=True)
class SensitivityReport:
    """Outcome of one exhaustive (or early-exited) search.

    Fields an early-exited sweep cannot determine are None, never guessed.
    """

    n: int
    min_sen: Optional[int]
    max_sen: Optional[int]
    total_sensitivity: Optional[int]
    min_witness: Optional[BitVector]
    max_witness: Optional[BitVector]
    inputs_scanned: int
    elapsed: float
    engine: str
    min_witness_canonical: bool = True

    @property
    def average_sensitivity(self) -> Optional[Fraction]:
        if self.total_sensitivity is None:
            return None
        return Fraction(self.total_sensitivity, 1 << self.n)


def to_gray(t: int) -> int:
    """t-th reflected Gray code."""
    return t ^ (t >> 1)


def ruler(t: int) -> int:
    """Index of the bit flipped between Gray codes t-1 and t (t >= 1)."""
    return (t & -t).bit_length() - 1


@dataclass(frozen=True)
class _Chunk:
    index: int
    base_mask: int
    s0: int
    count: int


def _plan_chunks(n: int, chunk_bits: int) -> List[_Chunk]:
    chunk_bits = min(chunk_bits, n)
    suffix_bits = n - chunk_bits
    chunks = []
    for c in range(1 << chunk_bits):
        base_mask = c << suffix_bits
        s0 = sum(k for k in range(suffix_bits, n) if (base_mask >> k) & 1) % n
        chunks.append(_Chunk(c, base_mask, s0, 1 << suffix_bits))
    return chunks


def _chunk_bits_for(worker_count: int) -> int:
    chunks = worker_count * OVERSUBSCRIPTION
    bits = 0
    while (1 << bits) < chunks:
        bits += 1
    return bits


def _run_chunks(n, chunks, worker_count, early_min, early_max):
    cancel = np.zeros(1, np.uint8)
    if worker_count == 1 or len(chunks) == 1:
        results = []
        for ch in chunks:
            results.append(
                _kernel.scan_chunk(
                    n, ch.base_mask, ch.s0, ch.count, early_min, early_max, cancel
                )
            )
            if results[-1][6] == _kernel.STATUS_FOUND_EARLY:
                break
        return results
    with ThreadPoolExecutor(max_workers=worker_count) as pool:
        futures = [
            pool.submit(
                _kernel.scan_chunk,
                n, ch.base_mask, ch.s0, ch.count, early_min, early_max, cancel,
            )
            for ch in chunks
        ]
        return [f.result() for f in futures]


def _merge_full(n, results, elapsed, engine):
    min_sen, min_wit = n + 1, -1
    max_sen, max_wit = -1, -1
    total = 0
    scanned = 0
    for r in results:
        if r[6] != _kernel.STATUS_COMPLETE:
            raise RuntimeError(
                "worker returned a partial result during a full scan"
            )
        if r[0] < min_sen or (r[0] == min_sen and r[1] < min_wit):
            min_sen, min_wit = r[0], r[1]
        if r[2] > max_sen or (r[2] == max_sen and r[3] < max_wit):
            max_sen, max_wit = r[2], r[3]
        total += int(r[4])
        scanned += int(r[5])
    return SensitivityReport(
        n=n,
        min_sen=int(min_sen),
        max_sen=int(max_sen),
        total_sensitivity=total,
        min_witness=BitVector(n, int(min_wit)),
        max_witness=BitVector(n, int(max_wit)),
        inputs_scanned=scanned,
        elapsed=elapsed,
        engine=engine,
    )


def _full_scan(wsf: SimplifiedWSF, config: SearchConfig, chunk_bits: int,
               engine: str) -> SensitivityReport:
    if config.n != wsf.n:
        raise ContractViolationError(
            f"config n={config.n} does not match function n={wsf.n}"
        )
    config.validate()
    n = wsf.n
    start = time.perf_counter()
    chunks = _plan_chunks(n, chunk_bits)
    results = _run_chunks(n, chunks, config.worker_count, -1, n + 1)
    return _merge_full(n, results, time.perf_counter() - start, engine)


def gray_scan(wsf: SimplifiedWSF, config: SearchConfig) -> SensitivityReport:
    """Single Gray-order sweep of all 2^n inputs."""
    return _full_scan(wsf, config, 0, "gray")


def parallel_scan(wsf: SimplifiedWSF, config: SearchConfig) -> SensitivityReport:
    """Chunked sweep; identical report for any worker count."""
    chunk_bits = _chunk_bits_for(config.worker_count)
    engine = "gray-parallel" if chunk_bits > 0 else "gray"
    return _full_scan(wsf, config, chunk_bits, engine)


def min_sensitivity_with_early_exit(
    wsf: SimplifiedWSF, config: SearchConfig
) -> SensitivityReport:
    """Exact minS; may stop at the first zero-sensitivity input.

    Only threshold 0 is accepted: nothing lies below it, so stopping there
    cannot miss a smaller value.  When the sweep does stop early, the
    returned witness is the first found, not the canonical one, and the
    fields a partial sweep cannot determine are None.
    """
    if config.n != wsf.n:
        raise ContractViolationError(
            f"config n={config.n} does not match function n={wsf.n}"
        )
    config.validate()
    threshold = config.early_exit_threshold
    if threshold is None:
        threshold = 0
    if threshold != 0:
        raise ContractViolationError(
            f"early exit for a min search is only exact at threshold 0, got {threshold}"
        )
    n = wsf.n
    start = time.perf_counter()
    chunks = _plan_chunks(n, _chunk_bits_for(config.worker_count))
    results = _run_chunks(n, chunks, config.worker_count, threshold, n + 1)
    elapsed = time.perf_counter() - start
    found = [r for r in results if r[6] == _kernel.STATUS_FOUND_EARLY]
    if not found:
        # Nothing hit the threshold, so every chunk ran to completion and
        # the merged report is the exact full-scan one.
        return _merge_full(n, results, elapsed, "gray-parallel")
    r = found[0]
    scanned = sum(int(x[5]) for x in results)
    return SensitivityReport(
        n=n,
        min_sen=int(r[0]),
        max_sen=None,
        total_sensitivity=None,
        min_witness=BitVector(n, int(r[1])),
        max_witness=None,
        inputs_scanned=scanned,
        elapsed=elapsed,
        engine="gray-parallel",
        min_witness_canonical=False,
    )


@dataclass(frozen=True)
class ScanRecord:
    n: int
    prediction: MinSPrediction
    measured_min_sen: Optional[int]
    agrees: Optional[bool]
    elapsed: float


def iter_conjecture_scan(
    n_from: int, n_to: int, config: SearchConfig
) -> Iterator[ScanRecord]:
    """Classify then measure minS for each n in [n_from, n_to].

    Every n is measured (early-exit-at-zero search, exact); the theorem
    prediction is reported alongside, never replaced by the measurement.
    """
    if n_from < 1 or n_to < n_from:
        raise ContractViolationError(
            f"bad range [{n_from}, {n_to}]"
        )
    for n in range(n_from, n_to + 1):
        try:
            prediction = classify_min_sensitivity(n)
            cfg = replace(config, n=n, target=TARGET_MIN, early_exit_threshold=0)
            report = min_sensitivity_with_early_exit(SimplifiedWSF(n), cfg)
            expected = prediction.expected_value()
            agrees = None if expected is None else expected == report.min_sen
            yield ScanRecord(n, prediction, report.min_sen, agrees, report.elapsed)
        except (ContractViolationError, ExhaustiveLimitError) as exc:
            raise type(exc)(f"conjecture scan aborted at n={n}: {exc}") from exc
        except Exception as exc:
            raise RuntimeError(f"conjecture scan aborted at n={n}") from exc


def conjecture_scan(
    n_from: int, n_to: int, config: SearchConfig
) -> List[ScanRecord]:
    return list(iter_conjecture_scan(n_from, n_to, config))
