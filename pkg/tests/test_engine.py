import pytest

from sensilab import (
    BitVector,
    ContractViolationError,
    ExhaustiveLimitError,
    SearchConfig,
    SimplifiedWSF,
    conjecture_scan,
    gray_scan,
    min_sensitivity_with_early_exit,
    naive_full_scan,
    parallel_scan,
    sensitivity,
)
from sensilab.engine import ruler, to_gray
from sensilab.wsf import incremental_weight_update, weight_sum


def report_key(r):
    return (r.min_sen, r.min_witness, r.max_sen, r.max_witness,
            r.total_sensitivity, r.inputs_scanned)


class TestGrayOrder:
    def test_consecutive_codes_differ_in_one_bit(self):
        for n in range(1, 12):
            prev = to_gray(0)
            seen = {prev}
            for t in range(1, 1 << n):
                cur = to_gray(t)
                diff = cur ^ prev
                assert diff.bit_count() == 1
                assert ruler(t) == diff.bit_length() - 1
                seen.add(cur)
                prev = cur
            assert len(seen) == 1 << n

    def test_running_residue_matches_recomputation(self):
        # Walk the Gray sequence with the incremental update and compare
        # with a from-scratch weight sum at every step.
        for n in (5, 8, 11):
            f = SimplifiedWSF(n)
            s = 0
            mask = 0
            for t in range(1, 1 << n):
                j = ruler(t)
                mask ^= 1 << j
                s = incremental_weight_update(s, j, (mask >> j) & 1, n)
                assert mask == to_gray(t)
                assert s == weight_sum(f, BitVector(n, mask))


class TestOracleEquivalence:
    @pytest.mark.parametrize("n", range(1, 11))
    def test_gray_scan_matches_naive(self, n):
        f = SimplifiedWSF(n)
        naive = naive_full_scan(f)
        report = gray_scan(f, SearchConfig(n=n))
        assert report.min_sen == naive.min_sen
        assert report.min_witness == naive.min_witness
        assert report.max_sen == naive.max_sen
        assert report.max_witness == naive.max_witness
        assert report.total_sensitivity == naive.total_sensitivity
        assert report.inputs_scanned == 1 << n

    @pytest.mark.parametrize("workers", [1, 2, 4])
    @pytest.mark.parametrize("n", [1, 2, 5, 8, 10])
    def test_parallel_scan_matches_naive(self, n, workers):
        f = SimplifiedWSF(n)
        naive = naive_full_scan(f)
        report = parallel_scan(f, SearchConfig(n=n, worker_count=workers))
        assert report.min_sen == naive.min_sen
        assert report.min_witness == naive.min_witness
        assert report.max_sen == naive.max_sen
        assert report.max_witness == naive.max_witness
        assert report.total_sensitivity == naive.total_sensitivity


class TestDeterminism:
    def test_worker_count_does_not_change_report(self):
        for n in (7, 12):
            f = SimplifiedWSF(n)
            reports = [
                parallel_scan(f, SearchConfig(n=n, worker_count=w))
                for w in (1, 2, 4, 8)
            ]
            keys = {report_key(r) for r in reports}
            assert len(keys) == 1

    def test_repeat_runs_identical(self):
        f = SimplifiedWSF(11)
        a = parallel_scan(f, SearchConfig(n=11, worker_count=3))
        b = parallel_scan(f, SearchConfig(n=11, worker_count=3))
        assert report_key(a) == report_key(b)


class TestReports:
    def test_n1(self):
        r = gray_scan(SimplifiedWSF(1), SearchConfig(n=1))
        assert (r.min_sen, r.max_sen, r.total_sensitivity) == (1, 1, 2)

    def test_table_rows(self):
        assert gray_scan(SimplifiedWSF(6), SearchConfig(n=6)).min_sen == 0
        assert gray_scan(SimplifiedWSF(6), SearchConfig(n=6)).max_sen == 6
        assert gray_scan(SimplifiedWSF(13), SearchConfig(n=13)).min_sen == 1
        r9 = gray_scan(SimplifiedWSF(9), SearchConfig(n=9))
        assert r9.min_sen == 0
        assert sensitivity(SimplifiedWSF(9), r9.min_witness) == 0

    def test_witnesses_achieve_reported_values(self):
        for n in (3, 7, 10):
            f = SimplifiedWSF(n)
            r = parallel_scan(f, SearchConfig(n=n, worker_count=2))
            assert sensitivity(f, r.min_witness) == r.min_sen
            assert sensitivity(f, r.max_witness) == r.max_sen

    def test_average_bounds(self):
        for n in (2, 5, 9):
            r = gray_scan(SimplifiedWSF(n), SearchConfig(n=n))
            assert r.min_sen <= r.average_sensitivity <= r.max_sen

    def test_hard_limit_refusal(self):
        with pytest.raises(ExhaustiveLimitError, match="32"):
            gray_scan(SimplifiedWSF(40), SearchConfig(n=40))

    def test_absolute_limit_even_with_force(self):
        with pytest.raises(ExhaustiveLimitError, match="62"):
            SearchConfig(n=70, force=True).validate()

    def test_config_mismatch(self):
        with pytest.raises(ContractViolationError):
            gray_scan(SimplifiedWSF(5), SearchConfig(n=6))


class TestEarlyExit:
    def test_stops_before_full_space_when_zero_exists(self):
        r = min_sensitivity_with_early_exit(
            SimplifiedWSF(6),
            SearchConfig(n=6, target="min", early_exit_threshold=0),
        )
        assert r.min_sen == 0
        assert r.inputs_scanned < 64
        assert not r.min_witness_canonical
        assert sensitivity(SimplifiedWSF(6), r.min_witness) == 0
        assert r.max_sen is None and r.total_sensitivity is None

    def test_full_scan_when_no_zero_exists(self):
        r = min_sensitivity_with_early_exit(
            SimplifiedWSF(7),
            SearchConfig(n=7, target="min", early_exit_threshold=0),
        )
        assert r.min_sen == 1
        assert r.inputs_scanned == 128
        assert r.min_witness_canonical
        naive = naive_full_scan(SimplifiedWSF(7))
        assert r.min_witness == naive.min_witness

    def test_threshold_defaults_to_zero(self):
        r = min_sensitivity_with_early_exit(
            SimplifiedWSF(4), SearchConfig(n=4, target="min")
        )
        assert r.min_sen == 1
        assert r.min_witness == naive_full_scan(SimplifiedWSF(4)).min_witness

    def test_nonzero_threshold_rejected(self):
        with pytest.raises(ContractViolationError, match="threshold 0"):
            min_sensitivity_with_early_exit(
                SimplifiedWSF(6),
                SearchConfig(n=6, target="min", early_exit_threshold=1),
            )

    def test_parallel_early_exit(self):
        r = min_sensitivity_with_early_exit(
            SimplifiedWSF(12),
            SearchConfig(n=12, target="min", early_exit_threshold=0,
                         worker_count=4),
        )
        assert r.min_sen == 0
        assert sensitivity(SimplifiedWSF(12), r.min_witness) == 0


class TestConjectureScan:
    def test_single_prime(self):
        records = conjecture_scan(5, 5, SearchConfig(n=5, target="min"))
        assert len(records) == 1
        rec = records[0]
        assert rec.prediction.predicted == "One"
        assert rec.prediction.justification == "Thm4.4"
        assert rec.measured_min_sen == 1
        assert rec.agrees is True

    def test_range_agreement(self):
        records = conjecture_scan(1, 14, SearchConfig(n=1, target="min"))
        assert [r.n for r in records] == list(range(1, 15))
        for rec in records:
            expected = rec.prediction.expected_value()
            if expected is None:
                assert rec.agrees is None
            else:
                assert rec.agrees is True
                assert rec.measured_min_sen == expected

    def test_abort_names_offending_n(self):
        cfg = SearchConfig(n=1, target="min", hard_limit=4)
        with pytest.raises(ExhaustiveLimitError, match="n=5"):
            conjecture_scan(1, 6, cfg)

    def test_bad_range(self):
        with pytest.raises(ContractViolationError):
            conjecture_scan(5, 4, SearchConfig(n=5))
