import random

import pytest

from cadences import (
    EVEN,
    FOUND,
    NO_CADENCE,
    SHRUNK,
    Interval,
    IntervalError,
    KIND_LR,
    PreconditionViolatedError,
    QueryCounters,
    ScanState,
    StringView,
    check_witness,
    detect_lr,
    detect_lr_disjoint,
    has_lr,
    lr_step,
    midpoint_witness,
    uniform_runs_witness,
)
from conftest import TRACE_A, random_bits


def view(s, counters=None):
    return StringView.from_plain(s, counters)


# --- midpoint_witness -------------------------------------------------------


def test_midpoint_witness_low_midpoint():
    w = midpoint_witness(view("000100000100"), 2, 12)
    assert (w.i, w.d, w.char) == (2, 5, "0")


def test_midpoint_witness_high_midpoint():
    w = midpoint_witness(view("000100100100"), 2, 12)
    assert (w.i, w.d, w.char) == (4, 3, "1")


def test_midpoint_witness_parity_precondition():
    with pytest.raises(PreconditionViolatedError):
        midpoint_witness(view("0001000001000"), 2, 11)
    with pytest.raises(PreconditionViolatedError):
        midpoint_witness(view("001100"), 2, 6)  # i + 2 == j - 2


# --- uniform_runs_witness ---------------------------------------------------


def test_uniform_runs_witness_examples():
    w = uniform_runs_witness(view("00000"), EVEN, "0", Interval(2, 2), Interval(4, 4))
    assert (w.i, w.d) == (2, 1)
    assert uniform_runs_witness(view("00100"), EVEN, "0", Interval(2, 2), Interval(4, 4)) is None


def test_uniform_runs_witness_complement_symmetry(rng):
    for _ in range(60):
        n = rng.randint(8, 60)
        s = random_bits(rng, n)
        comp = s.translate(str.maketrans("01", "10"))
        # pick parity-even run intervals inside each half
        lo1, hi1 = 2, 2 + 2 * rng.randint(0, 2)
        lo2 = hi1 + 2 + 2 * rng.randint(0, 2)
        hi2 = min(lo2 + 2 * rng.randint(0, 2), n - (n % 2))
        if lo2 > n or hi2 < lo2:
            continue
        sz = "".join("0" if i % 2 == 0 else s[i - 1] for i in range(1, n + 1))
        cz = sz.translate(str.maketrans("01", "10"))
        a = uniform_runs_witness(view(sz), EVEN, "0", Interval(lo1, hi1), Interval(lo2, hi2))
        b = uniform_runs_witness(view(cz), EVEN, "1", Interval(lo1, hi1), Interval(lo2, hi2))
        assert (a is None) == (b is None)
        if a is not None:
            assert (a.i, a.d) == (b.i, b.d)


# --- lr_step ----------------------------------------------------------------


def test_lr_step_trace_shrink():
    st = ScanState(EVEN, "0", 2, 10, 34, 48)
    out = lr_step(view(TRACE_A), st)
    assert out.kind == SHRUNK
    assert out.end_probe == 34
    assert out.mid_probe == 23
    assert out.new_lo == 46


def test_lr_step_found():
    st = ScanState(EVEN, "0", 2, 4, 8, 10)
    out = lr_step(view("0000000000"), st)
    assert out.kind == FOUND
    assert (out.witness.i, out.witness.d) == (2, 3)


def test_lr_step_no_candidates():
    st = ScanState(EVEN, "0", 2, 2, 8, 10)
    out = lr_step(view("0001000101"), st)  # even tail positions carry '1'
    assert out.kind == NO_CADENCE


def test_lr_step_shrunk_strictly_increases(rng):
    for _ in range(200):
        n = rng.randint(12, 120)
        s = random_bits(rng, n)
        run_hi = 2 + 2 * rng.randint(0, 2)
        lo = run_hi + 2 + 2 * rng.randint(0, 10)
        hi = min(lo + 2 * rng.randint(0, 20), n - (n % 2))
        if hi < lo or hi > n:
            continue
        forced = "".join(
            "0" if (i % 2 == 0 and i <= run_hi) else s[i - 1] for i in range(1, n + 1)
        )
        st = ScanState(EVEN, "0", 2, run_hi, lo, hi)
        out = lr_step(view(forced), st)
        if out.kind == SHRUNK:
            assert out.new_lo > lo
            assert out.new_lo % 2 == 0


# --- detect_lr_disjoint -----------------------------------------------------


def test_detect_lr_disjoint_examples():
    w = detect_lr_disjoint(view("000100011"), Interval(1, 3), Interval(7, 9))
    assert (w.i, w.d, w.kind) == (3, 2, KIND_LR)
    w2 = detect_lr_disjoint(view("1000101001111"), Interval(1, 1), Interval(8, 13))
    assert (w2.i, w2.d) == (1, 6)


def test_detect_lr_disjoint_interval_error():
    with pytest.raises(IntervalError):
        detect_lr_disjoint(view("000000"), Interval(1, 4), Interval(3, 6))


def test_detect_lr_disjoint_uniform_mismatch_absent():
    # even positions of L and R all '1', every midpoint '0'
    s = "0100000001"
    assert detect_lr_disjoint(view(s), Interval(2, 2), Interval(10, 10)) is None


# --- detect_lr (overlap handling) ------------------------------------------


def test_detect_lr_overlap_example():
    w = detect_lr(view("000000000"), Interval(1, 6), Interval(4, 9))
    assert (w.i, w.d) == (4, 1)


def test_detect_lr_overlap_nine_wide_always_finds(rng):
    for _ in range(100):
        n = rng.randint(9, 40)
        s = random_bits(rng, n)
        lo = rng.randint(1, n - 8)
        hi = lo + 8 + rng.randint(0, n - lo - 8)
        w = detect_lr(view(s), Interval(1, hi), Interval(lo, n))
        if hi - lo + 1 >= 9:
            assert w is not None


def test_detect_lr_disjoint_passthrough(rng):
    for _ in range(60):
        n = rng.randint(6, 60)
        s = random_bits(rng, n)
        a = rng.randint(1, n - 1)
        L = Interval(1, a)
        R = Interval(a + 1, n)
        w1 = detect_lr(view(s), L, R)
        w2 = detect_lr_disjoint(view(s), L, R)
        assert (w1 is None) == (w2 is None)


def test_detect_lr_order_precondition():
    with pytest.raises(IntervalError):
        detect_lr(view("000000"), Interval(3, 6), Interval(1, 5))
    assert detect_lr(view("000000"), Interval(3, 2), Interval(1, 0)) is None


# --- completeness and soundness against the oracle --------------------------


def all_interval_pairs(n):
    ivs = [Interval(lo, hi) for lo in range(1, n + 1) for hi in range(lo, n + 1)]
    for L in ivs:
        for R in ivs:
            if L.lo <= R.lo and L.hi <= R.hi:
                yield L, R


def test_exhaustive_small_strings_all_pairs():
    for n in range(1, 8):
        for bits in range(1 << n):
            s = format(bits, f"0{n}b")
            v = view(s)
            for L, R in all_interval_pairs(n):
                got = detect_lr(v, L, R)
                assert (got is not None) == has_lr(s, L, R, 3)
                if got is not None:
                    assert check_witness(v, got)


def test_sampled_pairs_medium_strings():
    rng = random.Random(1701)
    for n in range(8, 15):
        for bits in range(0, 1 << n, max(1, (1 << n) // 256)):
            s = format(bits, f"0{n}b")
            v = view(s)
            for _ in range(12):
                llo = rng.randint(1, n)
                lhi = rng.randint(llo, n)
                rlo = rng.randint(llo, n)
                rhi = rng.randint(max(rlo, lhi), n)
                L, R = Interval(llo, lhi), Interval(rlo, rhi)
                got = detect_lr(v, L, R)
                assert (got is not None) == has_lr(s, L, R, 3)


def test_random_large_strings(rng):
    for _ in range(1500):
        n = rng.randint(1, 500)
        s = random_bits(rng, n)
        llo = rng.randint(1, n)
        lhi = rng.randint(llo, n)
        rlo = rng.randint(llo, n)
        rhi = rng.randint(max(rlo, lhi), n)
        L, R = Interval(llo, lhi), Interval(rlo, rhi)
        v = view(s)
        got = detect_lr(v, L, R)
        assert (got is not None) == has_lr(s, L, R, 3)
        if got is not None:
            assert check_witness(v, got)
            assert got.i in L and got.last in R


# --- progress and work bounds -----------------------------------------------


def test_scan_iteration_bound(rng):
    # uniform even run against a long complex region: the scan may iterate,
    # but at most ~ 2|R| / (run width + 2) + 1 times
    for _ in range(120):
        run_w = 2 * rng.randint(0, 4)
        run_lo, run_hi = 2, 2 + run_w
        gap = 2 * rng.randint(1, 4)
        r_lo = run_hi + gap
        r_len = 2 * rng.randint(1, 60)
        n = r_lo + r_len + rng.randint(0, 3)
        s = list(random_bits(rng, n))
        for i in range(run_lo, run_hi + 1, 2):
            s[i - 1] = "0"
        s = "".join(s)
        ctr = QueryCounters()
        v = StringView.from_plain(s, ctr)
        st = ScanState(EVEN, "0", run_lo, run_hi, r_lo, r_lo + r_len)
        iters = 0
        while True:
            out = lr_step(v, st)
            iters += 1
            if out.kind != SHRUNK:
                break
            st = ScanState(EVEN, "0", run_lo, run_hi, out.new_lo, st.hi)
        span = r_len + 1
        bound = -(-2 * span // (run_hi - run_lo + 2)) + 1
        assert iters <= bound, (s, iters, bound)


def test_detect_lr_linear_work(rng):
    # total character accesses stay within a fixed multiple of |L| + |R|
    for _ in range(40):
        n = rng.randint(100, 4000)
        s = random_bits(rng, n)
        llo = rng.randint(1, n)
        lhi = rng.randint(llo, n)
        rlo = rng.randint(llo, n)
        rhi = rng.randint(max(rlo, lhi), n)
        L, R = Interval(llo, lhi), Interval(rlo, rhi)
        ctr = QueryCounters()
        detect_lr(StringView.from_plain(s, ctr), L, R)
        budget = 64 * (len(L) + len(R)) + 256
        assert ctr.accesses <= budget, (n, L, R, ctr.accesses, budget)
