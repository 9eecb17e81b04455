import math
import random

import pytest

from cadences import (
    EVEN,
    NO_CADENCE,
    ODD,
    SHRUNK,
    AlphabetMismatchError,
    OutOfRangeError,
    QueryCounters,
    RunContext,
    StringView,
    cadence_step,
    check_witness,
    decompress,
    detect_3cadence,
    detect_3subcadence,
    enum_cadences,
    first_index_cap,
    first_index_window,
    has_cadence,
    is_k_cadence,
    literal,
    pceil,
    tail_threshold,
)
from conftest import TRACE_B, random_bits, random_slp


def view(s, counters=None):
    return StringView.from_plain(s, counters)


# --- is_k_cadence -----------------------------------------------------------


def test_is_k_cadence_examples():
    assert is_k_cadence(view("10101"), 1, 2, 3)
    assert not is_k_cadence(view("01110"), 2, 1, 3)  # extendable left
    assert not is_k_cadence(view("000100011"), 3, 2, 3)  # not maximal


def test_is_k_cadence_out_of_range():
    with pytest.raises(OutOfRangeError):
        is_k_cadence(view("10101"), 1, 3, 3)
    with pytest.raises(OutOfRangeError):
        is_k_cadence(view("10101"), 0, 1, 3)


# --- detect_3subcadence -----------------------------------------------------


def test_detect_3subcadence_examples():
    w = detect_3subcadence(view("011010011"))
    assert (w.i, w.d, w.char) == (1, 3, "0")
    assert detect_3subcadence(view("01")) is None


def test_detect_3subcadence_always_finds_at_nine():
    for bits in range(512):
        s = format(bits, "09b")
        assert detect_3subcadence(view(s)) is not None


# --- threshold and window arithmetic ----------------------------------------


def _maximal_pair(first, last, n):
    d2 = last - first
    return d2 % 2 == 0 and d2 > 0 and 2 * first <= d2 and 3 * d2 > 2 * (n - first)


def test_tail_threshold_examples():
    assert tail_threshold(12, 48, EVEN) == 38
    assert tail_threshold(4, 9, EVEN) == 8


def test_tail_threshold_minimality(rng):
    for _ in range(300):
        n = rng.randint(4, 3000)
        p = rng.choice([EVEN, ODD])
        a = pceil(rng.randint(1, n), p)
        r = tail_threshold(a, n, p)
        assert r % 2 == p
        assert _maximal_pair(a, r, n)
        if r - 2 > a:
            assert not _maximal_pair(a, r - 2, n)


def test_tail_threshold_monotone(rng):
    for _ in range(200):
        n = rng.randint(6, 2000)
        p = rng.choice([EVEN, ODD])
        a = pceil(rng.randint(1, n - 2), p)
        assert tail_threshold(a + 2, n, p) >= tail_threshold(a, n, p)


def test_first_index_cap_example():
    assert first_index_cap(10, 48, 34) == 4


def test_first_index_window_examples():
    assert first_index_window(2, 10, 48, 20) == (2, 4)
    assert first_index_window(2, 10, 48, 23) == (2, 10)


def test_caps_encode_maximality(rng):
    # the even formulas pick exactly the extremal even indices satisfying
    # the three maximality inequalities
    for _ in range(500):
        n = rng.randint(6, 500)
        end = pceil(rng.randint(2, n), EVEN)
        l_max = pceil(rng.randint(2, n), EVEN)
        cap = first_index_cap(l_max, n, end)
        for l in range(2, min(l_max, end - 2) + 1, 2):
            ok = _maximal_pair(l, end, n)
            assert ok == (l <= cap), (n, end, l_max, l, cap)
        mid = rng.randint(2, n)
        lo, hi = first_index_window(2, l_max, n, mid)
        for l in range(2, min(l_max, mid - 1) + 1, 2):
            d = mid - l
            ok = l - d <= 0 and l + 3 * d > n and l + 2 * d <= n
            assert ok == (lo <= l <= hi), (n, mid, l, lo, hi)


# --- cadence_step -----------------------------------------------------------


def _ctx(parity, run_lo, run_hi, after, n, compressed=False, run_index=1):
    return RunContext(
        parity=parity,
        run_index=run_index,
        char="0",
        run_lo=run_lo,
        run_hi=run_hi,
        after=after,
        stop=tail_threshold(after, n, parity),
        compressed=compressed,
    )


def test_cadence_step_trace():
    v = view(TRACE_B)
    out = cadence_step(v, _ctx(EVEN, 2, 10, 12, 48), 34)
    assert out.kind == SHRUNK
    assert out.end_probe == 34
    assert out.mid_probe == 20
    assert out.new_lo == 40


def test_cadence_step_found_certified():
    v = view("000000000")
    out = cadence_step(v, _ctx(EVEN, 2, 2, 10, 9), 7)
    assert out.kind == "found"
    w = out.witness
    assert (w.i, w.d) == (2, 3)
    assert is_k_cadence(v, w.i, w.d, 3)


def test_cadence_step_no_candidates():
    # even tail of the last third is all '1'
    v = view("000100011101")
    out = cadence_step(v, _ctx(EVEN, 2, 2, 4, 12), 9)
    assert out.kind == NO_CADENCE


# --- detect_3cadence --------------------------------------------------------


def test_detect_examples():
    w = detect_3cadence(view("10101"))
    assert (w.i, w.d, w.char) == (1, 2, "1")
    assert detect_3cadence(view("01110")) is None
    w2 = detect_3cadence(view("000100110"))
    assert w2 is not None
    assert (3, 3) in enum_cadences("000100110").pairs()


def test_detect_short_strings():
    assert detect_3cadence(view("0")) is None
    assert detect_3cadence(view("01")) is None
    assert detect_3cadence(view("000")) is not None
    assert detect_3cadence(view("010")) is None


def test_detect_requires_binary():
    with pytest.raises(AlphabetMismatchError):
        detect_3cadence(view("012"))


def test_detect_deterministic():
    s = random_bits(random.Random(5), 400)
    a = detect_3cadence(view(s))
    b = detect_3cadence(view(s))
    assert a == b


def test_exhaustive_equivalence_small():
    for n in range(1, 13):
        for bitpat in range(1 << n):
            s = format(bitpat, f"0{n}b")
            v = view(s)
            w = detect_3cadence(v)
            assert (w is not None) == has_cadence(s, 3), s
            if w is not None:
                assert check_witness(v, w)


def test_randomized_equivalence(rng):
    for _ in range(1500):
        n = rng.randint(17, 2000)
        s = random_bits(rng, n)
        v = view(s)
        w = detect_3cadence(v)
        assert (w is not None) == has_cadence(s, 3)
        if w is not None:
            assert check_witness(v, w)


def test_compressed_matches_plain_exhaustive():
    for n in range(1, 11):
        for bitpat in range(1 << n):
            s = format(bitpat, f"0{n}b")
            got = detect_3cadence(StringView.from_slp(literal(s)))
            assert (got is not None) == has_cadence(s, 3), s


def test_compressed_matches_plain_random(rng):
    for _ in range(150):
        g = random_slp(rng, max_rules=40, max_len=10**5)
        s = decompress(g, 10**5)
        got_c = detect_3cadence(StringView.from_slp(g))
        got_p = detect_3cadence(view(s))
        assert (got_c is None) == (got_p is None)
        if got_c is not None:
            assert check_witness(view(s), got_c)


def test_compressed_iteration_bound_structured(rng):
    from cadences import concat, power

    def zeros_ones(blocks):
        parts = []
        for ch, m in blocks:
            if m == 0:
                continue
            parts.append(power(literal(ch), m) if m > 1 else literal(ch))
        out = parts[0]
        for part in parts[1:]:
            out = concat(out, part)
        return out

    grammars = [
        zeros_ones([("0", 2**44), ("1", 1), ("0", 2**43), ("1", 1), ("0", 2**42)]),
        zeros_ones([("0", 3), ("1", 1), ("0", 2**45), ("1", 1), ("0", 2**44)]),
        power(literal("01"), 2**44),
        power(literal("0011"), 2**43),
    ]
    for g in grammars:
        ctr = QueryCounters()
        w = detect_3cadence(StringView.from_slp(g, ctr))
        bound = math.log2(g.length) + 4
        assert max(ctr.context_iterations, default=0) <= bound
        if w is not None:
            assert check_witness(StringView.from_slp(g), w)


def test_linear_access_counts(rng):
    for n in (10**3, 10**4):
        for _ in range(5):
            s = random_bits(rng, n)
            ctr = QueryCounters()
            detect_3cadence(StringView.from_plain(s, ctr))
            assert ctr.accesses <= 8 * n + 64


def test_no_cadence_families_stay_linear():
    m = 20000
    for s in ("0" * m + "1" * (2 * m), "1" * (2 * m) + "0" * m, "0" * m + "1" * m + "0" * m):
        ctr = QueryCounters()
        assert detect_3cadence(StringView.from_plain(s, ctr)) is None
        assert ctr.accesses <= 8 * len(s)
