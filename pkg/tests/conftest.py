"""Shared helpers: naive reference scans, random grammar generation and the
two hand-assembled 48-character trace strings used by step-level tests."""

import random

import pytest

from cadences import Slp


def naive_first_in(s, ch, p, lo, hi):
    for i in range(max(lo, 1), min(hi, len(s)) + 1):
        if (p is None or i % 2 == p) and s[i - 1] == ch:
            return i
    return None


def naive_last_in(s, ch, p, lo, hi):
    out = None
    for i in range(max(lo, 1), min(hi, len(s)) + 1):
        if (p is None or i % 2 == p) and s[i - 1] == ch:
            out = i
    return out


def naive_count_prefix(s, ch, p, i):
    return sum(
        1
        for j in range(1, min(i, len(s)) + 1)
        if (p is None or j % 2 == p) and s[j - 1] == ch
    )


def naive_is_uniform(s, ch, p, lo, hi):
    return all(
        s[i - 1] == ch
        for i in range(max(lo, 1), min(hi, len(s)) + 1)
        if p is None or i % 2 == p
    )


def random_bits(rng, n):
    return "".join(rng.choice("01") for _ in range(n))


def random_slp(rng, max_rules=40, max_len=10**5, alphabet="01"):
    """Random valid grammar, biased toward recent rules so expansions grow."""
    rules = [rng.choice(alphabet)]
    lengths = [1]
    target = rng.randint(2, max_rules)
    while len(rules) < target:
        if rng.random() < 0.15:
            rules.append(rng.choice(alphabet))
            lengths.append(1)
            continue
        lo = max(0, len(rules) - 6)
        j = rng.randrange(lo, len(rules))
        k = rng.randrange(lo, len(rules))
        if lengths[j] + lengths[k] > max_len:
            break
        rules.append((j, k))
        lengths.append(lengths[j] + lengths[k])
    return Slp(rules)


def assemble_trace(row1_even, row2, row3_even):
    """48-character string from its even-position rows; free odd slots get '1'."""
    s = [None] * 49
    for i in range(1, 17):
        s[i] = "1" if i % 2 else row1_even[(i - 2) // 2]
    for i in range(17, 33):
        s[i] = row2[i - 17]
    for i in range(33, 49):
        s[i] = "1" if i % 2 else row3_even[(i - 34) // 2]
    return "".join(s[1:])


# Two worked 48-character examples: an all-one midpoint band followed by a
# shrink (trace A, interval-constrained form) and its maximality-aware
# variant (trace B).
TRACE_A = assemble_trace("00000110", "1111110100111000", "01111101")
TRACE_B = assemble_trace("00000110", "1110110100111000", "01101101")


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
