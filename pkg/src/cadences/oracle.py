"""Brute-force reference implementations defining ground truth.

Oracles run on plain strings only and stay deliberately naive: exhaustive
loops over (i, d) pairs, single-threaded, sorted output.  Compressed inputs
must be decompressed under an explicit bound first.
"""

from __future__ import annotations

from dataclasses import dataclass

from .detect import VdwEntry
from .errors import TooLargeError, UnsupportedError
from .views import Interval
from .witness import KIND_CADENCE, KIND_LR, KIND_SUBCADENCE, Witness

DESK_SCALE = 4000


@dataclass(frozen=True)
class OracleReport:
    """Complete, (i, d)-sorted list of witnesses plus per-character counts."""

    witnesses: tuple
    counts: dict

    @property
    def found(self) -> bool:
        return bool(self.witnesses)

    def pairs(self):
        return tuple((w.i, w.d) for w in self.witnesses)


def _guard(s):
    if len(s) > DESK_SCALE:
        raise TooLargeError(f"oracle accepts at most {DESK_SCALE} characters, got {len(s)}")


def _equal_run(s, i, d, k):
    ch = s[i - 1]
    for j in range(1, k):
        if s[i - 1 + j * d] != ch:
            return None
    return ch


def iter_subcadences(s: str, k: int = 3, char=None):
    """Yield (i, d) for every k-sub-cadence, i ascending then d."""
    n = len(s)
    for i in range(1, n + 1):
        if char is not None and s[i - 1] != char:
            continue
        for d in range(1, (n - i) // (k - 1) + 1):
            if _equal_run(s, i, d, k) is not None:
                yield i, d


def iter_cadences(s: str, k: int = 3, char=None):
    """Yield (i, d) for every k-cadence: sub-cadences with i-d <= 0, i+kd > n."""
    n = len(s)
    for i in range(1, n + 1):
        if char is not None and s[i - 1] != char:
            continue
        d_lo = max(i, (n - i) // k + 1)
        d_hi = (n - i) // (k - 1)
        for d in range(d_lo, d_hi + 1):
            if _equal_run(s, i, d, k) is not None:
                yield i, d


def iter_lr(s: str, L: Interval, R: Interval, k: int = 3, char=None):
    """Yield (i, d) for every k-sub-cadence starting in L and ending in R."""
    n = len(s)
    lo_i = max(1, L.lo)
    hi_i = min(n, L.hi)
    for i in range(lo_i, hi_i + 1):
        if char is not None and s[i - 1] != char:
            continue
        last_lo = max(R.lo, i + (k - 1))
        last_hi = min(R.hi, n)
        d_lo = -(-(last_lo - i) // (k - 1))
        d_hi = (last_hi - i) // (k - 1)
        for d in range(max(1, d_lo), d_hi + 1):
            if _equal_run(s, i, d, k) is not None:
                yield i, d


def _report(pairs, s, k, kind, L=None, R=None):
    ws = tuple(
        Witness(i, d, k, s[i - 1], kind, L, R) for i, d in pairs
    )
    counts = {}
    for w in ws:
        counts[w.char] = counts.get(w.char, 0) + 1
    return OracleReport(ws, counts)


def enum_subcadences(s: str, k: int = 3, char_filter=None) -> OracleReport:
    _guard(s)
    return _report(iter_subcadences(s, k, char_filter), s, k, KIND_SUBCADENCE)


def enum_cadences(s: str, k: int = 3, char_filter=None) -> OracleReport:
    _guard(s)
    return _report(iter_cadences(s, k, char_filter), s, k, KIND_CADENCE)


def enum_lr(s: str, L: Interval, R: Interval, k: int = 3, char_filter=None) -> OracleReport:
    _guard(s)
    return _report(iter_lr(s, L, R, k, char_filter), s, k, KIND_LR, L, R)


def has_subcadence(s: str, k: int = 3, char=None) -> bool:
    return next(iter_subcadences(s, k, char), None) is not None


def has_cadence(s: str, k: int = 3, char=None) -> bool:
    return next(iter_cadences(s, k, char), None) is not None


def has_lr(s: str, L: Interval, R: Interval, k: int = 3, char=None) -> bool:
    return next(iter_lr(s, L, R, k, char), None) is not None


def vdw_verify(k: int = 3, sigma: int = 2) -> VdwEntry:
    """Exhaustively establish the shortest length forcing a 3-sub-cadence.

    Confirms that every binary string of length 9 contains one and exhibits
    a length-8 string with none.  Other parameters are unsupported.
    """
    if (k, sigma) != (3, 2):
        raise UnsupportedError("only (k, sigma) = (3, 2) is verified exhaustively")
    for bits in range(512):
        s = format(bits, "09b")
        if not has_subcadence(s, 3):
            raise AssertionError(f"length-9 string without 3-sub-cadence: {s}")
    counterexample = None
    for bits in range(256):
        s = format(bits, "08b")
        if not has_subcadence(s, 3):
            counterexample = s
            break
    if counterexample is None:
        raise AssertionError("no witness-free length-8 string found")
    return VdwEntry(3, 2, 9, counterexample)


def common_one_index(p: str, pp: str):
    """Smallest index l with p[l] = pp[l] = '1' (1-based), or None."""
    for l in range(1, min(len(p), len(pp)) + 1):
        if p[l - 1] == "1" and pp[l - 1] == "1":
            return l
    return None
