"""Detection of 3-sub-cadences that start in an interval L and end in an
interval R, on binary strings.

The first and last index of a 3-sub-cadence share a parity, so everything
here works one parity class at a time.  The detector classifies the
parity-filtered subsequences of L and R and dispatches:

* two opposite-oriented steps ("01" in one interval, "10" in the other at
  the same parity) force a witness through a single midpoint probe;
* two uniform runs reduce to one probe of the midpoint interval;
* a uniform side against a many-run side is resolved by a scan that either
  finds a witness or discards a prefix of the complex side, shrinking it by
  more than half the uniform run's span per step.

Overlapping L and R are decomposed around the overlap; inside the overlap a
window of nine characters always contains a witness (every binary string of
length nine has a 3-sub-cadence), so the overlap itself is only ever probed
at constant cost.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import (
    AlphabetMismatchError,
    IntervalError,
    InternalError,
    PreconditionViolatedError,
)
from .views import (
    EVEN,
    ODD,
    Interval,
    SHAPE_ALL,
    SHAPE_COMPLEX,
    SHAPE_EMPTY,
    SHAPE_TWO_RUNS,
    StringView,
    pceil,
    pfloor,
)
from .witness import KIND_LR, KIND_SUBCADENCE, Witness, as_kind, certify

FOUND = "found"
NO_CADENCE = "no_cadence"
SHRUNK = "shrunk"


@dataclass(frozen=True, slots=True)
class ScanState:
    """State of the uniform-against-complex scan at one parity.

    ``run_lo..run_hi`` span the uniform run (every parity-``parity`` index
    there carries ``char``); ``lo..hi`` is the remaining span of the complex
    side.  All four bounds share the parity.  ``end_probe``/``mid_probe``
    record the indices probed by the latest step.
    """

    parity: int
    char: str
    run_lo: int
    run_hi: int
    lo: int
    hi: int
    end_probe: int | None = None
    mid_probe: int | None = None


@dataclass(frozen=True, slots=True)
class StepOutcome:
    """Result of one scan step: a witness, a proof of absence, or a strictly
    larger lower bound for the remaining span."""

    kind: str
    witness: Witness | None = None
    new_lo: int | None = None
    end_probe: int | None = None
    mid_probe: int | None = None


def _other(c: str) -> str:
    return "1" if c == "0" else "0"


def midpoint_witness(view: StringView, i: int, j: int) -> Witness:
    """Witness from two opposite-oriented parity steps at i and j.

    Requires ``char_at(i) == char_at(j) != char_at(i+2) == char_at(j-2)``,
    ``i === j (mod 2)`` and ``i + 2 < j - 2``.  On a binary string the
    midpoint (i+j)/2 then completes a 3-sub-cadence with one of the two
    pairs, whichever matches its character.
    """
    if i % 2 != j % 2:
        raise PreconditionViolatedError("midpoint_witness requires matching parity")
    if not i + 2 < j - 2:
        raise PreconditionViolatedError("midpoint_witness requires i + 2 < j - 2")
    a = view.char_at(i)
    b = view.char_at(i + 2)
    if a == b or view.char_at(j) != a or view.char_at(j - 2) != b:
        raise PreconditionViolatedError("midpoint_witness character pattern violated")
    m = (i + j) // 2
    if view.char_at(m) == a:
        w = Witness(i, (j - i) // 2, 3, a, KIND_SUBCADENCE)
    else:
        w = Witness(i + 2, (j - i - 4) // 2, 3, b, KIND_SUBCADENCE)
    return certify(view, w)


def uniform_runs_witness(view: StringView, p, c: str, lrun: Interval, rrun: Interval):
    """Witness between two parity-p runs of ``c``, or None.

    Both runs must carry ``c`` at every parity-p index (caller's contract).
    A witness exists iff the midpoint interval
    [(lrun.lo + rrun.lo)/2, (lrun.hi + rrun.hi)/2] holds a ``c`` anywhere;
    the first such position is returned as the middle element, with the
    left endpoint clamped into ``lrun``.
    """
    if lrun.empty or rrun.empty:
        return None
    for b in (lrun.lo, lrun.hi, rrun.lo, rrun.hi):
        if b % 2 != p:
            raise PreconditionViolatedError("run bounds must match the parity")
    if not lrun.hi < rrun.lo:
        raise PreconditionViolatedError("left run must precede right run")
    mid = Interval((lrun.lo + rrun.lo) // 2, (lrun.hi + rrun.hi) // 2)
    m = view.first_in(c, None, mid)
    if m is None:
        return None
    left = max(lrun.lo, 2 * m - rrun.hi)
    w = Witness(left, m - left, 3, c, KIND_SUBCADENCE)
    return certify(view, w)


def lr_step(view: StringView, st: ScanState) -> StepOutcome:
    """One pass of the uniform-against-complex scan.

    Either finds a witness, proves no parity-p witness pairs the run with
    the remaining span, or raises the span's lower bound past every end
    reachable from the probed middle, discarding more than half the run's
    width worth of candidates.
    """
    p, c = st.parity, st.char
    if st.run_lo % 2 != p or st.run_hi % 2 != p or st.run_lo > st.run_hi:
        raise PreconditionViolatedError("run bounds must be a parity-p interval")
    if st.run_hi >= st.lo:
        raise PreconditionViolatedError("run must precede the scanned span")
    end = view.first_in(c, p, Interval(st.lo, st.hi))
    if end is None:
        return StepOutcome(NO_CADENCE)
    m = view.first_in(c, None, Interval((st.run_lo + end) // 2, (st.run_hi + end) // 2))
    if m is not None:
        w = Witness(2 * m - end, end - m, 3, c, KIND_SUBCADENCE)
        return StepOutcome(FOUND, witness=certify(view, w), end_probe=end)
    mid = view.first_in(
        c, None, Interval((st.run_hi + end) // 2 + 1, (st.run_hi + st.hi) // 2)
    )
    if mid is None:
        return StepOutcome(NO_CADENCE, end_probe=end)
    wlo = max(2 * mid - st.run_hi, st.lo)
    whi = min(2 * mid - st.run_lo, st.hi)
    r = view.first_in(c, p, Interval(wlo, whi))
    if r is not None:
        w = Witness(2 * mid - r, r - mid, 3, c, KIND_SUBCADENCE)
        return StepOutcome(FOUND, witness=certify(view, w), end_probe=end, mid_probe=mid)
    return StepOutcome(
        SHRUNK, new_lo=2 * mid - st.run_lo + 2, end_probe=end, mid_probe=mid
    )


def _scan_uniform_vs_complex(view, p, c, run, span):
    """Run lr_step to completion; run/span are parity-p (lo, hi) pairs."""
    work = view.complemented() if c == "1" else view
    st = ScanState(p, "0", run[0], run[1], span[0], span[1])
    ctr = view.counters
    while True:
        out = lr_step(work, st)
        ctr.step_iterations += 1
        if out.kind == FOUND:
            w = out.witness
            return Witness(w.i, w.d, 3, c, KIND_SUBCADENCE)
        if out.kind == NO_CADENCE:
            return None
        st = replace(st, lo=out.new_lo, end_probe=out.end_probe, mid_probe=out.mid_probe)


def _aligned_runs(shape_info, span, orient, p):
    """Split a parity span into (first-run, second-run) for an orientation.

    ``orient`` is the character of the first run.  Uniform stretches align
    with either orientation (one side degenerates to an empty run).
    """
    lo, hi = span
    if shape_info.kind == SHAPE_ALL:
        if shape_info.char == orient:
            return (orient, Interval(lo, hi)), (_other(orient), Interval(1, 0))
        return (orient, Interval(1, 0)), (shape_info.char, Interval(lo, hi))
    b = shape_info.boundary
    return (shape_info.char, Interval(lo, b)), (_other(shape_info.char), Interval(b + 2, hi))


def _detect_lr_parity(view, p, L: Interval, R: Interval):
    """Witness (as a bare sub-cadence) at parity p, or None."""
    llo, lhi = pceil(max(L.lo, 1), p), pfloor(min(L.hi, view.n), p)
    rlo, rhi = pceil(max(R.lo, 1), p), pfloor(min(R.hi, view.n), p)
    if llo > lhi or rlo > rhi:
        return None
    sl = view.shape(p, L)
    sr = view.shape(p, R)
    if sl.kind == SHAPE_EMPTY or sr.kind == SHAPE_EMPTY:
        return None
    cl_complex = sl.kind == SHAPE_COMPLEX
    cr_complex = sr.kind == SHAPE_COMPLEX
    if cl_complex and cr_complex:
        # both orientations exist on both sides; pair "01" with "10"
        return midpoint_witness(view, sl.ev01[0], sr.ev10[1])
    if cr_complex:
        if sl.kind == SHAPE_ALL:
            return _scan_uniform_vs_complex(view, p, sl.char, (llo, lhi), (rlo, rhi))
        evl = (sl.boundary, sl.boundary + 2)
        evr = sr.ev10 if sl.char == "0" else sr.ev01
        return midpoint_witness(view, evl[0], evr[1])
    if cl_complex:
        if sr.kind == SHAPE_ALL:
            # mirror: the uniform side becomes the left run of the reversed view
            rv = view.reversed()
            n = view.n
            q = (n + 1 + p) % 2
            w = _scan_uniform_vs_complex(
                rv, q, sr.char, (n + 1 - rhi, n + 1 - rlo), (n + 1 - lhi, n + 1 - llo)
            )
            if w is None:
                return None
            return Witness(n + 1 - w.last, w.d, 3, w.char, KIND_SUBCADENCE)
        evl = sl.ev01 if sr.char == "1" else sl.ev10
        evr = (sr.boundary, sr.boundary + 2)
        return midpoint_witness(view, evl[0], evr[1])
    # no complex side: uniform or two-run stretches only
    if sl.kind == SHAPE_TWO_RUNS and sr.kind == SHAPE_TWO_RUNS and sl.char != sr.char:
        # opposite orientations: "01" against "10"
        return midpoint_witness(view, sl.boundary, sr.boundary + 2)
    orient = sl.char if sl.kind == SHAPE_TWO_RUNS else sr.char
    lruns = _aligned_runs(sl, (llo, lhi), orient, p)
    rruns = _aligned_runs(sr, (rlo, rhi), orient, p)
    for (lc, lint), (rc, rint) in zip(lruns, rruns):
        if lint.empty or rint.empty:
            continue
        assert lc == rc
        w = uniform_runs_witness(view, p, lc, lint, rint)
        if w is not None:
            return w
    return None


def detect_lr_disjoint(view: StringView, L: Interval, R: Interval):
    """L-R-3-cadence witness for disjoint L entirely before R, or None."""
    if L.empty or R.empty:
        return None
    if not view.is_binary:
        raise AlphabetMismatchError("L-R detection requires a binary view")
    if L.hi >= R.lo:
        raise IntervalError("intervals overlap or are out of order; use detect_lr")
    for p in (EVEN, ODD):
        w = _detect_lr_parity(view, p, L, R)
        if w is not None:
            return certify(view, as_kind(w, KIND_LR, L, R))
    return None


def _overlap_witness(view, M: Interval, L: Interval, R: Interval):
    """Brute-force the first min(9, |M|) positions of the overlap."""
    hi = min(M.lo + 8, M.hi)
    for i in range(M.lo, hi + 1):
        for d in range(1, (hi - i) // 2 + 1):
            ch = view.char_at(i)
            if view.char_at(i + d) == ch and view.char_at(i + 2 * d) == ch:
                w = Witness(i, d, 3, ch, KIND_LR, L, R)
                return certify(view, w)
    if hi - M.lo + 1 >= 9:
        # every binary string of length nine contains a 3-sub-cadence
        raise InternalError("nine-character window without a 3-sub-cadence")
    return None


def detect_lr(view: StringView, L: Interval, R: Interval):
    """L-R-3-cadence witness for possibly overlapping intervals, or None.

    Requires ``L.lo <= R.lo`` and ``L.hi <= R.hi``.  The overlap M = L & R
    is handled by a constant-size scan; the disjoint remainders delegate to
    ``detect_lr_disjoint``.  Witnesses found through both remainders may
    coincide; detection does not attempt to count.
    """
    if L.empty or R.empty:
        return None
    if not (L.lo <= R.lo and L.hi <= R.hi):
        raise IntervalError("detect_lr requires L.lo <= R.lo and L.hi <= R.hi")
    if L.hi < R.lo:
        return detect_lr_disjoint(view, L, R)
    if not view.is_binary:
        raise AlphabetMismatchError("L-R detection requires a binary view")
    M = Interval(R.lo, L.hi)
    left = Interval(L.lo, R.lo - 1)
    right = Interval(L.hi + 1, R.hi)
    w = _overlap_witness(view, M, L, R)
    if w is not None:
        return w
    if not left.empty:
        w = detect_lr_disjoint(view, left, R)
        if w is not None:
            return certify(view, as_kind(w, KIND_LR, L, R))
    if not right.empty:
        w = detect_lr_disjoint(view, L, right)
        if w is not None:
            return certify(view, as_kind(w, KIND_LR, L, R))
    return None
