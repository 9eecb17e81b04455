"""Full-string 3-cadence detection for binary strings, plain or compressed.

A 3-cadence is a 3-sub-cadence (i, i+d, i+2d) that is structurally maximal:
i - d <= 0 and i + 3d > n.  Maximality confines the first index to the
first third of the string and the last index to the last third, and the
first and last index share a parity.

The detector enumerates a fixed set of configurations: parity (even/odd on
1-based positions) x direction (forward/reversed view) x starting run (the
first or second run of the parity-filtered first third).  Each
configuration runs a shrinking scan over the last third that either finds a
certified witness, proves there is none for that run, or discards a
doubling stretch of candidate end positions per step.  On compressed
strings the scan is capped at a tail threshold past which every candidate
pair is automatically maximal, and the tail is resolved by constant-many
shape probes instead of iteration; this keeps the step count logarithmic
and the whole procedure polynomial in the grammar size.  On plain strings
the scan's probes telescope, so total work stays linear.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlphabetMismatchError, OutOfRangeError
from .lr import (
    FOUND,
    NO_CADENCE,
    SHRUNK,
    StepOutcome,
    midpoint_witness,
    uniform_runs_witness,
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
from .witness import KIND_CADENCE, KIND_SUBCADENCE, Witness, as_kind, certify

_MAX_WINDOW_SKIPS = 64


def is_k_cadence(view: StringView, i: int, d: int, k: int = 3) -> bool:
    """True iff (i, d, k) is a k-cadence: equal characters and maximality."""
    if i < 1 or d < 1 or k < 2 or i + (k - 1) * d > view.n:
        raise OutOfRangeError(f"candidate ({i},{d},{k}) out of range for n={view.n}")
    ch = view.char_at(i)
    for j in range(1, k):
        if view.char_at(i + j * d) != ch:
            return False
    return i - d <= 0 and i + k * d > view.n


def detect_3subcadence(view: StringView):
    """3-sub-cadence witness from the first nine characters, or None.

    Every binary string of length at least nine contains one, so only
    strings shorter than nine can come back empty.
    """
    if not view.is_binary:
        raise AlphabetMismatchError("sub-cadence detection requires a binary view")
    w = min(view.n, 9)
    for i in range(1, w + 1):
        for d in range(1, (w - i) // 2 + 1):
            ch = view.char_at(i)
            if view.char_at(i + d) == ch and view.char_at(i + 2 * d) == ch:
                return certify(view, Witness(i, d, 3, ch, KIND_SUBCADENCE))
    return None


def tail_threshold(after: int, n: int, parity: int) -> int:
    """Smallest parity-matching index r such that the progression
    (after, (after+r)/2, r) would be structurally maximal.

    Every candidate pair with first index <= ``after`` and last index >= the
    returned value is maximal outright.  The result may exceed n, in which
    case the tail region is empty.
    """
    return pceil(max(3 * after, (after + 2 * n) // 3 + 1), parity)


def first_index_cap(l_max: int, n: int, end: int) -> int:
    """Largest even first index that is maximal with last element ``end``.

    Three-way minimum: the run bound ``l_max``, the largest even l with
    l - (end-l)/2 <= 0, and the largest even l with l + 3(end-l)/2 > n.
    """
    return min(l_max, 2 * (end // 6), 2 * (-(-(3 * end - 2 * n) // 2) - 1))


def first_index_window(l_min: int, l_max: int, n: int, mid: int):
    """Even first-index window that is maximal with middle element ``mid``.

    Lower bound keeps the last element 2*mid - l inside the string; upper
    bound enforces both maximality inequalities.  May come back empty.
    """
    lo = max(l_min, 2 * (mid - n // 2))
    hi = min(l_max, 2 * (mid // 4), 2 * (-(-(3 * mid - n) // 4) - 1))
    return lo, hi


def _cap(l_max, n, end, p):
    # parity-general form of first_index_cap: l <= end/3 and l < 3*end - 2n
    return min(l_max, pfloor(end // 3, p), pfloor(3 * end - 2 * n - 1, p))


def _window(l_min, l_max, n, mid, p):
    # parity-general form of first_index_window:
    # 2*mid - l <= n, 2l <= mid, 2l < 3*mid - n
    lo = max(l_min, pceil(2 * mid - n, p))
    hi = min(l_max, pfloor(mid // 2, p), pfloor((3 * mid - n - 1) // 2, p))
    return lo, hi


@dataclass(frozen=True, slots=True)
class RunContext:
    """One starting-run configuration of the full-string detector.

    The run spans ``run_lo..run_hi`` at parity ``parity`` after clipping to
    the first third; every parity index there carries ``char`` ('0' after
    complement normalization).  ``after`` is the first parity index past the
    run's full extent (it carries the other character when it exists) and
    ``stop`` is its tail threshold.  ``compressed`` selects the capped scan.
    """

    parity: int
    run_index: int
    char: str
    run_lo: int
    run_hi: int
    after: int
    stop: int
    compressed: bool


def cadence_step(view: StringView, ctx: RunContext, lo: int) -> StepOutcome:
    """One pass of the maximality-aware shrinking scan.

    Like the L-R scan but every probe window is clamped by the maximality
    bounds, so any hit is a certified 3-cadence.  Probed middles whose
    first-index window is empty cannot carry a cadence at all and are
    skipped; on compressed inputs the skips are bounded and the step falls
    back to shrinking past the probed middle's reach.
    """
    p, c = ctx.parity, ctx.char
    n = view.n
    n_top = pfloor(n, p)
    lo = pceil(max(lo, 1), p)
    end = view.first_in(c, p, Interval(lo, n))
    if end is None:
        return StepOutcome(NO_CADENCE)
    cap = _cap(ctx.run_hi, n, end, p)
    m = view.first_in(c, None, Interval((ctx.run_lo + end) // 2, (cap + end) // 2))
    if m is not None:
        w = Witness(2 * m - end, end - m, 3, c, KIND_CADENCE)
        return StepOutcome(FOUND, witness=certify(view, w), end_probe=end)
    m_lo = max((cap + end) // 2 + 1, (ctx.run_lo + lo) // 2)
    m_hi = (ctx.run_hi + n_top) // 2
    skips = 0
    cur = m_lo
    while True:
        mid = view.first_in(c, None, Interval(cur, m_hi))
        if mid is None:
            return StepOutcome(NO_CADENCE, end_probe=end)
        wlo, whi = _window(ctx.run_lo, ctx.run_hi, n, mid, p)
        if wlo > whi:
            # no first index is maximal with this middle; it cannot matter
            skips += 1
            if ctx.compressed and skips > _MAX_WINDOW_SKIPS:
                return StepOutcome(SHRUNK, new_lo=2 * mid - wlo + 2,
                                   end_probe=end, mid_probe=mid)
            cur = mid + 1
            continue
        r = view.first_in(c, p, Interval(2 * mid - whi, 2 * mid - wlo))
        if r is not None:
            w = Witness(2 * mid - r, r - mid, 3, c, KIND_CADENCE)
            return StepOutcome(FOUND, witness=certify(view, w),
                               end_probe=end, mid_probe=mid)
        return StepOutcome(SHRUNK, new_lo=2 * mid - wlo + 2,
                           end_probe=end, mid_probe=mid)


def tail_check(view: StringView, ctx: RunContext):
    """Resolve end positions at or past the tail threshold in O(1) probes.

    With L = [1, after] and R = [stop, n], every parity-p pair from L x R is
    maximal, so the tail reduces to plain L-R reasoning: a "10" step in the
    tail pairs with the run's trailing "01" through one midpoint probe;
    otherwise the tail splits into a zero run and a one run, each checked
    against its uniform counterpart in L.  Witnesses ending in a trailing
    one run that starts before ``stop`` are left to the reversed-direction
    configurations, which see them as run starts.
    """
    p = ctx.parity
    n_top = pfloor(view.n, p)
    if ctx.after > n_top:
        return None
    t_lo = pceil(ctx.stop, p)
    if t_lo > n_top:
        return None
    tail = Interval(t_lo, n_top)
    sh = view.shape(p, tail)
    if sh.kind == SHAPE_EMPTY:
        return None
    run_full = Interval(ctx.run_lo, ctx.after - 2)
    ev = None
    if sh.kind == SHAPE_COMPLEX:
        ev = sh.ev10
    elif sh.kind == SHAPE_TWO_RUNS and sh.char == "1":
        ev = (sh.boundary, sh.boundary + 2)
    if ev is not None:
        w = midpoint_witness(view, ctx.after - 2, ev[1])
        return certify(view, as_kind(w, KIND_CADENCE))
    zeros = ones = None
    if sh.kind == SHAPE_ALL:
        if sh.char == "0":
            zeros = tail
        else:
            ones = tail
    else:  # two runs, zeros first
        zeros = Interval(t_lo, sh.boundary)
        ones = Interval(sh.boundary + 2, n_top)
    if zeros is not None:
        w = uniform_runs_witness(view, p, "0", run_full, zeros)
        if w is not None:
            return certify(view, as_kind(w, KIND_CADENCE))
    if ones is not None:
        w = uniform_runs_witness(view, p, "1", Interval(ctx.after, ctx.after), ones)
        if w is not None:
            return certify(view, as_kind(w, KIND_CADENCE))
    return None


def _scan_run(view: StringView, ctx: RunContext):
    """Shrinking scan plus tail check for one run context."""
    p = ctx.parity
    lo = (2 * view.n) // 3 + 1
    ctr = view.counters
    iters = 0
    found = None
    while True:
        if ctx.compressed and pceil(lo, p) >= ctx.stop:
            break
        out = cadence_step(view, ctx, lo)
        iters += 1
        ctr.step_iterations += 1
        if out.kind == FOUND:
            found = out.witness
            break
        if out.kind == NO_CADENCE:
            break
        lo = out.new_lo
    ctr.context_iterations.append(iters)
    if found is not None:
        return found
    return tail_check(view, ctx)


def _scan_configuration(view: StringView, p: int, compressed: bool):
    """Try the first two parity-p runs of the first third as start runs."""
    n = view.n
    first = pceil(1, p)
    limit = pfloor(n // 3, p)
    if first > limit:
        return None
    n_top = pfloor(n, p)
    c1 = view.char_at(first)
    c2 = "1" if c1 == "0" else "0"
    nxt = view.first_in(c2, p, Interval(first, n_top))
    end1 = nxt - 2 if nxt is not None else n_top
    runs = [(1, c1, first, end1)]
    if end1 + 2 <= limit:
        nxt2 = view.first_in(c1, p, Interval(end1 + 2, n_top))
        end2 = nxt2 - 2 if nxt2 is not None else n_top
        runs.append((2, c2, end1 + 2, end2))
    for run_index, ch, r_lo, r_end in runs:
        work = view.complemented() if ch == "1" else view
        after = r_end + 2
        ctx = RunContext(
            parity=p,
            run_index=run_index,
            char="0",
            run_lo=r_lo,
            run_hi=min(r_end, limit),
            after=after,
            stop=tail_threshold(after, n, p),
            compressed=compressed,
        )
        w = _scan_run(work, ctx)
        if w is not None:
            wc = w.char if ch == "0" else ("1" if w.char == "0" else "0")
            return Witness(w.i, w.d, 3, wc, KIND_CADENCE)
    return None


def detect_3cadence(view: StringView):
    """3-cadence witness for a binary view, or None.

    Configurations run in a fixed order (even-forward, even-reversed,
    odd-forward, odd-reversed; run 1 before run 2) and the first certified
    witness wins, so results are deterministic.
    """
    if not view.is_binary:
        raise AlphabetMismatchError("3-cadence detection requires a binary view")
    n = view.n
    if n < 3:
        return None
    compressed = view.is_compressed
    for p, rev in ((EVEN, False), (EVEN, True), (ODD, False), (ODD, True)):
        base = view.reversed() if rev else view
        w = _scan_configuration(base, p, compressed)
        if w is not None:
            if rev:
                w = Witness(n + 1 - (w.i + 2 * w.d), w.d, 3, w.char, KIND_CADENCE)
            return certify(view, w)
    return None


@dataclass(frozen=True, slots=True)
class VdwEntry:
    """Shortest length forcing a k-sub-cadence over an alphabet of the given
    size, together with a witness-free string one character shorter."""

    k: int
    sigma: int
    m: int
    counterexample: str
