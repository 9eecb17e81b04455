"""Uniform random-access query layer over plain and compressed strings.

Positions are 1-based and "even"/"odd" always refer to the global 1-based
position.  Parity-restricted subsequences are never materialized; every
query takes a parity filter (``EVEN``, ``ODD`` or ``None`` for both) and
answers in place, which is what makes the same code usable on
grammar-compressed backends.

Views are immutable and all queries are pure, so a view may be shared and
queried concurrently.  Adapters (reverse, complement, 2-to-1 projection)
wrap a view without copying data; they translate queries down to the base
backend and translate answers back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlphabetMismatchError, OutOfRangeError
from .slp import Slp

EVEN = 0
ODD = 1

_CHUNK = 2048  # cells examined per probe round on plain backends


def pceil(i: int, p: int) -> int:
    """Smallest index >= i with parity p."""
    return i if i % 2 == p else i + 1


def pfloor(i: int, p: int) -> int:
    """Largest index <= i with parity p."""
    return i if i % 2 == p else i - 1


@dataclass(frozen=True, slots=True)
class Interval:
    """1-based inclusive index range; empty when lo > hi."""

    lo: int
    hi: int

    @property
    def empty(self) -> bool:
        return self.lo > self.hi

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def __contains__(self, i) -> bool:
        return self.lo <= i <= self.hi


class QueryCounters:
    """Instrumentation shared by all views over one backend.

    ``cells`` counts characters examined on plain backends (a scan that hits
    at offset k pays k+1).  ``rule_visits`` counts grammar rules expanded on
    compressed backends.  ``max_rule_visits`` is the per-query maximum,
    ``step_iterations`` the number of shrink steps across detector loops, and
    ``context_iterations`` the per-run-context step counts of the most recent
    full-string detection.
    """

    __slots__ = ("cells", "rule_visits", "queries", "max_rule_visits",
                 "step_iterations", "context_iterations")

    def __init__(self):
        self.cells = 0
        self.rule_visits = 0
        self.queries = 0
        self.max_rule_visits = 0
        self.step_iterations = 0
        self.context_iterations = []

    @property
    def accesses(self):
        return self.cells + self.rule_visits


# --- shapes -------------------------------------------------------------

SHAPE_EMPTY = "empty"
SHAPE_ALL = "all"
SHAPE_TWO_RUNS = "two_runs"
SHAPE_COMPLEX = "complex"


@dataclass(frozen=True, slots=True)
class RunShape:
    """Classification of a parity-filtered stretch of a binary view.

    ``all``:       every filtered position carries ``char``.
    ``two_runs``:  a block of ``char`` followed by a block of the other
                   character; ``boundary`` is the last index of the first
                   block.
    ``complex``:   both step patterns occur; ``ev01``/``ev10`` hold the first
                   adjacent filtered pairs reading "01" and "10".
    """

    kind: str
    char: str | None = None
    boundary: int | None = None
    ev01: tuple | None = None
    ev10: tuple | None = None


# --- backends -------------------------------------------------------------


class _PlainBackend:
    __slots__ = ("data", "n", "alphabet_codes", "counters")

    def __init__(self, data: bytes, counters: QueryCounters):
        self.data = data
        self.n = len(data)
        self.alphabet_codes = frozenset(b - 48 for b in set(data))
        self.counters = counters

    def char_code(self, i: int) -> int:
        self.counters.cells += 1
        return self.data[i - 1] - 48

    def _scan(self, needles, p, lo, hi, last):
        """Position of the first (or last) needle at parity p in [lo, hi].

        Scans in chunks so the access counter reflects the cells a serial
        scan would examine, while the inner search runs at C speed.
        """
        data = self.data
        ctr = self.counters
        if p is None:
            start0, step = lo - 1, 1
            end0 = hi - 1
        else:
            start0, step = pceil(lo, p) - 1, 2
            end0 = pfloor(hi, p) - 1
        if start0 > end0:
            return None
        total = (end0 - start0) // step + 1
        done = 0
        while done < total:
            m = min(_CHUNK, total - done)
            if last:
                base0 = start0 + (total - done - m) * step
            else:
                base0 = start0 + done * step
            seg = data[base0 : base0 + (m - 1) * step + 1 : step]
            best = -1
            for nd in needles:
                f = seg.rfind(nd) if last else seg.find(nd)
                if f != -1 and (best == -1 or (f > best if last else f < best)):
                    best = f
            if best != -1:
                ctr.cells += (m - best) if last else (best + 1)
                return base0 + best * step + 1
            ctr.cells += m
            done += m
        return None

    def find_first(self, codes, p, lo, hi):
        needles = [bytes((c + 48,)) for c in codes]
        return self._scan(needles, p, lo, hi, last=False)

    def find_last(self, codes, p, lo, hi):
        needles = [bytes((c + 48,)) for c in codes]
        return self._scan(needles, p, lo, hi, last=True)

    def count_range(self, codes, p, lo, hi):
        if lo < 1:
            lo = 1
        if hi > self.n:
            hi = self.n
        if lo > hi:
            return 0
        if p is None:
            seg = self.data[lo - 1 : hi]
        else:
            start0 = pceil(lo, p) - 1
            if start0 > hi - 1:
                return 0
            seg = self.data[start0 : hi : 2]
        self.counters.cells += len(seg)
        return sum(seg.count(c + 48) for c in codes)


class _SlpBackend:
    __slots__ = ("slp", "rules", "lengths", "counts", "n", "depth",
                 "alphabet_codes", "counters", "start")

    def __init__(self, slp: Slp, counters: QueryCounters):
        self.slp = slp
        self.rules = slp.rules
        self.lengths = slp.stats.lengths
        self.counts = slp.stats.counts
        self.n = slp.length
        self.depth = slp.stats.depth
        self.start = slp.start
        row = slp.stats.counts[-1]
        self.alphabet_codes = frozenset(
            c for c in range(3) if row[c * 2] + row[c * 2 + 1] > 0
        )
        self.counters = counters

    def _rule_count(self, idx, gstart, codes, p):
        # occurrences of `codes` at global parity p inside rule `idx` whose
        # expansion starts at global position `gstart`
        row = self.counts[idx]
        if p is None:
            return sum(row[c * 2] + row[c * 2 + 1] for c in codes)
        op = (p - gstart + 1) % 2
        return sum(row[c * 2 + op] for c in codes)

    def char_code(self, i: int) -> int:
        idx = self.start
        s = 1
        rules, lengths = self.rules, self.lengths
        ctr = self.counters
        while True:
            ctr.rule_visits += 1
            r = rules[idx]
            if isinstance(r, str):
                return ord(r) - 48
            j, k = r
            lj = lengths[j]
            if i < s + lj:
                idx = j
            else:
                s += lj
                idx = k

    def _prefix_count(self, codes, p, i):
        if i <= 0:
            return 0
        if i > self.n:
            i = self.n
        rules, lengths = self.rules, self.lengths
        ctr = self.counters
        total = 0
        idx = self.start
        s = 1
        while True:
            ctr.rule_visits += 1
            if i >= s + lengths[idx] - 1:
                total += self._rule_count(idx, s, codes, p)
                return total
            j, k = rules[idx]
            lj = lengths[j]
            if i < s + lj:
                idx = j
            else:
                total += self._rule_count(j, s, codes, p)
                s += lj
                idx = k

    def _select(self, codes, p, rank):
        # position of the rank-th (1-based) occurrence of (codes, p)
        rules, lengths = self.rules, self.lengths
        ctr = self.counters
        idx = self.start
        s = 1
        while True:
            ctr.rule_visits += 1
            r = rules[idx]
            if isinstance(r, str):
                return s
            j, k = r
            cl = self._rule_count(j, s, codes, p)
            if rank <= cl:
                idx = j
            else:
                rank -= cl
                s += lengths[j]
                idx = k

    def find_first(self, codes, p, lo, hi):
        before = self._prefix_count(codes, p, lo - 1)
        upto = self._prefix_count(codes, p, hi)
        if upto == before:
            return None
        return self._select(codes, p, before + 1)

    def find_last(self, codes, p, lo, hi):
        before = self._prefix_count(codes, p, lo - 1)
        upto = self._prefix_count(codes, p, hi)
        if upto == before:
            return None
        return self._select(codes, p, upto)

    def count_range(self, codes, p, lo, hi):
        if lo < 1:
            lo = 1
        if hi > self.n:
            hi = self.n
        if lo > hi:
            return 0
        return self._prefix_count(codes, p, hi) - self._prefix_count(codes, p, lo - 1)


# --- views -----------------------------------------------------------------

REVERSE = "reverse"
COMPLEMENT = "complement"
PROJECT_2_TO_1 = "project"

_ADAPTERS = (REVERSE, COMPLEMENT, PROJECT_2_TO_1)


class StringView:
    """Query interface over a plain or SLP-backed string with adapters."""

    __slots__ = ("_backend", "_adapters", "n")

    def __init__(self, backend, adapters=()):
        self._backend = backend
        self._adapters = tuple(adapters)
        self.n = backend.n

    @classmethod
    def from_plain(cls, s, counters=None):
        if isinstance(s, str):
            data = s.encode("ascii")
        else:
            data = bytes(s)
        for b in set(data):
            if b not in (48, 49, 50):
                raise AlphabetMismatchError(f"character {chr(b)!r} outside alphabet {{0,1,2}}")
        return cls(_PlainBackend(data, counters or QueryCounters()))

    @classmethod
    def from_slp(cls, slp: Slp, counters=None):
        return cls(_SlpBackend(slp, counters or QueryCounters()))

    @property
    def counters(self) -> QueryCounters:
        return self._backend.counters

    @property
    def is_compressed(self) -> bool:
        return isinstance(self._backend, _SlpBackend)

    @property
    def alphabet(self) -> frozenset:
        codes = self._backend.alphabet_codes
        for ad in self._adapters:
            if ad == COMPLEMENT:
                codes = frozenset(1 - c for c in codes)
            elif ad == PROJECT_2_TO_1:
                codes = frozenset(1 if c == 2 else c for c in codes)
        return frozenset(chr(48 + c) for c in codes)

    @property
    def is_binary(self) -> bool:
        return "2" not in self.alphabet

    # adapters ---------------------------------------------------------

    def adapt(self, adapter: str) -> "StringView":
        if adapter not in _ADAPTERS:
            raise ValueError(f"unknown adapter {adapter!r}")
        if adapter == COMPLEMENT and not self.is_binary:
            raise AlphabetMismatchError("complement requires a binary view")
        if adapter == PROJECT_2_TO_1 and self.is_binary:
            raise AlphabetMismatchError("projection requires a ternary view")
        return StringView(self._backend, self._adapters + (adapter,))

    def reversed(self) -> "StringView":
        return StringView(self._backend, self._adapters + (REVERSE,))

    def complemented(self) -> "StringView":
        return self.adapt(COMPLEMENT)

    def projected(self) -> "StringView":
        return self.adapt(PROJECT_2_TO_1)

    # translation helpers ------------------------------------------------

    def _down(self, codes, p, lo, hi):
        """Translate a (codes, parity, range) query into base coordinates."""
        flip = False
        n = self.n
        for ad in reversed(self._adapters):
            if ad == REVERSE:
                lo, hi = n + 1 - hi, n + 1 - lo
                if p is not None:
                    p = (n + 1 + p) % 2
                flip = not flip
            elif ad == COMPLEMENT:
                codes = frozenset(1 - c for c in codes if c in (0, 1))
            else:  # PROJECT_2_TO_1: view '1' covers base '1' and '2'
                out = set()
                for c in codes:
                    if c == 0:
                        out.add(0)
                    elif c == 1:
                        out.add(1)
                        out.add(2)
                codes = frozenset(out)
        return codes, p, lo, hi, flip

    def _index_down(self, i):
        for ad in reversed(self._adapters):
            if ad == REVERSE:
                i = self.n + 1 - i
        return i

    def _code_up(self, code):
        for ad in self._adapters:
            if ad == COMPLEMENT:
                code = 1 - code
            elif ad == PROJECT_2_TO_1 and code == 2:
                code = 1
        return code

    def _qstart(self):
        ctr = self._backend.counters
        ctr.queries += 1
        return ctr.rule_visits

    def _qend(self, t0):
        ctr = self._backend.counters
        d = ctr.rule_visits - t0
        if d > ctr.max_rule_visits:
            ctr.max_rule_visits = d

    # queries -----------------------------------------------------------

    def char_at(self, i: int) -> str:
        if not 1 <= i <= self.n:
            raise OutOfRangeError(f"position {i} outside [1, {self.n}]")
        t0 = self._qstart()
        code = self._backend.char_code(self._index_down(i))
        self._qend(t0)
        return chr(48 + self._code_up(code))

    def count_prefix(self, c: str, p, i: int) -> int:
        """Number of positions j <= i with parity p and character c."""
        if not 0 <= i <= self.n:
            raise OutOfRangeError(f"prefix end {i} outside [0, {self.n}]")
        t0 = self._qstart()
        codes, bp, lo, hi, _ = self._down(frozenset((ord(c) - 48,)), p, 1, i)
        out = self._backend.count_range(codes, bp, lo, hi) if i else 0
        self._qend(t0)
        return out

    def first_in(self, c: str, p, r: Interval):
        """Smallest index in r with parity p carrying c, or None.

        The interval is clipped to [1, n]; an empty interval yields None.
        """
        lo, hi = max(r.lo, 1), min(r.hi, self.n)
        if lo > hi:
            return None
        t0 = self._qstart()
        codes, bp, blo, bhi, flip = self._down(frozenset((ord(c) - 48,)), p, lo, hi)
        if flip:
            pos = self._backend.find_last(codes, bp, blo, bhi)
        else:
            pos = self._backend.find_first(codes, bp, blo, bhi)
        self._qend(t0)
        if pos is None:
            return None
        return self.n + 1 - pos if flip else pos

    def last_in(self, c: str, p, r: Interval):
        """Largest index in r with parity p carrying c, or None."""
        lo, hi = max(r.lo, 1), min(r.hi, self.n)
        if lo > hi:
            return None
        t0 = self._qstart()
        codes, bp, blo, bhi, flip = self._down(frozenset((ord(c) - 48,)), p, lo, hi)
        if flip:
            pos = self._backend.find_first(codes, bp, blo, bhi)
        else:
            pos = self._backend.find_last(codes, bp, blo, bhi)
        self._qend(t0)
        if pos is None:
            return None
        return self.n + 1 - pos if flip else pos

    def is_uniform(self, c: str, p, r: Interval) -> bool:
        """True iff no position of r at parity p carries a character != c.

        Empty intervals are vacuously uniform.
        """
        lo, hi = max(r.lo, 1), min(r.hi, self.n)
        if lo > hi:
            return True
        want = ord(c) - 48
        others = frozenset(ch for ch in (0, 1, 2) if ch != want)
        t0 = self._qstart()
        codes, bp, blo, bhi, flip = self._down(others, p, lo, hi)
        if flip:
            pos = self._backend.find_last(codes, bp, blo, bhi)
        else:
            pos = self._backend.find_first(codes, bp, blo, bhi)
        self._qend(t0)
        return pos is None

    def shape(self, p, r: Interval) -> RunShape:
        """Classify the parity-p subsequence of r on a binary view."""
        if not self.is_binary:
            raise AlphabetMismatchError("shape requires a binary view")
        lo, hi = max(r.lo, 1), min(r.hi, self.n)
        if p is not None:
            lo, hi = pceil(lo, p), pfloor(hi, p)
        if lo > hi:
            return RunShape(SHAPE_EMPTY)
        step = 1 if p is None else 2
        c0 = self.char_at(lo)
        oth = "1" if c0 == "0" else "0"
        j = self.first_in(oth, p, Interval(lo, hi))
        if j is None:
            return RunShape(SHAPE_ALL, char=c0)
        k = self.first_in(c0, p, Interval(j, hi))
        if k is None:
            return RunShape(SHAPE_TWO_RUNS, char=c0, boundary=j - step)
        first_pair = (j - step, j)   # c0 then other
        second_pair = (k - step, k)  # other then c0
        if c0 == "0":
            return RunShape(SHAPE_COMPLEX, char=c0, ev01=first_pair, ev10=second_pair)
        return RunShape(SHAPE_COMPLEX, char=c0, ev01=second_pair, ev10=first_pair)
