"""Straight-line programs in Chomsky normal form over the alphabet {0,1,2}.

A grammar is an ordered rule list.  Rule ``i`` (0-based) is either a single
character (a terminal) or a pair ``(j, k)`` of earlier rule indices whose
expansion is the concatenation of the children's expansions.  The start
symbol is the last rule.  Ordering makes acyclicity structural: a pair may
only reference strictly smaller indices.

All expansion lengths are bounded by ``2**63 - 1``; constructors reject
anything larger so that downstream index arithmetic stays exact.

Constructors copy and renumber rules instead of sharing them between
grammars, so every ``Slp`` is self-contained and can be serialized on its
own.  Deduplication across grammars would be an optimization, not part of
the contract.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    AlphabetMismatchError,
    EmptyGrammarError,
    EmptyInputError,
    ForwardReferenceError,
    LengthOverflowError,
    PreconditionViolatedError,
    SlpFormatError,
    TooLongError,
)

MAX_EXPANSION = 2**63 - 1
ALPHABET = "012"

# Local-offset parity indices: offsets are 1-based within a rule's expansion,
# so offset 1 is odd.  counts[rule][code * 2 + (offset % 2)] counts the
# occurrences of character `code` at offsets of that parity.
_EVEN_OFF = 0
_ODD_OFF = 1


@dataclass(frozen=True)
class RuleStats:
    """Per-rule expansion length, depth and parity-split character counts."""

    lengths: tuple
    depths: tuple
    counts: tuple  # per rule: 6-tuple, index = code * 2 + offset_parity

    @property
    def depth(self):
        return self.depths[-1]


def validate(rules) -> RuleStats:
    """Check grammar invariants and return per-rule statistics.

    ``rules`` is a sequence of terminals (one-character strings) and pairs of
    0-based child indices.  Raises ``EmptyGrammarError``,
    ``ForwardReferenceError`` or ``LengthOverflowError``.
    """
    rules = tuple(rules)
    if not rules:
        raise EmptyGrammarError("grammar has no rules")
    lengths = []
    depths = []
    counts = []
    for i, rule in enumerate(rules):
        if isinstance(rule, str):
            if len(rule) != 1 or rule not in ALPHABET:
                raise ForwardReferenceError(f"rule {i}: bad terminal {rule!r}")
            lengths.append(1)
            depths.append(1)
            row = [0] * 6
            row[(ord(rule) - 48) * 2 + _ODD_OFF] = 1
            counts.append(tuple(row))
            continue
        try:
            j, k = rule
        except (TypeError, ValueError):
            raise ForwardReferenceError(f"rule {i}: malformed rule {rule!r}") from None
        if not (isinstance(j, int) and isinstance(k, int)):
            raise ForwardReferenceError(f"rule {i}: non-integer children {rule!r}")
        if not (0 <= j < i and 0 <= k < i):
            raise ForwardReferenceError(f"rule {i}: children {rule!r} not both < {i}")
        total = lengths[j] + lengths[k]
        if total > MAX_EXPANSION:
            raise LengthOverflowError(f"rule {i}: expansion length {total} exceeds 63-bit limit")
        lengths.append(total)
        depths.append(1 + max(depths[j], depths[k]))
        shift = lengths[j] & 1
        left, right = counts[j], counts[k]
        row = [0] * 6
        for code in range(3):
            base = code * 2
            # right-child offsets are displaced by lengths[j]; parity composes
            row[base] = left[base] + right[base + shift]
            row[base + 1] = left[base + 1] + right[base + (1 ^ shift)]
        counts.append(tuple(row))
    return RuleStats(tuple(lengths), tuple(depths), tuple(counts))


class Slp:
    """An immutable straight-line program; validated on construction."""

    __slots__ = ("rules", "stats")

    def __init__(self, rules):
        object.__setattr__(self, "rules", tuple(rules))
        object.__setattr__(self, "stats", validate(self.rules))

    def __setattr__(self, name, value):
        raise AttributeError("Slp is immutable")

    @property
    def start(self):
        return len(self.rules) - 1

    @property
    def length(self):
        return self.stats.lengths[-1]

    @property
    def alphabet(self):
        """Characters occurring in the expansion of the start rule."""
        row = self.stats.counts[-1]
        return frozenset(chr(48 + c) for c in range(3) if row[c * 2] + row[c * 2 + 1] > 0)

    @property
    def alphabet_size(self):
        return 3 if "2" in self.alphabet else 2

    def __repr__(self):
        return f"Slp({len(self.rules)} rules, length={self.length})"

    def __eq__(self, other):
        return isinstance(other, Slp) and self.rules == other.rules

    def __hash__(self):
        return hash(self.rules)


def _shifted(rules, offset):
    return tuple(r if isinstance(r, str) else (r[0] + offset, r[1] + offset) for r in rules)


def literal(s: str) -> Slp:
    """Grammar expanding to exactly ``s``; at most ``2 * len(s)`` rules."""
    if not s:
        raise EmptyInputError("literal requires a non-empty string")
    for ch in s:
        if ch not in ALPHABET:
            raise AlphabetMismatchError(f"character {ch!r} outside alphabet {{0,1,2}}")
    rules = []
    term = {}
    for ch in s:
        if ch not in term:
            term[ch] = len(rules)
            rules.append(ch)
    layer = [term[ch] for ch in s]
    # balanced pairwise reduction keeps the depth logarithmic
    while len(layer) > 1:
        nxt = []
        for a, b in zip(layer[::2], layer[1::2]):
            rules.append((a, b))
            nxt.append(len(rules) - 1)
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return Slp(rules)


def concat(a: Slp, b: Slp) -> Slp:
    """Grammar for expansion(a) + expansion(b); adds one rule past the copies."""
    rules = list(a.rules)
    rules.extend(_shifted(b.rules, len(a.rules)))
    rules.append((a.start, len(a.rules) + b.start))
    return Slp(rules)


def power(a: Slp, m: int) -> Slp:
    """Grammar for expansion(a) repeated ``m`` times (binary exponentiation).

    Adds at most ``2 * floor(log2(m)) + 2`` rules beyond the copy of ``a``.
    """
    if m < 1:
        raise PreconditionViolatedError("power requires m >= 1")
    if a.length * m > MAX_EXPANSION:
        raise LengthOverflowError(f"power expansion length {a.length * m} exceeds 63-bit limit")
    if m == 1:
        return Slp(a.rules)
    rules = list(a.rules)
    acc = None
    sq = a.start
    mm = m
    while mm:
        if mm & 1:
            if acc is None:
                acc = sq
            else:
                rules.append((acc, sq))
                acc = len(rules) - 1
        mm >>= 1
        if mm:
            rules.append((sq, sq))
            sq = len(rules) - 1
    # for powers of two the last squaring is the root; otherwise the final
    # combine was appended last
    assert acc == len(rules) - 1
    return Slp(rules)


def reverse(a: Slp) -> Slp:
    """Grammar for the reversed expansion: swap the children of every pair."""
    return Slp(tuple(r if isinstance(r, str) else (r[1], r[0]) for r in a.rules))


def double_chars(a: Slp) -> Slp:
    """Replace every character c of the expansion by cc.

    Adds one terminal rule per distinct character used; original terminal
    rules turn into pairs referencing the new terminals.
    """
    chars = sorted({r for r in a.rules if isinstance(r, str)})
    if a.length * 2 > MAX_EXPANSION:
        raise LengthOverflowError("doubled expansion exceeds 63-bit limit")
    base = {ch: i for i, ch in enumerate(chars)}
    t = len(chars)
    rules = list(chars)
    for r in a.rules:
        if isinstance(r, str):
            rules.append((base[r], base[r]))
        else:
            rules.append((r[0] + t, r[1] + t))
    return Slp(rules)


def substitute(a: Slp, frm: str, to: str) -> Slp:
    """Rewrite every terminal ``frm`` to ``to``."""
    if frm not in ALPHABET or to not in ALPHABET:
        raise AlphabetMismatchError("substitute characters must be in {0,1,2}")
    return Slp(tuple(to if r == frm else r for r in a.rules))


def decompress(a: Slp, max_len: int) -> str:
    """Return the full expansion iff its length is at most ``max_len``."""
    if a.length > max_len:
        raise TooLongError(a.length, max_len)
    lengths = a.stats.lengths
    # restrict to rules reachable from the start; unreachable ones may be huge
    reach = set()
    stack = [a.start]
    while stack:
        i = stack.pop()
        if i in reach:
            continue
        reach.add(i)
        r = a.rules[i]
        if not isinstance(r, str):
            stack.extend(r)
    memo = {}
    for i in sorted(reach):
        r = a.rules[i]
        memo[i] = r if isinstance(r, str) else memo[r[0]] + memo[r[1]]
    out = memo[a.start]
    assert len(out) == lengths[-1]
    return out


# --- SLPv1 text format ------------------------------------------------------
#
# line 1:            SLPv1
# line 2:            rule count m (decimal, no leading zeros)
# lines 3 .. m+2:    "T <c>" with c in {0,1,2}, or "N <j> <k>" with 1-based
#                    child numbers j,k < current rule number
# Every line ends with a single LF; nothing follows the final LF.  The start
# symbol is rule m.  The parser rejects any deviation.

_HEADER = "SLPv1"


def dump_slpv1(a: Slp) -> str:
    lines = [_HEADER, str(len(a.rules))]
    for r in a.rules:
        if isinstance(r, str):
            lines.append(f"T {r}")
        else:
            lines.append(f"N {r[0] + 1} {r[1] + 1}")
    return "\n".join(lines) + "\n"


def _decimal(tok: str) -> int:
    if not tok or not tok.isdigit() or (tok[0] == "0" and tok != "0"):
        raise SlpFormatError(f"bad decimal token {tok!r}")
    return int(tok)


def load_slpv1(text) -> Slp:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise SlpFormatError("non-ASCII byte in SLPv1 input") from exc
    if "\r" in text:
        raise SlpFormatError("CR byte in SLPv1 input; LF line endings required")
    if not text.endswith("\n"):
        raise SlpFormatError("SLPv1 input must end with LF")
    lines = text.split("\n")
    if lines[-1] != "":
        raise SlpFormatError("trailing bytes after final LF")
    lines = lines[:-1]
    if len(lines) < 2 or lines[0] != _HEADER:
        raise SlpFormatError("missing SLPv1 header")
    m = _decimal(lines[1])
    if len(lines) != m + 2:
        raise SlpFormatError(f"expected {m} rule lines, found {len(lines) - 2}")
    rules = []
    for num, line in enumerate(lines[2:], start=1):
        parts = line.split(" ")
        if parts[0] == "T":
            if len(parts) != 2 or parts[1] not in ("0", "1", "2"):
                raise SlpFormatError(f"rule {num}: malformed terminal line {line!r}")
            rules.append(parts[1])
        elif parts[0] == "N":
            if len(parts) != 3:
                raise SlpFormatError(f"rule {num}: malformed pair line {line!r}")
            j = _decimal(parts[1])
            k = _decimal(parts[2])
            if j < 1 or k < 1:
                raise SlpFormatError(f"rule {num}: child numbers must be >= 1")
            rules.append((j - 1, k - 1))
        else:
            raise SlpFormatError(f"rule {num}: unknown rule tag in {line!r}")
    return Slp(rules)
