"""Hard-instance generators: strings whose cadence structure encodes a
common-1-position question about two binary strings.

Each generator takes the two question strings as grammars and assembles the
instance with concatenation, repetition, reversal and character doubling,
so instance size stays logarithmic in the expansion length.  The instance
has the target cadence exactly when the question strings share a position
carrying '1' in both; tests verify that equivalence by brute force at small
sizes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import AlphabetMismatchError, HypothesisViolatedError, InternalError
from .oracle import iter_lr
from .slp import Slp, concat, double_chars, literal, power, reverse, substitute
from .views import Interval

KIND_CHAR1 = "char1"
KIND_TERNARY3 = "ternary3"
KIND_LR3 = "lr3"


@dataclass(frozen=True)
class GadgetInstance:
    """A generated instance plus the data needed to pose its question."""

    slp: Slp
    kind: str
    k: int
    n: int
    L: Interval | None
    R: Interval | None
    plen: int
    pplen: int
    swapped: bool

    def sidecar(self) -> str:
        doc = {
            "kind": self.kind,
            "k": self.k,
            "n": self.n,
            "L": [self.L.lo, self.L.hi] if self.L else None,
            "R": [self.R.lo, self.R.hi] if self.R else None,
            "plen": self.plen,
            "pplen": self.pplen,
        }
        return json.dumps(doc, sort_keys=True) + "\n"


def _require_binary(g: Slp, name: str):
    if "2" in g.alphabet:
        raise AlphabetMismatchError(f"{name} must be binary")


def _ordered(p: Slp, pp: Slp):
    """Ensure the second string is not longer; swap when it is."""
    if pp.length > p.length:
        return pp, p, True
    return p, pp, False


def _zeros(m: int):
    return power(literal("0"), m) if m else None


def _cat(*parts):
    out = None
    for part in parts:
        if part is None:
            continue
        out = part if out is None else concat(out, part)
    return out


def _padded(pp: Slp, width: int) -> Slp:
    pad = width - pp.length
    return concat(pp, _zeros(pad)) if pad else pp


def gadget_cadence_char1(p: Slp, pp: Slp, k: int = 3) -> GadgetInstance:
    """Instance whose k-cadences with character '1' encode the question.

    Layout: four kinds of equally long brackets --
    zeros+P+zeros | zeros+1+zeros | zeros+reversed(padded P')+zeros |
    (k-3) all-ones brackets.  For k > 3 the all-ones brackets force every
    k-cadence to use character '1', so the character restriction can be
    dropped there.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    _require_binary(p, "P")
    _require_binary(pp, "P'")
    p, pp, swapped = _ordered(p, pp)
    w = p.length
    ppp = reverse(_padded(pp, w))
    b1 = _cat(_zeros((k - 1) * w), p, literal("0"), _zeros(k * w))
    b2 = _cat(_zeros(k * w), literal("1"), _zeros(k * w))
    b3 = _cat(_zeros(k * w), literal("0"), ppp, _zeros((k - 1) * w))
    s = _cat(b1, b2, b3)
    if k > 3:
        ones = power(literal("1"), 2 * k * w + 1)
        s = concat(s, power(ones, k - 3))
    expected = k * (2 * k * w + 1)
    if s.length != expected:
        raise InternalError(f"gadget length {s.length}, expected {expected}")
    return GadgetInstance(s, KIND_CHAR1, k, s.length, None, None, w, pp.length, swapped)


def gadget_cadence_ternary3(p: Slp, pp: Slp) -> GadgetInstance:
    """Ternary instance whose 3-cadences (any character) encode the question.

    The middle bracket uses '2' padding, so no cadence can use '0' or '2';
    every 3-cadence is forced onto character '1'.
    """
    _require_binary(p, "P")
    _require_binary(pp, "P'")
    p, pp, swapped = _ordered(p, pp)
    k = 3
    w = p.length
    ppp = reverse(_padded(pp, w))
    b1 = _cat(_zeros((k - 1) * w), p, literal("0"), _zeros(k * w))
    b2 = _cat(power(literal("2"), k * w), literal("1"), power(literal("2"), k * w))
    b3 = _cat(_zeros(k * w), literal("0"), ppp, _zeros((k - 1) * w))
    s = _cat(b1, b2, b3)
    expected = k * (2 * k * w + 1)
    if s.length != expected:
        raise InternalError(f"gadget length {s.length}, expected {expected}")
    return GadgetInstance(s, KIND_TERNARY3, 3, s.length, None, None, w, pp.length, swapped)


def gadget_lr3(p: Slp, pp: Slp) -> GadgetInstance:
    """Binary L-R instance: '1' + zeros + P + char-doubled padded P'.

    L pins the single leading '1'; R spans the doubled block, where doubling
    makes position parity select the question string's characters.  An
    L-R-3-cadence exists iff the question strings share a '1' position.
    """
    _require_binary(p, "P")
    _require_binary(pp, "P'")
    p, pp, swapped = _ordered(p, pp)
    w = p.length
    doubled = double_chars(_padded(pp, w))
    s = _cat(literal("1"), _zeros(w), p, doubled)
    expected = 1 + 4 * w
    if s.length != expected:
        raise InternalError(f"gadget length {s.length}, expected {expected}")
    return GadgetInstance(
        s, KIND_LR3, 3, s.length,
        Interval(1, 1), Interval(2 * w + 2, 4 * w + 1),
        w, pp.length, swapped,
    )


def esm_212_project(s: Slp) -> Slp:
    """Replace every '2' with '1'; equidistant "212" occurrences of the
    original become character-'1' L-R witnesses of the projection."""
    if "2" not in s.alphabet:
        raise AlphabetMismatchError("projection expects a ternary grammar")
    return substitute(s, "2", "1")


def iter_212_occurrences(s: str):
    """Yield (i, d) for every equidistant occurrence of the pattern 212."""
    n = len(s)
    for i in range(1, n + 1):
        if s[i - 1] != "2":
            continue
        for d in range(1, (n - i) // 2 + 1):
            if s[i - 1 + d] == "1" and s[i - 1 + 2 * d] == "2":
                yield i, d


def esm_212_equiv_check(s: str, L: Interval, R: Interval) -> bool:
    """Compare "212" occurrences of s with character-'1' L-R witnesses of
    the projection, as sets.

    Requires the structural hypothesis: L entirely before R, characters in
    L and R drawn from {0,2}, all other characters from {0,1}.
    """
    n = len(s)
    if L.empty or R.empty or L.lo < 1 or R.hi > n or L.hi >= R.lo:
        raise HypothesisViolatedError("L must precede R inside the string")
    for i, ch in enumerate(s, start=1):
        if i in L or i in R:
            if ch not in "02":
                raise HypothesisViolatedError(f"position {i} in L/R carries {ch!r}")
        elif ch not in "01":
            raise HypothesisViolatedError(f"position {i} outside L/R carries {ch!r}")
    projected = s.replace("2", "1")
    occurrences = set(iter_212_occurrences(s))
    lr_ones = set(iter_lr(projected, L, R, 3, char="1"))
    return occurrences == lr_ones


def write_instance(inst: GadgetInstance, out_prefix: str):
    """Write OUT.slp (SLPv1 text) and OUT.json (sidecar) files."""
    from .slp import dump_slpv1

    slp_path = out_prefix + ".slp"
    json_path = out_prefix + ".json"
    with open(slp_path, "w", encoding="ascii", newline="") as fh:
        fh.write(dump_slpv1(inst.slp))
    with open(json_path, "w", encoding="ascii", newline="") as fh:
        fh.write(inst.sidecar())
    return slp_path, json_path
