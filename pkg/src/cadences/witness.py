"""Detection witnesses and their re-verification.

Every detector in this package re-checks a witness through ``char_at``
before returning it; a failed check raises ``InternalError`` instead of
surfacing an unverified answer.  Index arithmetic dominates the risk in
these algorithms and this keeps a wrong witness from ever escaping.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import InternalError
from .views import Interval

KIND_SUBCADENCE = "subcadence"
KIND_CADENCE = "cadence"
KIND_LR = "lr"


@dataclass(frozen=True, slots=True)
class Witness:
    """Arithmetic progression (i, i+d, ..., i+(k-1)d) of equal characters.

    ``kind`` states the claim: a bare sub-cadence, a structurally maximal
    cadence (extending one step either way leaves [1, n]) or an L-R witness
    whose first index lies in ``span_l`` and last index in ``span_r``.
    """

    i: int
    d: int
    k: int
    char: str
    kind: str
    span_l: Interval | None = None
    span_r: Interval | None = None

    @property
    def last(self) -> int:
        return self.i + (self.k - 1) * self.d

    def positions(self):
        return tuple(self.i + j * self.d for j in range(self.k))


def check_witness(view, w: Witness) -> bool:
    """Re-verify a witness against the view; True iff every claim holds."""
    if w.i < 1 or w.d < 1 or w.k < 2 or w.last > view.n:
        return False
    for pos in w.positions():
        if view.char_at(pos) != w.char:
            return False
    if w.kind == KIND_CADENCE:
        return w.i - w.d <= 0 and w.i + w.k * w.d > view.n
    if w.kind == KIND_LR:
        if w.span_l is None or w.span_r is None:
            return False
        return w.i in w.span_l and w.last in w.span_r
    return w.kind == KIND_SUBCADENCE


def certify(view, w: Witness) -> Witness:
    """Return ``w`` unchanged after verification; raise on any failure."""
    if not check_witness(view, w):
        raise InternalError(f"witness failed verification: {w}")
    return w


def as_kind(w: Witness, kind: str, span_l=None, span_r=None) -> Witness:
    return replace(w, kind=kind, span_l=span_l, span_r=span_r)
