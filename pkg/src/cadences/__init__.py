"""Cadence detection in plain and grammar-compressed binary strings.

A cadence is an arithmetic progression of equal characters that cannot be
extended a step in either direction without leaving the string.  The
package provides linear-time full-string 3-cadence detection on plain
binary strings and polynomial-time detection on grammar-compressed ones,
interval-constrained (L-R) detection, hard-instance generators, and
brute-force oracles that define ground truth for everything else.
"""

from .detect import (
    RunContext,
    VdwEntry,
    cadence_step,
    detect_3cadence,
    detect_3subcadence,
    first_index_cap,
    first_index_window,
    is_k_cadence,
    tail_check,
    tail_threshold,
)
from .errors import (
    AlphabetMismatchError,
    CadenceError,
    EmptyGrammarError,
    EmptyInputError,
    ForwardReferenceError,
    HypothesisViolatedError,
    IntervalError,
    InternalError,
    LengthOverflowError,
    OutOfRangeError,
    PreconditionViolatedError,
    SlpError,
    SlpFormatError,
    TooLargeError,
    TooLongError,
    UnsupportedError,
)
from .gadgets import (
    GadgetInstance,
    esm_212_equiv_check,
    esm_212_project,
    gadget_cadence_char1,
    gadget_cadence_ternary3,
    gadget_lr3,
    write_instance,
)
from .lr import (
    FOUND,
    NO_CADENCE,
    SHRUNK,
    ScanState,
    StepOutcome,
    detect_lr,
    detect_lr_disjoint,
    lr_step,
    midpoint_witness,
    uniform_runs_witness,
)
from .oracle import (
    DESK_SCALE,
    OracleReport,
    common_one_index,
    enum_cadences,
    enum_lr,
    enum_subcadences,
    has_cadence,
    has_lr,
    has_subcadence,
    vdw_verify,
)
from .slp import (
    Slp,
    RuleStats,
    concat,
    decompress,
    double_chars,
    dump_slpv1,
    literal,
    load_slpv1,
    power,
    reverse,
    substitute,
    validate,
)
from .views import (
    EVEN,
    ODD,
    Interval,
    QueryCounters,
    RunShape,
    SHAPE_ALL,
    SHAPE_COMPLEX,
    SHAPE_EMPTY,
    SHAPE_TWO_RUNS,
    StringView,
    pceil,
    pfloor,
)
from .witness import (
    KIND_CADENCE,
    KIND_LR,
    KIND_SUBCADENCE,
    Witness,
    check_witness,
    certify,
)

__version__ = "0.1.0"
