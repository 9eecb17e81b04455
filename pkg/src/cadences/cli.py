"""Command-line surface: detection, generation, verification, decompression
and benchmarking over SLPv1 and plain-text inputs.

Exit codes: 0 found / success, 1 not found / disagreement, 2 usage or input
error, 3 capability error (wrong alphabet for a task, or a size bound
exceeded).  ``detect`` writes a single JSON object to stdout.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time

from . import gadgets, oracle
from .detect import detect_3cadence, detect_3subcadence
from .errors import (
    AlphabetMismatchError,
    CadenceError,
    SlpError,
    TooLargeError,
    TooLongError,
)
from .lr import detect_lr
from .slp import Slp, decompress, dump_slpv1, literal, load_slpv1
from .views import Interval, QueryCounters, StringView
from .witness import KIND_CADENCE, KIND_LR, KIND_SUBCADENCE, Witness

EXIT_FOUND = 0
EXIT_NOT_FOUND = 1
EXIT_USAGE = 2
EXIT_CAPABILITY = 3

_SLP_MAGIC = b"SLPv1\n"


class _UsageError(Exception):
    pass


class _CapabilityError(Exception):
    pass


def _read_bytes(path):
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from exc


def _load_input(path, fmt):
    """Return (format, n, rules, StringView factory payload)."""
    raw = _read_bytes(path)
    if fmt is None:
        fmt = "slp" if raw.startswith(_SLP_MAGIC) else "plain"
    if fmt == "slp":
        try:
            slp = load_slpv1(raw)
        except SlpError as exc:
            raise _UsageError(f"bad SLPv1 input: {exc}") from exc
        return fmt, slp, None
    text = raw.decode("ascii", errors="strict") if raw else ""
    if text.endswith("\n"):
        text = text[:-1]
    if "\n" in text or any(ch not in "012" for ch in text):
        raise _UsageError("plain input must be a single line over {0,1,2}")
    return fmt, None, text


def _parse_interval(text):
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if not m:
        raise _UsageError(f"bad interval {text!r}; expected lo..hi")
    return Interval(int(m.group(1)), int(m.group(2)))


def _witness_doc(w: Witness):
    if w is None:
        return None
    kind = {KIND_SUBCADENCE: "subcadence", KIND_CADENCE: "cadence", KIND_LR: "lr"}[w.kind]
    return {"i": w.i, "d": w.d, "k": w.k, "char": w.char, "kind": kind}


def _result_doc(found, witness, counters, elapsed_ms, fmt, n, rules):
    return {
        "found": found,
        "witness": _witness_doc(witness),
        "stats": {
            "char_accesses": counters.accesses,
            "step_iterations": counters.step_iterations,
            "elapsed_ms": round(elapsed_ms, 3),
        },
        "input": {"format": fmt, "n": n, "rules": rules},
    }


def _oracle_witness(task, text, span_l, span_r):
    if len(text) > oracle.DESK_SCALE:
        raise _CapabilityError(
            f"oracle accepts at most {oracle.DESK_SCALE} characters, got {len(text)}"
        )
    if task == "3cadence":
        pair = next(oracle.iter_cadences(text, 3), None)
        kind = KIND_CADENCE
    elif task == "3subcadence":
        pair = next(oracle.iter_subcadences(text, 3), None)
        kind = KIND_SUBCADENCE
    else:
        pair = next(oracle.iter_lr(text, span_l, span_r, 3), None)
        kind = KIND_LR
    if pair is None:
        return None
    i, d = pair
    return Witness(i, d, 3, text[i - 1], kind, span_l, span_r)


def _cmd_detect(args):
    fmt, slp, text = _load_input(args.input, args.format)
    span_l = span_r = None
    if args.task == "lr3":
        if args.L is None or args.R is None:
            raise _UsageError("--task lr3 requires --L and --R")
        span_l = _parse_interval(args.L)
        span_r = _parse_interval(args.R)
    counters = QueryCounters()
    t0 = time.perf_counter()
    if args.oracle:
        if slp is not None:
            try:
                text = decompress(slp, oracle.DESK_SCALE)
            except TooLongError as exc:
                raise _CapabilityError(str(exc)) from exc
        witness = _oracle_witness(args.task, text, span_l, span_r)
    else:
        if slp is not None:
            view = StringView.from_slp(slp, counters)
        else:
            view = StringView.from_plain(text, counters)
        try:
            if args.task == "3cadence":
                witness = detect_3cadence(view)
            elif args.task == "3subcadence":
                witness = detect_3subcadence(view)
            else:
                witness = detect_lr(view, span_l, span_r)
        except AlphabetMismatchError as exc:
            raise _CapabilityError(str(exc)) from exc
    elapsed = (time.perf_counter() - t0) * 1000.0
    n = slp.length if slp is not None else len(text)
    rules = len(slp.rules) if slp is not None else None
    doc = _result_doc(witness is not None, witness, counters, elapsed, fmt, n, rules)
    json.dump(doc, sys.stdout)
    sys.stdout.write("\n")
    return EXIT_FOUND if witness is not None else EXIT_NOT_FOUND


def _load_question(path):
    fmt, slp, text = _load_input(path, None)
    if slp is not None:
        return slp
    if not text:
        raise _UsageError(f"{path}: question string must be non-empty")
    return literal(text)


def _cmd_gadget(args):
    p = _load_question(args.p)
    pp = _load_question(args.pprime)
    k = args.k if args.k is not None else 3
    try:
        if args.kind == "char1":
            inst = gadgets.gadget_cadence_char1(p, pp, k)
        elif args.kind == "ternary3":
            if k != 3:
                raise _UsageError("--kind ternary3 is defined for k = 3 only")
            inst = gadgets.gadget_cadence_ternary3(p, pp)
        else:
            if k != 3:
                raise _UsageError("--kind lr3 is defined for k = 3 only")
            inst = gadgets.gadget_lr3(p, pp)
    except (AlphabetMismatchError, ValueError) as exc:
        raise _UsageError(str(exc)) from exc
    slp_path, json_path = gadgets.write_instance(inst, args.output)
    sys.stdout.write(f"{slp_path}\n{json_path}\n")
    return EXIT_FOUND


def _cmd_verify(args):
    fmt, slp, text = _load_input(args.input, None)
    if slp is not None:
        try:
            text = decompress(slp, args.max_len)
        except TooLongError as exc:
            raise _CapabilityError(str(exc)) from exc
    if len(text) > oracle.DESK_SCALE:
        raise _CapabilityError(
            f"oracle bound {oracle.DESK_SCALE} exceeded; n = {len(text)}"
        )
    counters = QueryCounters()
    view = StringView.from_slp(slp, counters) if slp is not None else StringView.from_plain(text, counters)
    try:
        witness = detect_3cadence(view)
    except AlphabetMismatchError as exc:
        raise _CapabilityError(str(exc)) from exc
    expected = oracle.has_cadence(text, 3)
    agree = (witness is not None) == expected
    doc = {
        "n": len(text),
        "format": fmt,
        "detector_found": witness is not None,
        "oracle_found": expected,
        "agree": agree,
        "witness": _witness_doc(witness),
    }
    json.dump(doc, sys.stdout)
    sys.stdout.write("\n")
    return EXIT_FOUND if agree else EXIT_NOT_FOUND


def _cmd_decompress(args):
    fmt, slp, text = _load_input(args.input, None)
    if slp is not None:
        try:
            text = decompress(slp, args.max_len)
        except TooLongError as exc:
            raise _CapabilityError(str(exc)) from exc
    elif len(text) > args.max_len:
        raise _CapabilityError(f"plain input longer than --max-len {args.max_len}")
    sys.stdout.write(text + "\n")
    return EXIT_FOUND


_SIZE_SUFFIX = {"k": 10**3, "M": 10**6}


def _parse_sizes(text):
    sizes = []
    for tok in text.split(","):
        tok = tok.strip()
        m = re.fullmatch(r"(\d+)([kM]?)\.\.(\d+)([kM]?)", tok)
        if m:
            lo = int(m.group(1)) * _SIZE_SUFFIX.get(m.group(2), 1)
            hi = int(m.group(3)) * _SIZE_SUFFIX.get(m.group(4), 1)
            cur = lo
            while cur <= hi:
                sizes.append(cur)
                cur *= 10
            continue
        m = re.fullmatch(r"(\d+)([kM]?)", tok)
        if not m:
            raise _UsageError(f"bad size token {tok!r}")
        sizes.append(int(m.group(1)) * _SIZE_SUFFIX.get(m.group(2), 1))
    if not sizes:
        raise _UsageError("no sizes given")
    return sizes


_BIT_TABLE = bytes(48 + (b & 1) for b in range(256))


def _bench_string(family, n, rng):
    if family == "random":
        return rng.randbytes(n).translate(_BIT_TABLE).decode("ascii")
    if family == "allzero":
        return "0" * n
    # gadget: a hard-instance layout of roughly the requested size
    w = max(1, (n // 3 - 1) // 6)
    bits = "".join(rng.choice("01") for _ in range(w))
    inst = gadgets.gadget_cadence_char1(literal(bits), literal(bits), 3)
    return decompress(inst.slp, 10**7)


def _cmd_bench(args):
    sizes = _parse_sizes(args.sizes)
    rng = random.Random(args.seed)
    sys.stdout.write("n,char_accesses,iterations,elapsed_ms\n")
    for n in sizes:
        for _ in range(args.trials):
            s = _bench_string(args.family, n, rng)
            counters = QueryCounters()
            view = StringView.from_plain(s, counters)
            t0 = time.perf_counter()
            detect_3cadence(view)
            elapsed = (time.perf_counter() - t0) * 1000.0
            sys.stdout.write(
                f"{len(s)},{counters.accesses},{counters.step_iterations},{elapsed:.3f}\n"
            )
    return EXIT_FOUND


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cadences",
        description="Detect cadences in plain or grammar-compressed binary strings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("detect", help="run a detector and print a JSON result")
    d.add_argument("--input", required=True)
    d.add_argument("--format", choices=("plain", "slp"), default=None,
                   help="input format; default sniffs the SLPv1 header")
    d.add_argument("--task", choices=("3cadence", "lr3", "3subcadence"), required=True)
    d.add_argument("--L", help="interval lo..hi for lr3")
    d.add_argument("--R", help="interval lo..hi for lr3")
    d.add_argument("--oracle", action="store_true",
                   help="force brute force (plain or small decompressed inputs)")
    d.set_defaults(func=_cmd_detect)

    g = sub.add_parser("gadget", help="generate a hard instance as SLPv1 + JSON sidecar")
    g.add_argument("--kind", choices=("char1", "ternary3", "lr3"), required=True)
    g.add_argument("--k", type=int, default=None)
    g.add_argument("--p", required=True, help="first question string (plain or SLPv1 file)")
    g.add_argument("--pprime", required=True, help="second question string")
    g.add_argument("-o", "--output", required=True, help="output path prefix")
    g.set_defaults(func=_cmd_gadget)

    v = sub.add_parser("verify", help="cross-check the detector against the oracle")
    v.add_argument("--input", required=True)
    v.add_argument("--max-len", type=int, default=oracle.DESK_SCALE)
    v.set_defaults(func=_cmd_verify)

    x = sub.add_parser("decompress", help="print the expansion of an SLPv1 input")
    x.add_argument("--input", required=True)
    x.add_argument("--max-len", type=int, required=True)
    x.set_defaults(func=_cmd_decompress)

    b = sub.add_parser("bench", help="emit CSV of access counts over input families")
    b.add_argument("--family", choices=("random", "allzero", "gadget"), required=True)
    b.add_argument("--sizes", required=True, help="e.g. 1k..1M or 1000,2000")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--trials", type=int, default=1)
    b.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _CapabilityError as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (TooLargeError, TooLongError, AlphabetMismatchError) as exc:
        print(f"capability error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (CadenceError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
