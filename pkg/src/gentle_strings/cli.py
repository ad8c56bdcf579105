"""Command line interface.

Exit codes: 0 success, 2 unreadable or malformed input, 3 a precondition of
the requested computation fails (e.g. the presentation is not gentle), 4 a
consistency check reported failures.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .algebra import is_injective, is_projective, validate
from .ar import ar_sequence, end_status
from .errors import GentleError, InvalidString, ParseError, UnknownArrow, UnknownVertex
from .fileformats import format_presentation, load_curves, load_presentation, load_triangulation
from .homext import ad_pairs, has_extension, hom_dim_combinatorial, is_exceptional
from .oracle import string_ext1_dim, string_hom_dim
from .strings import (assign_signs, canonical, dimension_vector, enumerate_bands,
                      enumerate_strings, parse_string)
from .surface import (algebra_from_triangulation, evaluate_conditions, string_from_crossings,
                      dimension_vector_audit)

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_CHECK = 0, 2, 3, 4


class Output:
    """Collects rows and prints them as aligned text or JSON lines."""

    def __init__(self, fmt, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def record(self, obj: dict, text: str):
        if self.fmt == "records":
            print(json.dumps(obj, sort_keys=True, ensure_ascii=False), file=self.stream)
        else:
            print(text, file=self.stream)


def _dims(p, w):
    return list(dimension_vector(p, w))


def _string_arg(p, text):
    try:
        return parse_string(p, text)
    except (InvalidString, UnknownArrow, UnknownVertex) as e:
        raise ParseError(0, f"bad string argument {text!r}: {e}") from e


# commands

def cmd_validate(args, out):
    p = load_presentation(args.file)
    r = validate(p)
    out.record(
        {"gentle": r.gentle, "string_algebra": r.string_algebra,
         "finite_dimensional": r.finite_dimensional, "status": p.status,
         "violations": [{"rule": v.rule, "witness": v.witness} for v in r.violations]},
        f"status={p.status} gentle={str(r.gentle).lower()} "
        f"string_algebra={str(r.string_algebra).lower()} "
        f"finite_dimensional={str(r.finite_dimensional).lower()}",
    )
    if out.fmt == "table":
        for v in r.violations:
            print(f"  {v.rule}: {v.witness}", file=out.stream)
    return EXIT_OK


def cmd_strings(args, out):
    p = load_presentation(args.file)
    for w in enumerate_strings(p, args.max_len):
        d = _dims(p, w)
        out.record({"string": str(w), "length": len(w), "dim": d},
                   f"{str(w):<30} dim={d}")
    return EXIT_OK


def cmd_bands(args, out):
    p = load_presentation(args.file)
    for b in enumerate_bands(p, args.max_len):
        d = _dims(p, b)
        out.record({"band": str(b), "length": len(b), "dim": d},
                   f"{str(b):<30} dim={d}")
    return EXIT_OK


def cmd_hom(args, out):
    p = load_presentation(args.file)
    w, v = _string_arg(p, args.w), _string_arg(p, args.v)
    pairs = ad_pairs(p, w, v)
    rec = {"w": str(w), "v": str(v), "hom": len(pairs),
           "pairs": [x.describe(p) for x in pairs]}
    text = f"hom={len(pairs)}"
    if args.oracle:
        rec["oracle"] = string_hom_dim(p, w, v)
        text += f" oracle={rec['oracle']}"
    out.record(rec, text)
    if out.fmt == "table":
        for x in pairs:
            print(f"  {x.describe(p)}", file=out.stream)
    return EXIT_OK


def cmd_ext(args, out):
    p = load_presentation(args.file)
    w, v = _string_arg(p, args.w), _string_arg(p, args.v)
    wit = has_extension(p, w, v)
    rec = {"w": str(w), "v": str(v), "ext": wit is not None,
           "witness": None if wit is None else wit.kind,
           "data": None if wit is None else wit.data(p)}
    text = f"ext={str(wit is not None).lower()}"
    if wit is not None:
        text += f" witness={wit.kind} " + " ".join(f"{k}={val}" for k, val in sorted(wit.data(p).items()))
    if args.oracle:
        rec["oracle"] = string_ext1_dim(p, w, v)
        text += f" oracle={rec['oracle']}"
    out.record(rec, text)
    return EXIT_OK


def cmd_exceptional(args, out):
    p = load_presentation(args.file)
    p.require_gentle()
    for w in enumerate_strings(p, args.max_len):
        if is_exceptional(p, w):
            d = _dims(p, w)
            out.record({"string": str(w), "dim": d}, f"{str(w):<30} dim={d}")
    return EXIT_OK


def cmd_ar(args, out):
    p = load_presentation(args.file)
    w = _string_arg(p, args.w)
    signs = assign_signs(p)
    seq = ar_sequence(p, w, signs)
    st = end_status(p, w, signs)
    rec = {
        "left": {"string": str(seq.left), "dim": _dims(p, seq.left)},
        "middle": [{"string": str(m), "dim": _dims(p, m)} for m in seq.middle],
        "right": {"string": str(seq.right), "dim": _dims(p, seq.right)},
        "start": list(st.start.labels()), "end": list(st.end.labels()),
    }
    mid = " + ".join(f"M({m}){_dims(p, m)}" for m in seq.middle)
    text = (f"0 -> M({seq.left}){_dims(p, seq.left)} -> {mid} -> "
            f"M({seq.right}){_dims(p, seq.right)} -> 0")
    out.record(rec, text)
    return EXIT_OK


def _check_ext(p, words):
    n = bad = 0
    examples = []
    for w in words:
        for v in words:
            n += 1
            if (has_extension(p, w, v) is not None) != (string_ext1_dim(p, w, v) > 0):
                bad += 1
                examples.append(f"{w} | {v}")
    return n, bad, examples


def _check_hom(p, words):
    n = bad = 0
    examples = []
    for w in words:
        for v in words:
            n += 1
            if hom_dim_combinatorial(p, w, v) != string_hom_dim(p, w, v):
                bad += 1
                examples.append(f"{w} | {v}")
    return n, bad, examples


def _check_ar(p, words):
    from .errors import Undefined

    signs = assign_signs(p)
    n = bad = 0
    examples = []
    for w in words:
        if is_injective(p, w):
            continue
        n += 1
        try:
            seq = ar_sequence(p, w, signs)
        except Undefined as e:
            bad += 1
            examples.append(f"{w}: {e}")
            continue
        left, right = dimension_vector(p, seq.left), dimension_vector(p, seq.right)
        middle = [sum(col) for col in zip(*(dimension_vector(p, m) for m in seq.middle))]
        if [a + b for a, b in zip(left, right)] != middle or string_ext1_dim(p, seq.right, w) < 1:
            bad += 1
            examples.append(str(w))
    return n, bad, examples


def _check_vanishing(p, words):
    # Ext^1(M(w), M(v)) vanishes when v is injective or w is projective
    n = bad = 0
    examples = []
    inj = {w: is_injective(p, w) for w in words}
    proj = {w: is_projective(p, w) for w in words}
    for w in words:
        for v in words:
            if inj[v] or proj[w]:
                n += 1
                if has_extension(p, w, v) is not None:
                    bad += 1
                    examples.append(f"{w} | {v}")
    return n, bad, examples


CHECKS = {"ext": _check_ext, "hom": _check_hom, "ar": _check_ar, "vanishing": _check_vanishing}


def cmd_oracle(args, out):
    p = load_presentation(args.file)
    p.require_gentle()
    words = enumerate_strings(p, args.max_len)
    names = list(CHECKS) if args.check == "all" else [args.check]
    failed = False
    for name in names:
        t0 = time.perf_counter()
        n, bad, examples = CHECKS[name](p, words)
        elapsed = time.perf_counter() - t0
        failed |= bad > 0
        for e in examples:
            out.record({"check": name, "mismatch": e}, f"  mismatch ({name}): {e}")
        unit = "sequences" if name == "ar" else "pairs"
        rec = {"check": name, unit: n, "mismatches": bad}
        text = f"check={name} {unit}={n} mismatches={bad}"
        if args.timing:
            rec["seconds"] = round(elapsed, 3)
            text += f" seconds={elapsed:.3f}"
        out.record(rec, text)
    return EXIT_CHECK if failed else EXIT_OK


def cmd_surface_build(args, out):
    t = load_triangulation(args.file)
    p = algebra_from_triangulation(t)
    r = validate(p)
    if out.fmt == "records":
        out.record({
            "vertices": list(p.vertices),
            "arrows": [{"name": a.name, "source": a.source, "target": a.target} for a in p.arrows],
            "relations": sorted(" ".join(x) for x in p.relations),
            "status": p.status,
        }, "")
    else:
        print(format_presentation(p), end="", file=out.stream)
        print(f"# status={p.status}", file=out.stream)
    return EXIT_OK if r.gentle and r.finite_dimensional else EXIT_CHECK


def cmd_surface_string(args, out):
    t = load_triangulation(args.file)
    p = algebra_from_triangulation(t)
    failed = False
    for i, c in enumerate(load_curves(args.dataset)):
        rep = evaluate_conditions(t, c, p)
        w = rep.word
        exc = is_exceptional(p, w)
        bad = rep.first_violation
        ok = bad is None and exc
        failed |= not ok
        rec = {"index": i, "label": c.label, "kind": c.kind, "string": str(w),
               "dim": _dims(p, w), "exceptional": exc, "conditions_ok": bad is None,
               "triangles": [{"index": tc.index, "values": list(tc.values), "role": tc.role,
                              "required": tc.required, "patterns": list(tc.patterns)}
                             for tc in rep.triangles]}
        text = (f"{i:>3} {c.kind:<5} {c.label:<24} {str(w):<36} dim={_dims(p, w)} "
                f"exceptional={str(exc).lower()} conditions={'ok' if bad is None else 'FAIL'}")
        if bad is not None:
            text += f" ({bad.required}) fails at triangle {bad.index} values={bad.values}"
        out.record(rec, text)
    return EXIT_CHECK if failed else EXIT_OK


def cmd_surface_audit(args, out):
    t = load_triangulation(args.file)
    p = algebra_from_triangulation(t)
    records = load_curves(args.dataset)
    rep = dimension_vector_audit(t, records, args.max_len)
    summary = {
        "records": len(records), "arcs_checked": rep.checked, "strings": rep.strings,
        "exceptional": rep.exceptional, "max_len": args.max_len,
        "violations": [[str(a), str(b)] for a, b in rep.violations],
        "arc_vector_clashes": [[str(a), str(b)] for a, b in rep.arc_vector_clashes],
        "nonexceptional_collisions": [[str(a), str(b)] for a, b in rep.nonexceptional_collisions],
        "exceptional_collisions": [{"dim": list(v), "strings": [str(x) for x in ws]}
                                   for v, ws in rep.exceptional_collisions],
        "ok": rep.ok,
    }
    if out.fmt == "records":
        out.record(summary, "")
    else:
        print(f"records={len(records)} arcs_checked={rep.checked} strings={rep.strings} "
              f"exceptional={rep.exceptional} max_len={args.max_len}", file=out.stream)
        print(f"(a) exceptional strings sharing an arc vector: {len(rep.violations)} violations",
              file=out.stream)
        for a, b in rep.violations:
            print(f"    {a} ~ {b} dim={_dims(p, a)}", file=out.stream)
        print(f"(b) arcs with equal vectors: {len(rep.arc_vector_clashes)}", file=out.stream)
        if rep.nonexceptional_collisions:
            print("(c) non-exceptional strings sharing an arc vector:", file=out.stream)
            for a, b in rep.nonexceptional_collisions:
                print(f"    {a} ~ {b} dim={_dims(p, a)}", file=out.stream)
        else:
            print("(c) non-exceptional strings sharing an arc vector: none found at this bound",
                  file=out.stream)
        if rep.exceptional_collisions:
            print("(d) distinct exceptional strings with equal vectors away from the arcs:",
                  file=out.stream)
            for v, ws in rep.exceptional_collisions:
                print(f"    dim={list(v)}: " + ", ".join(str(x) for x in ws), file=out.stream)
        else:
            print("(d) distinct exceptional strings with equal vectors away from the arcs: "
                  "none found at this bound", file=out.stream)
        print("result=" + ("pass" if rep.ok else "FAIL"), file=out.stream)
    return EXIT_OK if rep.ok else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gentle-strings",
        description="Strings, Hom/Ext^1 and AR sequences over gentle algebras.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "records"), default="table",
                        help="aligned text (default) or one JSON object per line")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, file_help="presentation file (.alg)"):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.add_argument("file", help=file_help)
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check the gentle axioms")
    sp = add("strings", cmd_strings, "list canonical strings")
    sp.add_argument("--max-len", type=int, default=4)
    sp = add("bands", cmd_bands, "list bands up to rotation and inversion")
    sp.add_argument("--max-len", type=int, default=6)
    for name, func, help_text in (("hom", cmd_hom, "dim Hom(M(w), M(v)) with its basis"),
                                  ("ext", cmd_ext, "is Ext^1(M(w), M(v)) nonzero, with a witness")):
        sp = add(name, func, help_text)
        sp.add_argument("w")
        sp.add_argument("v")
        sp.add_argument("--oracle", action="store_true", help="also print the linear-algebra value")
    sp = add("exceptional", cmd_exceptional, "list strings without self-extensions")
    sp.add_argument("--max-len", type=int, default=6)
    sp = add("ar", cmd_ar, "the AR-sequence starting in M(w)")
    sp.add_argument("w")
    sp = add("oracle", cmd_oracle, "compare the combinatorics with linear algebra")
    sp.add_argument("--max-len", type=int, default=6)
    sp.add_argument("--check", choices=tuple(CHECKS) + ("all",), default="all")
    sp.add_argument("--timing", action="store_true", help="add wall-clock seconds (not deterministic)")
    tri_help = "triangulation file (.tri)"
    add("surface-build", cmd_surface_build, "gentle algebra of a triangulation", tri_help)
    sp = add("surface-string", cmd_surface_string, "strings and triangle conditions of curves", tri_help)
    sp.add_argument("--dataset", required=True, help="curve dataset (.curves)")
    sp = add("surface-audit", cmd_surface_audit, "dimension-vector audit over a curve dataset", tri_help)
    sp.add_argument("--dataset", required=True, help="curve dataset (.curves)")
    sp.add_argument("--max-len", type=int, default=8)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.format)
    try:
        return args.func(args, out)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except GentleError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
