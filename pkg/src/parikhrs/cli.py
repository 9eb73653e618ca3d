"""Command-line front end.

Exit status: 0 when the command succeeds or the checked property holds,
1 when it is violated (a witness is printed), 2 when a search outgrows its
cap, 3 on invalid input.  A lone ``-`` on the command line is the empty word.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Optional

from . import kernels
from .errors import CapExceededError, InvalidInputError, NotRelatedError
from .matrix import m_equivalent, parikh_matrix
from .presets import THUE_PRESETS, prs_preset, prs_preset_names, thue_preset
from .prs import (
    ParikhRewritingSystem,
    audit_prs_complete,
    audit_prs_sound,
    decompose,
    derive_thue_system,
    irreducible,
    irreducible_graph_path,
)
from .search import DEFAULT_STATE_CAP
from .suite import BUDGETS, verify_paper_suite
from .thue import (
    ThueSystem,
    audit_parikh_complete,
    audit_parikh_sound,
    direct_neighbors,
    dist,
    r_class,
    shortest_path,
)
from .words import Alphabet, count_subword

EXIT_OK, EXIT_VIOLATED, EXIT_CAP, EXIT_INPUT = 0, 1, 2, 3


def _word(arg: str) -> str:
    return "" if arg == "-" else arg


def _show(w: str) -> str:
    return w if w else "-"


class _Out:
    """Collects one command's result and prints it as text or JSON."""

    def __init__(self, as_json: bool, stream=None):
        self.as_json = as_json
        self.stream = stream or sys.stdout

    def emit(self, payload: Any, text: str) -> None:
        if self.as_json:
            print(json.dumps(payload, indent=2, sort_keys=True), file=self.stream)
        else:
            print(text, file=self.stream)


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path} is not valid JSON: {exc}") from None


def resolve_system(name: str, from_file: bool) -> ThueSystem:
    # presets win on a name clash unless --from-file is given
    if not from_file and name in THUE_PRESETS:
        return thue_preset(name)
    if not from_file and name in prs_preset_names():
        return prs_preset(name).system
    if from_file or os.path.exists(name):
        data = _load_json(name)
        return ThueSystem.from_dict(data)
    raise InvalidInputError(
        f"{name!r} is neither a preset ({', '.join(sorted(THUE_PRESETS))}) nor a file"
    )


def resolve_prs(name: str, from_file: bool) -> ParikhRewritingSystem:
    if not from_file and name in prs_preset_names():
        return prs_preset(name)
    if from_file or os.path.exists(name):
        return ParikhRewritingSystem.from_dict(_load_json(name))
    raise InvalidInputError(
        f"{name!r} is neither a PRS preset ({', '.join(prs_preset_names())}) nor a file"
    )


# commands


def cmd_count(args, out: _Out) -> int:
    alphabet = Alphabet(args.alphabet)
    w, u = _word(args.w), _word(args.u)
    alphabet.encode(w)
    alphabet.encode(u)
    n = count_subword(w, u)
    out.emit({"word": w, "subword": u, "count": n}, str(n))
    return EXIT_OK


def cmd_matrix(args, out: _Out) -> int:
    alphabet = Alphabet(args.alphabet)
    w = _word(args.w)
    m = parikh_matrix(alphabet, w)
    out.emit({"alphabet": alphabet.letters, "word": w, "matrix": m.to_list()}, m.pretty())
    return EXIT_OK


def cmd_equiv(args, out: _Out) -> int:
    alphabet = Alphabet(args.alphabet)
    w, w2 = _word(args.w), _word(args.w2)
    same = m_equivalent(alphabet, w, w2)
    out.emit({"words": [w, w2], "m_equivalent": same}, "true" if same else "false")
    return EXIT_OK if same else EXIT_VIOLATED


def cmd_neighbors(args, out: _Out) -> int:
    system = resolve_system(args.system, args.from_file)
    steps = direct_neighbors(system, _word(args.w))
    out.emit([s.to_dict() for s in steps], "\n".join(str(s) for s in steps) or "(none)")
    return EXIT_OK


def cmd_dist(args, out: _Out) -> int:
    system = resolve_system(args.system, args.from_file)
    w, w2 = _word(args.w), _word(args.w2)
    d = dist(system, w, w2, args.cap)
    if d is None:
        out.emit({"words": [w, w2], "distance": None}, "unreachable")
        return EXIT_VIOLATED
    payload: dict = {"words": [w, w2], "distance": d}
    text = str(d)
    if args.path:
        path = shortest_path(system, w, w2, args.cap)
        payload["path"] = path
        text += "\n" + " -> ".join(_show(x) for x in path)
    out.emit(payload, text)
    return EXIT_OK


def cmd_class(args, out: _Out) -> int:
    system = resolve_system(args.system, args.from_file)
    words = r_class(system, _word(args.w), args.cap)
    out.emit(words, "\n".join(_show(x) for x in words))
    return EXIT_OK


def cmd_audit(args, out: _Out) -> int:
    kw = {"workers": args.threads, "cap": args.cap, "class_limit": args.cap}
    if args.prs:
        p = resolve_prs(args.system, args.from_file)
        fn = audit_prs_sound if args.property == "sound" else audit_prs_complete
        report = fn(p, args.max_len, **kw)
    elif args.property == "sound":
        report = audit_parikh_sound(resolve_system(args.system, args.from_file),
                                    args.max_len, workers=args.threads)
    else:
        report = audit_parikh_complete(resolve_system(args.system, args.from_file),
                                       args.max_len, **kw)
    if report.holds:
        text = f"{report.property}: holds up to length {report.max_len} ({report.words_checked} words)"
    else:
        w = report.witness
        if isinstance(w, tuple):
            w = f"{_show(w[0])} / {_show(w[1])}"
        text = f"{report.property}: fails\nwitness: {w}"
        if report.notes:
            text += "\n" + "\n".join(report.notes)
    out.emit(report.to_dict(), text)
    return EXIT_OK if report.holds else EXIT_VIOLATED


def cmd_irr(args, out: _Out) -> int:
    p = resolve_prs(args.prs, args.from_file)
    res = irreducible(p, _word(args.w), _word(args.w2), args.cap)
    if res.irreducible:
        text = f"irreducible, order {res.order}"
    else:
        text = f"reducible (distance {res.distance}), splitter {_show(res.splitter)}"
    out.emit(res.to_dict(), text)
    return EXIT_OK if res.irreducible else EXIT_VIOLATED


def cmd_decompose(args, out: _Out) -> int:
    p = resolve_prs(args.prs, args.from_file)
    chain = decompose(p, _word(args.w), _word(args.w2), args.cap)
    out.emit([s.to_dict() for s in chain], "\n".join(str(s) for s in chain) or "(identity)")
    return EXIT_OK


def cmd_path(args, out: _Out) -> int:
    p = resolve_prs(args.prs, args.from_file)
    chain = irreducible_graph_path(p, _word(args.w), _word(args.w2), args.max_order, args.cap)
    if chain is None:
        out.emit(None, f"no chain of irreducible steps of order <= {args.max_order}")
        return EXIT_VIOLATED
    out.emit([s.to_dict() for s in chain], "\n".join(str(s) for s in chain) or "(identity)")
    return EXIT_OK


def cmd_derive(args, out: _Out) -> int:
    p = resolve_prs(args.prs, args.from_file)
    derived = derive_thue_system(p, args.max_len, workers=args.threads,
                                 cap=args.cap, class_limit=args.cap)
    hist = ", ".join(f"order {k}: {v}" for k, v in derived.histogram.items()) or "none"
    text = f"{len(derived.steps)} irreducible transformations up to length {args.max_len}\n{hist}"
    if args.verbose:
        text += "\n" + "\n".join(str(s) for s in derived.steps)
    out.emit(derived.to_dict(), text)
    return EXIT_OK


def cmd_verify(args, out: _Out) -> int:
    report = verify_paper_suite(args.budget, workers=args.threads)
    out.emit(report.to_dict(), report.to_table())
    return report.exit_code


def cmd_presets(args, out: _Out) -> int:
    payload = {
        "thue": {n: thue_preset(n).to_dict() for n in sorted(THUE_PRESETS)},
        "prs": {n: prs_preset(n).to_dict() for n in prs_preset_names()},
    }
    lines = ["Thue systems:"]
    for n in sorted(THUE_PRESETS):
        lines.append(f"  {n}")
        lines.extend(f"    {r}" for r in thue_preset(n).rules)
    lines.append("Parikh rewriting systems:")
    for n in prs_preset_names():
        p = prs_preset(n)
        lines.append(f"  {n}  counters {', '.join(p.counters) or '-'}")
    out.emit(payload, "\n".join(lines))
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _nonnegative(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS lets the flags appear before or after the subcommand
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--cap", type=_positive, default=argparse.SUPPRESS,
                        help=f"state / class-size limit (default {DEFAULT_STATE_CAP})")
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS,
                        help="worker processes for audits and the suite (default 1)")

    ap = argparse.ArgumentParser(
        prog="parikhrs", parents=[common],
        description="Parikh matrices, Thue systems and Parikh rewriting systems.",
    )
    ap.add_argument("--version", action="version",
                    version=f"%(prog)s 0.1.0 ({kernels.BACKEND} kernels)")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help, description=help)
        p.set_defaults(fn=fn)
        return p

    def system_arg(p, flag="--system"):
        p.add_argument(flag, required=True, metavar="PRESET|FILE",
                       help="preset name or JSON definition file")
        p.add_argument("--from-file", action="store_true",
                       help="treat the name as a file even if it matches a preset")

    p = add("count", cmd_count, "count scattered occurrences of u in w")
    p.add_argument("alphabet")
    p.add_argument("w")
    p.add_argument("u")

    p = add("matrix", cmd_matrix, "print the Parikh matrix of w")
    p.add_argument("alphabet")
    p.add_argument("w")

    p = add("equiv", cmd_equiv, "test M-equivalence (exit 1 when not equivalent)")
    p.add_argument("alphabet")
    p.add_argument("w")
    p.add_argument("w2", metavar="w'")

    p = add("neighbors", cmd_neighbors, "list direct rewriting steps from w")
    system_arg(p)
    p.add_argument("w")

    p = add("dist", cmd_dist, "rewriting distance (exit 1 when unreachable)")
    system_arg(p)
    p.add_argument("--path", action="store_true", help="also print a shortest path")
    p.add_argument("w")
    p.add_argument("w2", metavar="w'")

    p = add("class", cmd_class, "list the rewrite class of w")
    system_arg(p)
    p.add_argument("w")

    p = add("audit", cmd_audit, "bounded soundness / completeness audit")
    p.add_argument("property", choices=("sound", "complete"))
    system_arg(p)
    p.add_argument("--max-len", type=_nonnegative, required=True)
    p.add_argument("--prs", action="store_true",
                   help="audit the Parikh rewriting system instead of its Thue system")

    p = add("irr", cmd_irr, "test irreducibility (exit 1 when reducible)")
    system_arg(p, "--prs")
    p.add_argument("w")
    p.add_argument("w2", metavar="w'")

    p = add("decompose", cmd_decompose, "split a transformation into irreducible steps")
    system_arg(p, "--prs")
    p.add_argument("w")
    p.add_argument("w2", metavar="w'")

    p = add("path", cmd_path, "chain of irreducible steps of bounded order (exit 1 if none)")
    system_arg(p, "--prs")
    p.add_argument("--max-order", type=_positive, required=True)
    p.add_argument("w")
    p.add_argument("w2", metavar="w'")

    p = add("derive", cmd_derive, "all irreducible transformations up to a length")
    system_arg(p, "--prs")
    p.add_argument("--max-len", type=_nonnegative, required=True)
    p.add_argument("-v", "--verbose", action="store_true", help="list every transformation")

    p = add("verify-paper", cmd_verify, "run the built-in worked-example suite")
    p.add_argument("--budget", choices=BUDGETS, default="default")

    add("presets", cmd_presets, "list built-in systems")
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; that code means "cap exceeded" here
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    for name, default in (("json", False), ("cap", DEFAULT_STATE_CAP), ("threads", 1)):
        if not hasattr(args, name):
            setattr(args, name, default)
    out = _Out(args.json)
    try:
        return args.fn(args, out)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InvalidInputError, NotRelatedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
