"""Command-line front end for the verification engine.

Subcommands: roots (root-system summary), demazure (evaluate one Demazure
composite), verify (run one named check), sweep (run every check that
applies to a type).  Exit codes: 0 all checks passed, 1 a check found a
mathematical counterexample, 2 usage or applicability error (including a
tripped enumeration guard).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__, cohomology, coxeter
from .charring import char_sorted_terms, char_to_str, demazure_along_word, e
from .report import Report, canonical_json, labeling_table
from .rootsys import Root, RootSystem, Weight, build
from .weyl import DEFAULT_GUARD, GUARD_ENV_VAR, GuardExceeded, resolve_guard

__all__ = ["main", "run_check", "CHECK_ORDER", "check_applicability"]

CHECK_ORDER = (
    "thmA",
    "thm42",
    "thmB",
    "prop51",
    "lemma26",
    "lemma54_56",
    "thmC_typeA",
    "cor52_53_58",
    "lemma61",
    "remarkB2",
)

_SL_ONLY = ("thmA", "thm42", "lemma26", "lemma54_56", "cor52_53_58")
_TWO_LENGTHS_ONLY = ("thmB", "lemma61")


def check_applicability(ct, check_id: str) -> str | None:
    """None when the check applies to the type, else the reason it does not."""
    if check_id in _SL_ONLY:
        return None if ct.simply_laced else "requires a simply-laced type"
    if check_id in _TWO_LENGTHS_ONLY:
        return None if not ct.simply_laced else "requires two root lengths"
    if check_id == "prop51":
        return None
    if check_id == "thmC_typeA":
        return None if ct.family == "A" else "specific to type A"
    if check_id == "remarkB2":
        ok = ct.family == "B" and ct.rank == 2
        return None if ok else "specific to B2"
    raise ValueError(f"unknown check {check_id!r}")


def run_check(rs: RootSystem, check_id: str, guard: int | None = None,
              alpha: int | None = None) -> Report:
    if alpha is not None and check_id != "thm42":
        raise ValueError("--alpha applies to thm42 only")
    if check_id == "thmA":
        return cohomology.verify_thmA(rs, guard=guard)
    if check_id == "thm42":
        return cohomology.verify_thm42(rs, alpha=alpha, guard=guard)
    if check_id == "thmB":
        return cohomology.verify_thmB_criterion(rs, guard=guard)
    if check_id == "prop51":
        return coxeter.verify_prop51(rs, guard=guard)
    if check_id == "lemma26":
        return cohomology.verify_lemma26(rs)
    if check_id == "lemma54_56":
        return coxeter.verify_lemma54_55_56(rs, guard=guard)
    if check_id == "thmC_typeA":
        return coxeter.verify_thmC_typeA(rs, guard=guard)
    if check_id == "cor52_53_58":
        return coxeter.verify_cor52_53_58(rs, guard=guard)
    if check_id == "lemma61":
        return cohomology.verify_lemma61(rs)
    if check_id == "remarkB2":
        return cohomology.remark_b2_check(rs)
    raise ValueError(f"unknown check {check_id!r}")


def _sweep_job(type_str: str, check_id: str, guard: int | None) -> Report:
    # top level so ProcessPoolExecutor can pickle the call
    return run_check(build(type_str), check_id, guard=guard)


# ---------------------------------------------------------------- parsing

_NEG_VECTOR = re.compile(r"^-\d+(?:,-?\d+)*$")
_VALUE_FLAGS = ("--weight-fund", "--weight-root", "--word")


def _fuse_negative_values(argv: list[str]) -> list[str]:
    """Rewrite `--weight-fund -1,0` to `--weight-fund=-1,0`.

    argparse reads a leading minus as an option prefix, so vector values
    that start with a negative entry only survive in = form; fuse them
    before parsing so both spellings work.
    """
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok in _VALUE_FLAGS and i + 1 < len(argv)
                and _NEG_VECTOR.match(argv[i + 1])):
            out.append(tok + "=" + argv[i + 1])
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{what}: expected comma-separated integers, got {text!r}")


def _parse_word(rs: RootSystem, text: str) -> tuple[int, ...]:
    word = _parse_ints(text, "--word")
    for letter in word:
        if not 1 <= letter <= rs.rank:
            raise ValueError(f"--word: letter {letter} outside 1..{rs.rank}")
    return word


def _parse_weight(rs: RootSystem, args) -> Weight:
    if args.weight_fund is not None:
        coords = _parse_ints(args.weight_fund, "--weight-fund")
        base = "fund"
    else:
        coords = _parse_ints(args.weight_root, "--weight-root")
        base = "root"
    if len(coords) != rs.rank:
        raise ValueError(
            f"--weight-{base}: expected {rs.rank} coordinates, got {len(coords)}")
    if base == "fund":
        return Weight(coords)
    return rs.weight_from_root_coords(coords)


# -------------------------------------------------------------- rendering

def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _root_label(root: Root, simply_laced: bool) -> str:
    if simply_laced:
        return ""
    return "  long" if root.is_long else "  short"


def _root_line(root: Root, simply_laced: bool) -> str:
    return (f"root{list(root.coords)}  fw{list(root.weight.fw)}"
            f"  ht {root.height}{_root_label(root, simply_laced)}")


def _render_roots_table(rs: RootSystem) -> str:
    lines = [
        f"type: {rs.ct}",
        f"rank: {rs.rank}",
        f"roots: {len(rs.roots)} ({len(rs.positive_roots)} positive)",
        "cartan (rows = i, cartan[i][j] = <alpha_j, alpha_i_vee>):",
    ]
    width = max(len(str(v)) for row in rs.cartan for v in row)
    for row in rs.cartan:
        lines.append("  [" + " ".join(f"{v:>{width}}" for v in row) + "]")
    lines.append(f"symmetrizers d: {list(rs.d)}")
    lines.append("simple roots:")
    for i, root in enumerate(rs.simple_roots, start=1):
        lines.append(f"  alpha_{i}: {_root_line(root, rs.simply_laced)}")
    lines.append(f"highest root (alpha_0): {_root_line(rs.highest_root, rs.simply_laced)}")
    lines.append(f"highest short root:     {_root_line(rs.highest_short_root, rs.simply_laced)}")
    lines.append(f"rho: fw{list(rs.rho.fw)}")
    return "\n".join(lines) + "\n"


def _root_dict(root: Root) -> dict:
    return {
        "root": list(root.coords),
        "fw": list(root.weight.fw),
        "height": root.height,
        "long": root.is_long,
    }


def _render_roots_json(rs: RootSystem) -> str:
    doc = {
        "type": str(rs.ct),
        "rank": rs.rank,
        "root_count": len(rs.roots),
        "positive_count": len(rs.positive_roots),
        "labeling": labeling_table(rs),
        "simple_roots": [_root_dict(r) for r in rs.simple_roots],
        "highest_root": _root_dict(rs.highest_root),
        "highest_short_root": _root_dict(rs.highest_short_root),
        "rho": list(rs.rho.fw),
        "engine_version": __version__,
    }
    return canonical_json(doc)


def _render_report_table(rep: Report) -> list[str]:
    status = "passed" if rep.passed else "FAILED"
    lines = [
        f"{rep.check_id:<12} {rep.cartan_type:<4} universe {rep.universe_size:>6}"
        f"  {status}  cx {len(rep.counterexamples):>3}"
        f"  {int(rep.elapsed * 1000):>6} ms"
    ]
    for cx in rep.counterexamples[:10]:
        lines.append("    cx " + json.dumps(cx, sort_keys=True))
    if len(rep.counterexamples) > 10:
        lines.append(f"    ... {len(rep.counterexamples) - 10} more")
    return lines


def _render_reports(reports: list[Report], fmt: str, rs: RootSystem) -> str:
    if fmt == "json":
        docs = [rep.as_json_dict(__version__, rs) for rep in reports]
        return canonical_json(docs[0] if len(docs) == 1 else docs)
    lines: list[str] = []
    for rep in reports:
        lines.extend(_render_report_table(rep))
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ subcommands

def cmd_roots(args) -> int:
    rs = build(args.type)
    text = _render_roots_json(rs) if args.format == "json" else _render_roots_table(rs)
    _emit(text, args.out)
    return 0


def cmd_demazure(args) -> int:
    rs = build(args.type)
    word = _parse_word(rs, args.word)
    lam = _parse_weight(rs, args)
    result = demazure_along_word(rs, word, e(lam))
    if args.format == "json":
        doc = {
            "type": str(rs.ct),
            "word": list(word),
            "weight_fw": list(lam.fw),
            "terms": [{"fw": list(w.fw), "mult": m}
                      for w, m in char_sorted_terms(rs, result)],
            "term_count": len(result),
            "engine_version": __version__,
        }
        text = canonical_json(doc)
    else:
        text = char_to_str(rs, result) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args) -> int:
    rs = build(args.type)
    reason = check_applicability(rs.ct, args.check)
    if reason is not None:
        print(f"error: {args.check} does not apply to {rs.ct}: {reason}",
              file=sys.stderr)
        return 2
    guard = resolve_guard(args.guard)
    rep = run_check(rs, args.check, guard=guard, alpha=args.alpha)
    _emit(_render_reports([rep], args.format, rs), args.out)
    return 0 if rep.passed else 1


def cmd_sweep(args) -> int:
    rs = build(args.type)
    guard = resolve_guard(args.guard)
    if rs.ct.weyl_order > guard:
        print(f"error: |W({rs.ct})| = {rs.ct.weyl_order} exceeds the guard "
              f"{guard}; raise --guard or {GUARD_ENV_VAR} to proceed",
              file=sys.stderr)
        return 2
    checks = [c for c in CHECK_ORDER if check_applicability(rs.ct, c) is None]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            futures = [pool.submit(_sweep_job, args.type, c, guard) for c in checks]
            reports = [f.result() for f in futures]
    else:
        reports = [run_check(rs, c, guard=guard) for c in checks]
    _emit(_render_reports(reports, args.format, rs), args.out)
    return 0 if all(rep.passed for rep in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubert",
        description="Exact verification sweeps for cohomology of Schubert "
                    "varieties (Bourbaki numbering throughout).")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, with_guard: bool = False):
        sp.add_argument("--type", required=True, metavar="CT",
                        help="Cartan type, e.g. A3, D4, G2")
        sp.add_argument("--format", choices=("table", "json"), default="table")
        sp.add_argument("--out", metavar="PATH",
                        help="write output to PATH instead of stdout")
        if with_guard:
            sp.add_argument("--guard", type=int, metavar="N",
                            help=f"largest |W| to enumerate (default "
                                 f"{DEFAULT_GUARD}, env {GUARD_ENV_VAR})")

    sp = sub.add_parser("roots", help="print the root-system summary")
    add_common(sp)

    sp = sub.add_parser(
        "demazure",
        help="evaluate a Demazure composite on e^weight",
        description="Letters act right-to-left: in --word 2,1 the operator "
                    "for 1 is applied first (innermost).  Example: "
                    "demazure --type A2 --word 2,1 --weight-root 1,1 has "
                    "5 terms.")
    add_common(sp)
    sp.add_argument("--word", required=True, metavar="W",
                    help="comma-separated simple indices; '' is the identity")
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--weight-fund", metavar="V",
                       help="weight in fundamental-weight coordinates, e.g. 1,1")
    group.add_argument("--weight-root", metavar="V",
                       help="weight in simple-root coordinates")

    sp = sub.add_parser("verify", help="run one named check")
    sp.add_argument("check", choices=CHECK_ORDER)
    add_common(sp, with_guard=True)
    sp.add_argument("--alpha", type=int, metavar="I",
                    help="restrict thm42 to one simple root (1-based)")

    sp = sub.add_parser("sweep", help="run every check applicable to the type")
    add_common(sp, with_guard=True)
    sp.add_argument("--workers", type=int, default=1, metavar="N",
                    help="run checks in N processes (default 1)")
    return parser


def main(argv: list[str] | None = None) -> int:
    raw = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_fuse_negative_values(raw))
    handlers = {
        "roots": cmd_roots,
        "demazure": cmd_demazure,
        "verify": cmd_verify,
        "sweep": cmd_sweep,
    }
    try:
        return handlers[args.command](args)
    except GuardExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
