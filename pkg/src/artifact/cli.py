"""Command-line interface.

Exit codes: 0 success or Pass, 1 Fail, 2 Inconclusive, 64 usage error
(including unparsable bundle expressions).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Dict, List, Optional, Sequence, Tuple

from . import __version__
from .bundles import BundleClass, Space, format_object, space_from_name
from .cohomology import INF, bbw_cohomology, punctured_pushforward, total_space_cohomology
from .expr import ParseError, parse_in_space
from .homalg import (ORACLES, check_collection, check_exceptional, check_spherical_zero_section,
                     check_tilting, ext_table)
from .mutation import (Collection, Inconclusive, derive_resolution, fmt_multiset, mutate_left,
                       mutate_right, parse_chain_spec, tilt_labels, twist_composite,
                       verify_iw_chain)
from .weyl import dual_weight
from .report import CRITERIA, fmt_dims, render_markdown, run_criterion

SCHEMA = "artifact-report/1"
EXIT = {"Pass": 0, "Fail": 1, "Inconclusive": 2}
USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _num(d) -> str:
    return "inf" if d is INF else str(d)


def _dims_json(dims: Dict[int, object]) -> Dict[str, str]:
    return {str(i): _num(d) for i, d in sorted(dims.items()) if d != 0}


def _space(args) -> Space:
    if args.space is None:
        raise UsageError("--space is required")
    try:
        return space_from_name(args.space)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _obj(text: str, sp: Space):
    try:
        return parse_in_space(text, sp)
    except ParseError as exc:
        raise UsageError(str(exc)) from None


def _objs(text: str, sp: Space) -> List[object]:
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return [_obj(p.strip(), sp) for p in parts if p.strip()]


def _short(x) -> str:
    return format_object(x).split(" @")[0]


# ------------------------------------------------------------- commands

def cmd_cohomology(args) -> Tuple[str, dict, List[str], List[str]]:
    sp = _space(args)
    e = _obj(args.expr, sp)
    if not isinstance(e, BundleClass):
        raise UsageError("cohomology takes a direct sum of irreducible bundles")
    if not sp.is_total:
        t = bbw_cohomology(e)
        # entries hold dual weights; lam is the dominantized weight itself
        reps = {str(i): [{"lambda": str(dual_weight(w).coords), "dual": str(w.coords), "mult": str(m)} for w, m in ent]
                for i, ent in t.entries.items()}
        lines = []
        for i, d in sorted(t.nonzero().items()):
            lab = " + ".join(f"V{dual_weight(w).coords} (dual {w.coords})" + (f"*{m}" if m > 1 else "")
                             for w, m in t.entries[i])
            lines.append(f"H^{i} = C^{d}  [{lab}]")
        payload = {"dims": _dims_json(t.nonzero()), "euler": str(t.euler), "representations": reps}
        return "Pass", payload, lines or ["all cohomology vanishes"], []
    g = total_space_cohomology(sp, e)
    pieces = {str(l): _dims_json(g.piece(l)) for l in range(args.cutoff + 1) if g.piece(l)}
    payload = {
        "dims": _dims_json(g.dims),
        "higher_vanishes": g.higher_vanishes(),
        "stable_from": str(g.stable_from),
        "pieces": pieces,
        "spot_checks": g.all_spot_checks(20),
    }
    lines = [f"H^{i} = {'infinite-dimensional' if d is INF else f'C^{d}'}" for i, d in sorted(g.dims.items())]
    lines.append(f"stable pattern from fiber degree {g.stable_from}; H^{{>=1}} vanishes: {g.higher_vanishes()}")
    for l, d in pieces.items():
        lines.append(f"  fiber degree {l}: {', '.join(f'H^{i}=C^{v}' for i, v in d.items())}")
    notes = ["higher cohomology is certified for every fiber degree via affine-family stable patterns"]
    if sp.kind in ("Y", "Yp") and args.punctured:
        pp = punctured_pushforward(sp, e, args.cutoff)
        payload["punctured_sections"] = {str(d): str(v) for d, v in pp.sections.items()}
        payload["punctured_no_sections"] = pp.no_sections_anywhere()
        lines.append(f"punctured pushforward: no sections in any degree d >= 1: {pp.no_sections_anywhere()}")
    return "Pass", payload, lines, notes


def _table_payload(t) -> dict:
    return {
        "status": t.status,
        "bounds": {str(i): [_num(lo), _num(hi)] for i, lo, hi in t.bounds},
        "dims": _dims_json(t.dims) if t.certified else None,
        "euler": None if t.euler is None else str(t.euler),
    }


def cmd_ext(args):
    sp = _space(args)
    a, b = _obj(args.a, sp), _obj(args.b, sp)
    t = ext_table(a, b, oracle=args.oracle)
    if t.certified:
        lines = [f"Ext = {fmt_dims(t.dims)} (Certified)"]
    else:
        lines = [f"EulerOnly (euler {t.euler}): " + ", ".join(f"Ext^{i} in [{_num(lo)}, {_num(hi)}]" for i, lo, hi in t.bounds)]
    return ("Pass" if t.certified else "Inconclusive"), _table_payload(t), lines, list(t.provenance)


def _cert_payload(c) -> dict:
    return {
        "verdict": c.verdict,
        "witness": None if c.witness is None else [c.witness[0], c.witness[1], str(c.witness[2]), _num(c.witness[3])],
        "obstruction": c.obstruction,
        "pairs": [[x, y, _table_payload(t)] for x, y, t in c.table],
    }


def _cert_lines(c) -> List[str]:
    out = [c.verdict]
    if c.witness:
        out.append(f"witness: Ext^{c.witness[2]}({c.witness[0]}, {c.witness[1]}) >= {_num(c.witness[3])}")
    if c.obstruction:
        out.append(f"obstruction: {c.obstruction}")
    return out


def cmd_tilting(args):
    sp = _space(args)
    c = check_tilting(_obj(args.expr, sp), oracle=args.oracle)
    return c.verdict, _cert_payload(c), _cert_lines(c), list(c.provenance()) + ["generation is not checked"]


def cmd_exceptional(args):
    sp = _space(args)
    objs = _objs(args.expr, sp)
    c = check_exceptional(objs[0], args.oracle) if len(objs) == 1 else check_collection(objs, args.oracle)
    return c.verdict, _cert_payload(c), _cert_lines(c), list(c.provenance())


def cmd_spherical(args):
    sp = _space(args)
    if sp.kind not in ("Y", "Yp"):
        raise UsageError("spherical-check needs --space Y or Y'")
    f = _obj(args.expr, sp.base)
    st, c = check_spherical_zero_section(f, sp)
    payload = {
        "verdict": c.verdict,
        "e2": {f"{p},{q}": str(d) for (p, q), d in sorted(st.e2.items())},
        "degenerate": st.degenerate,
        "totals": None if st.totals is None else _dims_json(st.totals),
        "columns": {str(q): _short(col) for q, col in sorted(st.columns.items())},
    }
    lines = _cert_lines(c) + [f"local Ext^{q} = {_short(col)}" for q, col in sorted(st.columns.items())]
    if st.totals is not None:
        lines.append(f"Ext = {fmt_dims(st.totals)}")
    return c.verdict, payload, lines, []


def _step_payload(st) -> dict:
    return {
        "direction": st.direction,
        "index": str(st.index),
        "hom_vector": {str(i): str(d) for i, d in st.hom_vector},
        "mutated": _short(st.mutated),
        "shift": str(st.shift),
        "k_identity": st.triangle[0],
        "k_identity_holds": st.triangle[1],
        "ses": None if st.ses is None else [_short(st.ses[0]), f"{_short(st.ses[1][0])}^{st.ses[1][1]}", _short(st.ses[2])],
        "result": [_short(o) for o in st.result.objects],
        "result_certified": st.result.certified,
    }


def cmd_mutate(args):
    sp = _space(args)
    c = Collection.certify(_objs(args.collection, sp), args.oracle)
    if not c.certified:
        cert = c.certificate
        return cert.verdict, {"collection": _cert_payload(cert)}, ["input collection is not certified"] + _cert_lines(cert), []
    fn = mutate_left if args.direction == "left" else mutate_right
    try:
        st = fn(c, args.index, args.oracle)
    except IndexError as exc:
        raise UsageError(str(exc)) from None
    p = _step_payload(st)
    lines = [f"{st.direction} mutation at {st.index}: hom vector {fmt_dims(dict(st.hom_vector))}",
             f"new object {p['mutated']} (shift {st.shift})",
             f"{st.triangle[0]}: {'holds' if st.triangle[1] else 'FAILS'}",
             "result (" + ", ".join(p["result"]) + f"), certified: {st.result.certified}"]
    if p["ses"]:
        lines.append("0 -> " + " -> ".join(p["ses"]) + " -> 0")
    ok = st.triangle[1] and st.result.certified
    verdict = "Pass" if ok else (st.result.certificate.verdict if st.result.certificate else "Fail")
    return verdict, p, lines, ["sheaf-level exactness is the standard mutation argument; classes and Homs are computed"]


def cmd_resolve(args):
    sp = _space(args)
    if not args.against:
        raise UsageError("--against is required")
    ch = derive_resolution(_obj(args.target, sp), _objs(args.against, sp), args.oracle)
    payload = {
        "terms": [[_short(o), str(m)] for o, m in ch.terms],
        "multiplicities": [str(m) for m in ch.multiplicities],
        "images": list(ch.image_names()),
        "k_exact": ch.k_exact,
        "steps": [_step_payload(s) for s in ch.derivation],
    }
    lines = [str(ch), "multiplicities " + ",".join(map(str, ch.multiplicities)),
             "images " + ", ".join(ch.image_names()), f"alternating K-sum zero: {ch.k_exact}"]
    return ("Pass" if ch.k_exact else "Fail"), payload, lines, list(ch.notes)


def cmd_iw_chain(args):
    try:
        parse_chain_spec(args.spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r = verify_iw_chain(args.spec, oracle=args.oracle)
    steps = []
    lines = [f"start {fmt_multiset(r.start)}"]
    for i, s in enumerate(r.steps, 1):
        ex = s.exchange
        mid = " + ".join(f"{lab}^{m}" for lab, m in ex.middle)
        steps.append({
            "frozen": s.frozen, "before": [str(x) for x in s.before], "after": [str(x) for x in s.after],
            "exchange": [str(ex.kernel), mid, str(ex.cokernel)],
            "certificate": s.certificate.verdict,
            "clauses": [[c, v, d] for c, v, d in s.certificate.clauses],
        })
        lines.append(f"{i:2d}. mu at {s.frozen}: 0 -> {ex.kernel} -> {mid} -> {ex.cokernel} -> 0   "
                     f"{fmt_multiset(s.after)}  [{s.certificate.verdict}]")
        for c, v, d in s.certificate.clauses:
            if v != "Pass":
                lines.append(f"      {c}: {v} ({d})")
    lines.append(f"end {fmt_multiset(r.end)}" + ("" if r.expected is None else f"; expected {fmt_multiset(r.expected)}: {r.labels_ok}"))
    payload = {"start": [str(x) for x in r.start], "end": [str(x) for x in r.end],
               "expected": None if r.expected is None else [str(x) for x in r.expected],
               "labels_ok": r.labels_ok, "certificates_ok": r.certificates_ok, "steps": steps}
    if not r.labels_ok:
        verdict = "Fail"
    elif not r.certificates_ok:
        verdict = "Inconclusive" if all(s.certificate.verdict != "Fail" for s in r.steps) else "Fail"
    else:
        verdict = "Pass"
    return verdict, payload, lines, []


def cmd_cyclic(args):
    n = args.n
    if n < 2:
        raise UsageError("--n must be at least 2")
    labels = tilt_labels(n, args.tilt)
    ks = list(range(args.start, args.start + n)) if args.ks is None else [int(k) for k in args.ks.split(",")]
    try:
        out, log = twist_composite(n, labels, ks, args.oracle)
    except ValueError as exc:
        payload = {"labels": [str(j) for j in labels], "twists": [str(k) for k in ks], "error": str(exc)}
        return "Fail", payload, [f"Tilt_{args.tilt} labels L^{list(labels)}", str(exc)], []
    payload = {
        "labels": [str(j) for j in labels], "twists": [str(k) for k in ks], "result": [str(j) for j in out],
        "is_tensor_shift": list(out) == [j + len(ks) for j in labels],
        "steps": [[str(s.k), str(s.before), str(s.after), _dims_json(s.justification.dims)] for s in log],
    }
    lines = [f"Tilt_{args.tilt}: L^{list(labels)}", f"twists at k = {ks}", f"result: L^{list(out)}"]
    for s in log:
        if s.before != s.after:
            lines.append(f"  k={s.k}: L^{s.before} -> L^{s.after}  (Ext = {fmt_dims(s.justification.dims)})")
    return "Pass", payload, lines, ["each move is justified by Ext from the twisting object"]


def cmd_repro(args):
    results = [run_criterion(n, args.oracle) for n in sorted(CRITERIA)]
    md = render_markdown(results)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(md)
    worst = "Pass"
    for r in results:
        if r.verdict == "Fail":
            worst = "Fail"
        elif r.verdict == "Inconclusive" and worst == "Pass":
            worst = "Inconclusive"
    payload = {"criteria": [{"number": str(r.number), "title": r.title, "verdict": r.verdict,
                             "lines": [{"claim": l.claim, "computed": l.computed, "verdict": l.verdict, "literal": l.literal}
                                       for l in r.lines]} for r in results]}
    return worst, payload, md.rstrip("\n").split("\n"), []


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--space", help="space name: Gr24, P3GL, LGr, P, Y, Y', Cyc(n), P^m")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--cutoff", type=int, default=10, help="fiber degrees listed for degree-0 data (default 10)")
    common.add_argument("--oracle", choices=ORACLES, default="quadric")

    p = _Parser(prog="artifact", description="Exact cohomology, Ext and mutation computations.")
    p.add_argument("--version", action="version", version=f"artifact {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("cohomology", parents=[common], help="sheaf cohomology of a bundle")
    s.add_argument("expr")
    s.add_argument("--punctured", action="store_true", help="also report punctured-pushforward sections (Y, Y')")
    s.set_defaults(func=cmd_cohomology)

    s = sub.add_parser("ext", parents=[common], help="Ext table between two objects")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_ext)

    s = sub.add_parser("tilting-check", parents=[common], help="pairwise higher-Ext vanishing")
    s.add_argument("expr")
    s.set_defaults(func=cmd_tilting)

    s = sub.add_parser("exceptional-check", parents=[common], help="exceptional object or comma-separated collection")
    s.add_argument("expr")
    s.set_defaults(func=cmd_exceptional)

    s = sub.add_parser("spherical-check", parents=[common], help="zero-section pushforward of a base bundle")
    s.add_argument("expr")
    s.set_defaults(func=cmd_spherical)

    s = sub.add_parser("mutate", parents=[common], help="mutate an exceptional collection")
    s.add_argument("collection", help="comma-separated objects")
    s.add_argument("--index", type=int, default=0)
    s.add_argument("--direction", choices=("left", "right"), default="left")
    s.set_defaults(func=cmd_mutate)

    s = sub.add_parser("resolve", parents=[common], help="derive a long exact sequence by mutation")
    s.add_argument("target")
    s.add_argument("--against", help="comma-separated objects")
    s.set_defaults(func=cmd_resolve)

    s = sub.add_parser("iw-chain", parents=[common], help="run a chain of IW mutations on module labels")
    s.add_argument("spec", help="e.g. 'W1*3,W2*3,W3*3', 'abuaf10', 'wprime4', 'cyclic(4,1)'")
    s.set_defaults(func=cmd_iw_chain)

    s = sub.add_parser("cyclic", parents=[common], help="twist orbit on L^j labels of Cyc(n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--tilt", type=int, default=0, help="start from Tilt_k labels (default 0)")
    s.add_argument("--start", type=int, default=1, help="first twist index; twists run start..start+n-1")
    s.add_argument("--ks", help="explicit comma-separated twist indices")
    s.set_defaults(func=cmd_cyclic)

    s = sub.add_parser("repro", parents=[common], help="run every acceptance check, markdown report")
    s.add_argument("--out", help="also write the markdown to this file")
    s.set_defaults(func=cmd_repro)
    return p


def _emit(args, argv: Sequence[str], verdict: str, payload: dict, lines: List[str], notes: List[str]) -> None:
    if args.json:
        doc = {
            "schema": SCHEMA,
            "version": __version__,
            "command": list(argv),
            "verdict": verdict,
            "result": payload,
            "provenance": sorted(set(notes)),
        }
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for l in lines:
            print(l)
        if args.command != "repro":
            for n in sorted(set(notes)):
                print(f"note: {n}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, --version and usage errors
        return exc.code if isinstance(exc.code, int) else USAGE
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return USAGE
    try:
        verdict, payload, lines, notes = args.func(args)
    except UsageError as exc:
        print(f"artifact: error: {exc}", file=sys.stderr)
        return USAGE
    except Inconclusive as exc:
        verdict, payload, lines, notes = "Inconclusive", {"error": str(exc)}, [f"Inconclusive: {exc}"], []
    except ValueError as exc:
        print(f"artifact: error: {exc}", file=sys.stderr)
        return USAGE
    _emit(args, argv, verdict, payload, lines, notes)
    return EXIT[verdict]


if __name__ == "__main__":
    sys.exit(main())
