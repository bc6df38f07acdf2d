"""Command-line front end.

Exit codes: 0 success, 1 negative result, 2 input error, 3 timeout.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import formats
from .coloring import (equitable_edge_color, exact_chromatic_index, edge_color_k, lambda_pT,
                       list_edge_color, list_total_color, p1_total_label, random_lists,
                       total_chromatic_number, total_color_k, verify_edge_coloring,
                       verify_equitable, verify_total_coloring, verify_total_labelling)
from .discharge import run_discharge, negative_elements, verify_claims
from .drawing import recover_original, validate
from .errors import InputError, OnePlanarError, PreconditionError, ValidationError
from .gen import FAMILIES, GenSpec, corpus, corpus_stats, gen_drawing
from .rng import SplitMix64
from .structure import (KINDS, all_witnesses, classify, masters_chain, structure_theorem_check)

OK, NEGATIVE, INPUT, TIMEOUT = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(obj: dict, human: str | None, args) -> None:
    if args.human and human is not None:
        print(human)
    else:
        sys.stdout.write(formats.dumps(obj))


def _table(rows: list[tuple], header: tuple) -> str:
    cells = [tuple(str(c) for c in header)] + [tuple(str(c) for c in r) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in cells)


# -- subcommands --------------------------------------------------------------------

def cmd_validate(args) -> int:
    d = formats.parse_drawing(_read(args.input))
    rep = validate(d)
    obj = {"ok": rep.ok, "vertices": d.n, "edges": d.m, "false_vertices": len(d.false_vertices),
           "violations": [{"code": v.code, "message": v.message} for v in rep.violations]}
    human = "valid" if rep.ok else "\n".join(f"{v.code}: {v.message}" for v in rep.violations)
    _emit(obj, human, args)
    return OK if rep.ok else NEGATIVE


def cmd_analyze(args) -> int:
    d = formats.parse_drawing(_read(args.input))
    d.require_valid()
    g = recover_original(d)
    cls = classify(d)
    sigs = Counter(cls.signatures)
    obj: dict = {
        "graph": {"n": g.n, "m": g.m, "min_degree": g.min_degree if g.n else 0,
                  "max_degree": g.max_degree},
        "classification": {"big": cls.letters.count("B"), "small": cls.letters.count("S"),
                           "false": cls.letters.count("F"),
                           "burdened_faces": sum(cls.burdened),
                           "signatures": dict(sorted(sigs.items()))},
        "witnesses": all_witnesses(g),
    }
    if g.n and g.min_degree >= 2:
        w = structure_theorem_check(d, args.kind)
        obj["theorem_witness"] = None if w is None else w.to_dict()
    if g.max_degree >= 10:
        obj["masters"] = masters_chain(g, args.kind).to_dict()
    rows = [(w["type"], w.get("k", ""), w.get("edge") or w.get("X") or w.get("status"))
            for w in obj["witnesses"]]
    human = (f"n={g.n} m={g.m} delta={obj['graph']['min_degree']} Delta={g.max_degree}\n"
             f"signatures: {dict(sorted(sigs.items()))}\n" + _table(rows, ("type", "k", "witness")))
    _emit(obj, human, args)
    return OK


def cmd_discharge(args) -> int:
    d = formats.parse_drawing(_read(args.input))
    ledger = run_discharge(d)
    claims = verify_claims(d, ledger)
    neg = negative_elements(ledger)
    doc = ledger.to_dict()
    if args.report:
        Path(args.report).write_text(formats.dumps(doc))
    obj = {"phase_totals": doc["phase_totals"], "partial": ledger.partial, "flags": ledger.flags,
           "transfers": len(ledger.log), "claims": claims.to_dict(),
           "negative": [[n, f"{c.numerator}/{c.denominator}"] for n, c in neg]}
    if args.figures:
        from .plotting import ledger_figures
        obj["figures"] = [str(p) for p in ledger_figures(doc, classify(d).signatures, args.figures)]
    human = (_table([(p, t) for p, t in doc["phase_totals"]], ("phase", "total")) +
             f"\ntransfers: {len(ledger.log)}  partial: {ledger.partial}\n"
             f"claims: {claims.checked} checked, {claims.out_of_scope} out of scope, "
             f"{len(claims.deviations)} deviations\nnegative elements: {len(neg)}")
    _emit(obj, human, args)
    return OK if claims.ok else NEGATIVE


def cmd_color(args) -> int:
    g, _ = formats.load_graph_or_drawing(_read(args.input))
    timeout = None if args.timeout_ms is None else args.timeout_ms / 1000
    mode = args.mode
    label = mode
    if mode == "edge":
        res = exact_chromatic_index(g, timeout) if args.k is None else edge_color_k(g, args.k, timeout)
        label = "edge coloring" if args.k is None else f"proper {args.k}-edge-coloring"
        check = lambda s: verify_edge_coloring(g, s)
    elif mode == "list-edge":
        if args.lists:
            _, lists = formats.parse_lists(_read(args.lists))
        else:
            k = args.k if args.k is not None else g.max_degree
            lists = random_lists(g, k, 2 * k, SplitMix64(args.seed))
        res = list_edge_color(g, lists, timeout)
        label = "list edge coloring"
        check = lambda s: verify_edge_coloring(g, s, lists)
    elif mode == "total":
        res = total_chromatic_number(g, timeout) if args.k is None else total_color_k(g, args.k, timeout)
        label = "total coloring"
        check = lambda s: verify_total_coloring(g, s)
    elif mode == "list-total":
        if args.lists:
            vl, el = formats.parse_lists(_read(args.lists))
        else:
            k = args.k if args.k is not None else g.max_degree + 1
            rng = SplitMix64(args.seed)
            vl = {v: set(rng.sample(range(1, 2 * k + 1), k)) for v in range(g.n)}
            el = random_lists(g, k, 2 * k, rng)
        res = list_total_color(g, vl, el, timeout)
        label = "list total coloring"
        check = lambda s: verify_total_coloring(g, s, vl, el)
    elif mode == "p1":
        res = lambda_pT(g, args.p, timeout) if args.k is None else p1_total_label(g, args.p, args.k, timeout)
        label = f"({args.p},1)-total labelling" + ("" if args.k is None else f" of span {args.k}")
        check = lambda s: verify_total_labelling(g, s)
    else:
        if args.k is None:
            raise InputError("equitable coloring needs --k")
        res = equitable_edge_color(g, args.k, timeout)
        label = f"equitable {args.k}-coloring"
        check = lambda s: verify_equitable(g, s.colors, args.k)
    obj: dict = {"mode": mode, "status": res.status, "value": res.value,
                 "elapsed": round(res.elapsed, 6)}
    if res.found:
        problems = check(res.solution)
        if problems:
            raise AssertionError(f"solver output failed verification: {problems[:3]}")
        obj["solution"] = res.solution.to_dict()
        message = f"found {label}" + (f" (value {res.value})" if res.value is not None else "")
    elif res.status == "none":
        message = f"no {label}"
    else:
        message = f"timeout while searching for {label}"
    obj["message"] = message
    _emit(obj, message, args)
    return {"found": OK, "none": NEGATIVE, "timeout": TIMEOUT}[res.status]


def cmd_generate(args) -> int:
    spec = GenSpec(args.family, args.n, args.rate, args.seed, args.strip, name=args.name)
    d = gen_drawing(spec)
    text = formats.serialize_drawing(d)
    if args.output:
        Path(args.output).write_text(text)
        if args.dot:
            Path(args.dot).write_text(formats.export_dot(d))
        g = recover_original(d)
        _emit({"output": args.output, "vertices": d.n, "edges": d.m,
               "false_vertices": len(d.false_vertices), "graph": {"n": g.n, "m": g.m}},
              f"wrote {args.output}", args)
    else:
        sys.stdout.write(text)
    return OK


def _theorem_row(item) -> dict:
    g = recover_original(item.drawing)
    w = structure_theorem_check(item.drawing)
    return {"index": item.index, "family": item.spec.family, "n": g.n, "m": g.m,
            "max_degree": g.max_degree, "witness": "none" if w is None else w.type,
            "detail": None if w is None else w.to_dict()}


def cmd_check_theorem(args) -> int:
    if args.input:
        d = formats.parse_drawing(_read(args.input))
        w = structure_theorem_check(d, args.kind)
        obj = {"witness": None if w is None else w.to_dict(),
               "summary": f"{0 if w is None else 1}/1 witnesses"}
        _emit(obj, obj["summary"], args)
        return OK if w is not None else NEGATIVE
    items = corpus(args.corpus, args.seed)
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_theorem_row, items, chunksize=8))
    else:
        rows = [_theorem_row(it) for it in items]
    passed = sum(r["witness"] != "none" for r in rows)
    summary = f"{passed}/{len(rows)} witnesses"
    obj = {"summary": summary, "passed": passed, "total": len(rows),
           "corpus": corpus_stats(items), "seed": args.seed,
           "instances": [{k: v for k, v in r.items()} for r in rows]}
    if args.figures:
        from .plotting import theorem_figures
        obj["figures"] = [str(p) for p in theorem_figures(rows, args.figures)]
    counts = Counter(r["witness"] for r in rows)
    human = _table(sorted(counts.items()), ("witness", "instances")) + "\n" + summary
    _emit(obj, human, args)
    return OK if passed == len(rows) else NEGATIVE


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oneplanar", description=__doc__.splitlines()[0])
    p.add_argument("--human", action="store_true", help="print tables instead of JSON")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--human", action="store_true", default=argparse.SUPPRESS,
                        help="print tables instead of JSON")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check a drawing document")
    s.add_argument("input")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("analyze", parents=[common], help="classification and every witness found")
    s.add_argument("input")
    s.add_argument("--kind", choices=KINDS, default="alternator")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("discharge", parents=[common], help="run the discharging rules and check the claims")
    s.add_argument("input", nargs="?")
    s.add_argument("--input", dest="input_opt")
    s.add_argument("--report", help="write the full ledger JSON here")
    s.add_argument("--figures", help="directory for PNG figures and CSV")
    s.set_defaults(func=cmd_discharge)

    s = sub.add_parser("color", parents=[common], help="colouring solvers")
    s.add_argument("mode", choices=("edge", "list-edge", "total", "list-total", "p1", "equitable"))
    s.add_argument("input", nargs="?")
    s.add_argument("--input", dest="input_opt")
    s.add_argument("--k", type=int,
                   help="palette, span or list size (default: search for the optimum)")
    s.add_argument("--p", type=int, default=1, help="vertex-edge separation for p1 mode")
    s.add_argument("--lists", help="JSON lists file (default: random lists of size k)")
    s.add_argument("--timeout-ms", type=int, help="give up and exit 3 after this long")
    s.add_argument("--seed", type=int, default=0, help="seed for random lists")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("generate", parents=[common], help="write a generated drawing")
    s.add_argument("--family", choices=FAMILIES, required=True)
    s.add_argument("--n", type=int, default=0, help="vertex count")
    s.add_argument("--rate", type=float, default=0.0, help="crossing insertion rate")
    s.add_argument("--strip", type=float, default=0.0, help="edge deletion rate")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--name", help="fixture name for the named family")
    s.add_argument("-o", "--output", help="output file (default: stdout)")
    s.add_argument("--dot", help="also write a DOT rendering (needs -o)")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("check-theorem", parents=[common], help="find a structural witness per drawing")
    s.add_argument("--input")
    s.add_argument("--corpus", type=int, default=200, help="corpus size")
    s.add_argument("--seed", type=int, default=1, help="corpus seed")
    s.add_argument("--jobs", type=int, default=1, help="worker processes")
    s.add_argument("--kind", choices=KINDS, default="alternator")
    s.add_argument("--figures", help="directory for PNG figures and CSV")
    s.set_defaults(func=cmd_check_theorem)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "input_opt", None):
        args.input = args.input_opt
    if hasattr(args, "input_opt") and not args.input:
        parser.error(f"{args.command}: an input file is required")
    try:
        return args.func(args)
    except (InputError, ValidationError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT
    except OnePlanarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT


if __name__ == "__main__":
    sys.exit(main())
