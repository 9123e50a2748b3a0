"""Command-line interface: batch computations over DSL input documents.

Exit codes: 0 success, 1 check-suite failure, 2 usage or parse error.
The JETFORGE_FIELD environment variable sets the default coefficient
field for documents whose ring declaration omits one.
"""

import argparse
import json
import os
import sys

from .checks import SUITE_NAMES, CheckConfig, run_suite
from .dsl import parse_document, print_document
from .errors import JetforgeError, ParseError
from .hsmodules import (hs_module_presentation, kaehler_presentation,
                        sym_presentation)
from .jets import bijet_presentation, induced_morphism, jet_presentation
from .p1 import cocycle_check, global_sections, p1_transition
from .scalars import field_by_name


def _emit_json(obj):
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _load_document(args):
    if args.input and args.input != "-":
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    default_field = None
    env = os.environ.get("JETFORGE_FIELD")
    if env:
        default_field = field_by_name(env)
    return parse_document(text, default_field=default_field)


def _rel_name(doc, k):
    return doc.ideal_names[k] if k < len(doc.ideal_names) else "f%d" % k


def cmd_jet(args):
    doc = _load_document(args)
    jp = jet_presentation(doc.algebra, args.n)
    if args.format == "json":
        _emit_json(jp.to_json_dict())
        return 0
    print("level %d" % jp.level)
    print("vars %s" % " ".join(v.render() for v in jp.jet_vars))
    for (k, i), g in zip(jp.relation_index, jp.relations):
        print("relation %s.%d = %s" % (_rel_name(doc, k), i, g.render()))
    return 0


def cmd_jet2(args):
    doc = _load_document(args)
    bp = bijet_presentation(doc.algebra, args.n, args.m)
    if args.format == "json":
        _emit_json(bp.to_json_dict())
        return 0
    print("levels %d %d" % bp.levels)
    print("vars %s" % " ".join(v.render() for v in bp.jet_vars))
    for (k, i, j), g in zip(bp.relation_index, bp.relations):
        print("relation %s.%d.%d = %s" % (_rel_name(doc, k), i, j, g.render()))
    return 0


def cmd_module(args):
    doc = _load_document(args)
    if doc.module is None:
        print("error: document declares no module", file=sys.stderr)
        return 2
    hm = hs_module_presentation(doc.module, args.n)
    if args.format == "json":
        _emit_json(hm.to_json_dict())
        return 0
    print("level %d" % hm.level)
    print("basis %s" % " ".join(hm.basis_labels()))
    for (k, i), row in zip(hm.row_index, hm.relation_matrix):
        print("row %d.%d : %s" % (k, i, " ; ".join(p.render() for p in row)))
    return 0


def cmd_omega(args):
    doc = _load_document(args)
    target = doc.algebra if args.n is None else jet_presentation(doc.algebra, args.n)
    kp = kaehler_presentation(target)
    if args.format == "json":
        _emit_json({
            "level": args.n,
            "basis": ["d" + v.render(base_plain=args.n is None) for v in kp.basis],
            "rows": [[p.render() for p in row] for row in kp.relation_matrix],
        })
        return 0
    print("basis %s" % " ".join("d" + v.render(base_plain=args.n is None) for v in kp.basis))
    for k, row in enumerate(kp.relation_matrix):
        print("row %d : %s" % (k, " ; ".join(p.render() for p in row)))
    return 0


def cmd_sym(args):
    doc = _load_document(args)
    if doc.module is None:
        print("error: document declares no module", file=sys.stderr)
        return 2
    sp = sym_presentation(doc.module)
    if args.format == "json":
        _emit_json(sp.to_json_dict())
        return 0
    sys.stdout.write(print_document(sp.algebra))
    return 0


def cmd_morphism(args):
    doc = _load_document(args)
    if doc.morphism is None:
        print("error: document declares no morphism", file=sys.stderr)
        return 2
    fn = induced_morphism(doc.morphism, args.n)
    images = sorted(fn.images.items(), key=lambda vi: vi[0].sort_key())
    if args.format == "json":
        _emit_json({"level": args.n,
                    "images": {v.render(): p.render() for v, p in images}})
        return 0
    for v, p in images:
        print("%s -> %s" % (v.render(), p.render()))
    return 0


def cmd_check(args):
    suites = tuple(SUITE_NAMES) if args.suite == "all" else tuple(args.suite.split(","))
    config = CheckConfig(seed=args.seed, trials=args.trials, suites=suites)
    report = run_suite(config)
    if args.format == "json":
        _emit_json(report.to_json_dict())
    else:
        print(report.to_text())
    return 0 if report.passed else 1


def cmd_p1(args):
    out = {
        "d": args.d,
        "n": args.n,
        "transition": p1_transition(args.d, args.n, "overlap").to_rows(),
        "cocycle_ok": cocycle_check(args.d, args.n) if args.cocycle else None,
        "global_sections": None,
    }
    if args.sections:
        secs = global_sections(args.d, args.n)
        out["global_sections"] = [s.label for s in secs]
        all_global = all(s.is_global for s in secs)
    if args.format == "json":
        _emit_json(out)
        return 0
    print("d %d, level %d" % (args.d, args.n))
    for j, row in enumerate(out["transition"]):
        print("transition row %d : %s" % (j, " ; ".join(row)))
    if args.cocycle:
        print("cocycle %s" % ("ok" if out["cocycle_ok"] else "FAILED"))
    if args.sections:
        print("global sections (%d): %s" % (len(out["global_sections"]),
                                            " ".join(out["global_sections"])))
        print("all global: %s" % ("yes" if all_global else "no"))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jetforge",
        description="Exact jet-algebra and Hasse-Schmidt-module computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if with_input:
            p.add_argument("input", nargs="?", default="-",
                           help="DSL input file ('-' or omitted for stdin)")

    p = sub.add_parser("jet", help="level-n jet presentation")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_jet)

    p = sub.add_parser("jet2", help="bivariate jet presentation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_jet2)

    p = sub.add_parser("module", help="Hasse-Schmidt module presentation")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("omega", help="Kaehler differentials (base or jet level)")
    p.add_argument("--n", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("sym", help="symmetric algebra of the declared module")
    common(p)
    p.set_defaults(func=cmd_sym)

    p = sub.add_parser("morphism", help="induced morphism on jet presentations")
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_morphism)

    p = sub.add_parser("check", help="run the randomized theorem suites")
    p.add_argument("--suite", default="all")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    common(p, with_input=False)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("p1", help="jet line bundles on the projective line")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cocycle", action="store_true")
    p.add_argument("--sections", action="store_true")
    common(p, with_input=False)
    p.set_defaults(func=cmd_p1)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print("parse error: %s" % e, file=sys.stderr)
        return 2
    except JetforgeError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
