"""Command-line interface: every pipeline stage as a verb.

Exit codes: 0 success, 1 usage error, 2 input validation failure,
3 verification/check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import brane, butterfly, envelope, errors, tangent, tie

USAGE_EXIT = 1
INPUT_EXIT = 2
CHECK_EXIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_EXIT)


def _build_parser():
    parser = _Parser(prog="bowvariety", description=__doc__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(verb, **kwargs):
        p = sub.add_parser(verb, **kwargs)
        p.add_argument("--parallel", action="store_true", help="accepted for "
                       "compatibility; execution is sequential and deterministic")
        return p

    p = add("parse", help="summarize a brane diagram")
    p.add_argument("dsl")

    p = add("fixed-points", help="enumerate tie diagrams")
    p.add_argument("dsl")
    p.add_argument("--json", action="store_true")
    p.add_argument("--ascii", action="store_true")

    p = add("butterfly", help="show one butterfly diagram")
    p.add_argument("dsl")
    p.add_argument("--point", required=True)
    p.add_argument("--blue", required=True)
    p.add_argument("--json", action="store_true")

    p = add("matrices", help="assembled fixed-point matrices")
    p.add_argument("dsl")
    p.add_argument("--point", required=True)
    p.add_argument("--verify", action="store_true")

    p = add("tangent", help="tangent characters, optionally chamber-split")
    p.add_argument("dsl")
    p.add_argument("--point")
    p.add_argument("--chamber")

    p = add("hw", help="apply one Hanany-Witten move")
    p.add_argument("dsl")
    p.add_argument("--at", required=True, type=int)

    p = add("separate", help="separate a diagram by Hanany-Witten moves")
    p.add_argument("dsl")

    p = add("stab", help="stable-envelope recursion over attraction data")
    p.add_argument("--data", required=True)
    p.add_argument("--check", action="store_true")

    p = add("pair", help="orthogonality and polynomiality for paired data")
    p.add_argument("--data", required=True)
    p.add_argument("--opposite", required=True)

    p = add("verify", help="full verification report for every fixed point")
    p.add_argument("dsl")
    return parser


def _diagram(dsl):
    return brane.parse(dsl)


def _point(d, point_id):
    points = tie.enumerate_tie_diagrams(d)
    for k, t in enumerate(points, start=1):
        if f"D{k}" == point_id:
            return t
    raise errors.BowError(f"no fixed point {point_id!r} (found {len(points)})")


def _cmd_parse(args, out):
    d = _diagram(args.dsl)
    out.write(f"diagram: {brane.render(d)}\n")
    out.write(f"black lines: {len(d.blacks)}, labels: {list(d.blacks)}\n")
    out.write(f"M (red lines): {d.n_red}\n")
    out.write(f"N (blue lines): {d.n_blue}\n")
    out.write(f"admissible: {brane.admissible(d)}\n")
    out.write(f"sdeg: {brane.sdeg(d)}\n")
    return 0


def _cmd_fixed_points(args, out):
    d = _diagram(args.dsl)
    points = tie.enumerate_tie_diagrams(d)
    if args.json:
        out.write(json.dumps(
            [{"id": f"D{k}", "ties": t.named_ties()}
             for k, t in enumerate(points, start=1)], indent=2))
        out.write("\n")
        return 0
    out.write(f"{len(points)} tie diagram(s) on {brane.render(d)}\n")
    for k, t in enumerate(points, start=1):
        out.write(f"D{k}: {t.named_ties()}\n")
        if args.ascii:
            out.write(tie.render_ascii(t) + "\n")
    return 0


def _cmd_butterfly(args, out):
    d = _diagram(args.dsl)
    t = _point(d, args.point)
    bf = butterfly.build_butterfly(t, args.blue)
    if args.json:
        out.write(json.dumps(bf.to_json(), indent=2) + "\n")
    else:
        out.write(butterfly.render_ascii(bf) + "\n")
    return 0


def _cmd_matrices(args, out):
    d = _diagram(args.dsl)
    t = _point(d, args.point)
    f = butterfly.assemble_fixed_point(t)
    out.write(json.dumps(f.to_json(), indent=2) + "\n")
    if args.verify:
        report = butterfly.verify_fixed_point(f)
        out.write(report.render() + "\n")
        if not report.ok:
            return CHECK_EXIT
    return 0


def _cmd_tangent(args, out):
    d = _diagram(args.dsl)
    points = tie.enumerate_tie_diagrams(d)
    chamber = None
    if args.chamber:
        chamber = tuple(int(x) for x in args.chamber.split(","))
    for k, t in enumerate(points, start=1):
        pid = f"D{k}"
        if args.point and pid != args.point:
            continue
        tc = tangent.tangent_character(t, pid)
        out.write(f"{pid}: {{{', '.join(w.render() for w in tc.weights())}}}\n")
        if chamber:
            split = tangent.chamber_split(tc, chamber)
            out.write(f"  plus:  {split.plus.render()}\n")
            out.write(f"  minus: {split.minus.render()}\n")
    return 0


def _cmd_hw(args, out):
    d = _diagram(args.dsl)
    out.write(brane.render(brane.hw_transition(d, args.at)) + "\n")
    return 0


def _cmd_separate(args, out):
    d = _diagram(args.dsl)
    sep, moves = brane.separate(d)
    out.write(brane.render(sep) + "\n")
    out.write(f"moves: {moves}\n")
    return 0


def _cmd_stab(args, out):
    data = envelope.load_attraction_data(args.data)
    stabs = envelope.stable_envelopes(data)
    out.write(json.dumps([s.to_json() for s in stabs], indent=2) + "\n")
    if args.check:
        # axioms are verified inside the recursion; additionally confirm the
        # coefficients do not depend on how incomparable points are ordered
        rev = list(data.order)
        for i in range(len(rev) - 1):
            p, q = rev[i], rev[i + 1]
            if data.restrictions[q][p].is_zero():
                swapped = rev[:i] + [q, p] + rev[i + 2 :]
                redone = envelope.stable_envelopes(data, order=swapped)
                if any(a.coeffs != b.coeffs for a, b in zip(stabs, redone)):
                    out.write(f"order-refinement check FAILED at {p},{q}\n")
                    return CHECK_EXIT
        out.write("all envelope checks passed\n")
    return 0


def _cmd_pair(args, out):
    data = envelope.load_attraction_data(args.data)
    op_data = envelope.load_attraction_data(args.opposite)
    stabs = envelope.stable_envelopes(data)
    op_stabs = envelope.stable_envelopes(op_data)
    gram = envelope.gram_matrix(stabs, op_stabs, data, op_data)
    ok = True
    out.write("gram matrix:\n")
    for i, row in enumerate(gram):
        rendered = []
        for j, entry in enumerate(row):
            rendered.append(entry.render())
            expected = 1 if i == j else 0
            if not entry == expected:
                ok = False
        out.write("  [" + ", ".join(rendered) + "]\n")
    poly_report = envelope.check_polynomiality(stabs, op_stabs, data, op_data)
    order_report = envelope.opposite_order_check(data, op_data)
    for name, report in (("polynomiality", poly_report), ("order", order_report)):
        out.write(f"{name}: {'pass' if report.ok else 'FAIL'}\n")
        for msg in report.messages:
            out.write(f"  {msg}\n")
        ok = ok and report.ok
    return 0 if ok else CHECK_EXIT


def _cmd_verify(args, out):
    d = _diagram(args.dsl)
    points = tie.enumerate_tie_diagrams(d)
    ok = True
    for k, t in enumerate(points, start=1):
        f = butterfly.assemble_fixed_point(t)
        report = butterfly.verify_fixed_point(f)
        out.write(f"D{k}:\n")
        for line in report.render().splitlines():
            out.write(f"  {line}\n")
        ok = ok and report.ok
    out.write("all fixed points verified\n" if ok else "verification FAILED\n")
    return 0 if ok else CHECK_EXIT


_COMMANDS = {
    "parse": _cmd_parse,
    "fixed-points": _cmd_fixed_points,
    "butterfly": _cmd_butterfly,
    "matrices": _cmd_matrices,
    "tangent": _cmd_tangent,
    "hw": _cmd_hw,
    "separate": _cmd_separate,
    "stab": _cmd_stab,
    "pair": _cmd_pair,
    "verify": _cmd_verify,
}


def run(argv=None, out=None):
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return _COMMANDS[args.verb](args, out)
    except errors.BowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_EXIT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_EXIT


def main():
    raise SystemExit(run())
