"""Command-line front end.

Exit codes:
  0  success
  1  verification mismatch / selftest failure
  2  unreadable or malformed input
  3  inessential variables present (use --normalize)
  4  decomposition preconditions not met
  5  unsupported counting parameters
  6  census budget exceeded without --samples
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import DEFAULT_SEED, BudgetExceeded, census, compare
from .counting import (
    UnsupportedParameters,
    count_G,
    count_Q,
    count_table,
    count_U,
    to_sci,
)
from .decompose import ODDSUPP_TILDE, DecompositionError, decompose, formal_sum_support
from .fncore import drop_inessential, essential_variables, load_table, save_table
from .gap import InessentialVariableError, classify
from .groups import GroupError, fn_add, parse_group_spec

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_INESSENTIAL, EXIT_DECOMP, EXIT_COUNT, EXIT_BUDGET = range(7)

SCI_THRESHOLD = 10**15


class _Fail(Exception):
    def __init__(self, code, msg):
        super().__init__(msg)
        self.code = code


def _fmt_int(v: int, exact: bool) -> str:
    return str(v) if exact or abs(v) < SCI_THRESHOLD else to_sci(v)


def _emit(args, record: dict, lines: list):
    if args.format == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        print("\n".join(lines))


def _load(path):
    try:
        return load_table(path)
    except (OSError, ValueError) as exc:
        raise _Fail(EXIT_PARSE, f"cannot read function file {path}: {exc}") from None


# -- subcommands -------------------------------------------------------------


def cmd_analyze(args):
    f = _load(args.fnfile)
    ess_vars = essential_variables(f)
    if len(ess_vars) < f.n:
        if not args.normalize:
            raise _Fail(EXIT_INESSENTIAL, f"inessential variables present (essential: {list(ess_vars)}); use --normalize")
        f = drop_inessential(f)
    record = {"k": f.k, "ell": f.ell, "n": f.n, "values": f.values.tolist(), "input_essential": list(ess_vars)}
    if len(ess_vars) < 2:
        record.update(ess=len(ess_vars), qa=None, essl=None, gap=None, case=None)
        lines = [f"k={f.k} ell={f.ell} n={f.n}", f"ess: {len(ess_vars)}", "gap: undefined (fewer than 2 essential variables)"]
        _emit(args, record, lines)
        return EXIT_OK
    rep = classify(f)
    record.update(rep.as_record())
    lines = [
        f"k={f.k} ell={f.ell} n={f.n}",
        f"ess: {rep.ess}  essential: {' '.join(f'x{i}' for i in ess_vars)}",
        f"qa: {rep.qa}",
        f"ess_down: {rep.essl}",
        f"gap: {rep.gap}",
        f"case: {rep.case}" + (f"({rep.p})" if rep.p is not None else ""),
    ]
    if rep.ternary is not None:
        h, *i = rep.ternary
        lines.append(f"h: {' '.join(map(str, h.values.tolist()))}  i: {i}")
    _emit(args, record, lines)
    return EXIT_OK


def cmd_decompose(args):
    f = _load(args.fnfile)
    try:
        grp = parse_group_spec(args.group)
    except (GroupError, OSError) as exc:
        raise _Fail(EXIT_PARSE, f"bad group spec: {exc}") from None
    if grp.order != f.ell:
        raise _Fail(EXIT_DECOMP, f"group order {grp.order} differs from codomain size {f.ell}")
    try:
        d = decompose(f, grp)
    except InessentialVariableError as exc:
        raise _Fail(EXIT_DECOMP, str(exc)) from None
    except DecompositionError as exc:
        raise _Fail(EXIT_DECOMP, str(exc)) from None
    if fn_add(d.h, d.g, grp) != f:
        raise _Fail(EXIT_MISMATCH, "internal error: h + g does not recombine to f")
    os.makedirs(args.outdir, exist_ok=True)
    hpath = os.path.join(args.outdir, "h.txt")
    gpath = os.path.join(args.outdir, "g.txt")
    save_table(d.h, hpath)
    save_table(d.g, gpath)
    with open(os.path.join(args.outdir, "case.txt"), "w") as fh:
        fh.write(d.tag + "\n")
    record = {"case": d.case, "p": d.p, "tag": d.tag, "h": hpath, "g": gpath, "h_zero": not d.h.values.any()}
    if d.case == ODDSUPP_TILDE:
        spath = os.path.join(args.outdir, "support.txt")
        with open(spath, "w") as fh:
            fh.write(formal_sum_support(f, grp).dumps())
        record["support"] = spath
    lines = [f"case: {d.tag}", f"h: {hpath}", f"g: {gpath}"]
    _emit(args, record, lines)
    return EXIT_OK


def cmd_count(args):
    k, ell, n = args.k, args.l, args.n
    try:
        if args.p is not None:
            quantity, index, value = "G", args.p, count_G(k, ell, n, args.p)
        elif args.r is not None:
            quantity, index, value = "U", args.r, count_U(k, ell, n, args.r)
        elif args.m is not None:
            quantity, index, value = "Q", args.m, count_Q(k, ell, n, args.m)
        else:
            row = count_table(k, ell, n)[-1] if n >= 2 else None
            if row is None:
                raise UnsupportedParameters("n must be >= 2")
            record = {"k": k, "ell": ell, "n": n, "U": row[1], "G": list(row[2:])}
            cells = [f"U={_fmt_int(row[1], args.exact)}"]
            cells += [f"G{p}={_fmt_int(v, args.exact)}" for p, v in enumerate(row[2:], 1)]
            _emit(args, record, ["  ".join(cells)])
            return EXIT_OK
    except UnsupportedParameters as exc:
        raise _Fail(EXIT_COUNT, str(exc)) from None
    record = {"quantity": quantity, "k": k, "ell": ell, "n": n, "index": index, "value": value}
    _emit(args, record, [_fmt_int(value, args.exact)])
    return EXIT_OK


def cmd_table(args):
    try:
        rows = count_table(args.k, args.l, args.nmax)
    except UnsupportedParameters as exc:
        raise _Fail(EXIT_COUNT, str(exc)) from None
    width = max(args.nmax, 1)
    header = ["k", "ell", "n", "U_nn"] + [f"G_n{p}" for p in range(1, width + 1)]
    body = []
    for n, U, *G in rows:
        cells = [str(args.k), str(args.l), str(n), _fmt_int(U, args.exact)]
        cells += [_fmt_int(G[p - 1], args.exact) if p <= n else "---" for p in range(1, width + 1)]
        body.append(cells)
    widths = [max(len(r[c]) for r in [header] + body) for c in range(len(header))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in [header] + body]
    record = {"k": args.k, "ell": args.l, "rows": [{"n": n, "U": U, "G": G} for n, U, *G in rows]}
    _emit(args, record, lines)
    return EXIT_OK


def cmd_verify(args):
    try:
        c = census(
            args.k,
            args.l,
            args.n,
            samples=args.samples,
            seed=args.seed,
            budget=args.budget,
            workers=args.workers,
        )
    except BudgetExceeded as exc:
        raise _Fail(EXIT_BUDGET, f"{exc}; pass --samples N to sample instead") from None
    rep = compare(c)
    lines = [
        f"census k={c.k} ell={c.ell} n={c.n} mode={c.mode} total={c.total}",
        "ess: " + " ".join(f"{r}:{c.ess[r]}" for r in sorted(c.ess)),
        "gap: " + " ".join(f"{p}:{c.gap[p]}" for p in sorted(c.gap)),
    ]
    lines += [f"MISMATCH {q}[{i}]: observed {o}, expected {e}" for q, i, o, e in rep.mismatches]
    lines.append("PASS" if rep.ok else "FAIL")
    _emit(args, rep.as_record(), lines)
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_selftest(args):
    from .counting import count_G as G

    checks = []
    checks.append(("table k=l=2", [r[1:] for r in count_table(2, 2, 5)] == [
        (10, 4, 6), (218, 208, 10, 0), (64594, 64592, 2, 0, 0), (4294642034, 4294642032, 2, 0, 0, 0)]))
    checks.append(("G^{33}_{32}", G(3, 3, 3, 2) == 139896))
    checks.append(("G^{44}_{52}", G(4, 4, 5, 2) == 65532))
    for kln in [(2, 2, 3), (3, 2, 2), (2, 3, 2)]:
        checks.append((f"census {kln}", compare(census(*kln)).ok))
    lines = [f"{'PASS' if ok else 'FAIL'}  {name}" for name, ok in checks]
    ok = all(ok for _, ok in checks)
    _emit(args, {"ok": ok, "checks": {name: ok for name, ok in checks}}, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


# -- parser ------------------------------------------------------------------


def _add_globals(p, top: bool):
    dflt = (lambda v: v) if top else (lambda v: argparse.SUPPRESS)
    p.add_argument("--format", choices=("text", "json"), default=dflt("text"))
    p.add_argument("--normalize", action="store_true", default=dflt(False),
                   help="drop inessential variables before analysis")
    p.add_argument("--budget", type=int, default=dflt(None),
                   help="max tables for exhaustive sweeps (env GAPKIT_BUDGET)")
    p.add_argument("--seed", type=int, default=dflt(DEFAULT_SEED))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gapkit", description="Arity gap analysis of finite functions.")
    _add_globals(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="essential arity, quasi-arity and gap of a function file")
    p.add_argument("fnfile")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("decompose", help="unique decomposition f = h + g")
    p.add_argument("fnfile")
    p.add_argument("--group", required=True, help="cyclic:m1xm2x..., boolean:d or table:<path>")
    p.add_argument("--outdir", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("count", help="exact counting formulas")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--p", type=int, help="arity gap (G)")
    which.add_argument("--r", type=int, help="essential arity (U)")
    which.add_argument("--m", type=int, help="quasi-arity (Q)")
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="U_nn and G_np for 2 <= n <= nmax")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="brute-force census against the formulas")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="quick consistency checks")
    p.set_defaults(func=cmd_selftest)

    for action in sub.choices.values():
        _add_globals(action, top=False)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"gapkit: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
