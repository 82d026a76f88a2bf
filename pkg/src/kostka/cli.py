"""Command-line front end: compute, enumerate, table, verify.

Exit codes: 0 success, 1 bad input or exceeded cap, 2 verification failure
or disagreement between methods.  Counts are serialized as decimal strings
in JSON output so arbitrarily large values survive parsers with small
integer types.  The environment variable KOSTKA_PERM_CAP, when set,
overrides the --perm-cap flag.
"""

import argparse
import json
import os
import sys

from . import core, counting, multinomials, tableaux
from .core import DEFAULT_PERM_CAP
from .counting import METHODS
from .errors import KostkaError


class _CliError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _CliError(message)


def _int_list(text):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated list of integers, got {text!r}"
        ) from None


def _fmt_seq(seq):
    return ",".join(str(x) for x in seq)


def _perm_cap(args):
    raw = os.environ.get("KOSTKA_PERM_CAP")
    cap = int(raw) if raw is not None else args.perm_cap
    if cap < 1:
        raise ValueError(f"permutation cap must be >= 1, got {cap}")
    return cap


def _result_payload(result):
    return {
        "alpha": list(result.alpha),
        "beta": list(result.beta),
        "method": result.method,
        "value": str(result.value),
        "terms_evaluated": result.terms_evaluated,
    }


def cmd_compute(args):
    cap = _perm_cap(args)
    names = list(METHODS) if args.method == "all" else [args.method]
    results = [counting.kostka(args.alpha, args.beta, method=name, perm_cap=cap) for name in names]
    if args.format == "json":
        if args.method == "all":
            print(json.dumps([_result_payload(r) for r in results]))
        else:
            print(json.dumps(_result_payload(results[0])))
    elif args.format == "csv":
        print("alpha|beta|method|value")
        for r in results:
            print(f"{_fmt_seq(r.alpha)}|{_fmt_seq(r.beta)}|{r.method}|{r.value}")
    else:
        if args.method == "all":
            for r in results:
                print(f"{r.method} {r.value}")
        else:
            print(results[0].value)
    if len({r.value for r in results}) > 1:
        print("error: methods disagree", file=sys.stderr)
        return 2
    return 0


def cmd_enumerate(args):
    shape = core.as_partition(args.alpha)
    content = core.normalize_content(args.beta)
    ts = tableaux.enumerate_ssyt(shape, content)
    if args.format == "json":
        payload = {
            "alpha": list(shape),
            "beta": list(content),
            "count": str(len(ts)),
            "tableaux": [[list(row) for row in t] for t in ts],
        }
        print(json.dumps(payload))
    elif args.format == "csv":
        print("alpha|beta|index|tableau")
        for idx, t in enumerate(ts):
            flat = "/".join(" ".join(str(v) for v in row) for row in t)
            print(f"{_fmt_seq(shape)}|{_fmt_seq(content)}|{idx}|{flat}")
    else:
        print(len(ts))
        blocks = ["\n".join(" ".join(str(v) for v in row) for row in t) for t in ts]
        if blocks:
            print("\n\n".join(blocks))
    return 0


def cmd_table(args):
    size = args.max_n + 1
    table = multinomials.mu_table(args.beta, size, size)
    if args.format == "json":
        print(json.dumps([[str(v) for v in row] for row in table]))
    elif args.format == "csv":
        for row in table:
            print(",".join(str(v) for v in row))
    else:
        widths = [max(len(str(table[i][j])) for i in range(size)) for j in range(size)]
        for row in table:
            print(" ".join(str(v).rjust(w) for v, w in zip(row, widths)))
    return 0


def _sweep_deltas(m, max_len):
    """Canonical nonnegative tuples of length <= max_len with weight m."""
    if m == 0:
        yield ()
        return
    for length in range(1, max_len + 1):
        for d in core.bounded_compositions(m, (m,) * length):
            if d[-1] > 0:
                yield d


def _suite_mu_oracle(max_n):
    checks = failures = 0
    cache = {}
    for m in range(max_n + 1):
        for rho in core.contents(m):
            for d in _sweep_deltas(m, 3):
                checks += 1
                if multinomials.mu(rho, d, cache) != multinomials.mu_matrix_oracle(rho, d):
                    failures += 1
    return {"name": "mu-oracle", "checks": checks, "failures": failures}


def _suite_threeway(max_n, perm_cap):
    checks = failures = 0
    for n in range(max_n + 1):
        for b in core.contents(n):
            cache = {}
            memo = {}
            for a in core.partitions(n):
                det = counting.kostka_det(a, b, perm_cap=perm_cap, mu_cache=cache)
                rec = counting.kostka_rec(a, b, memo=memo)
                cnt = tableaux.count_ssyt(a, b)
                checks += 1
                if not det == rec == cnt:
                    failures += 1
    return {"name": "kostka-threeway", "checks": checks, "failures": failures}


def _suite_standard(max_n, perm_cap):
    checks = failures = 0
    for n in range(max_n + 1):
        eps = (1,) * n
        for a in core.partitions(n):
            fd = tableaux.f_det(a, perm_cap)
            fh = tableaux.f_hook(a)
            cnt = tableaux.count_ssyt(a, eps)
            kv = counting.kostka(a, eps, method="det", perm_cap=perm_cap).value
            checks += 1
            if not fd == fh == cnt == kv:
                failures += 1
    return {"name": "standard-count", "checks": checks, "failures": failures}


def _suite_gordon(p, q):
    agree = counting.gordon_product(p, q) == counting.gordon_sum(p, q)
    return {"name": "gordon", "checks": 1, "failures": 0 if agree else 1}


def cmd_verify(args):
    cap = _perm_cap(args)
    suites = [
        _suite_mu_oracle(args.max_n),
        _suite_threeway(args.max_n, cap),
        _suite_standard(args.max_n, cap),
        _suite_gordon(args.p, args.q),
    ]
    ok = all(s["failures"] == 0 for s in suites)
    if args.format == "json":
        print(json.dumps({"ok": ok, "suites": suites}))
    else:
        for s in suites:
            if s["failures"]:
                print(f"FAIL {s['name']}: {s['failures']} of {s['checks']} checks failed")
            else:
                print(f"ok   {s['name']}: {s['checks']} checks")
    return 0 if ok else 2


def _add_format(sub):
    sub.add_argument("--format", choices=["text", "json", "csv"], default="text")


def _add_perm_cap(sub):
    sub.add_argument(
        "--perm-cap",
        type=int,
        default=DEFAULT_PERM_CAP,
        help=f"largest shape length the permutation sum accepts (default {DEFAULT_PERM_CAP})",
    )


def _build_parser():
    parser = _Parser(prog="kostka", description="Exact Kostka number computations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("compute", help="compute one Kostka number")
    c.add_argument("--alpha", type=_int_list, required=True, help="shape, e.g. 2,1")
    c.add_argument("--beta", type=_int_list, required=True, help="content, e.g. 1,1,1")
    c.add_argument("--method", choices=["det", "rec", "oracle", "all"], default="det")
    _add_format(c)
    _add_perm_cap(c)
    c.set_defaults(func=cmd_compute)

    e = sub.add_parser("enumerate", help="list all tableaux of a shape and content")
    e.add_argument("--alpha", type=_int_list, required=True, help="shape, e.g. 2,1")
    e.add_argument("--beta", type=_int_list, required=True, help="content, e.g. 1,1,1")
    _add_format(e)
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("table", help="print the mu table of a content")
    t.add_argument("--beta", type=_int_list, required=True, help="row-sum content, e.g. 3,2,3,2")
    t.add_argument(
        "--max-n",
        type=int,
        default=8,
        help="largest coordinate; the table covers (0,0) up to (max-n, max-n)",
    )
    _add_format(t)
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run the cross-validation sweeps")
    v.add_argument("--max-n", type=int, default=6, help="largest weight swept (default 6)")
    v.add_argument("--p", type=int, default=2, help="value bound for the aggregate identity")
    v.add_argument("--q", type=int, default=2, help="column bound for the aggregate identity")
    _add_format(v)
    _add_perm_cap(v)
    v.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except (KostkaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
