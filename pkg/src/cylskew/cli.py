"""Command-line front end.

Payloads go to stdout and are deterministic; elapsed time and progress go
to stderr.  Exit status: 0 success, 1 verification failure or unexpected
counterexample, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import cylindric as cyl
from . import posets
from .partitions import parse_partition
from .qsym import is_symmetric, m_to_f
from .symfunc import (format_symfunc, is_positive, monomial_to_schur,
                      schur_to_fundamental, schur_to_monomial)


class UsageError(Exception):
    pass


def _shape(text):
    try:
        return cyl.parse_shape(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _partition(text):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _pmap(func, items, workers):
    """Ordered map, fanned out over processes when ``workers > 1``."""
    if workers and workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(func, items, chunksize=16))
    return [func(x) for x in items]


def _progress(msg):
    print(msg, file=sys.stderr, flush=True)


# single-shape commands -------------------------------------------------

def _in_basis(f, basis):
    if basis == "schur":
        return format_symfunc(f)
    if basis == "monomial":
        return format_symfunc(schur_to_monomial(f))
    if basis == "F":
        return str(schur_to_fundamental(f))
    raise UsageError(f"unknown basis {basis!r}")


def cmd_expand(args):
    c = _shape(args.shape)
    if args.method == "gk":
        terms = cyl.expand_gk(c)
        f = cyl.gk_to_schur(terms)
        skew = [f"{'+' if s > 0 else '-'} {t}" for s, t in terms]
        return True, {"shape": cyl.format_shape(c), "gk_terms": skew,
                      "expansion": _in_basis(f, args.basis)}
    f = cyl.expand_ribbons(c)
    return True, {"shape": cyl.format_shape(c), "expansion": _in_basis(f, args.basis)}


def cmd_oracle(args):
    c = _shape(args.shape)
    m = cyl.oracle_monomial(c, args.bound)
    f = cyl.expand_ribbons(c)
    agree = monomial_to_schur(m) == f
    return agree, {"shape": cyl.format_shape(c), "monomial": format_symfunc(m),
                   "agrees_with_expansion": agree}


def cmd_gw(args):
    if not 0 < args.k < args.n:
        raise UsageError("need 0 < k < n")
    v = cyl.gw_invariant(_partition(args.lam), args.d, _partition(args.mu),
                         _partition(args.nu), args.k, args.n)
    return True, {"value": v}


def cmd_positivity(args):
    c = _shape(args.shape)
    f = cyl.expand_ribbons(c)
    skew = cyl.is_skew(c)
    schur_pos = is_positive(f)
    f_pos = is_positive(schur_to_fundamental(f))
    out = {"shape": cyl.format_shape(c), "skew": skew, "schur_positive": schur_pos,
           "F_positive": f_pos, "toric": cyl.is_toric(c),
           "min_negative_vars": cyl.min_negative_vars(c)}
    return schur_pos == skew == f_pos, out


def cmd_hook(args):
    if args.k < 1 or args.nk < 1:
        raise UsageError("need k, n-k >= 1")
    h = cyl.hook_expansion(args.k, args.nk)
    agree = h == cyl.expand_ribbons(cyl.hook_shape(args.k, args.nk))
    return agree, {"expansion": format_symfunc(h), "agrees_with_shape": agree}


def cmd_decompose(args):
    c = _shape(args.shape)
    try:
        box, ok = cyl.ribbon_decomposition(c)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return ok, {"shape": cyl.format_shape(c), "box_part": format_symfunc(box),
                "tail": format_symfunc(cyl.hook_expansion(c.k, c.nk)), "ok": ok}


def cmd_cylexpand(args):
    c = _shape(args.shape)
    res = cyl.cyl_schur_expand(c)
    out = {"shape": cyl.format_shape(c), "expansion": res.text() if res.ok else None}
    if not res.ok:
        out["failure"] = res.failure
    return res.ok, out


def cmd_poset_k(args):
    try:
        if args.file:
            p = posets.read_poset(args.file)
        else:
            p = posets.parse_poset(args.poset.replace(";", "\n"))
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    k = posets.k_po(p)
    out = {"poset": posets.format_poset(p).splitlines(), "M": str(k), "F": str(m_to_f(k)),
           "cyclic": posets.has_cycle(p), "symmetric": is_symmetric(k),
           "cylindric_components": posets.recognize_cylindric_components(p)}
    return True, out


def _inline(p):
    return "; ".join(posets.format_poset(p).splitlines())


# verifications ---------------------------------------------------------

def _check_gk(c):
    return None if cyl.gk_to_schur(cyl.expand_gk(c)) == cyl.expand_ribbons(c) else cyl.format_shape(c)


def _check_positivity(c):
    f = cyl.expand_ribbons(c)
    skew = cyl.is_skew(c)
    if is_positive(f) != skew or is_positive(schur_to_fundamental(f)) != skew:
        return cyl.format_shape(c)
    return None


def _check_postnikov(c):
    if c.size() > cyl.DEFAULT_ORACLE_BOUND:
        return None
    return None if cyl.postnikov_check(c) else cyl.format_shape(c)


def _stanley_failures(n):
    bad = []
    for p in posets.enum_oriented_posets(n, "acyclic"):
        if is_symmetric(posets.k_po(p)) != posets.is_skew_shape_poset(p):
            bad.append(_inline(p))
    return bad


def cmd_verify(args):
    m, w = args.max, args.parallel
    if args.what == "errorterm":
        shapes = list(cyl.iter_shapes_box(m, m, m, d_min=1))
        failures = [x for x in _pmap(cyl.errorterm_failure, shapes, w) if x]
        checked = len(shapes)
    elif args.what == "gk-equivalence":
        shapes = list(cyl.iter_shapes_box(m, m, 2))
        failures = [x for x in _pmap(_check_gk, shapes, w) if x]
        checked = len(shapes)
    elif args.what == "postnikov":
        shapes = list(cyl.iter_shapes_box(m, m, 2))
        failures = [x for x in _pmap(_check_postnikov, shapes, w) if x]
        checked = len(shapes)
    elif args.what == "positivity":
        shapes = [c for k in range(1, m + 1) for nk in range(1, m + 1)
                  for c in cyl.iter_shapes(k, nk, args.max_cells)]
        failures = [x for x in _pmap(_check_positivity, shapes, w) if x]
        checked = len(shapes)
    else:
        sizes = list(range(1, args.max_elements + 1))
        failures = [x for xs in _pmap(_stanley_failures, sizes, w) for x in xs]
        checked = len(sizes)
    return not failures, {"checked": checked, "failures": failures}


def false_statement_counterexamples(n, first=False):
    """Oriented posets on ``n`` elements whose generating function is symmetric
    exactly when some component fails to embed in a cylinder."""
    out = []
    for p in posets.enum_oriented_posets(n, "all"):
        if is_symmetric(posets.k_po(p)) != posets.recognize_cylindric_components(p):
            out.append(p)
            if first:
                break
    return out


def _false_statement(job):
    n, first = job
    return [_inline(p) for p in false_statement_counterexamples(n, first)]


def _f_positive_cycles(n):
    out = []
    for p in posets.enum_oriented_posets(n, "cyclic"):
        f = m_to_f(posets.k_po(p))
        if is_positive(f):
            out.append({"poset": _inline(p), "F": str(f)})
    return out


def cmd_search(args):
    sizes = list(range(1, args.max_elements + 1))
    if args.what == "false-statement":
        found = []
        for n, hits in zip(sizes, _pmap(_false_statement, [(n, args.first) for n in sizes],
                                       args.parallel)):
            _progress(f"{n} elements: {len(hits)} counterexamples")
            found.extend(hits)
        # counterexamples are only expected when the user asks for them
        return args.expect or not found, {"counterexamples": found}
    found = []
    for n, hits in zip(sizes, _pmap(_f_positive_cycles, sizes, args.parallel)):
        _progress(f"{n} elements: {len(hits)} F-positive cyclic posets")
        found.extend(hits)
    return True, {"f_positive_cycles": found}


# plumbing --------------------------------------------------------------

def _basis_arg(p):
    p.add_argument("--basis", choices=["schur", "monomial", "F"], default="schur")


def build_parser():
    ap = argparse.ArgumentParser(prog="cylskew",
                                 description="Cylindric skew Schur functions and oriented posets.")
    ap.add_argument("--json", action="store_true", help="emit a JSON report")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="Schur expansion of a cylindric shape")
    p.add_argument("--shape", required=True)
    p.add_argument("--method", choices=["ribbons", "gk"], default="ribbons")
    _basis_arg(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("oracle", help="brute-force tableau count")
    p.add_argument("--shape", required=True)
    p.add_argument("--bound", type=int, default=cyl.DEFAULT_ORACLE_BOUND)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gw", help="Gromov-Witten invariant")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lam", default="")
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--mu", default="")
    p.add_argument("--nu", default="")
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("positivity", help="Schur and F positivity against skewness")
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_positivity)

    p = sub.add_parser("hook", help="cylindric hook expansion")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--nk", type=int, required=True)
    p.set_defaults(func=cmd_hook)

    p = sub.add_parser("decompose", help="split a cylindric ribbon")
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("cylexpand", help="expand in cylindric Schur functions")
    p.add_argument("--shape", required=True)
    p.set_defaults(func=cmd_cylexpand)

    p = sub.add_parser("verify", help="bounded verification sweeps")
    p.add_argument("what", choices=["errorterm", "postnikov", "positivity", "stanley",
                                    "gk-equivalence"])
    p.add_argument("--max", type=int, default=3, help="bound on k, n-k (and d for errorterm)")
    p.add_argument("--max-cells", type=int, default=10)
    p.add_argument("--max-elements", type=int, default=6)
    p.add_argument("--parallel", type=int, default=1, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive poset searches")
    p.add_argument("what", choices=["false-statement", "f-positive-cycle"])
    p.add_argument("--max-elements", type=int, default=6)
    p.add_argument("--parallel", type=int, default=1, metavar="N")
    p.add_argument("--first", action="store_true",
                   help="stop each size at its first counterexample")
    p.add_argument("--expect", action="store_true",
                   help="counterexamples are expected; do not fail on them")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("poset-k", help="generating function of an oriented poset")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--file")
    src.add_argument("--poset", help='e.g. "n=3; 0 1 strict; 1 2 weak"')
    p.set_defaults(func=cmd_poset_k)
    return ap


def _inputs(args):
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "json")}


def _render(payload):
    lines = []
    for key, val in payload.items():
        if isinstance(val, list):
            lines.append(f"{key}: {len(val)}" if key in ("failures", "counterexamples",
                                                         "f_positive_cycles") else f"{key}:")
            lines.extend(f"  {json.dumps(v) if isinstance(v, dict) else v}" for v in val)
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines)


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        ok, payload = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start
    if args.json:
        report = {"command": args.command, "inputs": _inputs(args),
                  "outcome": "success" if ok else "failure", "payload": payload}
        print(json.dumps(report, sort_keys=True))
    else:
        print(_render(payload))
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
