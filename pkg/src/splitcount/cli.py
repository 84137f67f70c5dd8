"""Command-line front end: compute any count by any route and cross-check.

Every computational subcommand prints a single JSON object (or the bare
value with --plain).  Exit codes: 0 on success with agreement, 1 on usage
errors, 2 when independently computed values disagree -- a disagreement is
a defect of the artifact and is never swallowed.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys
import time

from . import closedform, oracle, q1analog, recursion, verify
from .errors import SplitcountError
from .fields import FieldSpec, ModulusPoly, find_irreducible
from .labels import format_label, parse_label, splitting_label
from .qarith import QPoly, evaluate

PROVENANCE_ORACLE = "oracle"
PROVENANCE_RECURSION = "recursion"
PROVENANCE_CLOSED = "closed-form"

_VIA_KEYS = {"oracle": PROVENANCE_ORACLE, "recursion": PROVENANCE_RECURSION, "closed": PROVENANCE_CLOSED}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _field_from_args(args) -> FieldSpec:
    base = tuple(int(t) for t in args.base_poly.split(",")) if args.base_poly else None
    return FieldSpec(args.q, base_poly=base)


def _modulus(field: FieldSpec, N: int, args) -> ModulusPoly:
    if getattr(args, "modulus", None):
        return ModulusPoly.parse(field, args.modulus)
    return find_irreducible(field, N, getattr(args, "modulus_index", 0))


def _parse_via(text: str, allowed: tuple[str, ...]) -> list[str]:
    vias = [v.strip() for v in text.split(",") if v.strip()]
    for v in vias:
        if v not in allowed:
            raise _UsageError(f"--via accepts {','.join(allowed)}; got {v!r}")
    if not vias:
        raise _UsageError("--via must name at least one route")
    return vias


def _emit(args, command: str, params: dict, results: list[tuple[str, object]], t0: float) -> int:
    items = []
    normalized = []
    for prov, value in results:
        if isinstance(value, QPoly):
            items.append({"provenance": prov, "coefficients": list(value.coeffs)})
            normalized.append(("poly", value.coeffs))
        else:
            items.append({"provenance": prov, "count": str(value)})
            normalized.append(("int", value))
    agreement = len(set(normalized)) <= 1
    envelope = {
        "command": command,
        "parameters": params,
        "results": items,
        "provenances": [p for p, _ in results],
        "agreement": agreement,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    if agreement and results:
        kind, val = normalized[0]
        if kind == "int":
            envelope["count"] = str(val)
        else:
            envelope["coefficients"] = list(val)
    if args.plain:
        if results:
            kind, val = normalized[0]
            print(val if kind == "int" else " ".join(str(c) for c in val))
    else:
        print(json.dumps(envelope))
    return 0 if agreement else 2


def _symbolic_or_eval(poly: QPoly, symbolic: bool, q: int | None):
    return poly if symbolic else evaluate(poly, q)


def _cmd_count(args) -> int:
    t0 = time.perf_counter()
    field = _field_from_args(args)
    N = args.N if args.N is not None else args.m * args.n
    vias = _parse_via(args.via, ("oracle", "recursion", "closed"))
    if args.symbolic and "oracle" in vias:
        raise _UsageError("--symbolic cannot be combined with the oracle route")
    f = _modulus(field, N, args)
    label = splitting_label(args.m, args.n)
    results = []
    for via in vias:
        if via == "oracle":
            results.append((PROVENANCE_ORACLE, oracle.count_splitting(field, f, args.m, args.n).count))
        elif via == "recursion":
            poly = recursion.count_recursive(label, N)
            results.append((PROVENANCE_RECURSION, _symbolic_or_eval(poly, args.symbolic, field.q)))
        else:
            poly = closedform.splitting_count_formula(args.m, args.n, N)
            results.append((PROVENANCE_CLOSED, _symbolic_or_eval(poly, args.symbolic, field.q)))
    params = {"q": field.q, "m": args.m, "n": args.n, "N": N, "modulus": f.text(), "via": vias}
    return _emit(args, "count", params, results, t0)


def _cmd_pair(args) -> int:
    t0 = time.perf_counter()
    field = _field_from_args(args)
    vias = _parse_via(args.via, ("oracle", "recursion", "closed"))
    if args.symbolic and "oracle" in vias:
        raise _UsageError("--symbolic cannot be combined with the oracle route")
    f = _modulus(field, args.N, args)
    results = []
    for via in vias:
        if via == "oracle":
            results.append((PROVENANCE_ORACLE, oracle.count_pair_class(field, f, args.a, args.b).count))
        elif via == "recursion":
            poly = recursion.count_recursive(((args.a, args.b),), args.N)
            results.append((PROVENANCE_RECURSION, _symbolic_or_eval(poly, args.symbolic, field.q)))
        else:
            poly = closedform.pair_class_formula(args.a, args.b, args.N)
            results.append((PROVENANCE_CLOSED, _symbolic_or_eval(poly, args.symbolic, field.q)))
    params = {"q": field.q, "N": args.N, "a": args.a, "b": args.b, "modulus": f.text(), "via": vias}
    return _emit(args, "pair", params, results, t0)


def _cmd_flag(args) -> int:
    t0 = time.perf_counter()
    label = parse_label(args.tuple)
    vias = _parse_via(args.via, ("oracle", "recursion", "closed"))
    symbolic = args.symbolic
    if symbolic and "oracle" in vias:
        raise _UsageError("--symbolic cannot be combined with the oracle route")
    if args.q is None and not symbolic:
        raise _UsageError("provide --q for evaluated counts or --symbolic")
    results = []
    params = {"N": args.N, "tuple": format_label(label), "via": vias}
    field = None
    if args.q is not None:
        field = _field_from_args(args)
        params["q"] = field.q
    for via in vias:
        if via == "oracle":
            f = _modulus(field, args.N, args)
            params["modulus"] = f.text()
            results.append((PROVENANCE_ORACLE, oracle.count_flag_tuple(field, f, label).count))
        elif via == "recursion":
            poly = recursion.count_recursive(label, args.N)
            results.append((PROVENANCE_RECURSION, _symbolic_or_eval(poly, symbolic, field.q if field else None)))
        else:
            poly = closedform.flag_count_formula(label, args.N)
            results.append((PROVENANCE_CLOSED, _symbolic_or_eval(poly, symbolic, field.q if field else None)))
    return _emit(args, "flag", params, results, t0)


def _cmd_angle(args) -> int:
    t0 = time.perf_counter()
    label = parse_label(args.tuple)
    vias = _parse_via(args.via, ("oracle", "closed"))
    symbolic = args.symbolic
    if symbolic and "oracle" in vias:
        raise _UsageError("--symbolic cannot be combined with the oracle route")
    if args.q is None and not symbolic:
        raise _UsageError("provide --q for evaluated counts or --symbolic")
    results = []
    params = {"N": args.N, "tuple": format_label(label), "via": vias}
    field = None
    if args.q is not None:
        field = _field_from_args(args)
        params["q"] = field.q
    for via in vias:
        if via == "oracle":
            f = _modulus(field, args.N, args)
            params["modulus"] = f.text()
            results.append((PROVENANCE_ORACLE, oracle.count_angle_tuple(field, f, label).count))
        else:
            poly = closedform.angle_count_formula(label, args.N)
            results.append((PROVENANCE_CLOSED, _symbolic_or_eval(poly, symbolic, field.q if field else None)))
    return _emit(args, "angle", params, results, t0)


def _cmd_recursion(args) -> int:
    t0 = time.perf_counter()
    label = parse_label(args.tuple)
    poly = recursion.count_recursive(label, args.N)
    symbolic = args.symbolic or args.q is None
    value = poly if symbolic else evaluate(poly, args.q)
    params = {"N": args.N, "tuple": format_label(label)}
    if not symbolic:
        params["q"] = args.q
    return _emit(args, "recursion", params, [(PROVENANCE_RECURSION, value)], t0)


def _cmd_closed(args) -> int:
    t0 = time.perf_counter()
    label = parse_label(args.tuple)
    poly = closedform.flag_count_formula(label, args.N)
    symbolic = args.symbolic or args.q is None
    value = poly if symbolic else evaluate(poly, args.q)
    params = {"N": args.N, "tuple": format_label(label)}
    if not symbolic:
        params["q"] = args.q
    return _emit(args, "closed", params, [(PROVENANCE_CLOSED, value)], t0)


def _cmd_identity(args) -> int:
    t0 = time.perf_counter()
    check = closedform.chu_vandermonde_first if args.lemma == 1 else closedform.chu_vandermonde_second
    single = [v is not None for v in (args.A, args.B, args.C, args.D)]
    if any(single) and not all(single):
        raise _UsageError("provide all of --A --B --C --D or none")
    if all(single):
        rep = check(args.A, args.B, args.C, args.D)
        envelope = {
            "command": "identity",
            "parameters": {"lemma": args.lemma, **rep.parameters},
            "lhs": list(rep.lhs.coeffs),
            "rhs": list(rep.rhs.coeffs),
            "agreement": rep.equal,
            "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
        }
        print(json.dumps(envelope))
        return 0 if rep.equal else 2
    name = "first" if args.lemma == 1 else "second"
    report = verify.run_suite("identities", max_a=args.max_A)
    cases = [(tag, ok) for tag, ok in report.cases if tag.startswith(name)]
    failures = [tag for tag, ok in cases if not ok]
    envelope = {
        "command": "identity",
        "parameters": {"lemma": args.lemma, "max_A": args.max_A},
        "cases": len(cases),
        "failures": failures,
        "agreement": not failures,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    print(json.dumps(envelope))
    return 0 if not failures else 2


def _cmd_q1(args) -> int:
    t0 = time.perf_counter()
    have_mn = args.m is not None and args.n is not None
    have_pair = args.N is not None and args.a is not None and args.b is not None
    have_tuple = args.N is not None and args.tuple is not None
    results: list[tuple[str, object]] = []
    if have_mn:
        got = q1analog.count_splitting_subsets(args.m, args.n)
        results.append((PROVENANCE_ORACLE, got))
        results.append((PROVENANCE_CLOSED, args.n))
        params = {"m": args.m, "n": args.n}
    elif have_pair:
        got = q1analog.count_pair_class_sets(args.a, args.b, args.N)
        f1, f2 = q1analog.pair_class_set_formulas(args.a, args.b, args.N)
        results.append((PROVENANCE_ORACLE, got))
        results.append((PROVENANCE_CLOSED, f1))
        results.append((PROVENANCE_CLOSED, f2))
        params = {"N": args.N, "a": args.a, "b": args.b}
    elif have_tuple:
        label = parse_label(args.tuple)
        got = q1analog.count_flag_subsets(label, args.N)
        want = evaluate(closedform.flag_count_formula(label, args.N), 1)
        results.append((PROVENANCE_ORACLE, got))
        results.append((PROVENANCE_CLOSED, want))
        params = {"N": args.N, "tuple": format_label(label)}
    else:
        raise _UsageError("q1 needs --m/--n, or --N/--a/--b, or --N/--tuple")
    return _emit(args, "q1", params, results, t0)


def _cmd_bijection(args) -> int:
    t0 = time.perf_counter()
    field = _field_from_args(args)
    f = _modulus(field, args.N, args)
    ks = [args.k] if args.k is not None else list(range(2, args.N))
    reports = []
    all_ok = True
    for k in ks:
        rep = oracle.check_pair_class_bijection(field, f, k)
        reports.append(
            {
                "k": k,
                "domain_size": rep.domain_size,
                "codomain_size": rep.codomain_size,
                "well_defined": rep.well_defined,
                "injective": rep.injective,
                "surjective": rep.surjective,
                "ok": rep.ok,
            }
        )
        all_ok = all_ok and rep.ok and rep.domain_size == rep.codomain_size
    envelope = {
        "command": "bijection",
        "parameters": {"q": field.q, "N": args.N, "modulus": f.text()},
        "reports": reports,
        "agreement": all_ok,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    print(json.dumps(envelope))
    return 0 if all_ok else 2


def _cmd_verify(args) -> int:
    overrides = {
        "max_n": args.max_N,
        "max_a": args.max_A,
        "max_r": args.max_r,
        "max_mn": args.max_mn,
        "moduli": args.moduli,
        "qs": tuple(int(t) for t in args.qs.split(",")) if args.qs else None,
    }
    fn = verify._SUITES.get(args.suite)
    if fn is None:
        raise _UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(verify.SUITE_NAMES)}")
    sig = inspect.signature(fn)
    kwargs = {k: v for k, v in overrides.items() if v is not None and k in sig.parameters}
    report = verify.run_suite(args.suite, **kwargs)
    for tag, ok in report.cases:
        print(f"{'ok  ' if ok else 'FAIL'} {tag}")
    print(report.summary())
    return 0 if report.ok else 2


def _build_parser() -> _Parser:
    parser = _Parser(prog="splitcount", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, q_required=True, modulus=True):
        p.add_argument("--q", type=int, required=q_required, default=None,
                       help="field order (prime or prime power)")
        p.add_argument("--base-poly", default=None,
                       help="base modulus over F_p for prime-power q, constant term first")
        if modulus:
            p.add_argument("--modulus-index", type=int, default=0,
                           help="pick the k-th irreducible modulus (default 0)")
            p.add_argument("--modulus", default=None,
                           help="explicit modulus, comma-separated coefficients, constant first")
        p.add_argument("--plain", action="store_true", help="print the bare value only")
        p.add_argument("--symbolic", action="store_true",
                       help="report polynomial coefficients in q instead of evaluating")

    p = sub.add_parser("count", help="splitting-subspace count")
    add_common(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--N", type=int, default=None, help="ambient dimension (default m*n)")
    p.add_argument("--via", default="oracle,recursion,closed")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("pair", help="dimension/defect class size |(a,b)|")
    add_common(p)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--via", default="oracle,recursion,closed")
    p.set_defaults(handler=_cmd_pair)

    p = sub.add_parser("flag", help="chain-label count |[(a11,a12),...]|")
    add_common(p, q_required=False)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--tuple", required=True, help='label, e.g. "(3,1),(1,0)"')
    p.add_argument("--via", default="oracle,recursion,closed")
    p.set_defaults(handler=_cmd_flag)

    p = sub.add_parser("angle", help="linked-pair chain count |<[a11,a12],...>|")
    add_common(p, q_required=False)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--tuple", required=True)
    p.add_argument("--via", default="oracle,closed")
    p.set_defaults(handler=_cmd_angle)

    p = sub.add_parser("recursion", help="recursion route only")
    add_common(p, q_required=False, modulus=False)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--tuple", required=True)
    p.set_defaults(handler=_cmd_recursion)

    p = sub.add_parser("closed", help="closed-form route only")
    add_common(p, q_required=False, modulus=False)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--tuple", required=True)
    p.set_defaults(handler=_cmd_closed)

    p = sub.add_parser("identity", help="q-Chu-Vandermonde identity checks")
    p.add_argument("--lemma", type=int, choices=(1, 2), required=True)
    p.add_argument("--max-A", type=int, default=10)
    p.add_argument("--A", type=int, default=None)
    p.add_argument("--B", type=int, default=None)
    p.add_argument("--C", type=int, default=None)
    p.add_argument("--D", type=int, default=None)
    p.set_defaults(handler=_cmd_identity)

    p = sub.add_parser("q1", help="cyclic-shift subset analogue at q = 1")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--N", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--tuple", default=None)
    p.add_argument("--plain", action="store_true")
    p.set_defaults(handler=_cmd_q1)

    p = sub.add_parser("bijection", help="check W -> W + sW between adjacent classes")
    add_common(p)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.set_defaults(handler=_cmd_bijection)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("--suite", required=True, choices=verify.SUITE_NAMES)
    p.add_argument("--max-N", dest="max_N", type=int, default=None)
    p.add_argument("--max-A", dest="max_A", type=int, default=None)
    p.add_argument("--max-r", dest="max_r", type=int, default=None)
    p.add_argument("--max-mn", dest="max_mn", type=int, default=None)
    p.add_argument("--moduli", type=int, default=None)
    p.add_argument("--qs", default=None, help='comma-separated field orders, e.g. "2,3"')
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SplitcountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
