"""Command-line interface.

Exit codes: 0 success, 1 domain error, 2 parse/usage error, 3 resource cap
exceeded.  Reports go to stdout as human-readable text or, with --json, as
a JSON document whose canonical fields (command, inputs, results) are
reproducible across runs; timings are excluded from that guarantee.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .betti import DEFAULT_GENERATOR_CAP, generation_degree, regularity
from .core import (DomainError, MonomialIdeal, ResourceCapError, Ring,
                   RingMismatchError)
from .decomp import adeg_profile, associated_primes, nilpotency_index
from .fileio import (CacheIntegrityError, ParseError, build_report,
                     format_algebraic, format_rational, parse_ideal_document,
                     parse_lattice_document)
from .newton import bezout_check, integral_closure, rees_valuations
from .sbracket import curve_lower_bound, d_sequence, s_bracket
from .surface import rescale_check, s_invariant_divisorial

CACHE_ENV = "IDEALINV_CACHE"


def _read(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc


def _load_document(args):
    return parse_ideal_document(_read(args.file))


def _pick_ideal(doc, name):
    if name is None:
        if len(doc.order) != 1:
            raise DomainError(
                "document holds several ideals; pick one with --ideal "
                f"(available: {', '.join(doc.order)})")
        name = doc.order[0]
    if name not in doc.ideals:
        raise DomainError(f"no ideal named {name!r} in the document")
    return name, doc.ideals[name]


def _ideal_inputs(name, ideal):
    return {
        "ring": list(ideal.ring.variables),
        "ideals": {name: ideal.gens_strings()},
    }


def _cache_dir(args):
    return args.cache or os.environ.get(CACHE_ENV) or None


def _fmt_witness(w):
    return {
        "chart": w.chart,
        "weights": list(w.weights),
        "valuation": w.valuation,
        "degree": w.degree,
        "bound": format_rational(w.bound),
    }


def _fmt_bracket(bracket):
    return {
        "lower": format_rational(bracket.lower),
        "upper": format_rational(bracket.upper),
        "converged": bracket.converged,
        "tolerance": format_rational(bracket.tolerance),
        "lower_witness": _fmt_witness(bracket.lower_witness),
        "upper_witness": {"p": bracket.upper_witness[0],
                          "d_p": bracket.upper_witness[1]},
    }


# -- command handlers --------------------------------------------------------


def _cmd_info(args):
    started = time.perf_counter()
    doc = _load_document(args)
    name, ideal = _pick_ideal(doc, args.ideal)
    results = {
        "generators": ideal.gens_strings(),
        "is_zero": ideal.is_zero,
        "is_unit": ideal.is_unit,
        "max_generator_degree": ideal.max_gen_degree,
        "radical": ideal.radical().gens_strings(),
        "saturation": ideal.saturate().gens_strings(),
    }
    return build_report("info", _ideal_inputs(name, ideal), results, started)


def _cmd_reg(args):
    started = time.perf_counter()
    doc = _load_document(args)
    name, ideal = _pick_ideal(doc, args.ideal)
    report = regularity(ideal, args.gen_cap)
    i, b = report.witness
    results = {
        "regularity": report.module_regularity,
        "witness": {"index": i,
                    "multidegree": ideal.ring.format_monomial(b)},
        "saturation": report.saturated_input.gens_strings(),
    }
    return build_report("reg", _ideal_inputs(name, ideal), results, started)


def _cmd_gendeg(args):
    started = time.perf_counter()
    doc = _load_document(args)
    name, ideal = _pick_ideal(doc, args.ideal)
    results = {"generation_degree": generation_degree(ideal)}
    return build_report("gendeg", _ideal_inputs(name, ideal), results, started)


def _cmd_power(args):
    started = time.perf_counter()
    doc = _load_document(args)
    name, ideal = _pick_ideal(doc, args.ideal)
    power = ideal.power(args.p)
    results = {"p": args.p, "generators": power.gens_strings(),
               "generator_count": len(power.gens)}
    return build_report("power", _ideal_inputs(name, ideal), results, started)


def _cmd_rees(args):
    started = time.perf_counter()
    doc = _load_document(args)
    name, ideal = _pick_ideal(doc, args.ideal)
    vals = rees_valuations(ideal)
    results = {
        "valuations": [{
            "normal": list(v.normal),
            "coefficient": v.coefficient,
            "center": [ideal.ring.variables[j]
                       for j in sorted(v.center)],
            "center_dimension": v.center_dimension,
        } for v in vals],
        "r": max((v.coefficient for v in vals), default=None),
    }
    return build_report("rees", _ideal_inputs(name, ideal), results, started)


def _cmd_closure(args):
    started = time.perf_counter()
    doc = _load_document(args)
    name, ideal = _pick_ideal(doc, args.ideal)
    closure = integral_closure(ideal)
    results = {"integral_closure": closure.gens_strings(),
               "integrally_closed": closure == ideal}
    return build_report("closure", _ideal_inputs(name, ideal), results,
                        started)


def _cmd_adeg(args):
    started = time.perf_counter()
    doc = _load_document(args)
    name, ideal = _pick_ideal(doc, args.ideal)
    profile = adeg_profile(ideal)
    results = {
        "adeg": {str(k): v for k, v in sorted(profile.by_codim.items())},
        "total": profile.total(),
        "computed_on": profile.computed_on.gens_strings(),
    }
    return build_report("adeg", _ideal_inputs(name, ideal), results, started)


def _cmd_nilp(args):
    started = time.perf_counter()
    doc = _load_document(args)
    name, ideal = _pick_ideal(doc, args.ideal)
    report = nilpotency_index(ideal)
    results = {
        "index": report.index,
        "r": report.r_used,
        "projective_dimension": report.projective_dimension,
        "theorem_exponents": {str(p): t
                              for p, t in report.exponents.items()},
        "inclusions_verified": {str(p): v
                                for p, v in report.inclusions_verified.items()},
        "alternate_exponents": {str(p): t
                                for p, t in report.alternate_exponents.items()},
        "alternate_verified": {str(p): v
                               for p, v in report.alternate_verified.items()},
    }
    return build_report("nilp", _ideal_inputs(name, ideal), results, started)


def _cmd_sinv(args):
    started = time.perf_counter()
    doc = _load_document(args)
    name, ideal = _pick_ideal(doc, args.ideal)
    bracket = s_bracket(ideal, args.pmax, Fraction(args.tol),
                        _cache_dir(args), args.gen_cap)
    seq = d_sequence(ideal, args.pmax, _cache_dir(args), args.gen_cap)
    results = {
        "bracket": _fmt_bracket(bracket),
        "d_sequence": {str(p): {"d": seq.d(p), "reg": seq.reg(p)}
                       for p in sorted(seq.entries) if p <= args.pmax},
    }
    return build_report("sinv", _ideal_inputs(name, ideal), results, started)


def _cmd_bezout(args):
    started = time.perf_counter()
    doc = _load_document(args)
    name, ideal = _pick_ideal(doc, args.ideal)
    if args.s is not None:
        s = Fraction(args.s)
    elif args.from_bracket:
        s = s_bracket(ideal, args.pmax, cache_dir=_cache_dir(args)).upper
    else:
        raise DomainError("bezout needs --s <rational> or --from-bracket")
    report = bezout_check(ideal, s)
    results = {
        "s": format_rational(report.s_used),
        "lhs": format_rational(report.lhs),
        "rhs": format_rational(report.rhs),
        "satisfied": report.satisfied,
        "distinguished_r": report.distinguished_r,
        "corollary_bound": format_rational(report.corollary_bound),
        "corollary_satisfied": report.corollary_satisfied,
        "all_facets_r": report.all_facets_r,
        "excluded_irrelevant": [list(v.normal) for v in report.excluded],
    }
    return build_report("bezout", _ideal_inputs(name, ideal), results,
                        started)


def _cmd_props(args):
    started = time.perf_counter()
    doc = _load_document(args)
    name_1, name_2 = args.ideals
    _, ideal_1 = _pick_ideal(doc, name_1)
    _, ideal_2 = _pick_ideal(doc, name_2)
    from .sbracket import property_checks
    report = property_checks(ideal_1, ideal_2, args.pmax,
                             cache_dir=_cache_dir(args),
                             generator_cap=args.gen_cap)
    def opt(bracket):
        return None if bracket is None else _fmt_bracket(bracket)
    results = {
        "bracket_1": _fmt_bracket(report.bracket_1),
        "bracket_2": _fmt_bracket(report.bracket_2),
        "product_bracket": opt(report.product_bracket),
        "sum_bracket": opt(report.sum_bracket),
        "closure_bracket_1": _fmt_bracket(report.closure_bracket_1),
        "closure_bracket_2": _fmt_bracket(report.closure_bracket_2),
        "product_ok": report.product_ok,
        "sum_ok": report.sum_ok,
        "closure_overlap": [report.closure_overlap_1,
                            report.closure_overlap_2],
    }
    inputs = {
        "ring": list(ideal_1.ring.variables),
        "ideals": {name_1: ideal_1.gens_strings(),
                   name_2: ideal_2.gens_strings()},
    }
    return build_report("props", inputs, results, started)


def _cmd_surface(args):
    started = time.perf_counter()
    lattice, classes = parse_lattice_document(_read(args.file))
    for required in (args.H, args.C):
        if required not in classes:
            raise DomainError(f"no class named {required!r} in the lattice "
                              "document")
    result = s_invariant_divisorial(lattice, classes[args.H], classes[args.C])
    results = {
        "s": format_algebraic(result.value),
        "irrational": result.irrational,
        "nef_for_all_nonneg": result.nef_for_all_nonneg,
        "quadratic": [str(c) for c in result.quadratic],
        "discriminant": format_rational(result.discriminant),
    }
    if args.rescale:
        a, b = args.rescale
        check = rescale_check(lattice, classes[args.H], classes[args.C], a, b)
        results["rescale"] = {
            "a": a, "b": b,
            "value": format_algebraic(check.rescaled_value),
            "expected": format_algebraic(check.expected),
            "ok": check.ok,
        }
    inputs = {
        "gram": [list(row) for row in lattice.gram],
        "H": args.H,
        "C": args.C,
    }
    return build_report("surface", inputs, results, started)


def _pathology_ideal(d):
    ring = Ring(("x", "y", "z", "w"))
    return MonomialIdeal.from_strings(
        ring, ["x^2", f"x*y*z^{d}" if d > 1 else "x*y*z", "y^2"])


def _pathology_row(d):
    ideal = _pathology_ideal(d)
    witness = curve_lower_bound(ideal)
    profile = adeg_profile(ideal)
    reg = regularity(ideal).module_regularity
    nilp = nilpotency_index(ideal).index
    return {
        "d": d,
        "s_lower": format_rational(witness.bound),
        "adeg": {str(k): v for k, v in sorted(profile.by_codim.items())},
        "regularity": reg,
        "nilpotency_index": nilp,
    }


def _cmd_pathology(args):
    started = time.perf_counter()
    lo, sep, hi = args.d_range.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit() or int(lo) < 1 \
            or int(hi) < int(lo):
        raise DomainError("--d-range must look like 1..6")
    ds = list(range(int(lo), int(hi) + 1))
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(_pathology_row, ds))
    else:
        rows = [_pathology_row(d) for d in ds]
    inputs = {"family": "x^2, x*y*z^d, y^2 on P^3", "d_range": args.d_range}
    return build_report("pathology", inputs, {"rows": rows}, started)


# -- rendering ----------------------------------------------------------------


def _render_human(report, out):
    print(f"command: {report['command']}", file=out)
    for key, value in report["inputs"].items():
        print(f"  {key}: {value}", file=out)
    _render_value(report["results"], out, indent=0)
    print(f"elapsed: {report['timings']['seconds']}s", file=out)


def _render_value(value, out, indent):
    pad = "  " * indent
    if isinstance(value, dict):
        if set(value) == {"exact", "decimal"} or \
                set(value) == {"exact", "decimal", "irrational"}:
            print(f"{pad}{value['exact']}  (~{value['decimal']})", file=out)
            return
        for key, inner in value.items():
            if isinstance(inner, (dict, list)):
                print(f"{pad}{key}:", file=out)
                _render_value(inner, out, indent + 1)
            else:
                print(f"{pad}{key}: {inner}", file=out)
        return
    if isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                _render_value(item, out, indent)
                print(f"{pad}--", file=out)
            else:
                print(f"{pad}- {item}", file=out)
        return
    print(f"{pad}{value}", file=out)


# -- parser -------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="idealinv",
        description="Exact complexity invariants of monomial ideal sheaves")
    parser.add_argument("--json", action="store_true",
                        help="emit a JSON report instead of text")
    parser.add_argument("--threads", type=int, default=1,
                        help="parallel workers for family/power maps")
    parser.add_argument("--cache", default=None,
                        help=f"cache directory (default from ${CACHE_ENV})")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def ideal_command(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="ideal document")
        p.add_argument("--ideal", default=None,
                       help="ideal name when the document has several")
        p.set_defaults(handler=handler)
        return p

    ideal_command("info", _cmd_info,
                  "canonical form, radical, and saturation")
    p = ideal_command("reg", _cmd_reg, "Castelnuovo-Mumford regularity")
    p.add_argument("--gen-cap", type=int, default=DEFAULT_GENERATOR_CAP)
    ideal_command("gendeg", _cmd_gendeg, "sheaf generation degree")
    p = ideal_command("power", _cmd_power, "canonical power of the ideal")
    p.add_argument("--p", type=int, required=True)
    ideal_command("rees", _cmd_rees, "Newton-polyhedron facet valuations")
    ideal_command("closure", _cmd_closure, "integral closure")
    ideal_command("adeg", _cmd_adeg, "arithmetic-degree profile")
    ideal_command("nilp", _cmd_nilp, "nilpotency index and inclusion checks")
    p = ideal_command("sinv", _cmd_sinv, "certified s-invariant bracket")
    p.add_argument("--pmax", type=int, default=3)
    p.add_argument("--tol", default="1/10",
                   help="convergence tolerance as a rational")
    p.add_argument("--gen-cap", type=int, default=DEFAULT_GENERATOR_CAP)
    p = ideal_command("bezout", _cmd_bezout, "Bezout-type degree bound")
    p.add_argument("--s", default=None, help="rational value to test")
    p.add_argument("--from-bracket", action="store_true",
                   help="use the certified upper bracket endpoint")
    p.add_argument("--pmax", type=int, default=3)
    p = ideal_command("props", _cmd_props,
                      "two-ideal product/sum/closure property report")
    p.add_argument("--ideals", nargs=2, metavar=("I", "J"), required=True)
    p.add_argument("--pmax", type=int, default=2)
    p.add_argument("--gen-cap", type=int, default=DEFAULT_GENERATOR_CAP)

    p = sub.add_parser("surface", help="nef-boundary value on a lattice")
    p.add_argument("file", help="lattice document")
    p.add_argument("--H", required=True, help="ample class name")
    p.add_argument("--C", required=True, help="curve class name")
    p.add_argument("--rescale", nargs=2, type=int, metavar=("A", "B"),
                   default=None)
    p.set_defaults(handler=_cmd_surface)

    p = sub.add_parser("pathology",
                       help="fixed-s, growing-adeg family on P^3")
    p.add_argument("--d-range", required=True, help="like 1..6")
    p.set_defaults(handler=_cmd_pathology)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (DomainError, RingMismatchError, CacheIntegrityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        json.dump(report, sys.stdout, indent=2, sort_keys=True)
        print()
    else:
        _render_human(report, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
