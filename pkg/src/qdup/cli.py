"""Command-line front end.

Exit codes are frozen for scripting: 0 success, 1 certification failure,
2 parse/usage error, 3 budget exceeded.

Field specs: ``Q``, ``F<p>``, ``F<p>[t^2=<c>]``, ``Q[t^2=<c>]``.  Factor
specs for the 2-dimensional algebras: ``k2``, ``dual``, ``ext`` (the
canonical quadratic extension of the field), or ``poly:<alpha>,<beta>``.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional

from .config import default_budgets
from .dim4 import (canonical_quadext_presentation, catalog4, catalog_to_json,
                   conjecture_probe, factor_presentations, gabriel_diagram_json)
from .duplicates import (classify, duplicates_entries, enumerate_colorations,
                         oracle_pair_set_equality)
from .errors import BudgetExceededError, CertificationError, QdupError
from .fields import Field, field_from_spec
from .quivers import from_set_map, functional_to_dot, functional_to_json
from .report import build_consistency_report
from .twisting import TwoDimPresentation, brute_force_tau_2x2

EXIT_OK = 0
EXIT_CERTIFICATION = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


def parse_factor_spec(spec: str, field: Field) -> TwoDimPresentation:
    if spec == "k2":
        return TwoDimPresentation.make(field, 1, 0)
    if spec == "dual":
        return TwoDimPresentation.make(field, 0, 0)
    if spec == "ext":
        return canonical_quadext_presentation(field)
    if spec.startswith("poly:"):
        alpha, beta = spec[len("poly:"):].split(",")
        return TwoDimPresentation.make(field, field.scalar(alpha),
                                       field.scalar(beta))
    raise ValueError(f"unknown factor spec {spec!r}")


def _emit(doc, fmt: str, path: Optional[str], table_renderer) -> None:
    if fmt == "json":
        text = json.dumps(doc, indent=2, sort_keys=True)
    else:
        text = table_renderer(doc)
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _oracle_worker(args):
    n, field_spec, alpha_txt, beta_txt = args
    field = field_from_spec(field_spec)
    pres = TwoDimPresentation.make(field, field.scalar(alpha_txt),
                                   field.scalar(beta_txt))
    return oracle_pair_set_equality(n, pres)


def _parallel_map(worker, items, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [worker(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, items))


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_duplicates(args) -> int:
    field = field_from_spec(args.field)
    pres = TwoDimPresentation.make(field, field.scalar(args.alpha),
                                   field.scalar(args.beta))
    if args.format == "dot":
        from itertools import product as iproduct
        parts = []
        for targets in iproduct(range(1, args.n + 1), repeat=args.n):
            fq = from_set_map(targets)
            for col in enumerate_colorations(fq, pres).colorations:
                parts.append(fq.to_general().to_dot(col.color_map()))
        print("\n".join(parts))
        return EXIT_OK
    entries = duplicates_entries(args.n, pres, do_certify=not args.no_certify)
    doc = {
        "schema": "duplicates/v1",
        "field": field.spec_string(),
        "n": args.n,
        "alpha": str(pres.alpha),
        "beta": str(pres.beta),
        "entries": entries,
    }

    def table(doc):
        lines = [f"# twisted products of k^{args.n} over {doc['field']} "
                 f"with alpha={doc['alpha']} beta={doc['beta']}"]
        for e in doc["entries"]:
            if e["kind"] == "family":
                lines.append(f"map={e['set_map']}  one-parameter family "
                             f"on cycles {e['parametric_cycles']}")
            else:
                mark = "ok" if e["certified"] else "--"
                lines.append(f"map={e['set_map']}  colors={e['colors']}  "
                             f"[{mark}] {e['label']}")
        lines.append(f"# entries: {len(doc['entries'])}")
        return "\n".join(lines)

    _emit(doc, args.format, args.output, table)
    return EXIT_OK


def cmd_enumerate_tau(args) -> int:
    field = field_from_spec(args.field)
    pres_a = parse_factor_spec(args.a, field)
    pres_b = parse_factor_spec(args.b, field)
    taus = brute_force_tau_2x2(pres_a, pres_b)
    doc = {
        "schema": "twist/v1",
        "field": field.spec_string(),
        "A": {"alpha": str(pres_a.alpha), "beta": str(pres_a.beta)},
        "B": {"alpha": str(pres_b.alpha), "beta": str(pres_b.beta)},
        "taus": [[str(c) for c in tau.coeffs] for tau in taus],
    }

    def table(doc):
        lines = [f"# twisting maps {args.a} (x) {args.b} over {doc['field']}"]
        for coeffs in doc["taus"]:
            a, b, c, d = coeffs
            lines.append(f"yx = {a} + {b} x + {c} y + {d} xy")
        lines.append(f"# count: {len(doc['taus'])}")
        return "\n".join(lines)

    _emit(doc, args.format, args.output, table)
    return EXIT_OK


def cmd_catalog4(args) -> int:
    field = field_from_spec(args.field)
    classes = catalog4(field)
    doc = catalog_to_json(field, classes)

    def table(doc):
        lines = [f"# dimension-4 factorizations over {doc['field']}"]
        for cls in doc["classes"]:
            realizers = ", ".join(f"{r['pair']}:{r['taus']}"
                                  for r in cls["realized_by"])
            lines.append(f"{cls['label']:<22} <- {realizers}")
        lines.append(f"# classes: {len(doc['classes'])}")
        return "\n".join(lines)

    _emit(doc, args.format, args.output, table)
    return EXIT_OK


def cmd_verify(args) -> int:
    failures = 0
    if args.paper_isos:
        from .certifications import run_certifications
        for name, ok in run_certifications():
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
            failures += 0 if ok else 1
    if args.oracle:
        n = int(args.oracle[0])
        field = field_from_spec(args.oracle[1])
        if field.order is None:
            raise ValueError("the oracle check needs a finite field")
        items = [(n, args.oracle[1], str(a), str(b))
                 for a in field.elements() for b in field.elements()]
        for result in _parallel_map(_oracle_worker, items, args.jobs):
            status = "PASS" if result["ok"] else "FAIL"
            print(f"{status}  n={result['n']} {result['field']} "
                  f"alpha={result['alpha']} beta={result['beta']} "
                  f"pairs={result['count']}")
            failures += 0 if result["ok"] else 1
    if args.consistency:
        report = build_consistency_report()
        print(json.dumps(report, indent=2, sort_keys=True))
        bad = (report["root_count_checks"]["disagreements"]
               or report["even_cycle_count_checks"]["disagreements"])
        failures += 1 if bad else 0
    if not (args.paper_isos or args.oracle or args.consistency):
        print("nothing to verify: pass --paper-isos, --oracle, or --consistency",
              file=sys.stderr)
        return EXIT_PARSE
    return EXIT_CERTIFICATION if failures else EXIT_OK


def cmd_quiver(args) -> int:
    targets = tuple(int(x) for x in args.set_map.split(","))
    fq = from_set_map(targets)
    if args.dot:
        print(functional_to_dot(fq))
    else:
        print(json.dumps(functional_to_json(fq), indent=2, sort_keys=True))
    return EXIT_OK


def cmd_probe(args) -> int:
    field = field_from_spec(args.field)
    pres = parse_factor_spec(args.a, field)
    result = conjecture_probe(pres)
    doc = {
        "schema": "probe/v1",
        "field": field.spec_string(),
        "factor": {"alpha": str(pres.alpha), "beta": str(pres.beta)},
        "complete": result.complete,
        "scanned": result.scanned,
        "simple_witness": ([str(c) for c in result.witness.coeffs]
                           if result.found else None),
    }
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_gabriel(args) -> int:
    print(json.dumps(gabriel_diagram_json(), indent=2, sort_keys=True))
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdup",
        description="enumerate and classify twisted tensor products with a "
                    "two-dimensional factor")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "table", "dot"),
                       default="json")
        p.add_argument("--output", default=None, help="write to a file")
        p.add_argument("--jobs", type=int, default=1,
                       help="worker processes for enumeration kernels")

    p = sub.add_parser("duplicates", help="coloured quivers and their classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--no-certify", action="store_true")
    common(p)
    p.set_defaults(func=cmd_duplicates)

    p = sub.add_parser("enumerate-tau", help="twisting maps of two 2-dim factors")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--field", required=True)
    common(p)
    p.set_defaults(func=cmd_enumerate_tau)

    p = sub.add_parser("catalog4", help="all dimension-4 factorizations")
    p.add_argument("--field", required=True)
    common(p)
    p.set_defaults(func=cmd_catalog4)

    p = sub.add_parser("verify", help="run certification and oracle suites")
    p.add_argument("--paper-isos", action="store_true")
    p.add_argument("--oracle", nargs=2, metavar=("N", "FIELD"))
    p.add_argument("--consistency", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("quiver", help="inspect the quiver of a set map")
    p.add_argument("--set-map", required=True, help="comma separated targets")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("probe", help="search for a simple twisted square")
    p.add_argument("--a", required=True)
    p.add_argument("--field", required=True)
    p.set_defaults(func=cmd_probe)

    p = sub.add_parser("gabriel", help="static dimension-4 degeneration data")
    p.set_defaults(func=cmd_gabriel)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CertificationError as exc:
        print(f"certification failure: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATION
    except (ValueError, QdupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
