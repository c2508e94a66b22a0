"""Consistency report: cross-checks between counting rules and conventions.

Two bookkeeping subtleties deserve a standing audit rather than silent
trust:

* colour values are roots of q(x) = x^2 + alpha x + beta while coloration
  counts for cycles are often stated through the roots of
  p(x) = x^2 - alpha x + beta; since q(x) = p(-x), negation matches the two
  root sets and the counts must always agree.  The report verifies this on
  every scanned case and flags any difference.
* the isomorphism criterion for the C family requires the nondegeneracy
  condition q^2 != 4 alpha beta (the quaternion slot t vanishes exactly at
  q^2 = 4 alpha beta, so a weaker reading 4 alpha beta != q would let a
  degenerate parameter through).
"""

from __future__ import annotations

from itertools import product
from typing import List

from .duplicates import enumerate_colorations
from .fields import PrimeField
from .quivers import components, from_set_map
from .twisting import TwoDimPresentation

QUATERNION_HYPOTHESIS_NOTE = (
    "classify_Cq_pair requires q^2 != 4*alpha*beta for both parameters: "
    "the reduced quaternion slot t = (q^2 - 4 alpha beta)/(4 alpha^2) "
    "vanishes exactly on that locus, so the weaker condition "
    "4*alpha*beta != q does not exclude the degenerate case."
)


def root_count_checks(primes=(2, 3, 5), max_n: int = 3) -> List[dict]:
    """Compare p-root and q-root counts on every scanned cycle case.

    The number of distinct roots of p and of q must agree (negation is a
    bijection between them); any discrepancy row is flagged.
    """
    rows = []
    for p in primes:
        field = PrimeField(p)
        for a_raw in range(p):
            for b_raw in range(p):
                pres = TwoDimPresentation.make(field, a_raw, b_raw)
                p_count = len({str(r) for r in pres.p_roots()})
                q_count = len({str(r) for r in pres.q_roots()})
                rows.append({
                    "field": field.spec_string(),
                    "alpha": a_raw, "beta": b_raw,
                    "distinct_p_roots": p_count,
                    "distinct_q_roots": q_count,
                    "agree": p_count == q_count,
                })
    return rows


def cycle_count_checks(primes=(2, 3), max_n: int = 3) -> List[dict]:
    """For even cycles, enumerated coloration counts vs distinct p-root counts."""
    rows = []
    for p in primes:
        field = PrimeField(p)
        for a_raw in range(p):
            for b_raw in range(p):
                pres = TwoDimPresentation.make(field, a_raw, b_raw)
                p_count = len({str(r) for r in pres.p_roots()})
                for n in range(2, max_n + 1):
                    for targets in product(range(1, n + 1), repeat=n):
                        fq = from_set_map(targets)
                        comps = components(fq)
                        if len(comps) != 1:
                            continue
                        comp = comps[0]
                        if comp.s < 2 or (comp.s == 2 and comp.strict):
                            continue
                        if comp.s % 2 != 0:
                            continue
                        count = len(enumerate_colorations(fq, pres).colorations)
                        rows.append({
                            "field": field.spec_string(),
                            "alpha": a_raw, "beta": b_raw,
                            "set_map": list(targets),
                            "colorations": count,
                            "distinct_p_roots": p_count,
                            "agree": count == p_count,
                        })
    return rows


def build_consistency_report() -> dict:
    roots = root_count_checks()
    cycles = cycle_count_checks()
    return {
        "schema": "consistency/v1",
        "quaternion_hypothesis": QUATERNION_HYPOTHESIS_NOTE,
        "root_count_checks": {
            "cases": len(roots),
            "disagreements": [r for r in roots if not r["agree"]],
        },
        "even_cycle_count_checks": {
            "cases": len(cycles),
            "disagreements": [r for r in cycles if not r["agree"]],
        },
    }
