"""The battery of explicit isomorphism certifications.

Every explicit structural isomorphism used by the classification is built
concretely and pushed through ``check_morphism`` plus a bijectivity check,
each over at least two finite fields.  ``run_certifications`` drives them
all and returns one (name, ok) row per certification; the command-line
``verify --paper-isos`` exits nonzero if any row fails.
"""

from __future__ import annotations

from typing import Callable, List, Tuple

from .algebras import LinearMap, check_morphism, matrix_algebra
from .dim4 import (FamilyParam, construct_family, quaternion_from_Cq,
                   verify_invariant_ring_lemmas)
from .duplicates import Coloration, certify, classify, enumerate_colorations
from .errors import CertificationError
from .fields import Field, PrimeField
from .quivers import from_set_map
from .twisting import TwoDimPresentation


def matrix_iso_Xt(field: Field, t) -> LinearMap:
    """X_t -> M2(k) via x -> E12, y -> t E21 (t nonzero)."""
    t = field.scalar(t)
    xt = construct_family(FamilyParam("X", (t,)), field)
    m2 = matrix_algebra(field, 2)
    zero, one = field.zero(), field.one()
    cols = [
        (one, zero, zero, one),      # 1 -> identity
        (zero, one, zero, zero),     # x -> E12
        (zero, zero, t, zero),       # y -> t E21
        (t, zero, zero, zero),       # xy -> t E11
    ]
    phi = LinearMap.from_columns(xt, m2, cols)
    if not (check_morphism(phi) and phi.is_bijective()):
        raise CertificationError("X_t -> M2 map failed")
    return phi


def matrix_iso_Bq(field: Field, gamma, q) -> LinearMap:
    """B_q -> M2(k) via x -> (q/gamma) E21, y -> gamma E12 + E21 (q nonzero)."""
    gamma, q = field.scalar(gamma), field.scalar(q)
    bq = construct_family(FamilyParam("B", (gamma, q)), field)
    m2 = matrix_algebra(field, 2)
    zero, one = field.zero(), field.one()
    cols = [
        (one, zero, zero, one),
        (zero, zero, q / gamma, zero),
        (zero, gamma, one, zero),
        (zero, zero, zero, q),       # xy -> q E22
    ]
    phi = LinearMap.from_columns(bq, m2, cols)
    if not (check_morphism(phi) and phi.is_bijective()):
        raise CertificationError("B_q -> M2 map failed")
    return phi


def _certify_colored(field: Field, targets, alpha, beta, colors) -> None:
    pres = TwoDimPresentation.make(field, alpha, beta)
    fq = from_set_map(targets)
    col = Coloration(fq, tuple(field.scalar(c) for c in colors))
    label = classify(fq, col, pres)
    certify(fq, col, pres, label)


def _certify_all_colorings(field: Field, targets, alpha, beta) -> int:
    pres = TwoDimPresentation.make(field, alpha, beta)
    fq = from_set_map(targets)
    result = enumerate_colorations(fq, pres)
    for col in result.colorations:
        certify(fq, col, pres, classify(fq, col, pres))
    return len(result.colorations)


def run_certifications() -> List[Tuple[str, bool]]:
    """All explicit-isomorphism certifications; True rows verified exactly."""
    f2, f3, f5 = PrimeField(2), PrimeField(3), PrimeField(5)
    rows: List[Tuple[str, bool]] = []

    def attempt(name: str, thunk: Callable[[], object]):
        try:
            thunk()
            rows.append((name, True))
        except Exception:
            rows.append((name, False))

    # round-trip quiver, colours not roots of q: the matrix-ring case
    attempt("roundtrip/matrix F5",
            lambda: _certify_colored(f5, (2, 1), 0, -1, (2, 3)))
    attempt("roundtrip/matrix F3",
            lambda: _certify_colored(f3, (2, 1), 1, 0, (1, 1)))
    # round-trip quiver coloured by roots of q: the truncated case
    attempt("roundtrip/truncated F5",
            lambda: _certify_colored(f5, (2, 1), 0, -1, (1, 4)))
    attempt("roundtrip/truncated F3",
            lambda: _certify_colored(f3, (2, 1), 1, 0, (0, 2)))
    # single root: chain into a loop, and a strict 3-cycle with a double root
    attempt("single-root chain F3",
            lambda: _certify_all_colorings(f3, (2, 3, 3), 0, 0))
    attempt("single-root 3-cycle F5",
            lambda: _certify_all_colorings(f5, (2, 3, 1), 2, 1))
    # two distinct roots: the loop-splitting transform
    attempt("two-root transform F3",
            lambda: _certify_all_colorings(f3, (2, 2), 1, 0))
    attempt("two-root transform F5",
            lambda: _certify_all_colorings(f5, (2, 2), 1, 0))
    # dual x dual and dual x extension matrix models
    attempt("X_t -> M2 over F2", lambda: matrix_iso_Xt(f2, 1))
    attempt("X_t -> M2 over F5", lambda: matrix_iso_Xt(f5, 3))
    attempt("B_q -> M2 over F3", lambda: matrix_iso_Bq(f3, 2, 1))
    attempt("B_q -> M2 over F5", lambda: matrix_iso_Bq(f5, 2, 2))
    # quaternion reduction of the C family
    attempt("C_q -> quaternion F5", lambda: quaternion_from_Cq(f5, 2, 2, 2))
    attempt("C_q -> quaternion F3", lambda: quaternion_from_Cq(f3, 2, 2, 0))
    # invariant-ring descriptions of B_0 and C_{2 alpha}
    attempt("invariant rings F3", lambda: _check_invariant(f3, 2))
    attempt("invariant rings F5", lambda: _check_invariant(f5, 2))
    return rows


def _check_invariant(field: Field, param) -> None:
    report = verify_invariant_ring_lemmas(field, param)
    if not report.ok:
        raise CertificationError(f"invariant-ring report failed: {report}")
