"""Dimension-4 factorizations: named families, quaternion reduction, catalog.

Every 4-dimensional algebra that factorizes as a product of two
2-dimensional algebras lands in one of a handful of named families:

* ``A_q``: x^2 = y^2 = 0, yx = q xy           (duals x duals, component d)
* ``X_t``: x^2 = y^2 = 0, yx + xy = t         (duals x duals, component a)
* ``B_q``: x^2 = 0, y^2 = gamma, xy + yx = q  (duals x field extension)
* ``C_q``: x^2 = alpha, y^2 = beta, xy+yx = q (two field extensions, char != 2)
* ``D_q``: x^2 = alpha x + beta, y^2 = alpha' y + beta', xy+yx = q   (char 2)

``catalog4`` enumerates all twisting maps for every ordered pair of
2-dimensional factors over a small finite field, buckets the products by
fingerprint, confirms the buckets by isomorphism search, and names the
classes against reference constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import linalg
from .algebras import (LinearMap, StructAlgebra, check_algebra, check_morphism,
                       direct_product, matrix_algebra, power_of_field,
                       quotient_poly, restrict_scalars, scalar_extension,
                       truncated_path_algebra)
from .config import Budgets, default_budgets
from .errors import (CertificationError, CharMismatchError, CharTwoError,
                     DegenerateParameterError, ParameterIsSquareError,
                     ZeroParameterError)
from .fields import Field, NormResult, QuadExt, Scalar, is_norm, square_roots
from .isomorphism import Fingerprint, fingerprint, is_simple, iso_search, fixed_subalgebra
from .quivers import GeneralQuiver
from .twisting import (TwistingMap2x2, TwoDimPresentation, brute_force_tau_2x2,
                       two_dim_twist_algebra)


@dataclass(frozen=True)
class FamilyParam:
    """A member of one of the named families; ``params`` per family:

    A: (q,)   X: (t,)   B: (gamma, q)   C: (alpha, beta, q)
    D: (alpha, beta, alpha', beta', q)
    """

    name: str
    params: Tuple


def family_presentations(param: FamilyParam, field: Field):
    """(pres_a, pres_b, coeffs) realising the family member as a twisted table."""
    scal = field.scalar
    name, ps = param.name, [scal(p) for p in param.params]
    dual = TwoDimPresentation.make(field, 0, 0)
    minus_one = -field.one()
    if name == "A":
        (q,) = ps
        return dual, dual, (field.zero(), field.zero(), field.zero(), q)
    if name == "X":
        (t,) = ps
        return dual, dual, (t, field.zero(), field.zero(), minus_one)
    if name == "B":
        gamma, q = ps
        presb = TwoDimPresentation(field, field.zero(), -gamma)
        return dual, presb, (q, field.zero(), field.zero(), minus_one)
    if name == "C":
        if field.char == 2:
            raise CharMismatchError("the C family needs characteristic != 2")
        alpha, beta, q = ps
        presa = TwoDimPresentation(field, field.zero(), -alpha)
        presb = TwoDimPresentation(field, field.zero(), -beta)
        return presa, presb, (q, field.zero(), field.zero(), minus_one)
    if name == "D":
        if field.char != 2:
            raise CharMismatchError("the D family needs characteristic 2")
        alpha, beta, alphap, betap, q = ps
        presa = TwoDimPresentation(field, alpha, -beta)
        presb = TwoDimPresentation(field, alphap, -betap)
        return presa, presb, (q, field.zero(), field.zero(), minus_one)
    raise ValueError(f"unknown family {name}")


def construct_family(param: FamilyParam, field: Field) -> StructAlgebra:
    """Structure constants on {1, x, y, xy}; validated by check_algebra."""
    presa, presb, coeffs = family_presentations(param, field)
    alg = two_dim_twist_algebra(presa, presb, coeffs)
    report = check_algebra(alg)
    if not report.ok:
        raise CertificationError(f"family table is not associative: {report}")
    return alg


def quaternion_algebra(field: Field, a, t) -> StructAlgebra:
    """The generalized quaternion algebra <i, j | i^2=a, j^2=t, ij+ji=0>."""
    a = field.scalar(a)
    t = field.scalar(t)
    presa = TwoDimPresentation(field, field.zero(), -a)
    presb = TwoDimPresentation(field, field.zero(), -t)
    alg = two_dim_twist_algebra(presa, presb,
                                (field.zero(),) * 3 + (-field.one(),))
    return StructAlgebra(field, alg.table, alg.unit, ["1", "i", "j", "ij"])


def quaternion_from_Cq(field: Field, alpha, beta, q):
    """Reduce C_q to a quaternion symbol (a, t) with a certified isomorphism.

    t = (q^2 - 4 alpha beta) / (4 alpha^2); the map sends x -> i and
    y -> (q / 2 alpha) i + ij.
    """
    if field.char == 2:
        raise CharTwoError("quaternion reduction needs characteristic != 2")
    alpha, beta, q = field.scalar(alpha), field.scalar(beta), field.scalar(q)
    if alpha.is_zero():
        raise ZeroParameterError("the x^2 slot must be nonzero")
    t = (q * q - 4 * alpha * beta) / (4 * alpha * alpha)
    cq = construct_family(FamilyParam("C", (alpha, beta, q)), field)
    quat = quaternion_algebra(field, alpha, t)
    zero, one = field.zero(), field.one()
    half_q = q / (2 * alpha)
    cols = [
        (one, zero, zero, zero),            # 1 -> 1
        (zero, one, zero, zero),            # x -> i
        (zero, half_q, zero, one),          # y -> (q/2a) i + ij
        (q / 2, zero, alpha, zero),         # xy -> q/2 + alpha j
    ]
    phi = LinearMap.from_columns(cq, quat, cols)
    if not (check_morphism(phi) and phi.is_bijective()):
        raise CertificationError("quaternion reduction map failed to verify")
    return alpha, t, phi


@dataclass
class PairVerdict:
    status: str                       # "isomorphic" | "distinct" | "unknown"
    witness: Optional[tuple] = None   # (x, y) solving the norm equation

    @property
    def isomorphic(self) -> bool:
        return self.status == "isomorphic"


def _norm_equation(field: Field, alpha: Scalar, value: Scalar,
                   bound: Optional[int]) -> PairVerdict:
    """Solve x^2 - alpha y^2 = value, exploiting a square alpha when possible."""
    roots = square_roots(alpha)
    if roots:
        s = roots[0] if not roots[0].is_zero() else None
        if s is not None:
            # (x - sy)(x + sy) = value: split value = 1 * value
            x = (field.one() + value) / 2
            y = (value - field.one()) / (2 * s)
            assert x * x - alpha * y * y == value
            return PairVerdict("isomorphic", (x, y))
    ext = QuadExt(field, field.zero(), -alpha)
    res = is_norm(ext, value, bound)
    if res.is_yes:
        c0, c1 = ext.coords(res.witness)
        return PairVerdict("isomorphic", (c0, c1))
    if res.is_no:
        return PairVerdict("distinct")
    return PairVerdict("unknown")


def classify_Cq_pair(field: Field, alpha, beta, q, h,
                     bound: Optional[int] = None) -> PairVerdict:
    """Are C_q and C_h isomorphic?  Decided through the norm equation
    x^2 - alpha y^2 = (q^2 - 4 alpha beta) / (h^2 - 4 alpha beta).

    Both parameters must avoid the degenerate locus q^2 = 4 alpha beta.
    """
    alpha, beta = field.scalar(alpha), field.scalar(beta)
    q, h = field.scalar(q), field.scalar(h)
    vq = q * q - 4 * alpha * beta
    vh = h * h - 4 * alpha * beta
    if vq.is_zero() or vh.is_zero():
        raise DegenerateParameterError("q^2 = 4 alpha beta is degenerate")
    return _norm_equation(field, alpha, vq / vh, bound)


def classify_Cq_matrix(field: Field, alpha, beta, q,
                       bound: Optional[int] = None) -> PairVerdict:
    """Is C_q a matrix ring?  Norm equation x^2 - alpha y^2 = q^2 - 4 alpha beta."""
    alpha, beta = field.scalar(alpha), field.scalar(beta)
    q = field.scalar(q)
    v = q * q - 4 * alpha * beta
    if v.is_zero():
        raise DegenerateParameterError("q^2 = 4 alpha beta is degenerate")
    return _norm_equation(field, alpha, v, bound)


def classify_Aq_pair(field: Field, q, h) -> bool:
    """A_q and A_h are isomorphic exactly when q = h or q = 1/h."""
    q, h = field.scalar(q), field.scalar(h)
    if q.is_zero() or h.is_zero():
        raise ZeroParameterError("the A-family criterion needs nonzero parameters")
    return q == h or q * h == field.one()


# --------------------------------------------------------------------------
# invariant-ring verifications
# --------------------------------------------------------------------------

def _roundtrip_quiver() -> GeneralQuiver:
    return GeneralQuiver((1, 2), (("R", 1, 2), ("S", 2, 1)))


@dataclass
class InvariantRingReport:
    extension_iso_B: bool       # B_0 (x) l  ~  lQ_<2
    fixed_iso_B: bool           # B_0  ~  (lQ_<2)^G
    extension_iso_C: bool       # C_{2a} (x) l  ~  lQ_<2
    fixed_iso_C: bool           # C_{2a}  ~  (lQ_<2)^G
    fixed_dim: int

    @property
    def ok(self) -> bool:
        return (self.extension_iso_B and self.fixed_iso_B
                and self.extension_iso_C and self.fixed_iso_C)


def verify_invariant_ring_lemmas(field: Field, param) -> InvariantRingReport:
    """Certify the two invariant-ring descriptions over F_p, p odd.

    ``param`` (a nonsquare) plays gamma in B_0 and alpha in C_{2 alpha}.
    The group action on the round-trip truncated path algebra over
    l = k(sqrt(param)) exchanges the vertices and the arrows while
    conjugating scalars; its fixed ring is computed over the base field.
    """
    if field.char == 2:
        raise CharTwoError("invariant rings are studied away from characteristic 2")
    a = field.scalar(param)
    if square_roots(a):
        raise ParameterIsSquareError(f"{a} is a square in {field}")
    ext = QuadExt(field, field.zero(), -a)
    eta = ext.gen()
    big = truncated_path_algebra(ext, _roundtrip_quiver())   # basis u, v, R, S
    zero, one = ext.zero(), ext.one()

    def vec(cu, cv, cr, cs):
        return (cu, cv, cr, cs)

    u_plus_v = vec(one, one, zero, zero)
    r_plus_s = vec(zero, zero, one, one)
    eta_u_minus_v = vec(eta, -eta, zero, zero)
    eta_r_minus_s = vec(zero, zero, eta, -eta)

    # B_0 (x) l -> lQ_<2:  x -> R + S, y -> eta u - eta v
    b0 = construct_family(FamilyParam("B", (a, field.zero())), field)
    b0_l = scalar_extension(b0, ext)
    xy_image = big.mul(r_plus_s, eta_u_minus_v)
    phi_b = LinearMap.from_columns(
        b0_l, big, [big.unit, r_plus_s, eta_u_minus_v, xy_image])
    ext_iso_b = check_morphism(phi_b) and phi_b.is_bijective()

    # C_{2a} (x) l -> lQ_<2:  x -> eta u - eta v + R + S, y -> eta u - eta v
    c2a = construct_family(FamilyParam("C", (a, a, 2 * a)), field)
    c2a_l = scalar_extension(c2a, ext)
    x_img = big.add(eta_u_minus_v, r_plus_s)
    phi_c = LinearMap.from_columns(
        c2a_l, big, [big.unit, x_img, eta_u_minus_v, big.mul(x_img, eta_u_minus_v)])
    ext_iso_c = check_morphism(phi_c) and phi_c.is_bijective()

    # the semilinear action on the scalar restriction (dim 8 over k)
    restricted = restrict_scalars(big)     # basis u, v, R, S, tu, tv, tR, tS
    zero_k, one_k = field.zero(), field.one()
    g_cols = []
    swap = [1, 0, 3, 2]
    for j in range(4):                      # u -> v, v -> u, R -> S, S -> R
        col = [zero_k] * 8
        col[swap[j]] = one_k
        g_cols.append(tuple(col))
    for j in range(4):                      # t b -> -t (swapped b)
        col = [zero_k] * 8
        col[4 + swap[j]] = -one_k
        g_cols.append(tuple(col))
    g = LinearMap.from_columns(restricted, restricted, g_cols)
    fixed, incl = fixed_subalgebra(restricted, g)

    def in_fixed(target8):
        coords = linalg.solve([list(row) for row in incl.matrix], list(target8))
        if coords is None:
            raise CertificationError("expected element is not G-fixed")
        return tuple(coords)

    e = [restricted.basis_vec(i) for i in range(8)]
    w_x = restricted.add(e[2], e[3])                    # R + S
    w_y = restricted.sub(e[4], e[5])                    # t u - t v
    w_xy = restricted.mul(w_x, w_y)
    psi_b = LinearMap.from_columns(
        b0, fixed, [in_fixed(restricted.unit), in_fixed(w_x),
                    in_fixed(w_y), in_fixed(w_xy)])
    fixed_iso_b = check_morphism(psi_b) and psi_b.is_bijective()

    cx = restricted.add(w_y, w_x)
    psi_c = LinearMap.from_columns(
        c2a, fixed, [in_fixed(restricted.unit), in_fixed(cx),
                     in_fixed(w_y), in_fixed(restricted.mul(cx, w_y))])
    fixed_iso_c = check_morphism(psi_c) and psi_c.is_bijective()

    return InvariantRingReport(ext_iso_b, fixed_iso_b, ext_iso_c, fixed_iso_c,
                               fixed.dim)


# --------------------------------------------------------------------------
# the catalog over a finite field
# --------------------------------------------------------------------------

def smallest_nonsquare(field: Field) -> Scalar:
    for v in field.elements():
        if not v.is_zero() and not square_roots(v):
            return v
    raise ParameterIsSquareError(f"every element of {field} is a square")


def canonical_quadext_presentation(field: Field) -> TwoDimPresentation:
    """An irreducible quadratic presentation: x^2 = eps (odd p) or x^2 = x + 1."""
    if field.char == 2:
        return TwoDimPresentation.make(field, 1, 1)
    eps = smallest_nonsquare(field)
    return TwoDimPresentation(field, field.zero(), -eps)


def factor_presentations(field: Field) -> List[Tuple[str, TwoDimPresentation]]:
    return [
        ("k2", TwoDimPresentation.make(field, 1, 0)),
        ("dual", TwoDimPresentation.make(field, 0, 0)),
        ("ext", canonical_quadext_presentation(field)),
    ]


def _delta_quiver(into_loop: bool) -> GeneralQuiver:
    if into_loop:
        return GeneralQuiver((1, 2), (("l", 1, 1), ("a", 2, 1)))
    return GeneralQuiver((1, 2), (("l", 1, 1), ("a", 1, 2)))


def reference_algebras(field: Field) -> List[Tuple[str, StructAlgebra]]:
    """Named reference constructions used to label catalog classes."""
    dual = TwoDimPresentation.make(field, 0, 0)
    ext = canonical_quadext_presentation(field)
    l_alg = ext.algebra()
    one = field.one()
    refs: List[Tuple[str, StructAlgebra]] = [
        ("k^4", power_of_field(field, 4)),
        ("M2(k)", matrix_algebra(field, 2)),
        ("kQ_<2", truncated_path_algebra(field, _roundtrip_quiver())),
        ("kGamma_<2", truncated_path_algebra(
            field, GeneralQuiver((1, 2, 3), (("a", 2, 3),)))),
        ("k(Delta1)_<2", truncated_path_algebra(field, _delta_quiver(False))),
        ("k(Delta2)_<2", truncated_path_algebra(field, _delta_quiver(True))),
        ("k[xi] x k[xi]", direct_product(quotient_poly(field, 0, 0),
                                         quotient_poly(field, 0, 0))),
        ("l x l", direct_product(l_alg, l_alg)),
        ("l[xi]", two_dim_twist_algebra(
            dual, ext, (field.zero(), field.zero(), field.zero(), one))),
    ]
    for v in field.elements():
        refs.append((f"A[{v}]", construct_family(FamilyParam("A", (v,)), field)))
    if field.char != 2:
        eps = smallest_nonsquare(field)
        refs.append((f"B0[{eps}]",
                     construct_family(FamilyParam("B", (eps, field.zero())), field)))
        refs.append((f"C_exc[{eps}]",
                     construct_family(FamilyParam("C", (eps, eps, 2 * eps)), field)))
    else:
        a, b = ext.alpha, -ext.beta
        for v in field.elements():
            refs.append((f"D[{v}]",
                         construct_family(FamilyParam("D", (a, b, a, b, v)), field)))
    return refs


@dataclass
class CatalogClass:
    label: str
    fingerprint: Fingerprint
    representative: StructAlgebra
    realized_by: Dict[str, int]          # "k2(x)dual" -> number of taus
    representative_tau: Tuple[str, TwistingMap2x2]

    def to_json(self) -> dict:
        fp = self.fingerprint
        return {
            "label": self.label,
            "fingerprint": {
                "commutative": fp.commutative, "center_dim": fp.center_dim,
                "commutator_dim": fp.commutator_dim, "idempotents": fp.idempotents,
                "square_zero": fp.square_zero, "simple": fp.simple,
                "units": fp.units,
            },
            "realized_by": [{"pair": pair, "taus": count}
                            for pair, count in sorted(self.realized_by.items())],
            "representative": {
                "pair": self.representative_tau[0],
                "coeffs": [str(c) for c in self.representative_tau[1].coeffs],
            },
        }


def catalog4(field: Field, budgets: Optional[Budgets] = None) -> List[CatalogClass]:
    """Isomorphism classes of all products of two 2-dimensional factors.

    Buckets by fingerprint, then splits/confirms each bucket with the
    complete generator-based isomorphism search, and finally names every
    class against the reference constructions.
    """
    budgets = budgets or default_budgets()
    presentations = factor_presentations(field)
    classes: List[CatalogClass] = []
    by_key: Dict[tuple, List[CatalogClass]] = {}
    for name_a, pres_a in presentations:
        for name_b, pres_b in presentations:
            pair_name = f"{name_a}(x){name_b}"
            for tau in brute_force_tau_2x2(pres_a, pres_b, budgets):
                alg = tau.algebra()
                fp = fingerprint(alg, budgets)
                hit = None
                for cls in by_key.get(fp.key(), []):
                    res = iso_search(alg, cls.representative,
                                     strategy="generators", budgets=budgets)
                    if res.found:
                        hit = cls
                        break
                    if not res.complete:
                        raise CertificationError("catalog bucket left undecided")
                if hit is None:
                    hit = CatalogClass("?", fp, alg, {}, (pair_name, tau))
                    by_key.setdefault(fp.key(), []).append(hit)
                    classes.append(hit)
                hit.realized_by[pair_name] = hit.realized_by.get(pair_name, 0) + 1
    # name the classes against the references
    refs = reference_algebras(field)
    ref_fps = [(name, alg, fingerprint(alg, budgets)) for name, alg in refs]
    for cls in classes:
        for name, alg, fp in ref_fps:
            if fp.key() != cls.fingerprint.key():
                continue
            res = iso_search(cls.representative, alg, strategy="generators",
                             budgets=budgets)
            if res.found:
                cls.label = name
                break
        else:
            cls.label = f"unidentified{cls.fingerprint.key()}"
    classes.sort(key=lambda c: c.label)
    return classes


def catalog_to_json(field: Field, classes: List[CatalogClass]) -> dict:
    return {
        "schema": "catalog4/v1",
        "field": field.spec_string(),
        "classes": [cls.to_json() for cls in classes],
    }


# --------------------------------------------------------------------------
# the simplicity probe
# --------------------------------------------------------------------------

@dataclass
class ProbeResult:
    witness: Optional[TwistingMap2x2]
    complete: bool
    scanned: int

    @property
    def found(self) -> bool:
        return self.witness is not None


def conjecture_probe(pres: TwoDimPresentation,
                     budgets: Optional[Budgets] = None) -> ProbeResult:
    """Scan all twisting maps on A (x) A for a simple product.

    A negative outcome is a complete-search verdict over the given field.
    """
    budgets = budgets or default_budgets()
    taus = brute_force_tau_2x2(pres, pres, budgets)
    for i, tau in enumerate(taus):
        if is_simple(tau.algebra(), budgets):
            return ProbeResult(tau, True, i + 1)
    return ProbeResult(None, True, len(taus))


# --------------------------------------------------------------------------
# norm-orbit summary over a finite field
# --------------------------------------------------------------------------

def norm_orbit_summary(field: Field, alpha, beta) -> dict:
    """Isomorphism-class bookkeeping for the C family over a finite field.

    The norm subgroup of k^x is computed by enumeration together with the
    orbits meeting the image of q -> q^2 - 4 alpha beta, the exceptional
    parameters with q^2 = 4 alpha beta, and the commutative class marker.
    """
    alpha, beta = field.scalar(alpha), field.scalar(beta)
    ext = QuadExt(field, field.zero(), -alpha)
    norm_set = set()
    for raw in ext.raw_elements():
        n = ext.raw_norm(raw)
        if n != field.raw_zero():
            norm_set.add(n)
    values = {}
    exceptional = []
    for q in field.elements():
        v = q * q - 4 * alpha * beta
        if v.is_zero():
            exceptional.append(str(q))
        else:
            values[str(q)] = v
    orbits: List[List[str]] = []
    for q, v in sorted(values.items()):
        for orbit in orbits:
            if (v / values[orbit[0]]).raw in norm_set:
                orbit.append(q)
                break
        else:
            orbits.append([q])
    return {
        "field": field.spec_string(),
        "alpha": str(alpha), "beta": str(beta),
        "norm_subgroup_size": len(norm_set),
        "orbits": orbits,
        "exceptional_q": exceptional,
        "commutative_class": "l (x) l' (the classical tensor product)",
    }


# --------------------------------------------------------------------------
# the static catalog of dimension-4 algebras (algebraically closed field)
# --------------------------------------------------------------------------

#: (label, factorizable) pairs; the degeneration arrows are data, not computed.
GABRIEL_CLASSES: Tuple[Tuple[str, bool], ...] = (
    ("k^4", True),
    ("k^2 x k[xi]", False),
    ("M2(k)", True),
    ("kGamma_<2", True),
    ("k x k[x]/(x^3)", False),
    ("k[xi] x k[xi]", True),
    ("kQ_<2", True),
    ("k(Delta1)_<2", False),
    ("k(Delta2)_<2", True),
    ("k[x]/(x^4)", False),
    ("G", False),
    ("A_0", True),
    ("k x k[x,y]/(x,y)^2", False),
    ("A_1", True),
    ("A_q", True),
    ("k[x,y]/(x^3,xy,y^2)", False),
    ("wedge k^2", True),
    ("kSigma_<2", False),
    ("k[x,y,z]/(x,y,z)^2", False),
)

GABRIEL_ARROWS: Tuple[Tuple[str, str], ...] = (
    ("k^4", "k^2 x k[xi]"),
    ("k^2 x k[xi]", "k x k[x]/(x^3)"),
    ("k^2 x k[xi]", "k[xi] x k[xi]"),
    ("M2(k)", "kQ_<2"),
    ("kGamma_<2", "k(Delta1)_<2"),
    ("kGamma_<2", "k(Delta2)_<2"),
    ("k x k[x]/(x^3)", "k[x]/(x^4)"),
    ("k x k[x]/(x^3)", "k x k[x,y]/(x,y)^2"),
    ("k[xi] x k[xi]", "k[x]/(x^4)"),
    ("kQ_<2", "wedge k^2"),
    ("k(Delta1)_<2", "A_0"),
    ("k(Delta2)_<2", "A_0"),
    ("k[x]/(x^4)", "A_1"),
    ("G", "k[x,y]/(x^3,xy,y^2)"),
    ("G", "wedge k^2"),
    ("A_0", "k[x,y]/(x^3,xy,y^2)"),
    ("k x k[x,y]/(x,y)^2", "k[x,y]/(x^3,xy,y^2)"),
    ("A_1", "k[x,y]/(x^3,xy,y^2)"),
    ("A_q", "k[x,y]/(x^3,xy,y^2)"),
    ("k[x,y]/(x^3,xy,y^2)", "k[x,y,z]/(x,y,z)^2"),
    ("wedge k^2", "k[x,y,z]/(x,y,z)^2"),
    ("kSigma_<2", "k[x,y,z]/(x,y,z)^2"),
)


def gabriel_diagram_json() -> dict:
    return {
        "schema": "gabriel4/v1",
        "note": ("static catalog over an algebraically closed field; "
                 "boxed entries factorize as a product of two 2-dimensional "
                 "factors; arrows are degenerations, reproduced as data"),
        "classes": [{"label": lab, "factorizable": boxed}
                    for lab, boxed in GABRIEL_CLASSES],
        "degenerations": [list(edge) for edge in GABRIEL_ARROWS],
    }
