"""Twisted products of k^n with a two-dimensional factor: the coloration engine.

For ``A = k^n`` the pairs (f, delta) are combinatorial: f is the quiver of a
set map, and delta is encoded by a colour vector ``a`` on the vertices
(normalised to 0 at loop vertices).  ``verify_coloration`` is the exact
ground truth (the two vertexwise equations every colouring must satisfy);
``enumerate_colorations`` produces colourings by the component rules, and
every emitted colouring is re-checked against the oracle.  ``classify``
names the isomorphism class of the resulting algebra and ``certify``
constructs and verifies an explicit isomorphism to it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Tuple

from . import linalg
from .algebras import LinearMap, StructAlgebra, check_morphism
from .errors import CertificationError
from .fields import Field, Scalar
from .labels import (AlgebraClassLabel, MatrixRing, Product, QuotientPoly,
                     TruncatedPath, product_label)
from .quivers import (ComponentInfo, FunctionalQuiver, GeneralQuiver,
                      cibils_transform, components, from_set_map)
from .twisting import (TwistingPair, TwoDimPresentation, build_twisted_product,
                       make_pair, set_map_endo_matrix)


@dataclass(frozen=True)
class Coloration:
    """A colour vector on the vertices of a functional quiver."""

    quiver: FunctionalQuiver
    colors: Tuple[Scalar, ...]

    def color(self, v: int) -> Scalar:
        return self.colors[v - 1]

    def color_map(self) -> Dict[int, Scalar]:
        return {v: self.colors[v - 1] for v in range(1, self.quiver.n + 1)}


@dataclass(frozen=True)
class ColorationFamily:
    """A one-parameter family: strict 2-cycles over an infinite field.

    ``fixed`` holds the colours of all non-parametric vertices; each entry
    of ``parametric`` is a 2-cycle (i, j) coloured (s, -alpha - s) with the
    parameter s ranging over the field.
    """

    quiver: FunctionalQuiver
    fixed: Tuple[Tuple[int, Scalar], ...]
    parametric: Tuple[Tuple[int, int], ...]


@dataclass
class EnumerationResult:
    colorations: List[Coloration]
    families: List[ColorationFamily]

    @property
    def infinite(self) -> bool:
        return bool(self.families)


def delta_matrix(fq: FunctionalQuiver, colors, field: Field) -> list:
    """Matrix of the inner derivation delta(e_i) = sum over preimages minus a_i e_i."""
    n = fq.n
    zero = field.zero()
    mat = [[zero] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in fq.preimages(i):
            mat[j - 1][i - 1] = mat[j - 1][i - 1] + colors[j - 1]
        mat[i - 1][i - 1] = mat[i - 1][i - 1] - colors[i - 1]
    return mat


def verify_coloration(fq: FunctionalQuiver, colors, pres: TwoDimPresentation) -> bool:
    """Evaluate both vertexwise colouring equations exactly; the ground truth."""
    n = fq.n
    field = pres.field
    colors = [field.scalar(c) for c in colors]
    alpha, beta = pres.alpha, pres.beta
    zero = field.zero()
    phi = fq.phi
    for i in range(1, n + 1):
        lhs3 = [zero] * n
        lhs4 = [zero] * n
        for k in range(1, n + 1):
            if phi(phi(k)) == i:
                ak, aphik = colors[k - 1], colors[phi(k) - 1]
                lhs3[k - 1] = lhs3[k - 1] + (ak * aphik - beta)
                lhs4[k - 1] = lhs4[k - 1] + (ak + aphik + alpha)
        for j in range(1, n + 1):
            if phi(j) == i:
                aj, ai = colors[j - 1], colors[i - 1]
                lhs3[j - 1] = lhs3[j - 1] - (aj * (aj + ai) + alpha * aj)
                lhs4[j - 1] = lhs4[j - 1] - (aj + ai + alpha)
        ai = colors[i - 1]
        lhs3[i - 1] = lhs3[i - 1] + (ai * ai + alpha * ai + beta)
        if any(lhs3) or any(lhs4):
            return False
    return True


def pair_from_coloration(fq: FunctionalQuiver, colors,
                         pres: TwoDimPresentation) -> TwistingPair:
    """The (f, delta) pair of a coloured quiver, verified on construction."""
    from .algebras import power_of_field
    field = pres.field
    alg = power_of_field(field, fq.n)
    colors = [field.scalar(c) for c in colors]
    f_mat = set_map_endo_matrix(fq.targets, field)
    d_mat = delta_matrix(fq, colors, field)
    return make_pair(alg, pres, f_mat, d_mat, check=True)


def brute_force_colorations(fq: FunctionalQuiver,
                            pres: TwoDimPresentation) -> List[Coloration]:
    """Scan all |k|^n colour vectors against the oracle (finite fields)."""
    field = pres.field
    out = []
    for colors in product(list(field.elements()), repeat=fq.n):
        if verify_coloration(fq, colors, pres):
            out.append(Coloration(fq, tuple(colors)))
    return out


# --------------------------------------------------------------------------
# enumeration by the component rules
# --------------------------------------------------------------------------

def _tree_root_and_distance(fq: FunctionalQuiver, comp: ComponentInfo, v: int):
    """(attachment vertex on the cycle, tree root, distance to the root)."""
    w = v
    path = [v]
    while comp.depth[w] > 0:
        w = fq.phi(w)
        path.append(w)
    # path[-1] is on the cycle; path[-2] (if any) is the tree root
    return path[-1], (path[-2] if len(path) > 1 else None), len(path) - 2


def _component_choices(fq: FunctionalQuiver, comp: ComponentInfo,
                       pres: TwoDimPresentation):
    """All colourings of one component, or the symbol for a parametric family.

    Returns ``(list_of_dicts, parametric)`` where ``parametric`` is the
    cycle pair for a strict 2-cycle over an infinite field.
    """
    field = pres.field
    alpha = pres.alpha
    zero = field.zero()
    q_roots = []
    for r in pres.q_roots():
        if r not in q_roots:
            q_roots.append(r)
    if comp.s == 2 and comp.strict:
        i, j = comp.cycle
        if field.order is None:
            return None, (i, j)
        out = []
        for a in field.elements():
            out.append({i: a, j: -alpha - a})
        return out, None

    if comp.s == 1:
        loop = comp.loop_vertex
        roots = comp.tree_roots()
        if roots and not q_roots:
            return [], None
        out = []
        for assignment in product(q_roots, repeat=len(roots)):
            colors = {loop: zero}
            root_color = dict(zip(roots, assignment))
            for v in comp.vertices:
                if v == loop:
                    continue
                _, tree_root, dist = _tree_root_and_distance(fq, comp, v)
                r = root_color[tree_root]
                colors[v] = r if dist % 2 == 0 else -alpha - r
            out.append(colors)
        return _dedup(out), None

    # s-cycle with s > 2, or a non-strict 2-cycle: alternate roots of q
    if not q_roots:
        return [], None
    out = []
    for r in q_roots:
        colors = {}
        ok = True
        for t, v in enumerate(comp.cycle):
            colors[v] = r if t % 2 == 0 else -alpha - r
        for t, v in enumerate(comp.cycle):
            succ = fq.phi(v)
            if colors[succ] != -alpha - colors[v]:
                ok = False
                break
        if not ok:
            continue
        for v in sorted(comp.vertices):
            if comp.depth[v] == 0:
                continue
            attach, _, _ = _tree_root_and_distance(fq, comp, v)
            base = colors[attach]
            colors[v] = base if comp.depth[v] % 2 == 0 else -alpha - base
        out.append(colors)
    return _dedup(out), None


def _dedup(dicts: List[dict]) -> List[dict]:
    seen = []
    keys = set()
    for d in dicts:
        key = tuple(sorted((v, c.sort_key()) for v, c in d.items()))
        if key not in keys:
            keys.add(key)
            seen.append(d)
    return seen


def enumerate_colorations(fq: FunctionalQuiver,
                          pres: TwoDimPresentation) -> EnumerationResult:
    """All valid colourings, component by component.

    Over an infinite field a strict 2-cycle contributes a one-parameter
    family; those are returned symbolically instead of as colourings.
    """
    comps = components(fq)
    concrete_parts: List[List[dict]] = []
    parametric: List[Tuple[int, int]] = []
    for comp in comps:
        choices, param = _component_choices(fq, comp, pres)
        if param is not None:
            parametric.append(param)
        else:
            if not choices:
                return EnumerationResult([], [])
            concrete_parts.append(choices)
    families: List[ColorationFamily] = []
    colorations: List[Coloration] = []
    zero = pres.field.zero()
    combos = list(product(*concrete_parts)) if concrete_parts else [()]
    if parametric:
        for combo in combos:
            fixed: Dict[int, Scalar] = {}
            for part in combo:
                fixed.update(part)
            families.append(ColorationFamily(
                fq, tuple(sorted(fixed.items())), tuple(sorted(parametric))))
        return EnumerationResult([], families)
    for combo in combos:
        colors = [zero] * fq.n
        for part in combo:
            for v, c in part.items():
                colors[v - 1] = c
        col = Coloration(fq, tuple(colors))
        if not verify_coloration(fq, col.colors, pres):
            raise CertificationError(
                f"enumerated colouring fails the oracle: {fq.targets}, "
                f"{[str(c) for c in col.colors]}")
        colorations.append(col)
    colorations.sort(key=lambda c: tuple(x.sort_key() for x in c.colors))
    return EnumerationResult(colorations, [])


# --------------------------------------------------------------------------
# classification
# --------------------------------------------------------------------------

def component_quiver(fq: FunctionalQuiver, comp: ComponentInfo) -> GeneralQuiver:
    verts = tuple(sorted(comp.vertices))
    arrows = tuple((f"a{v}", v, fq.phi(v)) for v in verts)
    return GeneralQuiver(verts, arrows)


def _sorted_distinct_q_roots(pres: TwoDimPresentation) -> list:
    out = []
    for r in pres.q_roots():
        if r not in out:
            out.append(r)
    return sorted(out, key=lambda r: r.sort_key())


def classify_component(fq: FunctionalQuiver, comp: ComponentInfo,
                       col: Coloration, pres: TwoDimPresentation) -> AlgebraClassLabel:
    if comp.s == 2 and comp.strict:
        a = col.color(comp.cycle[0])
        if pres.q_value(a).is_zero():
            return TruncatedPath(component_quiver(fq, comp))
        return MatrixRing(2)
    if comp.s == 1:
        p_roots = pres.p_roots()
        if not p_roots:
            return QuotientPoly(pres.alpha, pres.beta)
        if p_roots[0] == p_roots[1]:
            return TruncatedPath(component_quiver(fq, comp).opposite())
        r1, r2 = _sorted_distinct_q_roots(pres)
        hat = cibils_transform(fq, comp, col.color_map(), (r1, r2))
        return TruncatedPath(hat.opposite())
    return TruncatedPath(component_quiver(fq, comp).opposite())


def classify(fq: FunctionalQuiver, col: Coloration,
             pres: TwoDimPresentation) -> AlgebraClassLabel:
    """The isomorphism class of the twisted product of a coloured quiver."""
    comps = components(fq)
    return product_label([classify_component(fq, comp, col, pres)
                          for comp in comps])


# --------------------------------------------------------------------------
# certification: explicit isomorphisms, verified
# --------------------------------------------------------------------------

def _w_vector(field, n, t: int, color: Scalar):
    """Coordinates of e_t (x) x + color * (e_t (x) 1) in the product basis."""
    vec = [field.zero()] * (2 * n)
    vec[t - 1] = color
    vec[n + t - 1] = field.one()
    return tuple(vec)


def _e_vector(field, n, t: int):
    vec = [field.zero()] * (2 * n)
    vec[t - 1] = field.one()
    return tuple(vec)


def _component_columns(fq, comp, col, pres, label) -> List[tuple]:
    """Images in the twisted product of the basis of the component's label algebra."""
    field = pres.field
    n = fq.n
    cmap = col.color_map()
    if isinstance(label, MatrixRing):
        i, j = comp.cycle
        a, b = cmap[i], cmap[j]
        qa = pres.q_value(a)
        # images of e_i(x)1, e_j(x)1, e_i(x)x, e_j(x)x inside M2, by columns
        psi_cols = [
            (field.one(), field.zero(), field.zero(), field.zero()),   # E11
            (field.zero(), field.zero(), field.zero(), field.one()),   # E22
            (-a, field.one(), field.zero(), field.zero()),             # E11*X
            (field.zero(), field.zero(), -qa, -b),                     # E22*X
        ]
        psi = [[psi_cols[c][r] for c in range(4)] for r in range(4)]
        inv = linalg.inverse(psi)
        if inv is None:
            raise CertificationError("matrix-case transition is singular")
        # columns of the inverse are images of E11, E12, E21, E22
        local = [(i, "1"), (j, "1"), (i, "x"), (j, "x")]
        cols = []
        for c in range(4):
            vec = [field.zero()] * (2 * n)
            for r, (v, kind) in enumerate(local):
                idx = v - 1 if kind == "1" else n + v - 1
                vec[idx] = inv[r][c]
            cols.append(tuple(vec))
        return cols
    if isinstance(label, QuotientPoly):
        v = comp.loop_vertex
        return [_e_vector(field, n, v), _w_vector(field, n, v, field.zero())]
    assert isinstance(label, TruncatedPath)
    quiver = label.quiver
    cols = []
    if comp.s == 1 and any(isinstance(x, str) for x in quiver.vertices):
        # hat transform: two fresh vertices "1", "2" split the loop idempotent
        r1, r2 = _sorted_distinct_q_roots(pres)
        loop = comp.loop_vertex
        for v in quiver.vertices:
            if v == "1":
                denom = (r1 - r2).inv()
                vec = [field.zero()] * (2 * n)
                vec[loop - 1] = r1 * denom
                vec[n + loop - 1] = denom
                cols.append(tuple(vec))
            elif v == "2":
                denom = (r2 - r1).inv()
                vec = [field.zero()] * (2 * n)
                vec[loop - 1] = r2 * denom
                vec[n + loop - 1] = denom
                cols.append(tuple(vec))
            else:
                cols.append(_e_vector(field, n, v))
        for _, _, t in quiver.arrows:
            cols.append(_w_vector(field, n, t, cmap[t]))
        return cols
    for v in quiver.vertices:
        cols.append(_e_vector(field, n, v))
    for _, _, t in quiver.arrows:
        cols.append(_w_vector(field, n, t, cmap[t]))
    return cols


def certify(fq: FunctionalQuiver, col: Coloration, pres: TwoDimPresentation,
            label: AlgebraClassLabel,
            twisted: Optional[StructAlgebra] = None) -> LinearMap:
    """Build and verify the explicit isomorphism label-algebra -> twisted product.

    Failure to verify raises ``CertificationError``: the classification and
    the construction must agree exactly.
    """
    if twisted is None:
        twisted = build_twisted_product(pair_from_coloration(fq, col.colors, pres))
    comps = components(fq)
    parts = list(label.parts) if isinstance(label, Product) else [label]
    if len(parts) != len(comps):
        raise CertificationError("label does not match the component structure")
    source = label.construct(pres.field)
    columns: List[tuple] = []
    for comp, part in zip(comps, parts):
        columns.extend(_component_columns(fq, comp, col, pres, part))
    if len(columns) != source.dim:
        raise CertificationError("image count does not match the label algebra")
    phi = LinearMap.from_columns(source, twisted, columns)
    if not check_morphism(phi):
        raise CertificationError(
            f"certification map is not a morphism for {label.render()}")
    if not phi.is_bijective():
        raise CertificationError(
            f"certification map is not bijective for {label.render()}")
    return phi


# --------------------------------------------------------------------------
# counting and reporting
# --------------------------------------------------------------------------

@dataclass
class CountResult:
    total: Optional[int]          # None when infinite
    infinite: bool
    families: int

    def render(self) -> str:
        if self.infinite:
            return f"infinite (1-parameter x {self.families})"
        return str(self.total)


def count_twisting_maps(n: int, pres: TwoDimPresentation) -> CountResult:
    total = 0
    families = 0
    infinite = False
    for targets in product(range(1, n + 1), repeat=n):
        fq = from_set_map(targets)
        result = enumerate_colorations(fq, pres)
        if result.infinite:
            infinite = True
            families += len(result.families)
        else:
            total += len(result.colorations)
    return CountResult(None if infinite else total, infinite, families)


def oracle_pair_set_equality(n: int, pres: TwoDimPresentation,
                             strategy: str = "solve") -> dict:
    """Compare the coloration enumerator with the brute-force pair oracle.

    For every set map on {1..n}, the enumerated colourings are translated
    into (f, delta) matrix pairs and compared, as sets, with the complete
    brute-force enumeration over all endomorphisms and derivation matrices.
    """
    from .algebras import power_of_field
    from .twisting import brute_force_pairs
    field = pres.field
    alg = power_of_field(field, n)
    by_f: Dict[tuple, set] = {}
    for pair in brute_force_pairs(alg, pres, strategy=strategy):
        key = pair.raw_key()
        by_f.setdefault(key[0], set()).add(key)
    mismatches = []
    total = 0
    for targets in product(range(1, n + 1), repeat=n):
        fq = from_set_map(targets)
        result = enumerate_colorations(fq, pres)
        enum_keys = set()
        f_mat = set_map_endo_matrix(targets, field)
        f_key = tuple(tuple(c.raw for c in row) for row in f_mat)
        for col in result.colorations:
            d = delta_matrix(fq, list(col.colors), field)
            enum_keys.add((f_key, tuple(tuple(c.raw for c in row) for row in d)))
        brute_keys = by_f.get(f_key, set())
        total += len(enum_keys)
        if enum_keys != brute_keys:
            mismatches.append({
                "set_map": list(targets),
                "enumerated": len(enum_keys),
                "brute_force": len(brute_keys),
            })
    return {"n": n, "field": field.spec_string(),
            "alpha": str(pres.alpha), "beta": str(pres.beta),
            "count": total, "ok": not mismatches, "mismatches": mismatches}


def duplicates_entries(n: int, pres: TwoDimPresentation,
                       do_certify: bool = True) -> List[dict]:
    """All coloured quivers with labels, for the JSON/table reports."""
    entries = []
    for targets in sorted(product(range(1, n + 1), repeat=n)):
        fq = from_set_map(targets)
        result = enumerate_colorations(fq, pres)
        for fam in result.families:
            entries.append({
                "set_map": list(targets),
                "kind": "family",
                "fixed_colors": {str(v): str(c) for v, c in fam.fixed},
                "parametric_cycles": [list(p) for p in fam.parametric],
                "label": "one-parameter family",
                "certified": False,
            })
        for col in result.colorations:
            label = classify(fq, col, pres)
            certified = False
            if do_certify:
                certify(fq, col, pres, label)
                certified = True
            entries.append({
                "set_map": list(targets),
                "kind": "concrete",
                "colors": [str(c) for c in col.colors],
                "label": label.render(),
                "certified": certified,
            })
    return entries
