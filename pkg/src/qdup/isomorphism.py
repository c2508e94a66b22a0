"""Isomorphism testing: invariant fingerprints, simplicity, and search.

The search strategies:

* ``fingerprint`` -- compare cheap isomorphism invariants; a mismatch proves
  the algebras distinct.
* ``generators`` -- pick a small verified generating set of the source,
  enumerate candidate images in the target (filtered by element invariants),
  and extend multiplicatively.  Exhausting the candidates without a hit is a
  complete negative answer, reported as ``NoneFound`` with ``complete=True``.
* ``exhaustive`` -- enumerate all invertible matrices (tiny cases only).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Tuple

from . import linalg
from .algebras import LinearMap, StructAlgebra, check_morphism
from .config import Budgets, default_budgets
from .errors import BudgetExceededError, FieldMismatchError, NotInvolutiveError, NotMorphismError
from .fields import PrimeField


@dataclass(frozen=True)
class Fingerprint:
    commutative: bool
    center_dim: int
    commutator_dim: int
    idempotents: Optional[int]
    square_zero: Optional[int]
    simple: Optional[bool]
    units: Optional[int]

    def key(self) -> tuple:
        return (self.commutative, self.center_dim, self.commutator_dim,
                self.idempotents, self.square_zero, self.simple, self.units)


def _counting_allowed(alg: StructAlgebra, budgets: Budgets) -> bool:
    order = alg.field.order
    return order is not None and order ** alg.dim <= budgets.counting


def fingerprint(alg: StructAlgebra, budgets: Optional[Budgets] = None) -> Fingerprint:
    """Isomorphism-invariant record; counting entries are None over budget."""
    budgets = budgets or default_budgets()
    commutative = all(alg.table[i][j] == alg.table[j][i]
                      for i in range(alg.dim) for j in range(alg.dim))
    # center: kernel of the stacked maps v -> b_i v - v b_i
    rows = []
    for i in range(alg.dim):
        li = alg.left_mult_matrix(alg.basis_vec(i))
        ri = alg.right_mult_matrix(alg.basis_vec(i))
        for r in range(alg.dim):
            rows.append([li[r][c] - ri[r][c] for c in range(alg.dim)])
    center_dim = alg.dim - linalg.rank(rows)
    commutators = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            commutators.append(list(alg.sub(alg.table[i][j], alg.table[j][i])))
    commutator_dim = linalg.rank(commutators) if commutators else 0
    idem = sqz = units = None
    simple = None
    if _counting_allowed(alg, budgets):
        idem, sqz, units = _element_counts(alg)
        simple = is_simple(alg, budgets)
    return Fingerprint(commutative, center_dim, commutator_dim, idem, sqz, simple, units)


def _element_counts(alg: StructAlgebra):
    raw = alg.raw()
    idem = sqz = units = 0
    if raw is not None:
        p, dim = raw.p, raw.dim
        zero = tuple(0 for _ in range(dim))
        basis = [tuple(1 if t == j else 0 for t in range(dim)) for j in range(dim)]
        for u in raw.elements():
            sq = raw.mul(u, u)
            if sq == u:
                idem += 1
            if sq == zero:
                sqz += 1
            cols = [raw.mul(u, bj) for bj in basis]
            mat = [[cols[j][i] for j in range(dim)] for i in range(dim)]
            if linalg.rank_mod_p(mat, p) == dim:
                units += 1
        return idem, sqz, units
    zero = alg.zero_vec()
    for u in alg.elements():
        sq = alg.mul(u, u)
        if sq == u:
            idem += 1
        if sq == zero:
            sqz += 1
        if linalg.rank([list(r) for r in alg.left_mult_matrix(u)]) == alg.dim:
            units += 1
    return idem, sqz, units


def is_simple(alg: StructAlgebra, budgets: Optional[Budgets] = None) -> bool:
    """True iff every nonzero element generates the whole algebra as an ideal.

    The two-sided ideal closure of an element is computed by repeated left
    and right multiplication by basis elements; checking representatives with
    first nonzero coordinate scaled to one suffices.
    """
    budgets = budgets or default_budgets()
    order = alg.field.order
    if order is None or order ** alg.dim > budgets.counting:
        raise BudgetExceededError(
            f"simplicity scan needs |k|^dim <= {budgets.counting}")
    raw = alg.raw()
    if raw is not None:
        return _is_simple_raw(raw)
    return _is_simple_generic(alg)


def _projective_reps_raw(p: int, dim: int):
    for lead in range(dim):
        for tail in product(range(p), repeat=dim - lead - 1):
            yield tuple([0] * lead + [1] + list(tail))


def _is_simple_raw(raw) -> bool:
    p, dim = raw.p, raw.dim
    basis = [tuple(1 if t == j else 0 for t in range(dim)) for j in range(dim)]
    for e in _projective_reps_raw(p, dim):
        span = [list(e)]
        queue = [e]
        while queue and len(span) < dim:
            v = queue.pop()
            for b in basis:
                for w in (raw.mul(v, b), raw.mul(b, v)):
                    if linalg.rank_mod_p(span + [list(w)], p) > len(span):
                        red, _ = linalg.rref_mod_p(span + [list(w)], p)
                        span = [r for r in red if any(r)]
                        queue.append(w)
                        if len(span) == dim:
                            break
                if len(span) == dim:
                    break
        if len(span) < dim:
            return False
    return True


def _is_simple_generic(alg: StructAlgebra) -> bool:
    dim = alg.dim
    basis = [alg.basis_vec(j) for j in range(dim)]
    scalars = list(alg.field.elements())
    one = alg.field.one()
    zero = alg.field.zero()
    for lead in range(dim):
        for tail in product(scalars, repeat=dim - lead - 1):
            e = tuple([zero] * lead + [one] + list(tail))
            span = [list(e)]
            queue = [e]
            while queue and len(span) < dim:
                v = queue.pop()
                for b in basis:
                    for w in (alg.mul(v, b), alg.mul(b, v)):
                        if linalg.rank(span + [list(w)]) > len(span):
                            red, _ = linalg.rref(span + [list(w)])
                            span = [r for r in red if any(x for x in r)]
                            queue.append(w)
            if len(span) < dim:
                return False
    return True


# --------------------------------------------------------------------------
# fixed subalgebras
# --------------------------------------------------------------------------

def fixed_subalgebra(alg: StructAlgebra, g: LinearMap):
    """The fixed-point subalgebra of an involutive automorphism.

    Returns ``(sub, inclusion)``.  Raises when ``g`` is not an involution or
    not an algebra morphism.
    """
    if not check_morphism(g):
        raise NotMorphismError("the map is not an algebra endomorphism")
    gg = g.compose(g)
    if not linalg.mat_eq(gg.matrix, linalg.identity(alg.field, alg.dim)):
        raise NotInvolutiveError("the map does not square to the identity")
    # fixed space = kernel of (g - id)
    rows = [[g.matrix[i][j] - (alg.field.one() if i == j else alg.field.zero())
             for j in range(alg.dim)] for i in range(alg.dim)]
    basis = linalg.kernel_basis(rows, alg.field, alg.dim)
    m = len(basis)
    # closure under multiplication: every product must solve in the basis
    cols = linalg.transpose(basis)
    table = []
    for u in basis:
        row = []
        for v in basis:
            prod = alg.mul(tuple(u), tuple(v))
            coords = linalg.solve(cols, list(prod))
            if coords is None:
                raise NotMorphismError("fixed subspace is not closed under product")
            row.append(coords)
        table.append(row)
    unit_coords = linalg.solve(cols, list(alg.unit))
    if unit_coords is None:
        raise NotMorphismError("unit is not fixed by the involution")
    sub = StructAlgebra(alg.field, table, unit_coords,
                        [f"f{i+1}" for i in range(m)])
    incl = LinearMap.from_columns(sub, alg, [tuple(b) for b in basis])
    return sub, incl


# --------------------------------------------------------------------------
# generating sets and isomorphism search
# --------------------------------------------------------------------------

@dataclass
class GeneratorData:
    gen_indices: List[int]            # basis indices chosen as generators
    words: List[tuple]                # ("unit",) | ("gen", i) | ("mul", a, b)
    value_words: List[int]            # indices of words whose values form a basis
    values: List[tuple]               # value of each word in the source algebra
    expansions: dict                  # (wi, wj) -> coords of value_i*value_j


def generating_words(alg: StructAlgebra) -> GeneratorData:
    """Greedy minimal generating set with a word certificate.

    Basis elements are added one at a time, each time choosing the element
    that most increases the generated subalgebra (ties to the lowest index),
    until the closure spans.  Each closure element carries a word recording
    how it is built from unit and generators.
    """
    dim = alg.dim

    def closure(gen_idx: List[int]):
        words = [("unit",)] + [("gen", i) for i in range(len(gen_idx))]
        values = [alg.unit] + [alg.basis_vec(i) for i in gen_idx]
        span_rows: List[list] = []
        basis_words: List[int] = []

        def try_add(w: int) -> bool:
            candidate = span_rows + [list(values[w])]
            if linalg.rank(candidate) > len(span_rows):
                red, _ = linalg.rref(candidate)
                span_rows.clear()
                span_rows.extend(r for r in red if any(x for x in r))
                basis_words.append(w)
                return True
            return False

        for w in range(len(words)):
            try_add(w)
        frontier = list(range(len(words)))
        while frontier and len(span_rows) < dim:
            new_frontier = []
            for a in list(basis_words):
                for b in frontier:
                    for (x, y) in ((a, b), (b, a)):
                        prod = alg.mul(values[x], values[y])
                        if linalg.rank(span_rows + [list(prod)]) > len(span_rows):
                            words.append(("mul", x, y))
                            values.append(prod)
                            w = len(words) - 1
                            try_add(w)
                            new_frontier.append(w)
                            if len(span_rows) == dim:
                                break
                    if len(span_rows) == dim:
                        break
                if len(span_rows) == dim:
                    break
            frontier = new_frontier
        return len(span_rows), words, values, basis_words

    chosen: List[int] = []
    best_rank = closure([])[0]
    while True:
        rank_now, words, values, basis_words = closure(chosen)
        if rank_now == dim:
            break
        best = None
        for cand in range(dim):
            if cand in chosen:
                continue
            r = closure(chosen + [cand])[0]
            if best is None or r > best[0]:
                best = (r, cand)
        chosen.append(best[1])
    # expansions of all word-pair products in the value-word basis
    cols = linalg.transpose([list(values[w]) for w in basis_words])
    expansions = {}
    for a in basis_words:
        for b in basis_words:
            prod = alg.mul(values[a], values[b])
            expansions[(a, b)] = tuple(linalg.solve(cols, list(prod)))
    return GeneratorData(chosen, words, basis_words, values, expansions)


@dataclass
class IsoResult:
    kind: str                      # "iso" | "distinct" | "none"
    map: Optional[LinearMap] = None
    reason: str = ""
    complete: bool = False

    @property
    def found(self) -> bool:
        return self.kind == "iso"


def _element_profile(alg: StructAlgebra, v) -> tuple:
    """(minimal polynomial degree+coefficients, L-rank, R-rank): iso-invariant."""
    powers = [alg.unit, v]
    while True:
        rows = [list(p) for p in powers]
        if linalg.rank(rows) < len(powers):
            break
        powers.append(alg.mul(powers[-1], v))
    dep = linalg.solve(linalg.transpose([list(p) for p in powers[:-1]]),
                       list(powers[-1]))
    minpoly = tuple(str(c) for c in dep)
    lrank = linalg.rank([list(r) for r in alg.left_mult_matrix(v)])
    rrank = linalg.rank([list(r) for r in alg.right_mult_matrix(v)])
    return (len(powers) - 1, minpoly, lrank, rrank)


def iso_search(a: StructAlgebra, b: StructAlgebra, strategy: str = "auto",
               budgets: Optional[Budgets] = None) -> IsoResult:
    """Search for an algebra isomorphism a -> b.

    ``ProvedDistinct`` (kind="distinct") is only emitted on a fingerprint
    mismatch; an exhausted generator search reports kind="none" with
    ``complete=True``, which is equally conclusive because the generating
    set is verified to generate.
    """
    budgets = budgets or default_budgets()
    if a.field != b.field:
        raise FieldMismatchError("isomorphism needs a common field")
    if a.dim != b.dim:
        return IsoResult("distinct", reason="dimension")
    if strategy in ("auto", "fingerprint"):
        fa, fb = fingerprint(a, budgets), fingerprint(b, budgets)
        if fa.key() != fb.key():
            for name in ("commutative", "center_dim", "commutator_dim",
                         "idempotents", "square_zero", "simple", "units"):
                if getattr(fa, name) != getattr(fb, name):
                    return IsoResult("distinct", reason=name)
        if strategy == "fingerprint":
            return IsoResult("none", complete=False)
    if strategy == "exhaustive":
        return _iso_exhaustive(a, b, budgets)
    return _iso_generators(a, b, budgets)


def _finish(a, b, phi: LinearMap) -> IsoResult:
    assert check_morphism(phi) and phi.is_bijective()
    return IsoResult("iso", map=phi, complete=True)


def _iso_exhaustive(a: StructAlgebra, b: StructAlgebra, budgets: Budgets) -> IsoResult:
    order = a.field.order
    if order is None or order ** (a.dim * a.dim) > budgets.matrix_enum:
        raise BudgetExceededError("matrix enumeration over budget")
    scalars = list(a.field.elements())
    n = a.dim
    for entries in product(scalars, repeat=n * n):
        matrix = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        phi = LinearMap(a, b, matrix)
        if phi.rank() == n and check_morphism(phi):
            return _finish(a, b, phi)
    return IsoResult("none", complete=True)


def _iso_generators(a: StructAlgebra, b: StructAlgebra, budgets: Budgets) -> IsoResult:
    order = a.field.order
    if order is None:
        raise BudgetExceededError("generator search needs a finite field")
    gen = generating_words(a)
    profiles = [_element_profile(a, a.basis_vec(i)) for i in gen.gen_indices]
    raw = a.raw() is not None and b.raw() is not None
    candidates: List[list] = []
    for prof in profiles:
        pool = [v for v in b.elements() if _element_profile(b, v) == prof]
        candidates.append(pool)
    total = 1
    for pool in candidates:
        total *= len(pool)
    if total > budgets.iso_candidates:
        raise BudgetExceededError(f"{total} candidate tuples over budget")
    if raw:
        hit = _scan_candidates_raw(a, b, gen, candidates)
    else:
        hit = _scan_candidates_generic(a, b, gen, candidates)
    if hit is None:
        return IsoResult("none", complete=True)
    return _finish(a, b, hit)


def _eval_words(alg: StructAlgebra, gen: GeneratorData, images):
    values = []
    for word in gen.words:
        if word[0] == "unit":
            values.append(alg.unit)
        elif word[0] == "gen":
            values.append(images[word[1]])
        else:
            values.append(alg.mul(values[word[1]], values[word[2]]))
    return values


def _scan_candidates_generic(a, b, gen: GeneratorData, candidates):
    cols_a = linalg.transpose([list(gen.values[w]) for w in gen.value_words])
    inv_a = linalg.inverse(cols_a)
    for images in product(*candidates):
        values = _eval_words(b, gen, images)
        ok = True
        for (wi, wj), coords in gen.expansions.items():
            prod = b.mul(values[wi], values[wj])
            combo = b.zero_vec()
            for c, w in zip(coords, gen.value_words):
                combo = b.add(combo, b.smul(c, values[w]))
            if prod != combo:
                ok = False
                break
        if not ok:
            continue
        cols_b = linalg.transpose([list(values[w]) for w in gen.value_words])
        if linalg.rank(cols_b) < a.dim:
            continue
        phi = LinearMap(a, b, linalg.mat_mul(cols_b, inv_a))
        if check_morphism(phi) and phi.is_bijective():
            return phi
    return None


def _scan_candidates_raw(a, b, gen: GeneratorData, candidates):
    rawb = b.raw()
    p = rawb.p
    dim = a.dim
    cols_a = linalg.transpose([list(gen.values[w]) for w in gen.value_words])
    inv_a = linalg.inverse(cols_a)
    raw_candidates = [[tuple(c.raw for c in v) for v in pool] for pool in candidates]
    exp_items = [((wi, wj), tuple(c.raw for c in coords))
                 for (wi, wj), coords in gen.expansions.items()]
    words = gen.words
    value_words = gen.value_words
    unit = rawb.unit
    for images in product(*raw_candidates):
        values: List[tuple] = []
        for word in words:
            if word[0] == "unit":
                values.append(unit)
            elif word[0] == "gen":
                values.append(images[word[1]])
            else:
                values.append(rawb.mul(values[word[1]], values[word[2]]))
        ok = True
        for (wi, wj), coords in exp_items:
            prod = rawb.mul(values[wi], values[wj])
            combo = [0] * dim
            for c, w in zip(coords, value_words):
                if c:
                    vw = values[w]
                    for k in range(dim):
                        combo[k] += c * vw[k]
            if any((combo[k] - prod[k]) % p for k in range(dim)):
                ok = False
                break
        if not ok:
            continue
        cols_b = [[values[w][i] for w in value_words] for i in range(dim)]
        if linalg.rank_mod_p(cols_b, p) < dim:
            continue
        cols_scal = [[b.field.scalar(x) for x in row] for row in cols_b]
        phi = LinearMap(a, b, linalg.mat_mul(cols_scal, inv_a))
        if check_morphism(phi) and phi.is_bijective():
            return phi
    return None
