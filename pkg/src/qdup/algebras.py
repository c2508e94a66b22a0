"""Finite-dimensional unital algebras given by structure constants.

A ``StructAlgebra`` stores the full multiplication table ``table[i][j]`` =
coordinates of ``b_i * b_j``; everything downstream (morphism checks,
twisted products, invariants) is plain linear algebra over the table.
Constructors are provided for every algebra the classification needs.
"""

from __future__ import annotations

from itertools import product
from typing import List, Optional, Sequence, Tuple

from . import linalg
from .errors import FieldMismatchError
from .fields import Field, PrimeField, QuadExt, Scalar
from .quivers import GeneralQuiver


Vector = Tuple[Scalar, ...]


class StructAlgebra:
    """A unital associative algebra presented by its structure constants."""

    def __init__(self, field: Field, table, unit=None, labels=None):
        self.field = field
        self.dim = len(table)
        self.table = tuple(tuple(tuple(field.scalar(c) for c in cell)
                                 for cell in row) for row in table)
        self.unit = None if unit is None else tuple(field.scalar(c) for c in unit)
        self.labels = None if labels is None else tuple(labels)
        self._raw = None

    # vector helpers -----------------------------------------------------
    def zero_vec(self) -> Vector:
        return tuple(self.field.zero() for _ in range(self.dim))

    def basis_vec(self, i: int) -> Vector:
        one = self.field.one()
        zero = self.field.zero()
        return tuple(one if j == i else zero for j in range(self.dim))

    def vec(self, coords) -> Vector:
        return tuple(self.field.scalar(c) for c in coords)

    def add(self, u: Vector, v: Vector) -> Vector:
        return tuple(x + y for x, y in zip(u, v))

    def sub(self, u: Vector, v: Vector) -> Vector:
        return tuple(x - y for x, y in zip(u, v))

    def smul(self, c: Scalar, u: Vector) -> Vector:
        return tuple(c * x for x in u)

    def mul(self, u: Vector, v: Vector) -> Vector:
        out = [self.field.zero()] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                c = ui * vj
                cell = self.table[i][j]
                for k in range(self.dim):
                    if cell[k]:
                        out[k] = out[k] + c * cell[k]
        return tuple(out)

    def elements(self):
        """All coordinate vectors (finite fields only)."""
        scalars = list(self.field.elements())
        for coords in product(scalars, repeat=self.dim):
            yield coords

    def left_mult_matrix(self, u: Vector) -> list:
        """Matrix of v -> u*v in the chosen basis (columns are u*b_j)."""
        cols = [self.mul(u, self.basis_vec(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def right_mult_matrix(self, u: Vector) -> list:
        cols = [self.mul(self.basis_vec(j), u) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def label_of(self, i: int) -> str:
        return self.labels[i] if self.labels else f"b{i}"

    def raw(self) -> Optional["RawAlgebra"]:
        """Plain-int mirror of the table for prime fields, else None."""
        if self._raw is None and isinstance(self.field, PrimeField):
            self._raw = RawAlgebra(self)
        return self._raw

    def __repr__(self):
        return f"StructAlgebra(dim={self.dim}, field={self.field})"


class RawAlgebra:
    """Int-coordinate mirror of a prime-field algebra, for hot scans."""

    __slots__ = ("p", "dim", "table", "unit")

    def __init__(self, alg: StructAlgebra):
        self.p = alg.field.p
        self.dim = alg.dim
        self.table = tuple(tuple(tuple(c.raw for c in cell) for cell in row)
                           for row in alg.table)
        self.unit = None if alg.unit is None else tuple(c.raw for c in alg.unit)

    def mul(self, u, v):
        dim, p, table = self.dim, self.p, self.table
        out = [0] * dim
        for i in range(dim):
            ui = u[i]
            if not ui:
                continue
            row = table[i]
            for j in range(dim):
                vj = v[j]
                if not vj:
                    continue
                c = ui * vj
                cell = row[j]
                for k in range(dim):
                    if cell[k]:
                        out[k] += c * cell[k]
        return tuple(x % p for x in out)

    def elements(self):
        return product(range(self.p), repeat=self.dim)


class LinearMap:
    """A linear map between algebras; ``matrix`` is target-dim x source-dim."""

    def __init__(self, source: StructAlgebra, target: StructAlgebra, matrix):
        self.source = source
        self.target = target
        self.matrix = tuple(tuple(target.field.scalar(c) for c in row)
                            for row in matrix)
        if len(self.matrix) != target.dim or any(len(r) != source.dim
                                                 for r in self.matrix):
            raise ValueError("matrix shape does not match source/target dims")

    def apply(self, v: Vector) -> Vector:
        return tuple(sum((row[j] * v[j] for j in range(1, len(v))),
                         row[0] * v[0]) for row in self.matrix)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.matrix)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        return LinearMap(inner.source, self.target,
                         linalg.mat_mul(self.matrix, inner.matrix))

    def rank(self) -> int:
        return linalg.rank([list(r) for r in self.matrix])

    def is_bijective(self) -> bool:
        return self.source.dim == self.target.dim and self.rank() == self.source.dim

    def inverse(self) -> "LinearMap":
        inv = linalg.inverse([list(r) for r in self.matrix])
        if inv is None:
            raise ValueError("map is not invertible")
        return LinearMap(self.target, self.source, inv)

    @staticmethod
    def identity(alg: StructAlgebra) -> "LinearMap":
        return LinearMap(alg, alg, linalg.identity(alg.field, alg.dim))

    @staticmethod
    def from_columns(source: StructAlgebra, target: StructAlgebra,
                     columns: Sequence[Vector]) -> "LinearMap":
        matrix = [[columns[j][i] for j in range(source.dim)]
                  for i in range(target.dim)]
        return LinearMap(source, target, matrix)

    def __repr__(self):
        return f"LinearMap({self.source.dim} -> {self.target.dim})"


class AlgebraReport:
    """Outcome of the exhaustive associativity/unit check."""

    def __init__(self, associative: bool, unital: bool, failure=None):
        self.associative = associative
        self.unital = unital
        self.failure = failure  # first failing triple (i, j, k), if any

    @property
    def ok(self) -> bool:
        return self.associative and self.unital

    def __repr__(self):
        return (f"AlgebraReport(associative={self.associative}, "
                f"unital={self.unital}, failure={self.failure})")


def check_algebra(alg: StructAlgebra) -> AlgebraReport:
    """Exhaustively check associativity on basis triples and the unit laws.

    When no unit vector is stored, a two-sided identity is searched for by
    solving the linear unit equations; failure to find one reports
    ``unital=False`` rather than raising.
    """
    raw = alg.raw()
    if raw is not None:
        associative, failure = _check_assoc_raw(raw)
    else:
        associative, failure = _check_assoc_generic(alg)
    if alg.unit is not None:
        unital = _is_unit(alg, alg.unit)
    else:
        unital = _find_unit(alg) is not None
    return AlgebraReport(associative, unital, failure)


def _check_assoc_generic(alg: StructAlgebra):
    for i in range(alg.dim):
        bi = alg.basis_vec(i)
        for j in range(alg.dim):
            bij = alg.table[i][j]
            for k in range(alg.dim):
                left = alg.mul(bij, alg.basis_vec(k))
                right = alg.mul(bi, alg.table[j][k])
                if left != right:
                    return False, (i, j, k)
    return True, None


def _check_assoc_raw(raw: RawAlgebra):
    dim = raw.dim
    for i in range(dim):
        for j in range(dim):
            bij = raw.table[i][j]
            for k in range(dim):
                left = raw.mul(bij, tuple(1 if t == k else 0 for t in range(dim)))
                right = raw.mul(tuple(1 if t == i else 0 for t in range(dim)),
                                raw.table[j][k])
                if left != right:
                    return False, (i, j, k)
    return True, None


def _is_unit(alg: StructAlgebra, u: Vector) -> bool:
    return all(alg.mul(u, alg.basis_vec(j)) == alg.basis_vec(j)
               and alg.mul(alg.basis_vec(j), u) == alg.basis_vec(j)
               for j in range(alg.dim))


def _find_unit(alg: StructAlgebra) -> Optional[Vector]:
    # solve u*b_j = b_j and b_j*u = b_j as a linear system in u
    rows, rhs = [], []
    for j in range(alg.dim):
        for k in range(alg.dim):
            rows.append([alg.table[i][j][k] for i in range(alg.dim)])
            rhs.append(alg.field.one() if k == j else alg.field.zero())
            rows.append([alg.table[j][i][k] for i in range(alg.dim)])
            rhs.append(alg.field.one() if k == j else alg.field.zero())
    sol = linalg.solve(rows, rhs)
    if sol is None:
        return None
    u = tuple(sol)
    return u if _is_unit(alg, u) else None


def check_morphism(phi: LinearMap) -> bool:
    """True iff phi maps unit to unit and is multiplicative on basis pairs."""
    src, tgt = phi.source, phi.target
    if src.field != tgt.field:
        raise FieldMismatchError("morphism check needs a common field")
    if phi.apply(src.unit) != tgt.unit:
        return False
    images = [phi.column(j) for j in range(src.dim)]
    for i in range(src.dim):
        for j in range(src.dim):
            if phi.apply(src.table[i][j]) != tgt.mul(images[i], images[j]):
                return False
    return True


# --------------------------------------------------------------------------
# constructors
# --------------------------------------------------------------------------

def power_of_field(field: Field, n: int) -> StructAlgebra:
    """k^n with pointwise product: e_i e_j = delta_ij e_i."""
    zero, one = field.zero(), field.one()
    table = [[[one if (i == j == k) else zero for k in range(n)]
              for j in range(n)] for i in range(n)]
    unit = [one] * n
    return StructAlgebra(field, table, unit, [f"e{i+1}" for i in range(n)])


def quotient_poly(field: Field, alpha, beta) -> StructAlgebra:
    """k[x]/(x^2 - alpha x + beta) on the basis {1, x}."""
    alpha = field.scalar(alpha)
    beta = field.scalar(beta)
    zero, one = field.zero(), field.one()
    table = [
        [[one, zero], [zero, one]],
        [[zero, one], [-beta, alpha]],
    ]
    return StructAlgebra(field, table, [one, zero], ["1", "x"])


def matrix_algebra(field: Field, n: int = 2) -> StructAlgebra:
    """Full matrix algebra on the basis E_ij (row-major)."""
    dim = n * n
    zero, one = field.zero(), field.one()

    def idx(i, j):
        return i * n + j

    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        cell = [zero] * dim
                        cell[idx(i, l)] = one
                        table[idx(i, j)][idx(k, l)] = cell
    unit = [zero] * dim
    for i in range(n):
        unit[idx(i, i)] = one
    labels = [f"E{i+1}{j+1}" for i in range(n) for j in range(n)]
    return StructAlgebra(field, table, unit, labels)


def truncated_path_algebra(field: Field, quiver: GeneralQuiver) -> StructAlgebra:
    """Path algebra modulo paths of length >= 2; basis = vertices + arrows.

    Arrows compose like maps: for a: s -> t the nonzero vertex products are
    ``v_t * a = a`` and ``a * v_s = a``.
    """
    verts = list(quiver.vertices)
    arrows = list(quiver.arrows)
    dim = len(verts) + len(arrows)
    vidx = {v: i for i, v in enumerate(verts)}
    zero, one = field.zero(), field.one()
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]

    def unit_cell(k):
        cell = [zero] * dim
        cell[k] = one
        return cell

    for v, i in vidx.items():
        table[i][i] = unit_cell(i)
    for a, (lab, s, t) in enumerate(arrows):
        ai = len(verts) + a
        table[ai][vidx[s]] = unit_cell(ai)   # a * v_s = a
        table[vidx[t]][ai] = unit_cell(ai)   # v_t * a = a
    unit = [one] * len(verts) + [zero] * len(arrows)
    labels = [str(v) for v in verts] + [str(lab) for lab, _, _ in arrows]
    return StructAlgebra(field, table, unit, labels)


def direct_product(a: StructAlgebra, b: StructAlgebra) -> StructAlgebra:
    if a.field != b.field:
        raise FieldMismatchError("direct product needs a common field")
    field = a.field
    dim = a.dim + b.dim
    zero = field.zero()
    table = [[[zero] * dim for _ in range(dim)] for _ in range(dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            cell = list(a.table[i][j]) + [zero] * b.dim
            table[i][j] = cell
    for i in range(b.dim):
        for j in range(b.dim):
            cell = [zero] * a.dim + list(b.table[i][j])
            table[a.dim + i][a.dim + j] = cell
    unit = list(a.unit) + list(b.unit)
    labels = [f"L.{a.label_of(i)}" for i in range(a.dim)] + \
             [f"R.{b.label_of(i)}" for i in range(b.dim)]
    return StructAlgebra(field, table, unit, labels)


def opposite(a: StructAlgebra) -> StructAlgebra:
    table = [[a.table[j][i] for j in range(a.dim)] for i in range(a.dim)]
    return StructAlgebra(a.field, table, a.unit, a.labels)


def scalar_extension(a: StructAlgebra, ext: QuadExt) -> StructAlgebra:
    """The same table read over the extension field."""
    if ext.base != a.field:
        raise FieldMismatchError("extension base must match the algebra field")
    table = [[[ext.scalar(c) for c in cell] for cell in row] for row in a.table]
    unit = [ext.scalar(c) for c in a.unit]
    return StructAlgebra(ext, table, unit, a.labels)


def restrict_scalars(a: StructAlgebra) -> StructAlgebra:
    """View an algebra over a quadratic extension as a base-field algebra.

    Basis: b_1, ..., b_n, t*b_1, ..., t*b_n where t is the extension generator.
    """
    ext = a.field
    if not isinstance(ext, QuadExt):
        raise FieldMismatchError("restriction needs an extension field")
    base = ext.base
    n = a.dim
    t = ext.gen()

    def split(vec):
        # coordinates of vec over the base: (c0 parts, c1 parts)
        flat = []
        for c in vec:
            c0, c1 = ext.coords(c)
            flat.append((c0, c1))
        return [x for x, _ in flat], [y for _, y in flat]

    table = []
    unit0, unit1 = split(a.unit)
    basis_elems = []
    for i in range(n):
        basis_elems.append(a.basis_vec(i))
    for i in range(n):
        basis_elems.append(a.smul(t, a.basis_vec(i)))
    for u in basis_elems:
        row = []
        for v in basis_elems:
            c0, c1 = split(a.mul(u, v))
            row.append(list(c0) + list(c1))
        table.append(row)
    unit = list(unit0) + list(unit1)
    labels = [a.label_of(i) for i in range(n)] + [f"t*{a.label_of(i)}" for i in range(n)]
    return StructAlgebra(base, table, unit, labels)


# --------------------------------------------------------------------------
# JSON (schema "algebra/v1")
# --------------------------------------------------------------------------

def algebra_to_json(alg: StructAlgebra) -> dict:
    fmt = alg.field.format_raw
    return {
        "schema": "algebra/v1",
        "field": alg.field.spec_string(),
        "dim": alg.dim,
        "labels": list(alg.labels) if alg.labels else None,
        "unit": [fmt(c.raw) for c in alg.unit],
        "table": [[[fmt(c.raw) for c in cell] for cell in row]
                  for row in alg.table],
    }


def algebra_from_json(doc: dict) -> StructAlgebra:
    from .fields import field_from_spec
    if doc.get("schema") != "algebra/v1":
        raise ValueError("not an algebra/v1 document")
    field = field_from_spec(doc["field"])
    table = [[[field.scalar(c) for c in cell] for cell in row]
             for row in doc["table"]]
    unit = [field.scalar(c) for c in doc["unit"]]
    return StructAlgebra(field, table, unit, doc.get("labels"))
