"""Symbolic isomorphism-class labels and their reference constructions.

A label names an algebra up to isomorphism: a matrix ring, the truncated
path algebra of a quiver, a quadratic quotient, a quaternion symbol, a named
one-parameter family member, or a direct product of labels.  Labels compare
and hash through canonical keys (quivers up to relabelling, products up to
reordering), while still carrying the concrete data needed to construct a
reference algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .algebras import (StructAlgebra, direct_product, matrix_algebra,
                       quotient_poly, truncated_path_algebra)
from .fields import Field, Scalar
from .quivers import GeneralQuiver


class AlgebraClassLabel:
    """Base class; subclasses implement ``key`` and ``construct``."""

    def key(self) -> tuple:
        raise NotImplementedError

    def construct(self, field: Field) -> StructAlgebra:
        raise NotImplementedError

    def render(self) -> str:
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, AlgebraClassLabel) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return self.render()


class MatrixRing(AlgebraClassLabel):
    def __init__(self, size: int = 2):
        self.size = size

    def key(self):
        return ("matrix", self.size)

    def construct(self, field):
        return matrix_algebra(field, self.size)

    def render(self):
        return f"M{self.size}(k)"


class TruncatedPath(AlgebraClassLabel):
    """Truncated path algebra of a concrete quiver (compared up to quiver iso)."""

    def __init__(self, quiver: GeneralQuiver):
        self.quiver = quiver
        self._key = None

    def key(self):
        if self._key is None:
            self._key = ("trunc", self.quiver.canonical_key())
        return self._key

    def construct(self, field):
        return truncated_path_algebra(field, self.quiver)

    def render(self):
        n, arrows = self.quiver.canonical_key()
        arrow_txt = ",".join(f"{s + 1}>{t + 1}" for s, t in arrows) if arrows else "-"
        return f"trunc_path[v={n};{arrow_txt}]"


class PathAlgebra(TruncatedPath):
    """Path algebra of a quiver without length-2 paths (equals its truncation)."""

    def render(self):
        n, arrows = self.quiver.canonical_key()
        arrow_txt = ",".join(f"{s + 1}>{t + 1}" for s, t in arrows) if arrows else "-"
        return f"path_alg[v={n};{arrow_txt}]"


class QuotientPoly(AlgebraClassLabel):
    def __init__(self, alpha: Scalar, beta: Scalar):
        self.alpha = alpha
        self.beta = beta

    def key(self):
        return ("quot", str(self.alpha), str(self.beta))

    def construct(self, field):
        return quotient_poly(field, self.alpha, self.beta)

    def render(self):
        return f"k[x]/(x^2-({self.alpha})x+({self.beta}))"


class Quaternion(AlgebraClassLabel):
    def __init__(self, a: Scalar, t: Scalar):
        self.a = a
        self.t = t

    def key(self):
        return ("quat", str(self.a), str(self.t))

    def construct(self, field):
        from .dim4 import quaternion_algebra
        return quaternion_algebra(field, self.a, self.t)

    def render(self):
        return f"quat[a={self.a},t={self.t}]"


class Family(AlgebraClassLabel):
    """A member of one of the named dimension-4 families A, X, B, C, D."""

    def __init__(self, name: str, params: Tuple[Scalar, ...]):
        assert name in ("A", "X", "B", "C", "D")
        self.name = name
        self.params = tuple(params)

    def key(self):
        return ("family", self.name) + tuple(str(p) for p in self.params)

    def construct(self, field):
        from .dim4 import FamilyParam, construct_family
        return construct_family(FamilyParam(self.name, self.params), field)

    def render(self):
        inner = ",".join(str(p) for p in self.params)
        return f"{self.name}[{inner}]"


class Product(AlgebraClassLabel):
    """Direct product of labels; order-insensitive for equality."""

    def __init__(self, parts):
        self.parts = tuple(parts)

    def key(self):
        return ("product",) + tuple(sorted(p.key() for p in self.parts))

    def construct(self, field):
        algs = [p.construct(field) for p in self.parts]
        out = algs[0]
        for nxt in algs[1:]:
            out = direct_product(out, nxt)
        return out

    def render(self):
        return " x ".join(p.render() for p in self.parts)


def product_label(parts) -> AlgebraClassLabel:
    """Wrap in a Product unless there is a single component."""
    parts = list(parts)
    if len(parts) == 1:
        return parts[0]
    return Product(parts)
