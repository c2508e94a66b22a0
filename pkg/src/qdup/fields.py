"""Exact scalar arithmetic over Q, prime fields F_p, and quadratic extensions.

Three field kinds are supported:

* ``Rationals`` -- arbitrary-precision fractions,
* ``PrimeField(p)`` -- integers mod a prime ``p``,
* ``QuadExt(base, alpha, beta)`` -- the quotient ``base[t]/(t^2 - alpha*t + beta)``
  with the minimal polynomial required to be irreducible over the base.

Scalars are immutable wrappers around a raw payload (``Fraction``, ``int``,
or a coordinate pair) and support the usual operators.  No floating point is
used anywhere.

Text formats (used by all JSON output):

* scalars: ``"3"``, ``"-2/3"``, and ``"c0+c1*t"`` for extension elements;
* fields: ``"Q"``, ``"F5"``, ``"F3[t^2=2]"``, ``"Q[t^2=-1]"``; a char-2
  extension with a nonzero linear term is written ``"F2[t^2=t+1]"``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Iterator, Optional

from .errors import CharTwoError, FieldMismatchError, ZeroInputError


def is_prime(n: int) -> bool:
    """Trial-division primality check (fields here are tiny)."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Scalar:
    """An element of a :class:`Field`; immutable and exact."""

    __slots__ = ("field", "raw")

    def __init__(self, field: "Field", raw):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _coerce(self, other) -> Optional["Scalar"]:
        if isinstance(other, Scalar):
            if other.field == self.field:
                return other
            lifted = self.field.try_lift(other)
            if lifted is not None:
                return lifted
            raise FieldMismatchError(f"{other.field} != {self.field}")
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.raw_add(self.raw, o.raw))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.raw_sub(self.raw, o.raw))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.raw_sub(o.raw, self.raw))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.raw_mul(self.raw, o.raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.raw_mul(self.raw, self.field.raw_inv(o.raw)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field.raw_mul(o.raw, self.field.raw_inv(self.raw)))

    def __neg__(self):
        return Scalar(self.field, self.field.raw_neg(self.raw))

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inv() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inv(self) -> "Scalar":
        return Scalar(self.field, self.field.raw_inv(self.raw))

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.raw == o.raw

    def __hash__(self):
        return hash((self.field, self.raw))

    def __bool__(self):
        return self.raw != self.field.raw_zero()

    def is_zero(self) -> bool:
        return not self

    def __str__(self):
        return self.field.format_raw(self.raw)

    def __repr__(self):
        return f"{self.field.spec_string()}:{self}"

    def sort_key(self):
        return self.field.raw_sort_key(self.raw)


class Field:
    """Common interface of the three exact field kinds."""

    kind: str
    char: int
    order: Optional[int]  # None for infinite fields

    # raw-payload arithmetic, implemented by subclasses -----------------
    def raw_add(self, a, b):
        raise NotImplementedError

    def raw_sub(self, a, b):
        raise NotImplementedError

    def raw_mul(self, a, b):
        raise NotImplementedError

    def raw_neg(self, a):
        raise NotImplementedError

    def raw_inv(self, a):
        raise NotImplementedError

    def raw_zero(self):
        raise NotImplementedError

    def raw_one(self):
        raise NotImplementedError

    def raw_sort_key(self, a):
        raise NotImplementedError

    def format_raw(self, a) -> str:
        raise NotImplementedError

    def parse_raw(self, text: str):
        raise NotImplementedError

    # wrapped helpers ----------------------------------------------------
    def zero(self) -> Scalar:
        return Scalar(self, self.raw_zero())

    def one(self) -> Scalar:
        return Scalar(self, self.raw_one())

    def scalar(self, value) -> Scalar:
        """Coerce ``value`` (Scalar / int / Fraction / str / raw) into this field."""
        if isinstance(value, Scalar):
            if value.field == self:
                return value
            lifted = self.try_lift(value)
            if lifted is not None:
                return lifted
            raise FieldMismatchError(f"cannot coerce {value!r} into {self}")
        if isinstance(value, str):
            return Scalar(self, self.parse_raw(value))
        return Scalar(self, self.raw_from(value))

    def raw_from(self, value):
        raise NotImplementedError

    def try_lift(self, value: Scalar) -> Optional[Scalar]:
        """Lift a scalar of a related field (base of an extension), else None."""
        return None

    def elements(self) -> Iterator[Scalar]:
        if self.order is None:
            raise ValueError("cannot enumerate an infinite field")
        for raw in self.raw_elements():
            yield Scalar(self, raw)

    def raw_elements(self):
        raise ValueError("cannot enumerate an infinite field")

    def spec_string(self) -> str:
        raise NotImplementedError

    def __repr__(self):
        return self.spec_string()


class Rationals(Field):
    """The field of rational numbers, backed by ``fractions.Fraction``."""

    kind = "rationals"
    char = 0
    order = None

    def raw_add(self, a, b):
        return a + b

    def raw_sub(self, a, b):
        return a - b

    def raw_mul(self, a, b):
        return a * b

    def raw_neg(self, a):
        return -a

    def raw_inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def raw_zero(self):
        return Fraction(0)

    def raw_one(self):
        return Fraction(1)

    def raw_from(self, value):
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError(f"cannot build a rational from {value!r}")

    def raw_sort_key(self, a):
        return (a.numerator, a.denominator)

    def format_raw(self, a) -> str:
        return str(a)

    def parse_raw(self, text: str):
        return Fraction(text.strip())

    def spec_string(self) -> str:
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    """Integers modulo a prime ``p``, canonical representatives ``0..p-1``."""

    kind = "prime"

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.order = p

    def raw_add(self, a, b):
        return (a + b) % self.p

    def raw_sub(self, a, b):
        return (a - b) % self.p

    def raw_mul(self, a, b):
        return (a * b) % self.p

    def raw_neg(self, a):
        return (-a) % self.p

    def raw_inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def raw_zero(self):
        return 0

    def raw_one(self):
        return 1 % self.p

    def raw_from(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator vanishes mod {self.p}")
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        raise TypeError(f"cannot reduce {value!r} mod {self.p}")

    def raw_sort_key(self, a):
        return a

    def format_raw(self, a) -> str:
        return str(a % self.p)

    def parse_raw(self, text: str):
        return int(text.strip()) % self.p

    def raw_elements(self):
        return range(self.p)

    def spec_string(self) -> str:
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))


class QuadExt(Field):
    """Quadratic extension ``base[t]/(t^2 - alpha*t + beta)``.

    Elements are ``c0 + c1*t``; multiplication uses ``t^2 = alpha*t - beta``.
    Construction rejects reducible minimal polynomials: the quotient by a
    reducible quadratic is a ring, not a field, and is only modelled as a
    structure-constant algebra elsewhere.
    """

    kind = "quadext"

    def __init__(self, base: Field, alpha, beta):
        if not isinstance(base, (Rationals, PrimeField)):
            raise ValueError("extension base must be Q or a prime field")
        self.base = base
        self.alpha = base.scalar(alpha)
        self.beta = base.scalar(beta)
        if quad_roots(self.alpha, self.beta, base):
            raise ValueError(
                f"t^2 - ({self.alpha})t + ({self.beta}) has a root in {base}; "
                "not a field extension"
            )
        self.char = base.char
        self.order = None if base.order is None else base.order ** 2
        self._a = self.alpha.raw
        self._b = self.beta.raw

    def gen(self) -> Scalar:
        """The extension generator t."""
        return Scalar(self, (self.base.raw_zero(), self.base.raw_one()))

    def raw_add(self, x, y):
        badd = self.base.raw_add
        return (badd(x[0], y[0]), badd(x[1], y[1]))

    def raw_sub(self, x, y):
        bsub = self.base.raw_sub
        return (bsub(x[0], y[0]), bsub(x[1], y[1]))

    def raw_mul(self, x, y):
        # (x0 + x1 t)(y0 + y1 t) with t^2 = alpha t - beta
        b = self.base
        x0, x1 = x
        y0, y1 = y
        cross = b.raw_mul(x1, y1)
        c0 = b.raw_sub(b.raw_mul(x0, y0), b.raw_mul(self._b, cross))
        c1 = b.raw_add(
            b.raw_add(b.raw_mul(x0, y1), b.raw_mul(x1, y0)),
            b.raw_mul(self._a, cross),
        )
        return (c0, c1)

    def raw_neg(self, x):
        return (self.base.raw_neg(x[0]), self.base.raw_neg(x[1]))

    def raw_conj(self, x):
        # c0 + c1 t  ->  (c0 + c1*alpha) - c1 t  (the base-fixing automorphism)
        b = self.base
        return (b.raw_add(x[0], b.raw_mul(x[1], self._a)), b.raw_neg(x[1]))

    def raw_norm(self, x):
        # x * conj(x) = c0^2 + alpha c0 c1 + beta c1^2, an element of the base
        b = self.base
        c0, c1 = x
        return b.raw_add(
            b.raw_add(b.raw_mul(c0, c0), b.raw_mul(self._a, b.raw_mul(c0, c1))),
            b.raw_mul(self._b, b.raw_mul(c1, c1)),
        )

    def raw_inv(self, x):
        n = self.raw_norm(x)
        if n == self.base.raw_zero():
            raise ZeroDivisionError("inverse of zero")
        ninv = self.base.raw_inv(n)
        conj = self.raw_conj(x)
        return (self.base.raw_mul(conj[0], ninv), self.base.raw_mul(conj[1], ninv))

    def raw_zero(self):
        z = self.base.raw_zero()
        return (z, z)

    def raw_one(self):
        return (self.base.raw_one(), self.base.raw_zero())

    def raw_from(self, value):
        if isinstance(value, tuple) and len(value) == 2:
            return (self.base.raw_from(value[0]) if not isinstance(value[0], Scalar)
                    else value[0].raw,
                    self.base.raw_from(value[1]) if not isinstance(value[1], Scalar)
                    else value[1].raw)
        return (self.base.raw_from(value), self.base.raw_zero())

    def try_lift(self, value: Scalar) -> Optional[Scalar]:
        if value.field == self.base:
            return Scalar(self, (value.raw, self.base.raw_zero()))
        return None

    def coords(self, s: Scalar) -> tuple:
        """Coordinates (c0, c1) of ``s`` as base-field scalars."""
        return (Scalar(self.base, s.raw[0]), Scalar(self.base, s.raw[1]))

    def raw_sort_key(self, x):
        return (self.base.raw_sort_key(x[0]), self.base.raw_sort_key(x[1]))

    def format_raw(self, x) -> str:
        text = f"{self.base.format_raw(x[0])}+{self.base.format_raw(x[1])}*t"
        return text.replace("+-", "-")

    def parse_raw(self, text: str):
        text = text.strip().replace(" ", "")
        if "*t" not in text:
            return (self.base.parse_raw(text), self.base.raw_zero())
        head = text[: -len("*t")]
        split = max(head.rfind("+"), head.rfind("-", 1))
        if split <= 0:
            c0 = self.base.raw_zero()
            c1 = self.base.parse_raw(head)
        else:
            c0 = self.base.parse_raw(head[:split])
            sign = head[split]
            c1 = self.base.parse_raw(head[split + 1:])
            if sign == "-":
                c1 = self.base.raw_neg(c1)
        return (c0, c1)

    def raw_elements(self):
        if self.base.order is None:
            raise ValueError("cannot enumerate an infinite field")
        return (pair for pair in product(self.base.raw_elements(),
                                         self.base.raw_elements()))

    def spec_string(self) -> str:
        # t^2 = alpha*t - beta; written "t^2=c" when alpha == 0
        b = self.base
        c = b.format_raw(b.raw_neg(self._b))
        if self._a == b.raw_zero():
            inner = c
        else:
            a_txt = b.format_raw(self._a)
            lead = "t" if a_txt == "1" else f"{a_txt}t"
            inner = f"{lead}+{c}".replace("+-", "-")
        return f"{self.base.spec_string()}[t^2={inner}]"

    def __eq__(self, other):
        return (isinstance(other, QuadExt) and other.base == self.base
                and other._a == self._a and other._b == self._b)

    def __hash__(self):
        return hash(("ext", self.base, self._a, self._b))


QQ = Rationals()


def field_from_spec(text: str) -> Field:
    """Parse a field spec: ``Q``, ``F5``, ``F3[t^2=2]``, ``Q[t^2=-1]``, ``F2[t^2=t+1]``."""
    text = text.strip().replace(" ", "")
    inner = None
    if "[" in text:
        if not text.endswith("]"):
            raise ValueError(f"malformed field spec {text!r}")
        text, bracket = text.split("[", 1)
        bracket = bracket[:-1]
        if not bracket.startswith("t^2="):
            raise ValueError(f"malformed extension spec [{bracket}]")
        inner = bracket[len("t^2="):]
    if text == "Q":
        base: Field = QQ
    elif text.startswith("F"):
        base = PrimeField(int(text[1:]))
    else:
        raise ValueError(f"unknown field spec {text!r}")
    if inner is None:
        return base
    # inner is "c" or "[a]t+c" describing t^2 = a*t + c
    if "t" in inner:
        left, _, right = inner.partition("t")
        if left in ("", "+"):
            a = base.one()
        elif left == "-":
            a = -base.one()
        else:
            a = base.scalar(left.rstrip("*"))
        if right in ("", "+"):
            c = base.zero()
        else:
            c = base.scalar(right.lstrip("+"))
    else:
        a = base.zero()
        c = base.scalar(inner)
    return QuadExt(base, a, -c)


# --------------------------------------------------------------------------
# square roots and quadratic roots
# --------------------------------------------------------------------------

def _rational_sqrts(a: Fraction) -> list:
    if a < 0:
        return []
    if a == 0:
        return [Fraction(0)]
    np_, dp = math.isqrt(a.numerator), math.isqrt(a.denominator)
    if np_ * np_ == a.numerator and dp * dp == a.denominator:
        r = Fraction(np_, dp)
        return [r, -r]
    return []


def square_roots(s: Scalar) -> list:
    """All square roots of ``s`` in its own field (0, 1 or 2 of them)."""
    field = s.field
    if isinstance(field, Rationals):
        return [Scalar(field, r) for r in _rational_sqrts(s.raw)]
    if isinstance(field, PrimeField):
        return [Scalar(field, r) for r in range(field.p)
                if (r * r) % field.p == s.raw]
    if isinstance(field, QuadExt):
        if field.order is not None:
            return sorted(
                (Scalar(field, r) for r in field.raw_elements()
                 if field.raw_mul(r, r) == s.raw),
                key=lambda x: x.sort_key(),
            )
        return _quadext_sqrts_char0(field, s)
    raise TypeError(f"unsupported field {field!r}")


def _quadext_sqrts_char0(field: QuadExt, s: Scalar) -> list:
    # Solve (x + y t)^2 = a + b t over an extension of Q:
    #   x^2 - beta y^2 = a   and   2xy + alpha y^2 = b.
    base = field.base
    a = Scalar(base, s.raw[0])
    b = Scalar(base, s.raw[1])
    alpha, beta = field.alpha, field.beta
    found = []
    if b.is_zero():
        for x in square_roots(a):
            found.append((x, base.zero()))
        disc_min = alpha * alpha - 4 * beta
        for y in square_roots(4 * a / disc_min):
            if not y.is_zero():
                found.append((-alpha * y / 2, y))
    else:
        # eliminate x: (alpha^2 - 4 beta) u^2 - (2 alpha b + 4 a) u + b^2 = 0, u = y^2
        d = alpha * alpha - 4 * beta
        for u in quad_roots((2 * alpha * b + 4 * a) / d, b * b / d, base):
            for y in square_roots(u):
                if y.is_zero():
                    continue
                x = (b - alpha * y * y) / (2 * y)
                found.append((x, y))
    roots = []
    for x, y in found:
        cand = Scalar(field, (x.raw, y.raw))
        if cand * cand == s and cand not in roots:
            roots.append(cand)
    return sorted(roots, key=lambda r: r.sort_key())


def quad_roots(alpha, beta, field: Field) -> list:
    """Roots of ``x^2 - alpha*x + beta`` in ``field``, with multiplicity.

    Finite fields are scanned exhaustively; over Q the discriminant square
    test is used, and over an extension of Q the quadratic formula with an
    in-field square root.
    """
    alpha = field.scalar(alpha)
    beta = field.scalar(beta)
    if field.order is not None:
        roots = [Scalar(field, r) for r in field.raw_elements()
                 if field.raw_sub(field.raw_mul(r, r),
                                  field.raw_sub(field.raw_mul(alpha.raw, r),
                                                beta.raw))
                 == field.raw_zero()]
        roots.sort(key=lambda r: r.sort_key())
        if len(roots) == 1 and field.char != 2:
            return [roots[0], roots[0]]
        if len(roots) == 1 and field.char == 2:
            # x^2 - alpha x + beta with alpha == 0 is a square in char 2
            return [roots[0], roots[0]] if alpha.is_zero() else roots
        return roots
    disc = alpha * alpha - 4 * beta
    if disc.is_zero():
        r = alpha / 2
        return [r, r]
    sq = square_roots(disc)
    if not sq:
        return []
    s = max(sq, key=lambda r: r.sort_key())
    return sorted([(alpha + s) / 2, (alpha - s) / 2], key=lambda r: r.sort_key())


# --------------------------------------------------------------------------
# norms of quadratic extensions
# --------------------------------------------------------------------------

def conj(z: Scalar) -> Scalar:
    """The nontrivial base-fixing automorphism of a quadratic extension."""
    field = z.field
    if not isinstance(field, QuadExt):
        raise TypeError("conj is only defined on extension elements")
    return Scalar(field, field.raw_conj(z.raw))


def norm(ext: QuadExt, z) -> Scalar:
    """The norm ``z * conj(z)``, an element of the base field."""
    z = ext.scalar(z)
    return Scalar(ext.base, ext.raw_norm(z.raw))


class NormResult:
    """Outcome of a norm-equation search: yes (with witness), no, or unknown."""

    __slots__ = ("status", "witness")

    def __init__(self, status: str, witness: Optional[Scalar] = None):
        assert status in ("yes", "no", "unknown")
        self.status = status
        self.witness = witness

    @property
    def is_yes(self) -> bool:
        return self.status == "yes"

    @property
    def is_no(self) -> bool:
        return self.status == "no"

    def __repr__(self):
        if self.witness is not None:
            return f"NormResult(yes, witness={self.witness})"
        return f"NormResult({self.status})"


def is_norm(ext: QuadExt, c, bound: Optional[int] = None) -> NormResult:
    """Decide whether ``c`` (a base-field element) is a norm from ``ext``.

    Over a finite base this scans all extension elements and always decides.
    Over Q it is a semi-decision: a definite norm form refutes wrong signs
    immediately, otherwise witnesses are searched with numerators and
    denominators bounded by ``bound``.
    """
    c = ext.base.scalar(c)
    if c.is_zero():
        raise ZeroInputError("norm membership is asked for nonzero elements")
    if ext.order is not None:
        for raw in ext.raw_elements():
            if ext.raw_norm(raw) == c.raw:
                return NormResult("yes", Scalar(ext, raw))
        return NormResult("no")
    if bound is None:
        from .config import default_budgets
        bound = default_budgets().norm_bound
    # N(x + y t) = x^2 + alpha x y + beta y^2; definite iff 4 beta - alpha^2 > 0
    alpha, beta = ext.alpha.raw, ext.beta.raw
    if 4 * beta - alpha * alpha > 0 and c.raw < 0:
        return NormResult("no")
    for den in range(1, bound + 1):
        target = c.raw * den * den
        for nx in range(-bound, bound + 1):
            for ny in range(-bound, bound + 1):
                if nx * nx + alpha * nx * ny + beta * ny * ny == target:
                    witness = Scalar(
                        ext, (Fraction(nx, den), Fraction(ny, den)))
                    return NormResult("yes", witness)
    return NormResult("unknown")


def reduce_char_not2(alpha, beta, field: Field) -> Scalar:
    """The ``gamma`` with ``k[x]/(x^2 - alpha x + beta) ~ k[x]/(x^2 + gamma)``.

    Completing the square (x -> x + alpha/2) gives gamma = beta - alpha^2/4;
    the two quotients are then isomorphic via an affine substitution.  Tests
    certify the returned value against an independent isomorphism oracle.
    """
    if field.char == 2:
        raise CharTwoError("completing the square needs characteristic != 2")
    alpha = field.scalar(alpha)
    beta = field.scalar(beta)
    return beta - alpha * alpha / 4
