"""Dense univariate polynomials over an exact coefficient domain.

A :class:`Poly` carries its coefficient domain and a variable tag (``X``,
``Y``, ``T`` or ``Z``).  Polynomials over a :class:`PolyRing` give the
two-variable views used throughout the package, e.g. ``Q[X][T]`` is
``Poly(..., PolyRing(QQ, "X"), "T")``.  Arithmetic between polynomials in
different variables is only allowed when one of them is a coefficient of
the other; anything else raises :class:`VariableMismatch`.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .errors import (
    DivisionByZero,
    ExactDivisionError,
    FieldMismatch,
    UndefinedResult,
    UnsupportedDivision,
    VariableMismatch,
)
from .numeric import ExtElement, ExtField, FpElement, PrimeField

VARIABLES = ("X", "Y", "T", "Z")


@dataclass(frozen=True)
class PolyRing:
    """The ring ``base[var]``; itself usable as a coefficient domain."""

    base: Any
    var: str
    is_field = False
    is_finite = False

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    @property
    def zero(self) -> Poly:
        return Poly._new([], self.base, self.var)

    @property
    def one(self) -> Poly:
        return Poly._new([self.base.one], self.base, self.var)

    @property
    def gen(self) -> Poly:
        return Poly._new([self.base.zero, self.base.one], self.base, self.var)

    def convert(self, x) -> Poly:
        if isinstance(x, Poly) and x.var == self.var:
            if x.domain != self.base:
                raise FieldMismatch(f"{x.domain} polynomial used in {self}")
            return x
        return Poly._new([self.base.convert(x)], self.base, self.var)

    def contains(self, x) -> bool:
        return isinstance(x, Poly) and x.var == self.var and x.domain == self.base

    @staticmethod
    def is_zero(a) -> bool:
        return not a.coeffs

    def exquo(self, a: Poly, b: Poly) -> Poly:
        return a.exquo(b)

    def __str__(self) -> str:
        return f"{self.base}[{self.var}]"


def ring_of(domain, *variables: str):
    """Nested polynomial ring; ``ring_of(QQ, "X", "T")`` is ``Q[X][T]``."""
    for v in variables[:-1]:
        domain = PolyRing(domain, v)
    return domain


class Poly:
    __slots__ = ("coeffs", "domain", "var")

    def __init__(self, coeffs: Iterable = (), domain=None, var: str = "Y"):
        if domain is None:
            raise TypeError("a coefficient domain is required")
        if var not in VARIABLES:
            raise VariableMismatch(f"unknown variable {var!r}")
        conv = domain.convert
        c = [conv(x) for x in coeffs]
        while c and domain.is_zero(c[-1]):
            c.pop()
        self.coeffs = tuple(c)
        self.domain = domain
        self.var = var

    @classmethod
    def _new(cls, coeffs: list, domain, var: str) -> Poly:
        is_zero = domain.is_zero
        while coeffs and is_zero(coeffs[-1]):
            coeffs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.domain = domain
        obj.var = var
        return obj

    @classmethod
    def monomial(cls, c, k: int, domain, var: str = "Y") -> Poly:
        return cls._new([domain.zero] * k + [domain.convert(c)], domain, var)

    @classmethod
    def gen(cls, domain, var: str = "Y") -> Poly:
        return cls.monomial(1, 1, domain, var)

    @classmethod
    def constant(cls, c, domain, var: str = "Y") -> Poly:
        return cls._new([domain.convert(c)], domain, var)

    # -- basic queries ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    @property
    def ring(self) -> PolyRing:
        return PolyRing(self.domain, self.var)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.domain.one

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.domain.one

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.domain.zero

    def _like(self, coeffs: list) -> Poly:
        return Poly._new(coeffs, self.domain, self.var)

    def convert_to(self, domain) -> Poly:
        """The same polynomial with coefficients mapped into ``domain``."""
        return Poly._new([domain.convert(c) for c in self.coeffs], domain, self.var)

    def with_var(self, var: str) -> Poly:
        if var not in VARIABLES:
            raise VariableMismatch(f"unknown variable {var!r}")
        return Poly._new(list(self.coeffs), self.domain, var)

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other):
        """Classify ``other`` as ("poly", p) or ("scalar", c); None if foreign."""
        if isinstance(other, Poly):
            if other.var == self.var:
                if other.domain is self.domain or other.domain == self.domain:
                    return "poly", other
                raise FieldMismatch(f"{self.ring} vs {other.ring}")
            if self.domain.contains(other):
                return "scalar", other
            if isinstance(other.domain, PolyRing) and other.domain.contains(self):
                return None
            raise VariableMismatch(
                f"cannot combine polynomials in {self.var} and {other.var}")
        try:
            return "scalar", self.domain.convert(other)
        except FieldMismatch:
            return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        kind = self._coerce(other)
        if kind is None:
            # same-type reflected operators are never tried by Python
            return other + self if isinstance(other, Poly) else NotImplemented
        if kind[0] == "scalar":
            other = self._like([kind[1]])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._new([-c for c in self.coeffs], self.domain, self.var)

    def __sub__(self, other):
        kind = self._coerce(other)
        if kind is None:
            return (-other) + self if isinstance(other, Poly) else NotImplemented
        if kind[0] == "scalar":
            other = self._like([kind[1]])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        kind = self._coerce(other)
        if kind is None:
            return other * self if isinstance(other, Poly) else NotImplemented
        if kind[0] == "scalar":
            s = kind[1]
            if self.domain.is_zero(s):
                return self._like([])
            return self._like([c * s for c in self.coeffs])
        return self._mul_poly(kind[1])

    __rmul__ = __mul__

    def _mul_poly(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._like([])
        dom = self.domain
        if type(dom) is PrimeField:
            p = dom.p
            av = [c.value for c in a]
            bv = [c.value for c in b]
            out = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(av):
                if x:
                    for j, y in enumerate(bv):
                        out[i + j] += x * y
            return _fp_poly(out, dom, self.var)
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if dom.is_zero(x):
                continue
            for j, y in enumerate(b):
                t = x * y
                k = i + j
                out[k] = t if out[k] is None else out[k] + t
        zero = dom.zero
        return self._like([zero if c is None else c for c in out])

    def __pow__(self, e: int) -> Poly:
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = self._like([self.domain.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (self.var == other.var and self.coeffs == other.coeffs
                    and self.domain == other.domain)
        try:
            c = self.domain.convert(other)
        except (FieldMismatch, TypeError):
            return NotImplemented
        if self.domain.is_zero(c):
            return not self.coeffs
        return self.coeffs == (c,)

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- division ---------------------------------------------------------

    def divrem(self, other: Poly) -> tuple[Poly, Poly]:
        """Quotient and remainder; needs a field or a monic divisor."""
        kind = self._coerce(other)
        if kind is None:
            raise VariableMismatch("divisor is not an element of this ring")
        other = kind[1] if kind[0] == "poly" else self._like([kind[1]])
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        dom = self.domain
        lc = other.coeffs[-1]
        if lc == dom.one:
            inv = None
        elif dom.is_field:
            inv = dom.inv(lc)
        else:
            raise UnsupportedDivision(f"divisor is not monic over {dom}")
        if type(dom) is PrimeField:
            return self._divrem_fp(other, inv)
        r = list(self.coeffs)
        db = other.degree
        b = other.coeffs
        if len(r) <= db:
            return self._like([]), self
        q = [dom.zero] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if dom.is_zero(c):
                continue
            if inv is not None:
                c = c * inv
            q[i - db] = c
            off = i - db
            for j in range(db):
                r[off + j] = r[off + j] - c * b[j]
            r[i] = dom.zero
        return self._like(q), self._like(r[:db])

    def _divrem_fp(self, other: Poly, inv) -> tuple[Poly, Poly]:
        dom = self.domain
        p = dom.p
        r = [c.value for c in self.coeffs]
        b = [c.value for c in other.coeffs]
        db = len(b) - 1
        if len(r) <= db:
            return self._like([]), self
        iv = 1 if inv is None else inv.value
        q = [0] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] % p
            if not c:
                continue
            c = c * iv % p
            q[i - db] = c
            off = i - db
            for j in range(db):
                r[off + j] -= c * b[j]
        return _fp_poly(q, dom, self.var), _fp_poly(r[:db], dom, self.var)

    def __divmod__(self, other):
        return self.divrem(other)

    def __floordiv__(self, other):
        return self.divrem(other)[0]

    def __mod__(self, other):
        return self.divrem(other)[1]

    def exquo(self, other) -> Poly:
        """Exact quotient over an integral domain; raises if not exact."""
        kind = self._coerce(other)
        if kind is None:
            raise VariableMismatch("divisor is not an element of this ring")
        dom = self.domain
        if kind[0] == "scalar":
            s = kind[1]
            if dom.is_zero(s):
                raise DivisionByZero("exact division by zero")
            return self._like([dom.exquo(c, s) for c in self.coeffs])
        other = kind[1]
        if not other.coeffs:
            raise DivisionByZero("exact division by zero")
        if dom.is_field or other.is_monic():
            q, r = self.divrem(other)
            if r:
                raise ExactDivisionError("division leaves a remainder")
            return q
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        lb = b[-1]
        if len(r) <= db:
            if r:
                raise ExactDivisionError("division leaves a remainder")
            return self._like([])
        q = [dom.zero] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if dom.is_zero(c):
                continue
            c = dom.exquo(c, lb)
            q[i - db] = c
            off = i - db
            for j in range(db + 1):
                r[off + j] = r[off + j] - c * b[j]
        if any(not dom.is_zero(c) for c in r[:db]):
            raise ExactDivisionError("division leaves a remainder")
        return self._like(q)

    def prem(self, other: Poly) -> Poly:
        """Pseudo-remainder ``lc(B)^(deg A - deg B + 1) * A mod B``."""
        db = other.degree
        if db < 0:
            raise DivisionByZero("pseudo-division by zero")
        if self.degree < db:
            return self
        lb = other.lc
        k = self.degree - db + 1
        r = self
        while r.degree >= db:
            shift = r.degree - db
            t = Poly._new([self.domain.zero] * shift + [r.lc], self.domain, self.var)
            r = r * lb - t * other
            k -= 1
        for _ in range(k):
            r = r * lb
        return r

    def monic(self) -> Poly:
        if not self.coeffs:
            raise DivisionByZero("the zero polynomial has no monic associate")
        inv = self.domain.inv(self.coeffs[-1])
        return self._like([c * inv for c in self.coeffs])

    # -- calculus and evaluation -----------------------------------------

    def derivative(self) -> Poly:
        return self._like([c * i for i, c in enumerate(self.coeffs) if i])

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return self.domain.zero
        return acc

    def sort_key(self) -> tuple:
        return (self.degree, tuple(_coeff_key(c) for c in reversed(self.coeffs)))

    def __repr__(self):
        return f"Poly({self}, {self.ring})"

    def __str__(self):
        from .expr_parse import print_poly

        return print_poly(self)


def _fp_poly(values: list[int], dom: PrimeField, var: str) -> Poly:
    p = dom.p
    vals = [v % p for v in values]
    while vals and not vals[-1]:
        vals.pop()
    obj = object.__new__(Poly)
    obj.coeffs = tuple(FpElement(v, dom) for v in vals)
    obj.domain = dom
    obj.var = var
    return obj


def _coeff_key(c):
    if isinstance(c, Poly):
        return c.sort_key()
    if isinstance(c, ExtElement):
        return c.coeffs
    if hasattr(c, "value"):
        return c.value
    return (c.numerator, c.denominator) if hasattr(c, "denominator") else c


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    return a.divrem(b)


def derivative(a: Poly) -> Poly:
    return a.derivative()


def gcd_monic(a: Poly, b: Poly) -> Poly:
    """Monic gcd over a field by Euclid's algorithm."""
    if a.is_zero() and b.is_zero():
        raise UndefinedResult("gcd(0, 0) is undefined")
    if not a.domain.is_field:
        raise UnsupportedDivision("gcd_monic needs coefficients in a field")
    while b:
        a, b = b, a.divrem(b)[1]
    return a.monic()


def powmod(a: Poly, e: int, m: Poly) -> Poly:
    """``a^e mod m`` by square-and-multiply."""
    result = Poly._new([a.domain.one], a.domain, a.var).divrem(m)[1]
    base = a.divrem(m)[1]
    while e:
        if e & 1:
            result = (result * base).divrem(m)[1]
        e >>= 1
        if e:
            base = (base * base).divrem(m)[1]
    return result


def eval_lifted(a: Poly, alpha: ExtElement):
    """Evaluate ``a`` over ``F_p`` at a point of an extension of ``F_p``."""
    if not isinstance(alpha, ExtElement):
        raise FieldMismatch("evaluation point must be an extension-field element")
    E: ExtField = alpha.field
    if a.domain.characteristic != E.p:
        raise FieldMismatch(
            f"characteristic {a.domain.characteristic} vs extension of F_{E.p}")
    acc = E.zero
    for c in reversed(a.coeffs):
        acc = acc * alpha + E.convert(c)
    return acc


# -- content and gcd over K[X] coefficient rings -----------------------------


def content(a: Poly) -> Poly:
    """Monic gcd of the coefficients of ``a`` over ``K[X]`` (K a field)."""
    g = None
    for c in a.coeffs:
        if not c:
            continue
        g = c if g is None else gcd_monic(g, c)
        if g.is_one():
            return g
    if g is None:
        raise UndefinedResult("content of the zero polynomial")
    return g.monic()


def primitive_part(a: Poly) -> Poly:
    return a.exquo(content(a))


def primitive_gcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd in ``K[X][T]`` via the primitive pseudo-remainder sequence.

    The result is content-free and normalised to have a monic leading
    coefficient in ``K[X]``.
    """
    if a.is_zero() and b.is_zero():
        raise UndefinedResult("gcd(0, 0) is undefined")
    if a.is_zero():
        return _normalize_lc(primitive_part(b))
    if b.is_zero():
        return _normalize_lc(primitive_part(a))
    a, b = primitive_part(a), primitive_part(b)
    if a.degree < b.degree:
        a, b = b, a
    while b:
        r = a.prem(b)
        a, b = b, (primitive_part(r) if r else r)
    return _normalize_lc(a)


def _normalize_lc(a: Poly) -> Poly:
    lc = a.lc
    return a.exquo(lc.domain.convert(lc.lc)) if isinstance(lc, Poly) else a.monic()


def lift_coefficients(a: Poly, ring: PolyRing) -> Poly:
    """View ``a`` over ``K`` as a polynomial over ``K[v]`` with constant coefficients."""
    return Poly._new([ring.convert(c) for c in a.coeffs], ring, a.var)


def from_ints(values: Sequence[int], domain, var: str = "Y") -> Poly:
    return Poly(values, domain, var)
