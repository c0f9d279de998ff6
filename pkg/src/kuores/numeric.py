"""Exact scalar arithmetic: rationals, prime fields and their extensions.

Three coefficient fields are provided and share one small protocol used by
the polynomial layer:

* ``QQ``, the rationals, whose elements are :class:`fractions.Fraction`;
* :class:`PrimeField` ``F_p`` with elements :class:`FpElement`;
* :class:`ExtField` ``F_p[Z]/(m(Z))`` with elements :class:`ExtElement`.

Every domain exposes ``zero``, ``one``, ``convert``, ``contains``,
``is_zero``, ``exquo`` and ``characteristic``; fields also expose ``inv``.
Finite fields add ``order``, ``degree``, ``random_element`` and
``elements``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Union

from .errors import FieldMismatch, NotInvertible, NotPrime, ReducibleModulus

# Deterministic Miller-Rabin witnesses; correct for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
MAX_PRIME = 1 << 62


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def mod_inverse(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` by the extended Euclidean algorithm."""
    r0, r1 = a % p, p
    s0, s1 = 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0 != 1:
        raise NotInvertible(f"{a} is not invertible modulo {p}")
    return s0 % p


def field_pow(alpha, e: int):
    """Square-and-multiply power of a field element, ``e >= 0``."""
    if e < 0:
        raise ValueError("negative exponent")
    result = one_like(alpha)
    base = alpha
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def one_like(alpha):
    if isinstance(alpha, (FpElement, ExtElement)):
        return alpha.field.one
    if isinstance(alpha, (Fraction, int)):
        return Fraction(1)
    return alpha.domain.one if hasattr(alpha, "domain") else type(alpha)(1)


def frobenius(alpha):
    """The Frobenius automorphism x -> x^p of a finite field."""
    return field_pow(alpha, alpha.field.p)


# --------------------------------------------------------------------------
# Rationals


@dataclass(frozen=True)
class RationalField:
    is_field = True
    is_finite = False
    characteristic = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def convert(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Fraction(x)
        raise FieldMismatch(f"cannot convert {x!r} to a rational")

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    @staticmethod
    def is_zero(a) -> bool:
        return not a

    def inv(self, a: Fraction) -> Fraction:
        if not a:
            raise NotInvertible("zero has no inverse")
        return 1 / a

    def exquo(self, a: Fraction, b: Fraction) -> Fraction:
        return a * self.inv(b)

    def __str__(self) -> str:
        return "Q"


QQ = RationalField()


# --------------------------------------------------------------------------
# Prime fields


@dataclass(frozen=True)
class PrimeField:
    p: int
    is_field = True
    is_finite = True
    degree = 1

    def __post_init__(self):
        if not (isinstance(self.p, int) and 2 <= self.p < MAX_PRIME and is_prime(self.p)):
            raise NotPrime(f"{self.p!r} is not a prime below 2^62")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self)

    def __call__(self, value: int) -> FpElement:
        return FpElement(value % self.p, self)

    def convert(self, x) -> FpElement:
        if isinstance(x, FpElement):
            if x.field.p != self.p:
                raise FieldMismatch(f"element of F_{x.field.p} used in F_{self.p}")
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return FpElement(x % self.p, self)
        raise FieldMismatch(f"cannot convert {x!r} to F_{self.p}")

    def contains(self, x) -> bool:
        return isinstance(x, FpElement) and x.field.p == self.p

    @staticmethod
    def is_zero(a) -> bool:
        return not a.value

    def inv(self, a: FpElement) -> FpElement:
        return FpElement(mod_inverse(a.value, self.p), self)

    def exquo(self, a: FpElement, b: FpElement) -> FpElement:
        return a * self.inv(b)

    def random_element(self, rng: random.Random) -> FpElement:
        return FpElement(rng.randrange(self.p), self)

    def elements(self) -> Iterator[FpElement]:
        return (FpElement(v, self) for v in range(self.p))

    def __str__(self) -> str:
        return f"F_{self.p}"


class FpElement:
    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        self.value = value
        self.field = field

    def _other(self, other):
        if type(other) is FpElement:
            if other.field.p != self.field.p:
                raise FieldMismatch(f"F_{self.field.p} vs F_{other.field.p}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return None

    def __add__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return FpElement((self.value + v) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return FpElement((self.value - v) % self.field.p, self.field)

    def __rsub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return FpElement((v - self.value) % self.field.p, self.field)

    def __mul__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return FpElement(self.value * v % self.field.p, self.field)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return FpElement(self.value * mod_inverse(v, self.field.p) % self.field.p, self.field)

    def __neg__(self):
        return FpElement(-self.value % self.field.p, self.field)

    def __pow__(self, e: int):
        if e < 0:
            return self.field.inv(self) ** -e
        return FpElement(pow(self.value, e, self.field.p), self.field)

    def __eq__(self, other):
        if type(other) is FpElement:
            return self.value == other.value and self.field.p == other.field.p
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpElement({self.value}, p={self.field.p})"

    def __str__(self):
        return str(self.value)


# --------------------------------------------------------------------------
# Dense F_p[Z] helpers on int lists (low degree first); used by ExtField.


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _zp_rem_monic(a: list[int], m: Sequence[int], p: int) -> list[int]:
    d = len(m) - 1
    a = list(a)
    for i in range(len(a) - 1, d - 1, -1):
        c = a[i] % p
        if c:
            off = i - d
            for j in range(d):
                a[off + j] -= c * m[j]
        a[i] = 0
    return _trim([c % p for c in a[:d]])


def _zp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    inv = mod_inverse(b[-1], p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return _trim(q), _trim([c % p for c in a[:db]])


def _zp_inverse(a: list[int], m: Sequence[int], p: int) -> list[int]:
    r0, r1 = list(m), list(a)
    s0, s1 = [], [1]
    while r1:
        q, r = _zp_divmod(r0, r1, p)
        qs = _zp_mul(q, s1, p)
        n = max(len(s0), len(qs))
        s_new = _trim([((s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0)) % p
                       for i in range(n)])
        r0, r1 = r1, r
        s0, s1 = s1, s_new
    if len(r0) != 1:
        raise NotInvertible("element shares a factor with the modulus")
    c = mod_inverse(r0[0], p)
    return [x * c % p for x in s0]


# --------------------------------------------------------------------------
# Extension fields


@lru_cache(maxsize=256)
def _check_irreducible(p: int, modulus: tuple[int, ...]) -> bool:
    from .factor_ff import is_irreducible
    from .polynomial import Poly

    return is_irreducible(Poly(list(modulus), PrimeField(p), "Z"))


@dataclass(frozen=True)
class ExtField:
    """``F_p[Z] / (m(Z))`` for a monic irreducible ``m``.

    ``modulus`` may be a sequence of integers (constant term first) or a
    polynomial over ``F_p``.
    """

    p: int
    modulus: tuple = field()
    is_field = True
    is_finite = True

    def __post_init__(self):
        base = PrimeField(self.p)
        m = self.modulus
        if hasattr(m, "coeffs"):
            m = [c.value for c in m.coeffs]
        m = tuple(_trim([int(c) % self.p for c in m]))
        object.__setattr__(self, "modulus", m)
        object.__setattr__(self, "_base", base)
        if len(m) < 2 or m[-1] != 1:
            raise ReducibleModulus("modulus must be monic of degree >= 1")
        if not _check_irreducible(self.p, m):
            raise ReducibleModulus(f"modulus {m} is reducible over F_{self.p}")

    @property
    def base(self) -> PrimeField:
        return self._base

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p ** self.degree

    @property
    def zero(self) -> ExtElement:
        return ExtElement((), self)

    @property
    def one(self) -> ExtElement:
        return ExtElement((1,), self)

    @property
    def gen(self) -> ExtElement:
        """The class of ``Z``."""
        return self.from_coeffs([0, 1])

    def from_coeffs(self, coeffs: Sequence[int]) -> ExtElement:
        c = _trim([int(x) % self.p for x in coeffs])
        if len(c) > self.degree:
            c = _zp_rem_monic(c, self.modulus, self.p)
        return ExtElement(tuple(c), self)

    def convert(self, x) -> ExtElement:
        if isinstance(x, ExtElement):
            if x.field != self:
                raise FieldMismatch("elements of different extension fields")
            return x
        if isinstance(x, FpElement):
            if x.field.p != self.p:
                raise FieldMismatch(f"element of F_{x.field.p} used in {self}")
            return self.from_coeffs([x.value])
        if isinstance(x, int) and not isinstance(x, bool):
            return self.from_coeffs([x])
        raise FieldMismatch(f"cannot convert {x!r} to {self}")

    def contains(self, x) -> bool:
        return isinstance(x, ExtElement) and x.field == self

    @staticmethod
    def is_zero(a) -> bool:
        return not a.coeffs

    def inv(self, a: ExtElement) -> ExtElement:
        if not a.coeffs:
            raise NotInvertible("zero has no inverse")
        return ExtElement(tuple(_zp_inverse(list(a.coeffs), self.modulus, self.p)), self)

    def exquo(self, a: ExtElement, b: ExtElement) -> ExtElement:
        return a * self.inv(b)

    def random_element(self, rng: random.Random) -> ExtElement:
        return self.from_coeffs([rng.randrange(self.p) for _ in range(self.degree)])

    def elements(self) -> Iterator[ExtElement]:
        for digits in itertools.product(range(self.p), repeat=self.degree):
            yield self.from_coeffs(digits)

    def __str__(self) -> str:
        return f"F_{self.p}^{self.degree}"


class ExtElement:
    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: tuple, field: ExtField):
        self.coeffs = coeffs
        self.field = field

    def _other(self, other):
        if type(other) is ExtElement:
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("elements of different extension fields")
            return other.coeffs
        if isinstance(other, FpElement):
            if other.field.p != self.field.p:
                raise FieldMismatch("characteristic mismatch")
            return (other.value,) if other.value else ()
        if isinstance(other, int) and not isinstance(other, bool):
            v = other % self.field.p
            return (v,) if v else ()
        return None

    def __add__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        a, p = self.coeffs, self.field.p
        n = max(len(a), len(b))
        out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)]
        return ExtElement(tuple(_trim(out)), self.field)

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return ExtElement(tuple((-c) % p for c in self.coeffs), self.field)

    def __sub__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return self + ExtElement(tuple((-c) % self.field.p for c in b), self.field)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        f = self.field
        prod = _zp_mul(self.coeffs, b, f.p)
        if len(prod) > f.degree:
            prod = _zp_rem_monic(prod, f.modulus, f.p)
        return ExtElement(tuple(prod), f)

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        if b is None:
            return NotImplemented
        return self * self.field.inv(ExtElement(tuple(b), self.field))

    def __pow__(self, e: int):
        if e < 0:
            return field_pow(self.field.inv(self), -e)
        return field_pow(self, e)

    def __eq__(self, other):
        if type(other) is ExtElement:
            return self.coeffs == other.coeffs and self.field == other.field
        b = self._other(other) if isinstance(other, (int, FpElement)) else None
        if b is None:
            return NotImplemented
        return self.coeffs == tuple(b)

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.modulus))

    def __bool__(self):
        return bool(self.coeffs)

    def in_base_field(self) -> bool:
        return len(self.coeffs) <= 1

    def to_base(self) -> FpElement:
        if len(self.coeffs) > 1:
            raise FieldMismatch(f"{self} does not lie in F_{self.field.p}")
        return FpElement(self.coeffs[0] if self.coeffs else 0, self.field.base)

    def __repr__(self):
        return f"ExtElement({list(self.coeffs)}, {self.field})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("Z" if i == 1 else f"Z^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)


Scalar = Union[Fraction, FpElement, ExtElement]
