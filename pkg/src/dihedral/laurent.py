"""Laurent polynomials K[t, t^-1] and their factorization into linear primes.

A value is stored as t^val * (c_0 + c_1 t + ... + c_n t^n) with c_0 and c_n
nonzero (the zero element keeps val = 0 and no coefficients).  The star map
t -> t^-1 is the algebra's key involution.  Every nonzero element with a split
body factors as unit * prod (t - lambda_i)^{m_i} with all lambda_i nonzero;
units are exactly the single-term elements lambda * t^m.
"""

import numpy as np

from .errors import DivisionByZero, InternalInconsistency, NotAUnit
from .fields import Poly, PrimeClosureField


class LaurentPoly:
    __slots__ = ("field", "val", "coeffs")

    def __init__(self, field, val, coeffs):
        cs = list(coeffs)
        lead = 0
        while lead < len(cs) and cs[lead].is_zero():
            lead += 1
        cs = cs[lead:]
        while cs and cs[-1].is_zero():
            cs.pop()
        if cs:
            self.val = val + lead
        else:
            self.val = 0
        self.field = field
        self.coeffs = tuple(cs)

    # ---- constructors ----

    @classmethod
    def zero(cls, field):
        return cls(field, 0, ())

    @classmethod
    def one(cls, field):
        return cls(field, 0, (field.one,))

    @classmethod
    def const(cls, field, c):
        return cls(field, 0, (c,))

    @classmethod
    def t_power(cls, field, m, c=None):
        return cls(field, m, (field.one if c is None else c,))

    @classmethod
    def from_terms(cls, field, terms):
        if isinstance(terms, dict):
            terms = terms.items()
        terms = list(terms)
        if not terms:
            return cls.zero(field)
        lo = min(e for e, _ in terms)
        hi = max(e for e, _ in terms)
        cs = [field.zero] * (hi - lo + 1)
        for e, c in terms:
            cs[e - lo] = cs[e - lo] + c
        return cls(field, lo, cs)

    @classmethod
    def from_int_terms(cls, field, terms):
        items = terms.items() if isinstance(terms, dict) else terms
        return cls.from_terms(field, [(e, field.from_int(n)) for e, n in items])

    # ---- structure ----

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Highest exponent with a nonzero coefficient (None for zero)."""
        if not self.coeffs:
            return None
        return self.val + len(self.coeffs) - 1

    @property
    def valuation(self):
        """Lowest exponent with a nonzero coefficient (None for zero)."""
        if not self.coeffs:
            return None
        return self.val

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                yield self.val + i, c

    def coefficient(self, e):
        i = e - self.val
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def body(self):
        """The ordinary polynomial part: self = t^valuation * body."""
        return Poly(self.field, self.coeffs)

    def is_one(self):
        return self.val == 0 and len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    # ---- arithmetic ----

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lo = min(self.val, other.val)
        hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        cs = [self.field.zero] * (hi - lo)
        for i, c in enumerate(self.coeffs):
            cs[self.val - lo + i] = c
        for i, c in enumerate(other.coeffs):
            j = other.val - lo + i
            cs[j] = cs[j] + c
        return LaurentPoly(self.field, lo, cs)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentPoly(self.field, self.val, [-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LaurentPoly.zero(self.field)
        field = self.field
        v = self.val + other.val
        fast = _fast_mul(field, self.coeffs, other.coeffs)
        if fast is not None:
            return LaurentPoly(field, v, fast)
        z = field.zero
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return LaurentPoly(field, v, out)

    def scale(self, c):
        return LaurentPoly(self.field, self.val, [a * c for a in self.coeffs])

    def shift(self, m):
        """Multiply by t^m."""
        if self.is_zero:
            return self
        return LaurentPoly(self.field, self.val + m, self.coeffs)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative Laurent power; invert a unit instead")
        acc = LaurentPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        if self.coeffs and self.val != other.val:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def star(self):
        """The involution t -> t^-1."""
        if self.is_zero:
            return self
        return LaurentPoly(
            self.field, -(self.val + len(self.coeffs) - 1), self.coeffs[::-1]
        )

    def eval(self, x):
        """Value at x; x must be invertible when negative exponents occur."""
        if self.is_zero:
            return self.field.zero
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        if self.val:
            if self.val > 0:
                return acc * x**self.val
            if x.is_zero():
                raise DivisionByZero("negative exponent at zero")
            return acc * x.inv() ** (-self.val)
        return acc

    def exact_div(self, other):
        """Quotient self/other when the division is exact."""
        if other.is_zero:
            raise DivisionByZero("Laurent division by zero")
        if self.is_zero:
            return self
        q, r = divmod(self.body(), other.body())
        if not r.is_zero:
            raise InternalInconsistency("Laurent division left a remainder")
        return LaurentPoly(self.field, self.val - other.val, q.coeffs)

    # ---- unit structure and factorization ----

    def is_unit(self):
        return len(self.coeffs) == 1

    def as_unit(self):
        """This element as a UnitPart; NotAUnit if it has several terms."""
        if len(self.coeffs) != 1:
            raise NotAUnit(f"{self} is not of the form c*t^m")
        return UnitPart(self.coeffs[0], self.val)

    def factor_linear(self):
        """Split off the unit and the linear primes (t - lambda_i).

        Requires a nonzero element.  Over the tower this always succeeds up
        to the level bound; over the rationals NotSplitOverField may raise.
        """
        if self.is_zero:
            raise ValueError("cannot factor the zero element")
        roots = self.field.roots(self.body())
        return LaurentFactorization(UnitPart(self.coeffs[-1], self.val), roots)

    # ---- rendering ----

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.terms():
            parts.append(_term_str(e, c))
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    __repr__ = __str__

    def to_json_terms(self):
        return [[e, str(c)] for e, c in self.terms()]


def _term_str(e, c):
    cs = str(c)
    neg = cs.startswith("-")
    if neg:
        cs = cs[1:]
    if e == 0:
        body = cs
    else:
        t = "t" if e == 1 else f"t^{e}"
        body = t if cs == "1" else f"{cs}*{t}"
    return ("-" if neg else "") + body


def _fast_mul(field, ac, bc):
    # level-1 tower coefficients multiply as plain residue convolutions
    if not isinstance(field, PrimeClosureField):
        return None
    for c in ac:
        if c.level != 1:
            return None
    for c in bc:
        if c.level != 1:
            return None
    a = np.fromiter((c.coords[0] for c in ac), np.int64, len(ac))
    b = np.fromiter((c.coords[0] for c in bc), np.int64, len(bc))
    out = np.convolve(a, b) % field.p
    return [field._elt1(int(x)) for x in out]


class UnitPart:
    """A unit lambda * t^m of the Laurent ring."""

    __slots__ = ("scalar", "exponent")

    def __init__(self, scalar, exponent):
        if scalar.is_zero():
            raise NotAUnit("unit scalar must be nonzero")
        self.scalar = scalar
        self.exponent = exponent

    def laurent(self):
        return LaurentPoly(self.scalar.field, self.exponent, (self.scalar,))

    def inverse(self):
        return UnitPart(self.scalar.inv(), -self.exponent)

    def __mul__(self, other):
        return UnitPart(self.scalar * other.scalar, self.exponent + other.exponent)

    def __eq__(self, other):
        if not isinstance(other, UnitPart):
            return NotImplemented
        return self.exponent == other.exponent and self.scalar == other.scalar

    __hash__ = None

    def __repr__(self):
        return f"({self.scalar!r}, t^{self.exponent})"


class LaurentFactorization:
    """unit * prod (t - lambda_i)^{m_i}; primes recorded as a root multiset."""

    __slots__ = ("unit", "primes")

    def __init__(self, unit, primes):
        self.unit = unit
        self.primes = primes

    def reassemble(self):
        field = self.unit.scalar.field
        out = self.unit.laurent()
        for root, mult in self.primes:
            factor = LaurentPoly(field, 0, (-root, field.one))
            for _ in range(mult):
                out = out * factor
        return out

    def __eq__(self, other):
        if not isinstance(other, LaurentFactorization):
            return NotImplemented
        return self.unit == other.unit and self.primes == other.primes

    __hash__ = None

    def __repr__(self):
        return f"LaurentFactorization(unit={self.unit!r}, primes={self.primes!r})"


def star_of_prime(lam):
    """(t - lam)^* = scalar * t^-1 * (t - lam^-1); returns (scalar, new root)."""
    if lam.is_zero():
        raise DivisionByZero("prime roots are nonzero")
    return -lam, lam.inv()
