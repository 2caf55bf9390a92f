"""Dense univariate polynomials over an exact field.

Coefficients are stored lowest degree first.  Any field type that supports
the arithmetic operators and compares equal to ``0`` works; in practice the
coefficients are :class:`fractions.Fraction`.
"""

from fractions import Fraction

from .errors import DivisionByZero, ZeroPolynomial


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip(coeffs)

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c):
        return cls([c])

    # -- basic queries -------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree of the polynomial; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return self.coeffs == (other,)

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r})"

    def __str__(self):
        return self.format("z")

    def format(self, var="z"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if mono and c == 1:
                term = mono
            elif mono and c == -1:
                term = "-" + mono
            elif mono:
                term = f"({c})*{mono}" if "/" in str(c) or "-" in str(c)[1:] else f"{c}*{mono}"
            else:
                term = str(c)
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations -----------------------------------------------

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            if other == 0:
                return UniPoly()
            return UniPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dg = other.degree
        inv_lc = 1 / Fraction(other.lc) if isinstance(other.lc, int) else 1 / other.lc
        if len(rem) - 1 < dg:
            return UniPoly(), self
        quot = [0] * (len(rem) - dg)
        for k in range(len(rem) - 1, dg - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            c = c * inv_lc
            quot[k - dg] = c
            for i, d in enumerate(other.coeffs):
                rem[k - dg + i] = rem[k - dg + i] - c * d
        return UniPoly(quot), UniPoly(rem[:dg])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        lc = self.lc
        if lc == 1:
            return self
        inv = 1 / Fraction(lc) if isinstance(lc, int) else 1 / lc
        return UniPoly([c * inv for c in self.coeffs])

    def derivative(self):
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def unipoly_gcd(f, g):
    """Monic greatest common divisor of ``f`` and ``g`` (Euclid)."""
    if f.is_zero() and g.is_zero():
        raise ZeroPolynomial("gcd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(f):
    """Monic product of the distinct irreducible factors of ``f``.

    Characteristic zero only; the degree of the result is the number of
    distinct roots of ``f`` over an algebraic closure.
    """
    if f.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if f.degree == 0:
        return UniPoly([1])
    g = unipoly_gcd(f, f.derivative())
    return (f // g).monic()
