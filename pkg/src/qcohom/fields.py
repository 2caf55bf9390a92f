"""Coefficient fields: Q with the quantum parameter specialized, and Q(q).

Elements of the specialized field are plain :class:`fractions.Fraction`.
Elements of the rational function field are :class:`RatFunc`.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero
from .unipoly import UniPoly, unipoly_gcd

_ONE = UniPoly([Fraction(1)])


class RatFunc:
    """Reduced quotient of univariate polynomials in ``q`` over Q.

    The denominator is monic and coprime to the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced=False):
        if not isinstance(num, UniPoly):
            num = UniPoly([Fraction(num)])
        if den is None:
            den = _ONE
        elif not isinstance(den, UniPoly):
            den = UniPoly([Fraction(den)])
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den

    @classmethod
    def q(cls):
        return cls(UniPoly([Fraction(0), Fraction(1)]), _ONE, _reduced=True)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(UniPoly([Fraction(x)]), _ONE, _reduced=True)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            if self.den.degree != 0:
                return False
            if other == 0:
                return self.num.is_zero()
            return self.num.coeffs == (Fraction(other),)
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        if self.den.degree == 0 and self.num.degree <= 0:
            return hash(self.num[0])
        return hash((self.num.coeffs, self.den.coeffs))

    def laurent_monomial(self):
        """Return ``(c, k)`` when the element equals ``c*q^k``, else ``None``."""
        if self.num.is_zero():
            return None
        nz = [i for i, c in enumerate(self.num.coeffs) if c != 0]
        dz = [i for i, c in enumerate(self.den.coeffs) if c != 0]
        if len(nz) != 1 or len(dz) != 1:
            return None
        return self.num.coeffs[nz[0]] / self.den.coeffs[dz[0]], nz[0] - dz[0]

    def evaluate(self, value):
        d = self.den(Fraction(value))
        if d == 0:
            raise DivisionByZero(f"pole at q = {value}")
        return self.num(Fraction(value)) / d

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RatFunc):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = RatFunc.coerce(other)
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFunc(self.num + other.num, _ONE, _reduced=True)
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, (RatFunc, int, Fraction)):
            return NotImplemented
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other):
        return RatFunc.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc(UniPoly(), _ONE, _reduced=True)
            return RatFunc(self.num * Fraction(other), self.den, _reduced=True)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFunc(self.num * other.num, _ONE, _reduced=True)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero in Q(q)")
        lc = self.num.lc
        return RatFunc(self.den * (1 / lc), self.num * (1 / lc), _reduced=True)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero in Q(q)")
            return RatFunc(self.num * (1 / Fraction(other)), self.den, _reduced=True)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num**e, self.den**e, _reduced=True)

    # -- formatting ----------------------------------------------------

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.den.degree == 0:
            return _fmt_poly(self.num)
        num = _fmt_poly(self.num)
        den = _fmt_poly(self.den)
        if len(self.num.coeffs) - self.num.coeffs.count(0) > 1:
            num = f"({num})"
        if len(self.den.coeffs) - self.den.coeffs.count(0) > 1 or "*" in den:
            den = f"({den})"
        return f"{num}/{den}"


def _fmt_poly(p):
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


def _reduce(num, den):
    if num.is_zero():
        return UniPoly(), _ONE
    if den.degree > 0:
        g = unipoly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
    lc = den.lc
    if lc != 1:
        inv = 1 / Fraction(lc)
        num = num * inv
        den = den * inv
    return num, den


# ---------------------------------------------------------------------------
# coefficient field modes


_TERM_RE = re.compile(r"^\s*([+-]?\d+(?:/\d+)?)\s*(?:\*?\s*q(?:\^(-?\d+))?)?\s*$")
_BARE_Q_RE = re.compile(r"^\s*([+-]?)\s*q(?:\^(-?\d+))?\s*$")


@dataclass(frozen=True)
class QSpecialized:
    """Q with the quantum parameter set to a nonzero rational."""

    value: Fraction = Fraction(-1)
    generic = False

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value == 0:
            raise ValueError("q must be specialized to a nonzero rational")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    @property
    def q(self):
        return self.value

    def convert(self, x):
        if isinstance(x, RatFunc):
            return x.evaluate(self.value)
        return Fraction(x)

    def parse(self, s):
        if "q" in str(s):
            return self.convert(parse_ratfunc_term(s))
        return Fraction(str(s))

    def format(self, c):
        return str(c)

    def to_json(self):
        return {"mode": "q-rational", "q": str(self.value)}

    def __str__(self):
        return f"Q[q={self.value}]"


@dataclass(frozen=True)
class QGeneric:
    """The rational function field Q(q)."""

    generic = True

    @property
    def zero(self):
        return RatFunc(0)

    @property
    def one(self):
        return RatFunc(1)

    @property
    def q(self):
        return RatFunc.q()

    def convert(self, x):
        return RatFunc.coerce(x)

    def parse(self, s):
        if "q" in str(s):
            return parse_ratfunc_term(s)
        return RatFunc(Fraction(str(s)))

    def format(self, c):
        return str(c)

    def to_json(self):
        return {"mode": "q-generic"}

    def __str__(self):
        return "Q(q)"


CoeffField = QSpecialized | QGeneric


def parse_ratfunc_term(s):
    """Parse ``"c"``, ``"c*q^k"`` or ``"-q^k"`` into a :class:`RatFunc`."""
    m = _TERM_RE.match(s)
    if m and "q" in s:
        c, k = Fraction(m.group(1)), int(m.group(2) or 1)
    elif m:
        return RatFunc(Fraction(m.group(1)))
    else:
        m = _BARE_Q_RE.match(s)
        if not m:
            raise ValueError(f"cannot parse coefficient {s!r}")
        c, k = Fraction(-1 if m.group(1) == "-" else 1), int(m.group(2) or 1)
    return RatFunc.q() ** k * c


def field_from_json(doc):
    mode = doc.get("mode")
    if mode == "q-rational":
        return QSpecialized(Fraction(str(doc.get("q", "-1"))))
    if mode == "q-generic":
        return QGeneric()
    raise ValueError(f"unknown field mode {mode!r}")


def field_arith(op, x, y=None):
    """Exact field operation ``op`` in {add, mul, inv, neg}."""
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "inv":
        if x == 0:
            raise DivisionByZero("inverse of zero")
        if isinstance(x, RatFunc):
            return x.inverse()
        return 1 / Fraction(x)
    raise ValueError(f"unknown field operation {op!r}")
