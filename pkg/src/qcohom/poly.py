"""Sparse multivariate polynomials, monomial orders and weighted gradings."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .errors import RingMismatch, ZeroPolynomial
from .fields import CoeffField, QSpecialized, RatFunc

Exp = Tuple[int, ...]


# ---------------------------------------------------------------------------
# monomial orders
#
# Every order maps an exponent vector to a flat tuple of ints; comparing
# those tuples lexicographically compares the monomials.


class MonomialOrder:
    name = "order"

    def key(self, exp: Exp) -> Tuple[int, ...]:
        raise NotImplementedError

    def __repr__(self):
        return self.name


class Lex(MonomialOrder):
    name = "lex"

    def key(self, exp):
        return exp

    def __eq__(self, other):
        return isinstance(other, Lex)

    def __hash__(self):
        return hash("lex")


class Grevlex(MonomialOrder):
    name = "grevlex"

    def key(self, exp):
        return (sum(exp),) + tuple(-e for e in reversed(exp))

    def __eq__(self, other):
        return type(other) is Grevlex

    def __hash__(self):
        return hash("grevlex")


class WeightedGrevlex(MonomialOrder):
    """Weighted degree first, reverse lexicographic tie-break."""

    def __init__(self, weights: Sequence[int]):
        if any(w <= 0 for w in weights):
            raise ValueError("weights of a weighted order must be positive")
        self.weights = tuple(weights)
        self.name = f"wgrevlex{list(self.weights)}"

    def key(self, exp):
        return (sum(w * e for w, e in zip(self.weights, exp)),) + tuple(-e for e in reversed(exp))

    def __eq__(self, other):
        return isinstance(other, WeightedGrevlex) and other.weights == self.weights

    def __hash__(self):
        return hash(self.weights)


class BlockElimination(MonomialOrder):
    """Product order: the ``front`` variables are compared first.

    Any monomial containing a front variable is larger than every monomial
    free of them, so a Groebner basis for this order eliminates ``front``.
    """

    def __init__(self, front: Sequence[int], nvars: int, front_order=None, rest_order=None):
        self.front = tuple(sorted(front))
        self.nvars = nvars
        fs = set(self.front)
        if not fs <= set(range(nvars)):
            raise ValueError("front block must be a subset of the variables")
        self.rest = tuple(i for i in range(nvars) if i not in fs)
        self.front_order = front_order or Grevlex()
        self.rest_order = rest_order or Grevlex()
        self.name = f"block[{list(self.front)}|{self.front_order.name},{self.rest_order.name}]"

    def key(self, exp):
        return self.front_order.key(tuple(exp[i] for i in self.front)) + self.rest_order.key(
            tuple(exp[i] for i in self.rest)
        )

    def __eq__(self, other):
        return (
            isinstance(other, BlockElimination)
            and (self.front, self.nvars, self.front_order, self.rest_order)
            == (other.front, other.nvars, other.front_order, other.rest_order)
        )

    def __hash__(self):
        return hash((self.front, self.nvars))


def order_from_name(name: str) -> MonomialOrder:
    if name == "lex":
        return Lex()
    if name == "grevlex":
        return Grevlex()
    raise ValueError(f"unknown monomial order {name!r}")


# ---------------------------------------------------------------------------
# rings and polynomials


@dataclass(frozen=True)
class PolyRing:
    variables: Tuple[str, ...]
    field: CoeffField = field(default_factory=QSpecialized)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name):
        return self.variables.index(name)

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.field.convert(c)
        if c == 0:
            return Poly(self, {})
        return Poly(self, {(0,) * self.nvars: c})

    def monomial(self, exp: Exp, c=1):
        c = self.field.convert(c)
        if c == 0:
            return Poly(self, {})
        if len(exp) != self.nvars:
            raise RingMismatch("exponent vector length does not match the ring")
        return Poly(self, {tuple(exp): c})

    def var(self, name):
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return Poly(self, {tuple(e): self.field.one})

    def gens(self):
        return tuple(self.var(v) for v in self.variables)

    def q(self):
        """The quantum parameter as a constant polynomial."""
        return self.const(self.field.q)

    def from_terms(self, terms):
        """Build from ``(coeff, exponent)`` pairs in any order."""
        out: Dict[Exp, object] = {}
        zero = self.field.zero
        for c, e in terms:
            e = tuple(e)
            if len(e) != self.nvars:
                raise RingMismatch("exponent vector length does not match the ring")
            out[e] = out.get(e, zero) + self.field.convert(c)
        return Poly(self, {e: c for e, c in out.items() if c != 0})

    def extend(self, names, front=False):
        """Ring with extra variables appended (or prepended)."""
        names = tuple(names)
        vs = names + self.variables if front else self.variables + names
        return PolyRing(vs, self.field)

    def __str__(self):
        return f"{self.field}[{', '.join(self.variables)}]"


class Poly:
    """Sparse polynomial: a map from exponent vectors to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Dict[Exp, object]):
        self.ring = ring
        self.terms = terms

    # -- queries -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.field.zero)

    def total_degree(self):
        if not self.terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(sum(e) for e in self.terms)

    def sorted_terms(self, order=None):
        """Terms as ``(exp, coeff)`` pairs, largest first."""
        order = order or Grevlex()
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def lead(self, order):
        """Leading ``(exp, coeff)`` pair for ``order``."""
        if not self.terms:
            raise ZeroPolynomial("leading term of the zero polynomial")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def lm(self, order):
        return self.lead(order)[0]

    def monic(self, order):
        if not self.terms:
            return self
        _, c = self.lead(order)
        if c == 1:
            return self
        inv = self.ring.field.one / c
        return Poly(self.ring, {e: v * inv for e, v in self.terms.items()})

    def variables_used(self):
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return used

    # -- comparison ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction, RatFunc)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v == 0:
                    del out[e]
                else:
                    out[e] = v
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, s):
        s = self.ring.field.convert(s)
        if s == 0:
            return Poly(self.ring, {})
        return Poly(self.ring, {e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        out: Dict[Exp, object] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly(self.ring, {e: c for e, c in out.items() if c != 0})

    def __rmul__(self, other):
        return self.scale(other)

    def mul_term(self, exp: Exp, c):
        """Multiply by the single term ``c * x^exp``."""
        return Poly(
            self.ring,
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self.terms.items()},
        )

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus and evaluation ---------------------------------------

    def derivative(self, var):
        i = var if isinstance(var, int) else self.ring.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                d = list(e)
                d[i] -= 1
                out[tuple(d)] = c * e[i]
        return Poly(self.ring, out)

    def evaluate(self, point):
        """Value at ``point`` (a sequence of field elements, one per variable)."""
        if len(point) != self.ring.nvars:
            raise RingMismatch("point has the wrong number of coordinates")
        f = self.ring.field
        point = [f.convert(x) for x in point]
        acc = f.zero
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            acc = acc + v
        return acc

    def substitute(self, images, target: Optional[PolyRing] = None):
        """Replace each variable by a polynomial of ``target``.

        ``images`` maps variable names to polynomials (or constants);
        variables not listed must exist in ``target`` under the same name.
        """
        target = target or self.ring
        imgs = []
        for name in self.ring.variables:
            if name in images:
                img = images[name]
                imgs.append(img if isinstance(img, Poly) else target.const(img))
            else:
                imgs.append(target.var(name))
        powers = [dict() for _ in imgs]
        acc = target.zero()
        for e, c in self.terms.items():
            term = target.const(target.field.convert(c))
            for i, k in enumerate(e):
                if k:
                    p = powers[i].get(k)
                    if p is None:
                        p = powers[i][k] = imgs[i] ** k
                    term = term * p
            acc = acc + term
        return acc

    def map_coefficients(self, fn, target: PolyRing):
        out = {}
        for e, c in self.terms.items():
            v = fn(c)
            if v != 0:
                out[e] = v
        return Poly(target, out)

    # -- formatting ----------------------------------------------------

    def format(self, order=None):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.ring.variables, e) if k
            )
            cs = str(c)
            if not mono:
                parts.append(cs if " " not in cs else f"({cs})")
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}" if " " in cs or "/" in cs and "q" in cs else f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Poly({self.format()})"


# ---------------------------------------------------------------------------
# grading


@dataclass(frozen=True)
class GradingSpec:
    """Integer weight per ring variable plus the weight of ``q``.

    Weights may be negative (the deformation parameter has weight -1).
    """

    weights: Tuple[Tuple[str, int], ...]
    q_weight: int = 0

    @classmethod
    def of(cls, weights: Dict[str, int], q_weight=0):
        return cls(tuple(weights.items()), q_weight)

    def weight(self, name):
        return dict(self.weights)[name]


@dataclass(frozen=True)
class Homogeneous:
    degree: int


@dataclass(frozen=True)
class Inhomogeneous:
    degrees: frozenset


def _coeff_q_degree(c):
    """Exponent ``k`` when the coefficient is ``c*q^k``; ``None`` if mixed."""
    if isinstance(c, RatFunc):
        lm = c.laurent_monomial()
        return None if lm is None else lm[1]
    return 0


def weighted_degree(p: Poly, grading: GradingSpec):
    """Common weighted degree of the terms of ``p``.

    Coefficients in Q(q) contribute ``q_weight`` per power of ``q``; a
    coefficient that is not a single power of ``q`` counts as inhomogeneous.
    """
    if p.is_zero():
        raise ZeroPolynomial("weighted degree of the zero polynomial")
    w = [grading.weight(v) for v in p.ring.variables]
    degrees = set()
    for e, c in p.terms.items():
        k = _coeff_q_degree(c)
        if k is None:
            return Inhomogeneous(frozenset(degrees | {None}))
        degrees.add(sum(a * b for a, b in zip(w, e)) + k * grading.q_weight)
    if len(degrees) == 1:
        return Homogeneous(degrees.pop())
    return Inhomogeneous(frozenset(degrees))


def poly_arith(op, p: Poly, s):
    """``add``, ``mul`` or ``scale`` on polynomials."""
    if op == "add":
        return p + s
    if op == "mul":
        return p * s
    if op == "scale":
        return p.scale(s)
    raise ValueError(f"unknown polynomial operation {op!r}")
