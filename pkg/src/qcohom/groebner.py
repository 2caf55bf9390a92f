"""Buchberger's algorithm and the ideal operations built on it.

Polynomials are handled internally as ``{exponent: coeff}`` dicts; the
public functions take and return :class:`~qcohom.poly.Poly` values.
"""

import heapq
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence

from .errors import (
    EmptyGeneratorList,
    NotZeroDimensional,
    RingMismatch,
    ZeroDivisorPolynomial,
)
from .poly import BlockElimination, Grevlex, MonomialOrder, Poly, PolyRing


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _neg(key):
    return tuple(-k for k in key)


class ReducedGB:
    """Reduced Groebner basis: monic elements sorted by leading monomial."""

    __slots__ = ("ring", "order", "basis", "leads")

    def __init__(self, ring: PolyRing, order: MonomialOrder, basis: Sequence[Poly]):
        self.ring = ring
        self.order = order
        self.basis = tuple(basis)
        self.leads = tuple(g.lm(order) for g in self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __eq__(self, other):
        if not isinstance(other, ReducedGB):
            return NotImplemented
        return self.ring == other.ring and self.order == other.order and self.basis == other.basis

    def __repr__(self):
        return f"ReducedGB({[g.format(self.order) for g in self.basis]})"

    def is_unit(self):
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def contains(self, f: Poly) -> bool:
        return normal_form(f, self).is_zero()


class Ideal:
    """Generators in a shared ring, with a write-once GB cache per order."""

    def __init__(self, gens: Sequence[Poly], ring: Optional[PolyRing] = None):
        gens = [g for g in gens if not g.is_zero()]
        if ring is None:
            if not gens:
                raise EmptyGeneratorList("cannot infer the ring of an empty ideal")
            ring = gens[0].ring
        if any(g.ring != ring for g in gens):
            raise RingMismatch("ideal generators live in different rings")
        self.ring = ring
        self.gens = tuple(gens)
        self._gb: Dict[MonomialOrder, ReducedGB] = {}

    def gb(self, order: Optional[MonomialOrder] = None) -> ReducedGB:
        order = order or Grevlex()
        cached = self._gb.get(order)
        if cached is None:
            cached = self._gb.setdefault(order, buchberger(self, order))
        return cached

    def __add__(self, other):
        if isinstance(other, Ideal):
            return Ideal(self.gens + other.gens, self.ring)
        return Ideal(self.gens + tuple(other), self.ring)

    def dim(self, order=None) -> int:
        return quotient_dim(self.gb(order))

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]})"


# ---------------------------------------------------------------------------
# reduction


def _reduce_terms(terms, divisors, key, full=True):
    """Multivariate division remainder.

    ``divisors`` holds ``(lead_exp, lead_coeff, terms_dict)`` triples.
    With ``full=False`` only the leading term is reduced.
    """
    p = dict(terms)
    if not p:
        return {}
    rem = {}
    heap = [(_neg(key(e)), e) for e in p]
    heapq.heapify(heap)
    while heap:
        _, e = heapq.heappop(heap)
        c = p.pop(e, None)
        if c is None:
            continue
        for lead, lc, g in divisors:
            if _divides(lead, e):
                break
        else:
            rem[e] = c
            if not full:
                rem.update(p)
                return rem
            continue
        shift = tuple(a - b for a, b in zip(e, lead))
        factor = c / lc
        for ge, gc in g.items():
            if ge == lead:
                continue
            ne = tuple(a + b for a, b in zip(ge, shift))
            v = p.get(ne)
            if v is None:
                p[ne] = -factor * gc
                heapq.heappush(heap, (_neg(key(ne)), ne))
            else:
                v = v - factor * gc
                if v == 0:
                    del p[ne]
                else:
                    p[ne] = v
    return rem


def _divisors(gb: ReducedGB):
    return [(lead, g.terms[lead], g.terms) for lead, g in zip(gb.leads, gb.basis)]


def normal_form(f: Poly, G: ReducedGB) -> Poly:
    """Remainder of ``f`` on division by ``G``; canonical for a reduced GB."""
    if f.ring != G.ring:
        raise RingMismatch(f"{f.ring} vs {G.ring}")
    return Poly(f.ring, _reduce_terms(f.terms, _divisors(G), G.order.key))


def exact_division(h: Poly, f: Poly, order=None) -> Poly:
    """Quotient ``h / f``; raises ``ValueError`` if ``f`` does not divide ``h``."""
    order = order or Grevlex()
    lead, lc = f.lead(order)
    rest = dict(h.terms)
    quot = {}
    key = order.key
    while rest:
        e = max(rest, key=key)
        if not _divides(lead, e):
            raise ValueError("division is not exact")
        shift = tuple(a - b for a, b in zip(e, lead))
        c = rest[e] / lc
        quot[shift] = c
        for ge, gc in f.terms.items():
            ne = tuple(a + b for a, b in zip(ge, shift))
            v = rest.get(ne, h.ring.field.zero) - c * gc
            if v == 0:
                rest.pop(ne, None)
            else:
                rest[ne] = v
    return Poly(h.ring, quot)


# ---------------------------------------------------------------------------
# Buchberger


def _monic_terms(terms, lead):
    lc = terms[lead]
    if lc == 1:
        return terms
    inv = 1 / lc
    return {e: c * inv for e, c in terms.items()}


def _spoly(f, lf, g, lg):
    m = _lcm(lf, lg)
    sf = tuple(a - b for a, b in zip(m, lf))
    sg = tuple(a - b for a, b in zip(m, lg))
    out = {}
    for e, c in f.items():
        if e != lf:
            out[tuple(a + b for a, b in zip(e, sf))] = c
    for e, c in g.items():
        if e == lg:
            continue
        ne = tuple(a + b for a, b in zip(e, sg))
        v = out.get(ne)
        if v is None:
            out[ne] = -c
        else:
            v = v - c
            if v == 0:
                del out[ne]
            else:
                out[ne] = v
    return out


def buchberger(gens, order: Optional[MonomialOrder] = None) -> ReducedGB:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Normal selection strategy (smallest lcm first) with the Gebauer-Moeller
    installation of Buchberger's coprime and chain criteria.  Deterministic
    for a fixed order and generator sequence.
    """
    order = order or Grevlex()
    if isinstance(gens, Ideal):
        ring, gens = gens.ring, list(gens.gens)
    else:
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            raise EmptyGeneratorList("Groebner basis of an empty generator list")
        ring = gens[0].ring
    if not gens:
        raise EmptyGeneratorList("Groebner basis of an empty generator list")
    key = order.key

    polys: List[dict] = []
    leads: List[tuple] = []
    G: List[int] = []
    pairs = set()

    def current_divisors():
        return [(leads[i], 1, polys[i]) for i in G]

    def install(terms):
        lead = max(terms, key=key)
        terms = _monic_terms(terms, lead)
        h = len(polys)
        polys.append(terms)
        leads.append(lead)
        lh = lead
        # Gebauer-Moeller update.
        C = list(G)
        D = []
        while C:
            g1 = C.pop()
            l1 = _lcm(lh, leads[g1])
            if _coprime(lh, leads[g1]) or not any(
                _divides(_lcm(lh, leads[g2]), l1) for g2 in C + D
            ):
                D.append(g1)
        E = [g for g in D if not _coprime(lh, leads[g])]
        kept = set()
        for a, b in pairs:
            l_ab = _lcm(leads[a], leads[b])
            if (
                _divides(lh, l_ab)
                and _lcm(leads[a], lh) != l_ab
                and _lcm(leads[b], lh) != l_ab
            ):
                continue
            kept.add((a, b))
        pairs.clear()
        pairs.update(kept)
        pairs.update((g, h) for g in E)
        G[:] = [g for g in G if not _divides(lh, leads[g])] + [h]

    # Inter-reduce the input first; cheap and keeps the pair set small.
    for g in sorted(gens, key=lambda p: key(p.lm(order))):
        r = _reduce_terms(g.terms, current_divisors(), key)
        if r:
            install(r)

    while pairs:
        a, b = min(pairs, key=lambda ab: (key(_lcm(leads[ab[0]], leads[ab[1]])), ab))
        pairs.discard((a, b))
        s = _spoly(polys[a], leads[a], polys[b], leads[b])
        r = _reduce_terms(s, current_divisors(), key)
        if r:
            install(r)

    # Minimalize and inter-reduce.
    final = sorted(G, key=lambda i: key(leads[i]))
    minimal = [
        i for i in final if not any(j != i and _divides(leads[j], leads[i]) for j in final)
    ]
    basis = []
    for i in minimal:
        others = [(leads[j], 1, polys[j]) for j in minimal if j != i]
        lead = leads[i]
        tail = {e: c for e, c in polys[i].items() if e != lead}
        tail = _reduce_terms(tail, others, key)
        tail[lead] = polys[i][lead]
        basis.append(Poly(ring, _monic_terms(tail, lead)))
    return ReducedGB(ring, order, basis)


# ---------------------------------------------------------------------------
# zero-dimensional queries


def is_zero_dimensional(G: ReducedGB) -> bool:
    n = G.ring.nvars
    pure = set()
    for lead in G.leads:
        support = [i for i, k in enumerate(lead) if k]
        if len(support) == 1:
            pure.add(support[0])
        elif not support:
            return True
    return len(pure) == n


def standard_monomials(G: ReducedGB):
    """Monomials outside the leading-term ideal, ascending in ``G.order``.

    Returns ``None`` when that set is infinite (positive-dimensional ideal).
    """
    if not is_zero_dimensional(G):
        return None
    n = G.ring.nvars
    if G.is_unit():
        return []
    start = (0,) * n
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for i in range(n):
                e = m[:i] + (m[i] + 1,) + m[i + 1 :]
                if e in seen or any(_divides(l, e) for l in G.leads):
                    continue
                seen.add(e)
                nxt.append(e)
        frontier = nxt
    return sorted(seen, key=G.order.key)


def quotient_dim(G: ReducedGB) -> int:
    sm = standard_monomials(G)
    if sm is None:
        raise NotZeroDimensional("quotient is infinite-dimensional")
    return len(sm)


def _as_ideal(I):
    return I if isinstance(I, Ideal) else Ideal(list(I))


# ---------------------------------------------------------------------------
# ideal quotient, intersection, saturation


_TAG = "_w"


def _tag_ring(ring: PolyRing):
    name = _TAG
    while name in ring.variables:
        name += "_"
    return ring.extend([name], front=True)


def _lift(p: Poly, big: PolyRing) -> Poly:
    return Poly(big, {(0,) + e: c for e, c in p.terms.items()})


def _drop(p: Poly, small: PolyRing) -> Poly:
    return Poly(small, {e[1:]: c for e, c in p.terms.items()})


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating a tag variable from ``w*I + (1-w)*J``."""
    if I.ring != J.ring:
        raise RingMismatch("intersection of ideals in different rings")
    ring = I.ring
    big = _tag_ring(ring)
    w = big.var(big.variables[0])
    gens = [w * _lift(g, big) for g in I.gb().basis] + [
        (big.one() - w) * _lift(g, big) for g in J.gb().basis
    ]
    order = BlockElimination([0], big.nvars)
    G = buchberger(gens, order)
    # Under the block order a leading term free of w means a w-free element.
    kept = [_drop(g, ring) for g in G.basis if g.lm(order)[0] == 0]
    return Ideal(kept, ring)


def ideal_quotient(I, f: Poly) -> Ideal:
    """Generators of ``(I : f) = {g : g*f in I}``."""
    I = _as_ideal(I)
    if f.is_zero():
        raise ZeroDivisorPolynomial("ideal quotient by the zero polynomial")
    if f.ring != I.ring:
        raise RingMismatch("ideal quotient across rings")
    if f.is_constant():
        return Ideal(I.gb().basis, I.ring)
    meet = intersect(I, Ideal([f]))
    return Ideal([exact_division(h, f) for h in meet.gb().basis], I.ring)


def saturate_at_origin(I) -> Ideal:
    """``(I : m^inf)`` for the maximal ideal ``m`` of the origin.

    Iterates ``I_{k+1} = ∩_v (I_k : v)`` until the quotient dimension stops
    dropping; each step strictly enlarges the ideal until it stabilizes.
    """
    I = _as_ideal(I)
    G = I.gb()
    if standard_monomials(G) is None:
        raise NotZeroDimensional("saturation needs a zero-dimensional ideal")
    cur = Ideal(G.basis, I.ring)
    d = quotient_dim(G)
    while d > 0:
        parts = [ideal_quotient(cur, v) for v in I.ring.gens()]
        nxt = parts[0]
        for p in parts[1:]:
            nxt = intersect(nxt, p)
        nxt = Ideal(nxt.gb().basis, I.ring)
        dn = quotient_dim(nxt.gb())
        if dn == d:
            break
        cur, d = nxt, dn
    return cur


def _monomials_of_degree(n, k):
    out = []
    for combo in combinations_with_replacement(range(n), k):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


def local_dim_at_origin(I) -> int:
    """Length of the component of ``R/I`` supported at the origin.

    Uses ``dim R/(I + m^k)`` for increasing ``k`` until it stabilizes.
    """
    I = _as_ideal(I)
    G = I.gb()
    total = quotient_dim(G)
    ring = I.ring
    prev = None
    for k in range(1, total + 2):
        mk = [ring.monomial(e) for e in _monomials_of_degree(ring.nvars, k)]
        d = quotient_dim(buchberger(list(G.basis) + mk, G.order))
        if d == prev or d == 0:
            return d
        prev = d
    return prev
