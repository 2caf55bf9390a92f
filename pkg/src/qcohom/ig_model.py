"""Presentations of the classical, small quantum and first-order deformed
quantum cohomology rings of the isotropic Grassmannian IG(2, 2n).

Variable names: ``s1..s{2n-2}`` for the special Schubert classes,
``a1, a2, b1..b{n-2}`` for the Chern classes of the tautological bundles,
``t`` for the deformation parameter in the direction of ``s2``.
"""

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .errors import IndexOutOfRange, UnsupportedN
from .fields import CoeffField, QSpecialized
from .groebner import Ideal, normal_form
from .matrix import det_poly_matrix
from .poly import GradingSpec, Poly, PolyRing
from .unipoly import UniPoly, squarefree_part, unipoly_gcd


class Variant(enum.Enum):
    SigmaClassical = "SigmaClassical"
    SigmaQuantum = "SigmaQuantum"
    ABClassical = "ABClassical"
    ABQuantum = "ABQuantum"
    SigmaBigTauFirstOrder = "SigmaBigTauFirstOrder"

    @property
    def is_sigma(self):
        return self.value.startswith("Sigma")

    @property
    def is_quantum(self):
        return self not in (Variant.SigmaClassical, Variant.ABClassical)


@dataclass(frozen=True)
class PresentationSpec:
    n: int
    variant: Variant
    coeff: CoeffField = field(default_factory=QSpecialized)

    def __post_init__(self):
        if isinstance(self.variant, str):
            object.__setattr__(self, "variant", Variant(self.variant))
        if self.n < 2:
            raise UnsupportedN(f"IG(2, 2n) needs n >= 2, got {self.n}")


@dataclass(frozen=True)
class ModelRing:
    ring: PolyRing
    grading: GradingSpec

    @property
    def variables(self):
        return self.ring.variables


def sigma_names(n):
    return tuple(f"s{k}" for k in range(1, 2 * n - 1))


def ab_names(n):
    return ("a1", "a2") + tuple(f"b{i}" for i in range(1, n - 1))


def grading_for(n, variables) -> GradingSpec:
    """Weights: s_i -> i, a1 -> 1, a2 -> 2, b_i -> 2i, t -> -1, q -> 2n-1."""
    w = {}
    for v in variables:
        if v == "t":
            w[v] = -1
        elif v[0] == "s":
            w[v] = int(v[1:])
        elif v[0] == "a":
            w[v] = int(v[1:])
        elif v[0] == "b":
            w[v] = 2 * int(v[1:])
        else:
            raise ValueError(f"no weight for variable {v!r}")
    return GradingSpec.of(w, q_weight=2 * n - 1)


def model_ring(spec: PresentationSpec) -> ModelRing:
    n = spec.n
    if spec.variant.is_sigma:
        names = sigma_names(n)
        if spec.variant is Variant.SigmaBigTauFirstOrder:
            names = names + ("t",)
    else:
        names = ab_names(n)
    ring = PolyRing(names, spec.coeff)
    return ModelRing(ring, grading_for(n, names))


# ---------------------------------------------------------------------------
# sigma presentation


def _sigma_getter(ring, n):
    top = 2 * n - 2

    def s(k):
        if k == 0:
            return ring.one()
        if k < 0 or k > top:
            return ring.zero()
        return ring.var(f"s{k}")

    return s


def giambelli_det(ring, n, r):
    """``det(s_{1+j-i})_{1<=i,j<=r}`` with ``s_0 = 1`` and ``s_k = 0`` outside range."""
    s = _sigma_getter(ring, n)
    return det_poly_matrix([[s(1 + j - i) for j in range(1, r + 1)] for i in range(1, r + 1)])


def sigma_square_relation(ring, n, m, terms):
    """``s_m^2 + 2 * sum_{i=1..terms} (-1)^i s_{m+i} s_{m-i}``."""
    s = _sigma_getter(ring, n)
    acc = s(m) * s(m)
    for i in range(1, terms + 1):
        acc = acc + (s(m + i) * s(m - i)).scale(2 * (-1) ** i)
    return acc


def _sigma_relations(ring, n, quantum, deformed, q):
    rels = [giambelli_det(ring, n, r) for r in range(3, 2 * n - 1)]
    low = sigma_square_relation(ring, n, n - 1, n - 1)
    high = sigma_square_relation(ring, n, n, n - 2)
    sign = (-1) ** (n + 1)
    if deformed:
        low = low + ring.var("t").scale(q * sign)
    if quantum:
        high = high + ring.var("s1").scale(q * sign)
    return rels + [low, high]


# ---------------------------------------------------------------------------
# (a, b) presentation


def _xpoly_mul(f, g, zero):
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a.is_zero():
            continue
        for j, b in enumerate(g):
            if not b.is_zero():
                out[i + j] = out[i + j] + a * b
    return out


def _ab_pieces(ring, n):
    a1, a2 = ring.var("a1"), ring.var("a2")
    one, zero = ring.one(), ring.zero()
    P = [one, a1, a2]
    Pm = [one, -a1, a2]
    Q = [one]
    for i in range(1, n - 1):
        Q += [zero, ring.var(f"b{i}")]
    return P, Pm, Q


def _ab_relations(ring, n, quantum, q):
    P, Pm, Q = _ab_pieces(ring, n)
    zero = ring.zero()
    prod = _xpoly_mul(_xpoly_mul(P, Pm, zero), Q, zero)
    prod[0] = prod[0] - ring.one()
    if quantum:
        prod[2 * n] = prod[2 * n] - ring.var("a1").scale(q)
    assert all(c.is_zero() for c in prod[1::2]), "P(x)P(-x)Q(x) must be even"
    assert prod[0].is_zero() and len(prod) == 2 * n + 1
    return [prod[2 * k] for k in range(1, n + 1)]


def build_relations(spec: PresentationSpec, q_twist: int = 1) -> Tuple[ModelRing, List[Poly]]:
    """Ring and relation list for ``spec``.

    ``q_twist`` replaces ``q`` by ``q_twist * q`` (used to compare sign
    conventions of the two quantum presentations).
    """
    mr = model_ring(spec)
    ring = mr.ring
    q = spec.coeff.q * q_twist
    v = spec.variant
    n = spec.n
    if v.is_sigma:
        rels = _sigma_relations(
            ring, n, quantum=v.is_quantum, deformed=v is Variant.SigmaBigTauFirstOrder, q=q
        )
    else:
        rels = _ab_relations(ring, n, quantum=v.is_quantum, q=q)
    return mr, rels


@lru_cache(maxsize=None)
def model_ideal(spec: PresentationSpec) -> Ideal:
    """Ideal of ``spec``; cached so GBs are shared between callers."""
    _, rels = build_relations(spec)
    return Ideal(rels)


def specialize_t(rels: List[Poly], t0) -> List[Poly]:
    """Substitute a field value for ``t`` and drop it from the ring."""
    ring = rels[0].ring
    small = PolyRing(tuple(x for x in ring.variables if x != "t"), ring.field)
    return [r.substitute({"t": small.const(t0)}, small) for r in rels]


# ---------------------------------------------------------------------------
# closed forms


@dataclass(frozen=True)
class ExpectedCounts:
    total: int
    reduced_points: int
    local_length: int
    jacobian_rank_deformed: int
    radical_dim: int

    def as_tuple(self):
        return (
            self.total,
            self.reduced_points,
            self.local_length,
            self.jacobian_rank_deformed,
            self.radical_dim,
        )


def expected_counts(n: int) -> ExpectedCounts:
    if n < 2:
        raise UnsupportedN(f"n must be >= 2, got {n}")
    return ExpectedCounts(
        total=2 * n * (n - 1),
        reduced_points=(2 * n - 1) * (n - 1),
        local_length=n - 1,
        jacobian_rank_deformed=2 * n - 2,
        radical_dim=n - 2,
    )


# ---------------------------------------------------------------------------
# comparison of the two presentations


def sigma_in_ab(n: int, k: int, ring: Optional[PolyRing] = None) -> Poly:
    """``s_k`` as the ``x^k`` coefficient of ``P(-x) Q(x)``."""
    if not 0 <= k <= 2 * n - 2:
        raise IndexOutOfRange(f"s_{k} is out of range for n = {n}")
    ring = ring or PolyRing(ab_names(n))
    _, Pm, Q = _ab_pieces(ring, n)
    prod = _xpoly_mul(Pm, Q, ring.zero())
    return prod[k] if k < len(prod) else ring.zero()


@dataclass(frozen=True)
class CompatResult:
    well_defined: bool
    q_twist: Optional[int]
    nonzero_residues: Dict[int, int]


def presentation_compat(n: int, coeff: Optional[CoeffField] = None, quantum: bool = True) -> CompatResult:
    """Check that ``s_k -> sigma_in_ab(k)`` carries the sigma relations into
    the (a, b) ideal, for ``q -> q`` and for ``q -> -q``.
    """
    coeff = coeff or QSpecialized()
    if quantum:
        sv, av = Variant.SigmaQuantum, Variant.ABQuantum
    else:
        sv, av = Variant.SigmaClassical, Variant.ABClassical
    ab_spec = PresentationSpec(n, av, coeff)
    G = model_ideal(ab_spec).gb()
    ab_ring = G.ring
    images = {f"s{k}": sigma_in_ab(n, k, ab_ring) for k in range(1, 2 * n - 1)}
    residues = {}
    for twist in (1, -1):
        _, rels = build_relations(PresentationSpec(n, sv, coeff), q_twist=twist)
        residues[twist] = sum(
            1 for r in rels if not normal_form(r.substitute(images, ab_ring), G).is_zero()
        )
    good = [tw for tw in (1, -1) if residues[tw] == 0]
    if not quantum:
        return CompatResult(residues[1] == 0, 1 if residues[1] == 0 else None, residues)
    if len(good) == 1:
        return CompatResult(True, good[0], residues)
    return CompatResult(False, None, residues)


# ---------------------------------------------------------------------------
# solution count on the double cover (q = -1)


@dataclass(frozen=True)
class ZCountResult:
    ordered_pair_count: int
    point_count: int


def z_polynomial(n: int) -> UniPoly:
    """``(z^{2n} - z)^{2n} - z^{2n}``: the equation for the first root ``z1``."""
    z2n = UniPoly.monomial(2 * n)
    z = UniPoly.monomial(1)
    return (z2n - z) ** (2 * n) - z2n


def z_count(n: int) -> ZCountResult:
    """Count ordered pairs ``(z1, z2)`` with ``z1 != z2`` both nonzero and
    ``z1^{2n} = z2^{2n} = z1 + z2``; each point of the (a, b) system away
    from the origin has two such preimages.
    """
    if n < 2:
        raise UnsupportedN(f"n must be >= 2, got {n}")
    sqf = squarefree_part(z_polynomial(n))
    # z = 0 and z1 = z2 (z^{2n} = 2z) are both roots of z^{2n} - 2z.
    bad = UniPoly.monomial(2 * n) - UniPoly.monomial(1, 2)
    ordered = sqf.degree - unipoly_gcd(sqf, bad).degree
    return ZCountResult(ordered, ordered // 2)
