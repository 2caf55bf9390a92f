"""Finite-dimensional quotient algebras: multiplication operators, trace
form, tangent spaces and fat-point classification."""

from dataclasses import dataclass
from typing import Dict, List, Optional

from .errors import InconsistentInput, NotZeroDimensional, PointNotOnVariety, RingMismatch
from .groebner import ReducedGB, _as_ideal, _divisors, _reduce_terms, standard_monomials
from .matrix import DenseMatrix, matrix_rank
from .poly import Grevlex, MonomialOrder, Poly


class QuotientAlgebra:
    """``R/I`` with the standard-monomial basis of a reduced GB.

    Multiplication matrices of ring variables are filled lazily; a fill is a
    pure function of the GB, so concurrent fills agree.
    """

    def __init__(self, gb: ReducedGB):
        basis = standard_monomials(gb)
        if basis is None:
            raise NotZeroDimensional("quotient algebra of a positive-dimensional ideal")
        self.gb = gb
        self.ring = gb.ring
        self.field = gb.ring.field
        self.basis = tuple(basis)
        self.index = {e: i for i, e in enumerate(self.basis)}
        self._divs = _divisors(gb)
        self._nf_cache: Dict[tuple, dict] = {}
        self._var_mats: Dict[int, DenseMatrix] = {}

    @property
    def dim(self):
        return len(self.basis)

    def basis_polys(self) -> List[Poly]:
        return [self.ring.monomial(e) for e in self.basis]

    # -- coordinates ---------------------------------------------------

    def _nf_monomial(self, e):
        r = self._nf_cache.get(e)
        if r is None:
            r = _reduce_terms({e: self.field.one}, self._divs, self.gb.order.key)
            self._nf_cache[e] = r
        return r

    def coords(self, f: Poly) -> list:
        """Coordinates of the class of ``f`` in the standard-monomial basis."""
        if f.ring != self.ring:
            raise RingMismatch(f"{f.ring} vs {self.ring}")
        v = [self.field.zero] * self.dim
        for e, c in f.terms.items():
            for be, bc in self._nf_monomial(e).items():
                i = self.index[be]
                v[i] = v[i] + c * bc
        return v

    def element(self, vec) -> Poly:
        return Poly(self.ring, {e: c for e, c in zip(self.basis, vec) if c != 0})

    def _zero_matrix(self):
        return DenseMatrix.zeros(self.dim, self.dim, self.field.zero, self.field.one)

    def _matrix_from_columns(self, cols):
        rows = [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]
        return DenseMatrix(rows, self.dim, self.field.zero, self.field.one)

    def mult_matrix(self, f: Poly) -> DenseMatrix:
        """Matrix of multiplication by ``f``; column ``j`` is ``f * basis_j``."""
        if f.ring != self.ring:
            raise RingMismatch(f"{f.ring} vs {self.ring}")
        var = _single_variable(f)
        if var is not None and var in self._var_mats:
            return self._var_mats[var]
        cols = []
        for b in self.basis:
            cols.append(self.coords(f.mul_term(b, self.field.one)))
        M = self._matrix_from_columns(cols)
        if var is not None:
            M = self._var_mats.setdefault(var, M)
        return M

    def trace(self, f: Poly):
        """Trace of multiplication by ``f``."""
        return self.mult_matrix(f).trace()

    def _monomial_traces(self):
        out = []
        for b in self.basis:
            acc = self.field.zero
            for j, bj in enumerate(self.basis):
                prod = tuple(x + y for x, y in zip(b, bj))
                c = self._nf_monomial(prod).get(bj)
                if c is not None:
                    acc = acc + c
            out.append(acc)
        return out

    def trace_gram(self) -> DenseMatrix:
        """Gram matrix of ``(f, g) -> trace(f*g)`` on the basis."""
        tau = self._monomial_traces()
        n = self.dim
        rows = [[self.field.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                prod = tuple(x + y for x, y in zip(self.basis[i], self.basis[j]))
                acc = self.field.zero
                for be, c in self._nf_monomial(prod).items():
                    acc = acc + c * tau[self.index[be]]
                rows[i][j] = rows[j][i] = acc
        return DenseMatrix(rows, n, self.field.zero, self.field.one)


def _single_variable(f: Poly) -> Optional[int]:
    if len(f.terms) != 1:
        return None
    (e, c), = f.terms.items()
    if c != 1 or sum(e) != 1:
        return None
    return e.index(1)


def quotient_algebra(I, order: Optional[MonomialOrder] = None) -> QuotientAlgebra:
    I = _as_ideal(I)
    return QuotientAlgebra(I.gb(order or Grevlex()))


def mult_matrix(A: QuotientAlgebra, f: Poly) -> DenseMatrix:
    return A.mult_matrix(f)


# ---------------------------------------------------------------------------
# semisimplicity


@dataclass(frozen=True)
class SemisimplicityReport:
    gram: DenseMatrix
    dim: int
    rank: int

    @property
    def radical_dim(self):
        return self.dim - self.rank

    @property
    def is_semisimple(self):
        return self.radical_dim == 0


def trace_form(A: QuotientAlgebra) -> SemisimplicityReport:
    """Trace form of ``A``; in characteristic zero its radical is the nilradical."""
    gram = A.trace_gram()
    return SemisimplicityReport(gram=gram, dim=A.dim, rank=matrix_rank(gram))


# ---------------------------------------------------------------------------
# tangent spaces


def jacobian_at(gens, point) -> DenseMatrix:
    """Jacobian matrix (rows = generators, columns = variables) at ``point``."""
    gens = list(_as_ideal(gens).gens)
    ring = gens[0].ring
    f = ring.field
    for g in gens:
        if g.evaluate(point) != 0:
            raise PointNotOnVariety(f"{g} does not vanish at {list(point)}")
    rows = [[g.derivative(i).evaluate(point) for i in range(ring.nvars)] for g in gens]
    return DenseMatrix(rows, ring.nvars, f.zero, f.one)


def tangent_dim_at(gens, point) -> int:
    """Dimension of the Zariski tangent space of ``V(gens)`` at ``point``."""
    J = jacobian_at(gens, point)
    return J.ncols - matrix_rank(J)


# ---------------------------------------------------------------------------
# local classification


@dataclass(frozen=True)
class Classification:
    kind: str
    length: Optional[int] = None

    def __str__(self):
        if self.kind == "CurvilinearFatPoint":
            return f"CurvilinearFatPoint({self.length})"
        return self.kind


REDUCED_POINT = Classification("ReducedPoint")
OTHER = Classification("Other")


@dataclass(frozen=True)
class LocalReport:
    local_dim: int
    tangent_dim: int
    classification: Classification


def classify_local(local_dim: int, tangent_dim: int) -> Classification:
    """Classify a local Artinian algebra by its length and tangent dimension.

    Residue field K and a tangent space of dimension at most one force
    ``K[e]/(e^d)`` with ``d`` the length.
    """
    if local_dim < 0 or tangent_dim < 0:
        raise InconsistentInput("negative dimension")
    if local_dim <= 1:
        return REDUCED_POINT
    if tangent_dim == 0:
        raise InconsistentInput(f"length {local_dim} with a zero tangent space")
    if tangent_dim == 1:
        return Classification("CurvilinearFatPoint", local_dim)
    return OTHER


def local_report(local_dim: int, tangent_dim: int) -> LocalReport:
    return LocalReport(local_dim, tangent_dim, classify_local(local_dim, tangent_dim))
