"""Dimension-axiom bookkeeping and the four-point invariants
``I_1(pt, s2, s_i, s_j)``, counted as the number of points in which three
general linear subspaces of ``P(C^{2n}/E_2)`` meet."""

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .errors import AmbientMismatch, BadCodim, RedrawLimitExceeded, UnsupportedN
from .matrix import DenseMatrix, matrix_rank

# Numerators and denominators of sampled rationals lie in [-BOUND, BOUND].
BOUND = 97


def variety_dim(n: int) -> int:
    """Complex dimension of IG(2, 2n)."""
    return 4 * n - 5


def gw_degree_constraint(n: int, degrees: Sequence[int], d: int) -> bool:
    """Dimension axiom for a genus-zero invariant of degree ``d``.

    ``degrees`` are the (complex) degrees of the inserted classes; the
    invariant can be nonzero only if they sum to
    ``dim X + (2n-1) d + (#insertions - 3)``.
    """
    if d < 0 or any(k < 0 for k in degrees):
        return False
    return sum(degrees) == variety_dim(n) + (2 * n - 1) * d + len(degrees) - 3


class SeededRng:
    """Deterministic stream of small nonzero-denominator rationals."""

    def __init__(self, seed: int):
        self.seed = seed
        self._rng = random.Random(seed)

    @classmethod
    def for_trial(cls, seed: int, trial: int):
        # str seeds are hashed with SHA-512, so this is stable across runs.
        return cls(f"{seed}:{trial}")

    def rational(self) -> Fraction:
        return Fraction(self._rng.randint(-BOUND, BOUND), self._rng.randint(1, BOUND))

    def vector(self, length: int) -> List[Fraction]:
        return [self.rational() for _ in range(length)]


@dataclass(frozen=True)
class LinearSubspace:
    ambient: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    def annihilator(self) -> List[list]:
        """Linear forms cutting out the subspace."""
        if not self.basis:
            return [[Fraction(int(i == j)) for j in range(self.ambient)] for i in range(self.ambient)]
        return DenseMatrix(self.basis, self.ambient).nullspace()


def random_subspace(ambient: int, codim: int, rng: SeededRng) -> LinearSubspace:
    """Subspace of dimension ``ambient - codim`` spanned by random vectors."""
    if not 0 <= codim <= ambient:
        raise BadCodim(f"codimension {codim} in ambient dimension {ambient}")
    k = ambient - codim
    while True:
        basis = [rng.vector(ambient) for _ in range(k)]
        if k == 0 or matrix_rank(DenseMatrix(basis, ambient)) == k:
            return LinearSubspace(ambient, tuple(tuple(v) for v in basis))


def intersection_dim(spaces: Sequence[LinearSubspace]) -> int:
    """Vector-space dimension of the intersection (exact)."""
    if not spaces:
        raise ValueError("intersection of no subspaces")
    ambient = spaces[0].ambient
    if any(s.ambient != ambient for s in spaces):
        raise AmbientMismatch("subspaces live in different ambient spaces")
    forms = [f for s in spaces for f in s.annihilator()]
    if not forms:
        return ambient
    return ambient - matrix_rank(DenseMatrix(forms, ambient))


class Status(enum.Enum):
    Verified = "Verified"
    VanishesByDegree = "VanishesByDegree"
    DegenerateRedraws = "DegenerateRedraws"


@dataclass(frozen=True)
class FourPointResult:
    value: int
    status: Status
    trials: int = 0
    redraws: int = 0


def four_point_check(n: int, i: int, j: int, trials: int = 100, seed: int = 0) -> FourPointResult:
    """``I_1(pt, s2, s_i, s_j)`` for ``1 <= i, j <= 2n-2``.

    Off the degree constraint the invariant vanishes.  On it, each trial
    intersects random subspaces of codimension 1, i-1, j-1 in dimension
    2n-2 and requires a one-dimensional intersection (one projective point).
    """
    if n < 2:
        raise UnsupportedN(f"n must be >= 2, got {n}")
    if not (1 <= i <= 2 * n - 2 and 1 <= j <= 2 * n - 2):
        raise ValueError(f"indices must lie in [1, {2 * n - 2}]")
    if trials < 1:
        raise ValueError("need at least one trial")
    if not gw_degree_constraint(n, [variety_dim(n), 2, i, j], 1):
        return FourPointResult(0, Status.VanishesByDegree)
    ambient = 2 * n - 2
    codims = (1, i - 1, j - 1)
    redraws = 0
    attempt = 0
    done = 0
    while done < trials:
        rng = SeededRng.for_trial(seed, attempt)
        attempt += 1
        spaces = [random_subspace(ambient, c, rng) for c in codims]
        if intersection_dim(spaces) == 1:
            done += 1
            continue
        redraws += 1
        if redraws > 3 * trials:
            raise RedrawLimitExceeded(f"{redraws} degenerate draws for (n, i, j) = ({n}, {i}, {j})")
    status = Status.Verified if redraws == 0 else Status.DegenerateRedraws
    return FourPointResult(1, status, trials, redraws)
