"""Regular operators between coordinatewise lattices.

Every rational matrix is regular on Q^n with the coordinatewise order, and
positive exactly when its entries are nonnegative. The classifiers below
decide each operator class through a finite criterion and, where cheap,
re-derive the verdict from the definition as a guard.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (DimensionMismatch, EnumerationBoundExceeded, NoAdjointError, NotPositive,
                     UnsupportedInstance)
from .exact import (Affine, NoSolution, RatMatrix, RationalLike, Unique, is_feasible, kernel_basis,
                    solve_linear)
from .lattice import Element, LatticeSpace
from .product import OrthoProduct, QuotientSpace, ensure_verified, evaluate, neutral_basis

RK_ABS_MAX_DIM = 16
LP_MAX_DIM = 8
ORACLE_MAX_DIM = 8

_ZERO = Fraction(0)


@dataclass(frozen=True)
class RegularOperator:
    domain: LatticeSpace
    codomain: LatticeSpace
    matrix: RatMatrix

    def __post_init__(self):
        if not (self.domain.is_coordinatewise and self.codomain.is_coordinatewise):
            raise UnsupportedInstance("operators are only supported between coordinatewise lattices")
        if (self.matrix.rows, self.matrix.cols) != (self.codomain.dim, self.domain.dim):
            raise DimensionMismatch(
                f"{self.matrix.rows}x{self.matrix.cols} matrix for a map "
                f"Q^{self.domain.dim} -> Q^{self.codomain.dim}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]], cols: int | None = None) -> "RegularOperator":
        m = RatMatrix.from_rows(rows, cols=cols)
        return cls(LatticeSpace.coordinatewise(m.cols), LatticeSpace.coordinatewise(m.rows), m)

    @classmethod
    def of(cls, m: RatMatrix) -> "RegularOperator":
        return cls(LatticeSpace.coordinatewise(m.cols), LatticeSpace.coordinatewise(m.rows), m)

    def apply(self, f: Element) -> Element:
        if f.space.dim != self.domain.dim:
            raise DimensionMismatch(f"operator on Q^{self.domain.dim} applied to Q^{f.space.dim}")
        return Element(self.codomain, self.matrix.apply(f.coords))

    def __matmul__(self, other: "RegularOperator") -> "RegularOperator":
        """Composition ``self ∘ other``."""
        return RegularOperator(other.domain, self.codomain, self.matrix @ other.matrix)

    def __sub__(self, other: "RegularOperator") -> "RegularOperator":
        return RegularOperator(self.domain, self.codomain, self.matrix - other.matrix)

    def __add__(self, other: "RegularOperator") -> "RegularOperator":
        return RegularOperator(self.domain, self.codomain, self.matrix + other.matrix)

    def transpose(self) -> "RegularOperator":
        return RegularOperator(self.codomain, self.domain, self.matrix.T)

    @property
    def is_square(self) -> bool:
        return self.domain.dim == self.codomain.dim

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def __repr__(self):
        return f"RegularOperator({self.matrix!r})"


def is_positive_operator(t: RegularOperator) -> bool:
    return all(x >= 0 for x in t.matrix.entries)


# -- multiplication operators -------------------------------------------------

def phi(p: OrthoProduct, f: Element) -> RegularOperator:
    """The multiplication operator g ↦ <f, g> from the domain of p into its codomain."""
    ensure_verified(p)
    if f.space.dim != p.n:
        raise DimensionMismatch(f"element of dimension {f.space.dim}, product domain has {p.n}")
    L = p.domain
    cols = [evaluate(p, f, L.basis(j)).coords for j in range(p.n)]
    return RegularOperator(L, p.codomain, RatMatrix.from_columns(cols, p.codomain.dim))


def phi_map_matrix(p: OrthoProduct) -> RatMatrix:
    """Matrix of the linear map f ↦ Φ_f, with Φ_f flattened row-major."""
    ensure_verified(p)
    n, m = p.n, p.codomain.dim
    # entry (k, j) of Φ_f is sum_i f_i B[i][j][k]
    return RatMatrix.from_rows(
        [[p.tensor[i][j][k] for i in range(n)] for k in range(m) for j in range(n)], cols=n)


# -- Riesz-Kantorovich --------------------------------------------------------

def _order_interval_vertices(g: Sequence[Fraction], symmetric: bool):
    """Vertices of [-g, g] (symmetric) or [0, g] for g >= 0, over the support of g."""
    supp = [i for i, x in enumerate(g) if x]
    choices = (-1, 1) if symmetric else (0, 1)
    for signs in itertools.product(choices, repeat=len(supp)):
        h = [_ZERO] * len(g)
        for i, s in zip(supp, signs):
            h[i] = s * g[i]
        yield tuple(h)


def _coordinatewise_sup(vectors) -> tuple:
    it = iter(vectors)
    best = list(next(it))
    for v in it:
        best = [max(a, b) for a, b in zip(best, v)]
    return tuple(best)


def rk_abs_apply(t: RegularOperator, g: Element, max_dim: int = RK_ABS_MAX_DIM) -> Element:
    """``|T| g = sup{|T h| : |h| <= g}`` for g >= 0, by enumerating the sign vertices of [-g, g].

    Each coordinate of |T h| is convex in h, so its maximum over the box is
    attained at a vertex; the coordinatewise supremum of the vertex values is
    therefore the supremum of the whole set.
    """
    if any(x < 0 for x in g.coords):
        raise ValueError("the Riesz-Kantorovich formula needs g >= 0")
    k = sum(1 for x in g.coords if x)
    if k > max_dim:
        raise EnumerationBoundExceeded(f"support of size {k} exceeds the enumeration bound {max_dim}")
    images = (tuple(abs(x) for x in t.matrix.apply(h)) for h in _order_interval_vertices(g.coords, True))
    return Element(t.codomain, _coordinatewise_sup(images))


def rk_abs(t: RegularOperator, max_dim: int = RK_ABS_MAX_DIM) -> RegularOperator:
    """The modulus |T|, assembled column by column from the Riesz-Kantorovich supremum.

    The result is cross-checked against the entrywise absolute value.
    """
    n = t.domain.dim
    if n > max_dim:
        raise EnumerationBoundExceeded(
            f"domain dimension {n} exceeds the rk_abs enumeration bound {max_dim}; raise max_dim explicitly")
    cols = [rk_abs_apply(t, t.domain.basis(j), max_dim).coords for j in range(n)]
    result = RatMatrix.from_columns(cols, t.codomain.dim)
    entrywise = t.matrix.map(abs)
    if result != entrywise:
        raise AssertionError(f"Riesz-Kantorovich supremum {result} disagrees with entrywise modulus {entrywise}")
    return RegularOperator(t.domain, t.codomain, result)


def rk_sup_apply(r: RegularOperator, s: RegularOperator, g: Element,
                 max_dim: int = RK_ABS_MAX_DIM) -> Element:
    """``(R ∨ S) g = sup{R h + S (g - h) : 0 <= h <= g}`` for g >= 0."""
    if any(x < 0 for x in g.coords):
        raise ValueError("the Riesz-Kantorovich formula needs g >= 0")
    if sum(1 for x in g.coords if x) > max_dim:
        raise EnumerationBoundExceeded(f"support exceeds the enumeration bound {max_dim}")
    def value(h):
        rest = tuple(a - b for a, b in zip(g.coords, h))
        return tuple(a + b for a, b in zip(r.matrix.apply(h), s.matrix.apply(rest)))
    return Element(r.codomain, _coordinatewise_sup(value(h) for h in _order_interval_vertices(g.coords, False)))


def rk_sup(r: RegularOperator, s: RegularOperator, max_dim: int = RK_ABS_MAX_DIM) -> RegularOperator:
    if (r.domain, r.codomain) != (s.domain, s.codomain):
        raise DimensionMismatch("supremum of operators between different spaces")
    n = r.domain.dim
    if n > max_dim:
        raise EnumerationBoundExceeded(f"domain dimension {n} exceeds the enumeration bound {max_dim}")
    cols = [rk_sup_apply(r, s, r.domain.basis(j), max_dim).coords for j in range(n)]
    return RegularOperator(r.domain, r.codomain, RatMatrix.from_columns(cols, r.codomain.dim))


def abs_mult_check(p: OrthoProduct, f: Element) -> bool:
    """Whether |Φ_f| = Φ_|f| holds exactly for this product and element."""
    from .lattice import absolute
    return rk_abs(phi(p, f)).matrix == phi(p, absolute(p.domain, f)).matrix


# -- adjoints -----------------------------------------------------------------

class AdjointKind(str, enum.Enum):
    NONE = "none"
    UNIQUE = "unique"
    FAMILY = "family"


@dataclass(frozen=True)
class AdjointResult:
    kind: AdjointKind
    operator: Optional[RegularOperator] = None  # the adjoint, or a particular one for a family
    homogeneous: tuple = ()  # operators S0 with <f, S0 g> = 0 for all f, g

    @property
    def exists(self) -> bool:
        return self.kind is not AdjointKind.NONE


def _check_pair(pL: OrthoProduct, pM: OrthoProduct, t: RegularOperator):
    ensure_verified(pL)
    ensure_verified(pM)
    if pL.codomain != pM.codomain:
        raise DimensionMismatch("both products must take values in the same lattice V")
    if t.domain.dim != pL.n or t.codomain.dim != pM.n:
        raise DimensionMismatch(
            f"operator Q^{t.domain.dim} -> Q^{t.codomain.dim} does not match products on "
            f"Q^{pL.n} and Q^{pM.n}")


def adjoint(pL: OrthoProduct, pM: OrthoProduct, t: RegularOperator) -> AdjointResult:
    """All S: M -> L with <T f, g>_M = <f, S g>_L, found by exact linear solving.

    Imposing the identity on basis pairs (e_i, e_j) and every coordinate k of
    V gives sum_l S[l][j] B_L[i][l][k] = <T e_i, e_j>_M[k]. The unknowns of
    column j of S only meet equations for that j, so the full n·p system
    splits into p blocks sharing one coefficient matrix.
    """
    _check_pair(pL, pM, t)
    n, p, m = pL.n, pM.n, pL.codomain.dim
    a = RatMatrix.from_rows(
        [[pL.tensor[i][l][k] for l in range(n)] for i in range(n) for k in range(m)], cols=n)
    L, M = pL.domain, pM.domain
    images = [t.apply(L.basis(i)) for i in range(n)]
    columns = []
    homogeneous_dirs = None
    for j in range(p):
        ej = M.basis(j)
        rhs = [x for i in range(n) for x in evaluate(pM, images[i], ej).coords]
        sol = solve_linear(a, rhs)
        if isinstance(sol, NoSolution):
            return AdjointResult(AdjointKind.NONE)
        if isinstance(sol, Affine):
            homogeneous_dirs = sol.basis
            columns.append(sol.x0)
        else:
            columns.append(sol.x)
    particular = RegularOperator(M, L, RatMatrix.from_columns(columns, n))
    if homogeneous_dirs is None:
        return AdjointResult(AdjointKind.UNIQUE, particular)
    family = []
    for j in range(p):
        for d in homogeneous_dirs:
            cols = [d if jj == j else (_ZERO,) * n for jj in range(p)]
            family.append(RegularOperator(M, L, RatMatrix.from_columns(cols, n)))
    if not family:
        return AdjointResult(AdjointKind.UNIQUE, particular)
    return AdjointResult(AdjointKind.FAMILY, particular, tuple(family))


def is_adjoint(pL: OrthoProduct, pM: OrthoProduct, t: RegularOperator, s: RegularOperator) -> bool:
    """Check <T e_i, e_j>_M = <e_i, S e_j>_L on all basis pairs."""
    _check_pair(pL, pM, t)
    L, M = pL.domain, pM.domain
    return all(evaluate(pM, t.apply(L.basis(i)), M.basis(j)) == evaluate(pL, L.basis(i), s.apply(M.basis(j)))
               for i in range(pL.n) for j in range(pM.n))


def unique_adjoint(pL: OrthoProduct, pM: OrthoProduct, t: RegularOperator) -> RegularOperator:
    res = adjoint(pL, pM, t)
    if res.kind is AdjointKind.NONE:
        raise NoAdjointError("the operator has no adjoint for these products")
    if res.kind is AdjointKind.FAMILY:
        raise NoAdjointError(f"the adjoint is not unique ({len(res.homogeneous)} free directions)")
    return res.operator


# -- operator classes ---------------------------------------------------------

def _sign_vectors(n: int):
    return itertools.product((Fraction(-1), Fraction(1)), repeat=n)


def lattice_hom_oracle(t: RegularOperator) -> bool:
    """|T f| = T |f| over every ±1 vector f.

    Exhaustive for the row criterion: a negative entry, or two nonzero
    entries in one row, is exposed by flipping a single sign.
    """
    n = t.domain.dim
    if n > ORACLE_MAX_DIM:
        raise EnumerationBoundExceeded(f"sign-vector oracle limited to dimension {ORACLE_MAX_DIM}")
    t_abs_f = t.matrix.apply((Fraction(1),) * n)
    for f in _sign_vectors(n):
        if tuple(abs(x) for x in t.matrix.apply(f)) != t_abs_f:
            return False
    return True


def is_lattice_hom(t: RegularOperator, cross_check: bool = True) -> bool:
    m = t.matrix
    verdict = all(x >= 0 for x in m.entries) and all(
        sum(1 for x in m.row(i) if x) <= 1 for i in range(m.rows))
    if cross_check and t.domain.dim <= ORACLE_MAX_DIM and lattice_hom_oracle(t) != verdict:
        raise AssertionError(f"row criterion and |Tf| = T|f| disagree on {t!r}")
    return verdict


def orthomorphism_oracle(t: RegularOperator) -> bool:
    """Both parts of T = T⁺ - T⁻ map e_j to something disjoint from every e_i, i != j."""
    if not t.is_square:
        return False
    n = t.domain.dim
    for part in (t.matrix.map(lambda x: max(x, _ZERO)), t.matrix.map(lambda x: max(-x, _ZERO))):
        for j in range(n):
            col = part.column(j)
            # e_i ∧ T e_j = min(1, (T e_j)_i) at coordinate i
            if any(min(Fraction(1), col[i]) != 0 for i in range(n) if i != j):
                return False
    return True


def is_orthomorphism(t: RegularOperator, cross_check: bool = True) -> bool:
    if not t.is_square:
        return False
    m = t.matrix
    verdict = all(m[i, j] == 0 for i in range(m.rows) for j in range(m.cols) if i != j)
    if cross_check and orthomorphism_oracle(t) != verdict:
        raise AssertionError(f"diagonal criterion and disjointness definition disagree on {t!r}")
    return verdict


def box_image_contains(t: RegularOperator, f: Sequence[Fraction], g: Sequence[Fraction]) -> bool:
    """Is there h with 0 <= h <= f and T h = g?"""
    sol = solve_linear(t.matrix, g)
    if isinstance(sol, NoSolution):
        return False
    if isinstance(sol, Unique):
        return all(0 <= x <= b for x, b in zip(sol.x, f))
    # h = x0 + N c; impose -h <= 0 and h <= f on the parameters c
    x0, basis = sol.x0, sol.basis
    n = len(x0)
    a_ub, b_ub = [], []
    for i in range(n):
        row = tuple(b[i] for b in basis)
        a_ub.append(tuple(-x for x in row))
        b_ub.append(x0[i])
        a_ub.append(row)
        b_ub.append(f[i] - x0[i])
    return is_feasible(a_ub, b_ub)


def interval_test_family(space: LatticeSpace) -> list[Element]:
    return [space.basis(j) for j in range(space.dim)] + ([space.ones()] if space.dim else [])


def is_interval_preserving(t: RegularOperator, max_dim: int = LP_MAX_DIM) -> bool:
    """Whether T[0, f] = [0, T f] for the standard basis vectors and the all-ones vector.

    T[0, f] is convex and contained in the box [0, T f], so equality holds iff
    every vertex of the box is reached, each decided by exact feasibility.
    """
    if not is_positive_operator(t):
        raise NotPositive("interval preservation is only defined for positive operators")
    if max(t.domain.dim, t.codomain.dim) > max_dim:
        raise EnumerationBoundExceeded(f"dimension exceeds the feasibility bound {max_dim}")
    for f in interval_test_family(t.domain):
        tf = t.matrix.apply(f.coords)
        for g in _order_interval_vertices(tf, False):
            if not box_image_contains(t, f.coords, g):
                return False
    return True


def is_normal(t: RegularOperator) -> bool:
    """Whether ker T is a band, i.e. spanned by the standard basis vectors T kills."""
    zero_cols = sum(1 for j in range(t.matrix.cols) if not any(t.matrix.column(j)))
    return len(kernel_basis(t.matrix)) == zero_cols


def check_riesz(pL: OrthoProduct, pM: OrthoProduct, t: RegularOperator) -> tuple[bool, bool]:
    """``(T is a lattice homomorphism, T*T is an orthomorphism)`` for positive T with a unique adjoint."""
    if not is_positive_operator(t):
        raise NotPositive("the lattice-homomorphism characterization applies to positive operators only")
    s = unique_adjoint(pL, pM, t)
    return is_lattice_hom(t), is_orthomorphism(s @ t)


@dataclass(frozen=True)
class ClassificationReport:
    positive: bool
    lattice_hom: bool
    orthomorphism: bool
    interval_preserving: Optional[bool]  # None when the dimension exceeds the feasibility bound
    normal: bool
    selfadjoint: Optional[bool] = None
    adjoint: Optional[AdjointResult] = None

    def flags(self) -> dict:
        return {"positive": self.positive, "lattice_hom": self.lattice_hom,
                "orthomorphism": self.orthomorphism, "interval_preserving": self.interval_preserving,
                "normal": self.normal, "selfadjoint": self.selfadjoint}


def classify(t: RegularOperator, pL: OrthoProduct | None = None, pM: OrthoProduct | None = None,
             lp_max_dim: int = LP_MAX_DIM) -> ClassificationReport:
    positive = is_positive_operator(t)
    if not positive:
        ip = False  # interval preservation presupposes positivity
    elif max(t.domain.dim, t.codomain.dim) > lp_max_dim:
        ip = None
    else:
        ip = is_interval_preserving(t, lp_max_dim)
    adj = selfadjoint = None
    if pL is not None and pM is not None:
        adj = adjoint(pL, pM, t)
        if adj.exists and pL == pM:
            selfadjoint = is_adjoint(pL, pM, t, t)
    return ClassificationReport(positive, is_lattice_hom(t), is_orthomorphism(t), ip, is_normal(t),
                                selfadjoint, adj)


def restrict_to_quotient(t: RegularOperator, q: QuotientSpace) -> RegularOperator:
    """Factor T through L/L⁰, valid when T annihilates the neutral part."""
    for b in neutral_basis(q.parent).basis:
        if not t.apply(b).is_zero():
            raise ValueError("operator does not vanish on the neutral part, so it does not factor")
    cols = [t.matrix.column(i) for i in q.complement]
    return RegularOperator(q.induced.domain, t.codomain, RatMatrix.from_columns(cols, t.codomain.dim))
