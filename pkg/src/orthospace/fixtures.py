"""Exact fixtures for the worked examples, and seeded random instance generators."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch
from .exact import RatMatrix, RationalLike, vec
from .lattice import Element, LatticeSpace
from .operators import RegularOperator, phi
from .product import NeutralPart, OrthoProduct

DEFAULT_SEED = 7

_ZERO = Fraction(0)


def euclidean(n: int) -> OrthoProduct:
    """The dot product on Q^n, valued in Q."""
    return OrthoProduct.diagonal(LatticeSpace.coordinatewise(n), LatticeSpace.coordinatewise(1),
                                 [[1]] * n).checked()


def diag_product(weights: Sequence[RationalLike]) -> OrthoProduct:
    """Scalar weighted product sum_i w_i f_i g_i on Q^n."""
    return OrthoProduct.diagonal(LatticeSpace.coordinatewise(len(weights)), LatticeSpace.coordinatewise(1),
                                 [[w] for w in weights]).checked()


def lex(n: int = 2, weight: RationalLike = 1) -> OrthoProduct:
    """``<f, g> = w f_1 g_1`` on Q^n ordered lexicographically."""
    n_zero = ((_ZERO,),) * n
    tensor = [list(n_zero) for _ in range(n)]
    tensor[0][0] = vec([weight])
    return OrthoProduct(LatticeSpace.lexicographic(n), LatticeSpace.coordinatewise(1),
                        tuple(tuple(r) for r in tensor)).checked()


def lex2() -> OrthoProduct:
    return lex(2, 1)


def _alternating(n: int, odd: int) -> tuple:
    # 1-based positions: odd=1 marks positions 1, 3, 5, ...
    return tuple(Fraction(1) if (k + 1) % 2 == odd else _ZERO for k in range(n))


def shift(x: Sequence[Fraction]) -> tuple:
    """(S x)(k) = x(k+1), truncated with a zero past the end."""
    return tuple(x[1:]) + (_ZERO,)


def kaplan_formula(n: int, f: Sequence[Fraction], g: Sequence[Fraction]) -> tuple:
    """Direct evaluation of ``u f g + S(v f g)`` with pointwise products."""
    u, v = _alternating(n, 1), _alternating(n, 0)
    fg = [a * b for a, b in zip(f, g)]
    first = [a * b for a, b in zip(u, fg)]
    second = shift([a * b for a, b in zip(v, fg)])
    return tuple(a + b for a, b in zip(first, second))


@dataclass(frozen=True)
class Kaplan:
    product: OrthoProduct
    T: RegularOperator
    u: Element
    v: Element


def kaplan(n: int = 4) -> Kaplan:
    """Truncation to Q^n of the sequence-space example with T = Φ_{u-v}."""
    if n < 2 or n % 2:
        raise ValueError("kaplan(n) needs an even n >= 2")
    L = LatticeSpace.coordinatewise(n)
    V = LatticeSpace.coordinatewise(n)
    basis = [L.basis(i).coords for i in range(n)]
    tensor = tuple(tuple(kaplan_formula(n, basis[i], basis[j]) for j in range(n)) for i in range(n))
    product = OrthoProduct(L, V, tensor).checked()
    u, v = L.element(_alternating(n, 1)), L.element(_alternating(n, 0))
    return Kaplan(product, phi(product, u - v), u, v)


def pointwise(n: int) -> OrthoProduct:
    """``<f, g> = f g`` on Q^n, valued in Q^n."""
    L = LatticeSpace.coordinatewise(n)
    return OrthoProduct.diagonal(L, LatticeSpace.coordinatewise(n),
                                 [L.basis(i).coords for i in range(n)]).checked()


def default_no_adjoint_weights(n: int) -> tuple:
    return (Fraction(-1),) + tuple(Fraction(k, n - 1) for k in range(1, n))


def no_adjoint(n: int = 2, w: Sequence[RationalLike] | None = None):
    """Rank-one T f = w (f_1 + ... + f_n) against the pointwise product; no adjoint when w != 0."""
    if n < 2:
        raise ValueError("no_adjoint(n) needs n >= 2")
    w = default_no_adjoint_weights(n) if w is None else vec(w)
    if len(w) != n:
        raise DimensionMismatch(f"{len(w)} weights for dimension {n}")
    p = pointwise(n)
    t = RegularOperator.of(RatMatrix.from_rows([[wi] * n for wi in w]))
    return p, p, t


def multi_adjoint(n: int = 2):
    """Product that only sees the first half of the coordinates; T reads only that half."""
    if n < 2 or n % 2:
        raise ValueError("multi_adjoint(n) needs an even n >= 2")
    half = n // 2
    p = diag_product([1] * half + [0] * half)
    t = RegularOperator.of(RatMatrix.from_rows(
        [[1 if i == j and j < half else 0 for j in range(n)] for i in range(n)]))
    return p, p, t


def selfadjoint_2x2() -> RegularOperator:
    return RegularOperator.from_rows([[1, 2], [2, 0]])


def latticehom_3x3() -> RegularOperator:
    return RegularOperator.from_rows([[0, 0, 0], [0, 1, 0], [0, 1, 0]])


def latticehom_3x3_adjoint() -> RegularOperator:
    return RegularOperator.from_rows([[0, 0, 0], [0, 1, 1], [0, 0, 0]])


# -- random instances ---------------------------------------------------------
# Weights: zero with probability 1/4, otherwise each codomain coordinate is
# p/q with p uniform in 0..9 and q uniform in 1..4. Element coordinates are
# p/q with p uniform in -9..9.

def random_weight(rng: random.Random, m: int) -> tuple:
    if rng.random() < 0.25:
        return (_ZERO,) * m
    return tuple(Fraction(rng.randint(0, 9), rng.randint(1, 4)) for _ in range(m))


def random_product(rng: random.Random, dim: int | None = None, codim: int | None = None,
                   dims: tuple[int, int] = (1, 8)) -> OrthoProduct:
    """A verified diagonal product on a coordinatewise Q^dim."""
    n = dim if dim is not None else rng.randint(*dims)
    m = codim if codim is not None else rng.randint(1, 3)
    return OrthoProduct.diagonal(LatticeSpace.coordinatewise(n), LatticeSpace.coordinatewise(m),
                                 [random_weight(rng, m) for _ in range(n)]).checked()


def random_lex_product(rng: random.Random, dim: int | None = None, codim: int | None = None) -> OrthoProduct:
    n = dim if dim is not None else rng.randint(2, 6)
    m = codim if codim is not None else rng.randint(1, 3)
    tensor = [[(_ZERO,) * m for _ in range(n)] for _ in range(n)]
    tensor[0][0] = random_weight(rng, m)
    return OrthoProduct(LatticeSpace.lexicographic(n), LatticeSpace.coordinatewise(m),
                        tuple(tuple(r) for r in tensor)).checked()


def random_rational(rng: random.Random, lo: int = -9, hi: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 4))


def random_element(rng: random.Random, space: LatticeSpace, lo: int = -9, hi: int = 9) -> Element:
    return Element(space, tuple(random_rational(rng, lo, hi) for _ in range(space.dim)))


def random_in_span(rng: random.Random, space: LatticeSpace, neutral: NeutralPart) -> Element:
    out = space.zero()
    for b in neutral.basis:
        out = out + b * random_rational(rng)
    return out


def random_positive_matrix(rng: random.Random, rows: int, cols: int, density: float = 0.5) -> RatMatrix:
    return RatMatrix.from_rows(
        [[Fraction(rng.randint(1, 9), rng.randint(1, 3)) if rng.random() < density else 0
          for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_lattice_hom(rng: random.Random, rows: int, cols: int) -> RatMatrix:
    """At most one positive entry per row."""
    out = []
    for _ in range(rows):
        r = [0] * cols
        if rng.random() < 0.85:
            r[rng.randrange(cols)] = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        out.append(r)
    return RatMatrix.from_rows(out, cols=cols)


def random_surjective_lattice_hom(rng: random.Random, rows: int, cols: int) -> RatMatrix:
    """Rows select distinct columns with positive weights, so the map Q^cols -> Q^rows is onto."""
    if rows > cols:
        raise ValueError("a surjection Q^cols -> Q^rows needs rows <= cols")
    picked = rng.sample(range(cols), rows)
    out = []
    for j in picked:
        r = [0] * cols
        r[j] = Fraction(rng.randint(1, 9), rng.randint(1, 3))
        out.append(r)
    return RatMatrix.from_rows(out, cols=cols)


def random_scalar_weights(rng: random.Random, n: int) -> list:
    return [Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(n)]


def corrupted(n: int = 2) -> OrthoProduct:
    """Asymmetric tensor with ``B[0][1] = 1`` and ``B[1][0] = 0``; fails the axioms."""
    if n < 2:
        raise ValueError("corrupted(n) needs n >= 2")
    m = 1
    tensor = [[((Fraction(int(i == j)),)) for j in range(n)] for i in range(n)]
    tensor[0][1] = (Fraction(1),)
    return OrthoProduct(LatticeSpace.coordinatewise(n), LatticeSpace.coordinatewise(m),
                        tuple(tuple(r) for r in tensor))


def _int_arg(args, default):
    return int(args[0]) if args else default


def fixture_instance(name: str, args: Sequence[str] = ()):
    """Build the named fixture as an :class:`~orthospace.io.Instance` for export."""
    from .io import Instance

    if name == "euclidean":
        return Instance(products={"euclidean": euclidean(_int_arg(args, 3))})
    if name == "lex2":
        return Instance(products={"lex2": lex2()})
    if name == "diag":
        weights = [Fraction(a) for a in args] or [Fraction(1), Fraction(2)]
        return Instance(products={"diag": diag_product(weights)},
                        operators={"D": RegularOperator.of(RatMatrix.diagonal(weights))})
    if name == "kaplan":
        k = kaplan(_int_arg(args, 4))
        return Instance(products={"kaplan": k.product}, operators={"T": k.T})
    if name == "no_adjoint":
        p, _, t = no_adjoint(_int_arg(args, 2))
        return Instance(products={"pointwise": p}, operators={"T": t})
    if name == "multi_adjoint":
        p, _, t = multi_adjoint(_int_arg(args, 2))
        return Instance(products={"half": p}, operators={"T": t})
    if name == "selfadjoint_2x2":
        return Instance(products={"euclidean": euclidean(2)}, operators={"T": selfadjoint_2x2()})
    if name == "latticehom_3x3":
        return Instance(products={"euclidean": euclidean(3)},
                        operators={"T": latticehom_3x3(), "T_adjoint": latticehom_3x3_adjoint()})
    if name == "corrupted":
        return Instance(products={"corrupted": corrupted(_int_arg(args, 2))})
    raise KeyError(name)


FIXTURE_NAMES = ("euclidean", "lex2", "diag", "kaplan", "no_adjoint", "multi_adjoint",
                 "selfadjoint_2x2", "latticehom_3x3", "corrupted")
