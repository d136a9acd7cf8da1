"""Finite-dimensional vector lattices over Q with coordinatewise or lexicographic order."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatch
from .exact import RationalLike, format_rational, rat, vec


class OrderKind(str, enum.Enum):
    COORDINATEWISE = "coordinatewise"
    LEXICOGRAPHIC = "lexicographic"


@dataclass(frozen=True)
class LatticeSpace:
    dim: int
    order: OrderKind = OrderKind.COORDINATEWISE

    def __post_init__(self):
        # dim 0 is the trivial lattice {0}; it only arises as the quotient of a totally neutral space
        if self.dim < 0:
            raise ValueError("dimension must be nonnegative")
        object.__setattr__(self, "order", OrderKind(self.order))

    @classmethod
    def coordinatewise(cls, dim: int) -> "LatticeSpace":
        return cls(dim, OrderKind.COORDINATEWISE)

    @classmethod
    def lexicographic(cls, dim: int) -> "LatticeSpace":
        return cls(dim, OrderKind.LEXICOGRAPHIC)

    @property
    def is_coordinatewise(self) -> bool:
        # in dimension <= 1 both orders coincide
        return self.order is OrderKind.COORDINATEWISE or self.dim <= 1

    @property
    def is_archimedean(self) -> bool:
        return self.is_coordinatewise

    def element(self, coords: Iterable[RationalLike]) -> "Element":
        return Element(self, vec(coords))

    def zero(self) -> "Element":
        return Element(self, (Fraction(0),) * self.dim)

    def basis(self, i: int) -> "Element":
        return Element(self, tuple(Fraction(int(k == i)) for k in range(self.dim)))

    def ones(self) -> "Element":
        return Element(self, (Fraction(1),) * self.dim)

    def to_json(self) -> dict:
        return {"dim": self.dim, "order": self.order.value}


@dataclass(frozen=True)
class Element:
    space: LatticeSpace
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.space.dim:
            raise DimensionMismatch(
                f"{len(self.coords)} coordinates for a space of dimension {self.space.dim}")

    def _check(self, other: "Element"):
        if other.space != self.space:
            raise DimensionMismatch(f"elements of {self.space} and {other.space}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(self.space, tuple(-a for a in self.coords))

    def __mul__(self, c: RationalLike) -> "Element":
        c = rat(c)
        return Element(self.space, tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def to_json(self) -> list[str]:
        return [format_rational(x) for x in self.coords]

    def __repr__(self):
        return "(" + ", ".join(format_rational(x) for x in self.coords) + ")"


def _same(space: LatticeSpace, *elems: Element):
    for e in elems:
        if e.space.dim != space.dim:
            raise DimensionMismatch(f"element of dimension {e.space.dim} in a space of dimension {space.dim}")


def is_positive(space: LatticeSpace, f: Element) -> bool:
    _same(space, f)
    if space.is_coordinatewise:
        return all(x >= 0 for x in f.coords)
    lead = next((x for x in f.coords if x), None)
    return lead is None or lead > 0


def leq(space: LatticeSpace, f: Element, g: Element) -> bool:
    _same(space, f, g)
    return is_positive(space, Element(space, tuple(b - a for a, b in zip(f.coords, g.coords))))


def lattice_sup(space: LatticeSpace, f: Element, g: Element) -> Element:
    _same(space, f, g)
    if space.is_coordinatewise:
        return Element(space, tuple(max(a, b) for a, b in zip(f.coords, g.coords)))
    return Element(space, g.coords if leq(space, f, g) else f.coords)


def lattice_inf(space: LatticeSpace, f: Element, g: Element) -> Element:
    _same(space, f, g)
    if space.is_coordinatewise:
        return Element(space, tuple(min(a, b) for a, b in zip(f.coords, g.coords)))
    return Element(space, f.coords if leq(space, f, g) else g.coords)


def abs_parts(space: LatticeSpace, f: Element) -> tuple[Element, Element, Element]:
    """Return ``(f⁺, f⁻, |f|)``."""
    zero = space.zero()
    f = Element(space, f.coords)
    pos = lattice_sup(space, f, zero)
    neg = lattice_sup(space, -f, zero)
    return pos, neg, pos + neg


def absolute(space: LatticeSpace, f: Element) -> Element:
    return abs_parts(space, f)[2]


def is_disjoint(space: LatticeSpace, f: Element, g: Element) -> bool:
    return lattice_inf(space, f, g).is_zero()


def non_archimedean_witness(space: LatticeSpace, bound: int = 1000) -> tuple[Element, Element] | None:
    """Find f != 0 with 0 <= n f <= g for n = 1..bound, or None.

    Only a demonstration: in a lexicographic space e_2 is infinitely small
    against e_1. Coordinatewise spaces never produce a witness.
    """
    if space.dim < 2 or space.is_coordinatewise:
        return None
    f, g = space.basis(1), space.basis(0)
    ok = all(leq(space, space.zero(), f * n) and leq(space, f * n, g) for n in range(1, bound + 1))
    return (f, g) if ok else None


def support(f: Sequence[Fraction]) -> list[int]:
    return [i for i, x in enumerate(f) if x]
