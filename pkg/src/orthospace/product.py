"""Orthosymmetric products stored as rational 3-tensors.

A product on an n-dimensional lattice L with values in an m-dimensional
coordinatewise lattice V is fixed by its values on basis pairs,
``B[i][j] = <e_i, e_j>`` in V, so that ``<f, g> = sum_ij f_i g_j B[i][j]``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .errors import AxiomViolation, DimensionMismatch, UnsupportedInstance, UnverifiedProduct
from .exact import RatMatrix, RationalLike, kernel_basis, vec
from .lattice import Element, LatticeSpace, OrderKind, is_positive

_ZERO = Fraction(0)


@dataclass(frozen=True)
class OrthoProduct:
    domain: LatticeSpace
    codomain: LatticeSpace
    tensor: tuple  # tensor[i][j] is a tuple of codomain coordinates
    verified: bool = False

    def __post_init__(self):
        n, m = self.domain.dim, self.codomain.dim
        if len(self.tensor) != n or any(len(row) != n for row in self.tensor):
            raise DimensionMismatch(f"tensor must be {n}x{n} for a domain of dimension {n}")
        for row in self.tensor:
            for v in row:
                if len(v) != m:
                    raise DimensionMismatch(f"tensor entries must have {m} codomain coordinates")

    @classmethod
    def from_tensor(cls, domain: LatticeSpace, codomain: LatticeSpace,
                    tensor: Sequence[Sequence[Sequence[RationalLike]]]) -> "OrthoProduct":
        return cls(domain, codomain, tuple(tuple(vec(v) for v in row) for row in tensor))

    @classmethod
    def diagonal(cls, domain: LatticeSpace, codomain: LatticeSpace,
                 weights: Sequence[Sequence[RationalLike]]) -> "OrthoProduct":
        """Product with ``B[i][i] = weights[i]`` and zeros off the diagonal."""
        n, m = domain.dim, codomain.dim
        if len(weights) != n:
            raise DimensionMismatch(f"{len(weights)} weights for dimension {n}")
        zero = (_ZERO,) * m
        return cls(domain, codomain, tuple(
            tuple(vec(weights[i]) if i == j else zero for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int) -> Element:
        return Element(self.codomain, self.tensor[i][j])

    @property
    def n(self) -> int:
        return self.domain.dim

    def checked(self) -> "OrthoProduct":
        """Return this product marked verified, or raise :class:`AxiomViolation`."""
        if self.verified:
            return self
        report = verify(self)
        if not report.ok:
            raise AxiomViolation(report)
        return replace(self, verified=True)


@dataclass(frozen=True)
class Witness:
    axiom: str  # "positivity" | "orthosymmetry" | "symmetry"
    f: Element
    g: Element
    value: Element

    def to_json(self) -> dict:
        return {"axiom": self.axiom, "f": self.f.to_json(), "g": self.g.to_json(),
                "value": self.value.to_json()}


@dataclass(frozen=True)
class VerificationReport:
    positivity_ok: bool
    orthosymmetry_ok: bool
    symmetry_ok: bool
    witnesses: tuple = ()

    @property
    def axioms_ok(self) -> bool:
        return self.positivity_ok and self.orthosymmetry_ok

    @property
    def ok(self) -> bool:
        return self.axioms_ok and self.symmetry_ok

    @property
    def steinberg_consistent(self) -> bool:
        # an asymmetric tensor that satisfies both axioms would refute symmetry of such products
        return not (self.axioms_ok and not self.symmetry_ok)

    def summary(self) -> str:
        flags = f"positivity={self.positivity_ok} orthosymmetry={self.orthosymmetry_ok} symmetry={self.symmetry_ok}"
        if self.witnesses:
            w = self.witnesses[0]
            flags += f"; first witness {w.axiom}: <{w.f!r}, {w.g!r}> = {w.value!r}"
        return flags


@dataclass(frozen=True)
class NeutralPart:
    basis: tuple  # of domain Elements, canonical echelon representatives

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, f: Element) -> bool:
        from .exact import in_span
        return in_span([b.coords for b in self.basis], f.coords)


@dataclass(frozen=True)
class QuotientSpace:
    parent: OrthoProduct
    complement: tuple  # indices of the standard basis vectors kept as representatives
    induced: OrthoProduct

    @property
    def complement_basis(self) -> tuple:
        return tuple(self.parent.domain.basis(i) for i in self.complement)

    def project(self, f: Element) -> Element:
        """The class [f], written in the induced coordinates."""
        return Element(self.induced.domain, tuple(f.coords[i] for i in self.complement))

    def lift(self, q: Element) -> Element:
        """The canonical representative of a class."""
        coords = [_ZERO] * self.parent.n
        for i, x in zip(self.complement, q.coords):
            coords[i] = x
        return Element(self.parent.domain, tuple(coords))


def _contract(p: OrthoProduct, f: Sequence[Fraction], g: Sequence[Fraction]) -> tuple:
    out = [_ZERO] * p.codomain.dim
    for i, fi in enumerate(f):
        if not fi:
            continue
        row = p.tensor[i]
        for j, gj in enumerate(g):
            if not gj:
                continue
            c = fi * gj
            for k, b in enumerate(row[j]):
                if b:
                    out[k] += c * b
    return tuple(out)


def evaluate(p: OrthoProduct, f: Element, g: Element) -> Element:
    """``<f, g>`` as an element of the codomain."""
    for x in (f, g):
        if x.space.dim != p.n:
            raise DimensionMismatch(f"element of dimension {x.space.dim}, product domain has {p.n}")
    return Element(p.codomain, _contract(p, f.coords, g.coords))


def _require_coordinatewise_codomain(p: OrthoProduct):
    if not p.codomain.is_coordinatewise:
        raise UnsupportedInstance("orthosymmetric products must take values in a coordinatewise (Archimedean) lattice")


def verify(p: OrthoProduct) -> VerificationReport:
    """Decide positivity, orthosymmetry and symmetry of the tensor exactly.

    On a coordinatewise domain the positive cone is generated by the standard
    basis and disjoint pairs are nonnegative vectors with disjoint supports,
    so the axioms reduce to entrywise conditions on B. On a lexicographic
    domain every disjoint pair contains a zero vector, and positivity is
    checked on the closed half-space {x_1 >= 0}.
    """
    _require_coordinatewise_codomain(p)
    n, L = p.n, p.domain
    witnesses = []
    pos_ok = orth_ok = sym_ok = True

    if L.is_coordinatewise:
        for i in range(n):
            for j in range(n):
                b = p.entry(i, j)
                if not is_positive(p.codomain, b):
                    pos_ok = False
                    witnesses.append(Witness("positivity", L.basis(i), L.basis(j), b))
                if i != j and not b.is_zero():
                    orth_ok = False
                    witnesses.append(Witness("orthosymmetry", L.basis(i), L.basis(j), b))
    else:
        for i in range(n):
            for j in range(n):
                w = _lex_positivity_witness(p, i, j)
                if w is not None:
                    pos_ok = False
                    witnesses.append(w)

    for i in range(n):
        for j in range(i + 1, n):
            if p.tensor[i][j] != p.tensor[j][i]:
                sym_ok = False
                witnesses.append(Witness("symmetry", L.basis(i), L.basis(j), p.entry(i, j)))
    return VerificationReport(pos_ok, orth_ok, sym_ok, tuple(witnesses))


def _lex_positivity_witness(p: OrthoProduct, i: int, j: int) -> Witness | None:
    """A pair of lexicographically positive vectors whose product leaves V⁺, or None.

    Uses that e_1 + t e_k is positive for every t: a nonzero coefficient
    against some e_k with k > 1 can be driven negative.
    """
    L, V = p.domain, p.codomain
    b = p.tensor[i][j]
    if i == 0 and j == 0:
        if is_positive(V, p.entry(0, 0)):
            return None
        f = g = L.basis(0)
    elif not any(b):
        return None
    else:
        swap = j == 0  # then i > 0: perturb f instead of g
        a, c = (j, i) if swap else (i, j)
        k = next(k for k, x in enumerate(b) if x)
        base = L.basis(0)
        head = base if a == 0 or p.tensor[0][c][k] else base + L.basis(a)
        against = evaluate(p, head, L.basis(c)) if not swap else evaluate(p, L.basis(c), head)
        coeff = against.coords[k]
        at_base = evaluate(p, head, base).coords[k] if not swap else evaluate(p, base, head).coords[k]
        t = -(abs(at_base) / abs(coeff) + 1) * (1 if coeff > 0 else -1)
        moved = base + L.basis(c) * t
        f, g = (moved, head) if swap else (head, moved)
    value = evaluate(p, f, g)
    assert is_positive(L, f) and is_positive(L, g) and not is_positive(V, value)
    return Witness("positivity", f, g, value)


def ensure_verified(p: OrthoProduct):
    if not p.verified:
        raise UnverifiedProduct("run verify()/checked() first; neutral parts of unverified tensors are meaningless")


def radical_matrix(p: OrthoProduct) -> RatMatrix:
    """Matrix of f ↦ (<f, e_j>)_j, stacked over j and the codomain coordinates."""
    n, m = p.n, p.codomain.dim
    return RatMatrix.from_rows(
        [[p.tensor[i][j][k] for i in range(n)] for j in range(n) for k in range(m)], cols=n)


def neutral_basis(p: OrthoProduct) -> NeutralPart:
    ensure_verified(p)
    return NeutralPart(tuple(Element(p.domain, b) for b in kernel_basis(radical_matrix(p))))


def is_definite(p: OrthoProduct) -> bool:
    return neutral_basis(p).dim == 0


def quotient(p: OrthoProduct) -> QuotientSpace:
    """The definite quotient L/L⁰ with representatives from the standard basis.

    Verified representable products have L⁰ spanned by standard basis
    vectors; this is checked rather than assumed.
    """
    neutral = neutral_basis(p)
    touched = {i for b in neutral.basis for i, x in enumerate(b.coords) if x}
    if neutral.dim != len(touched):
        raise UnsupportedInstance("neutral part is not spanned by standard basis vectors")
    keep = tuple(i for i in range(p.n) if i not in touched)
    order = p.domain.order if len(keep) >= 2 else OrderKind.COORDINATEWISE
    dom = LatticeSpace(len(keep), order)
    induced = OrthoProduct(dom, p.codomain,
                           tuple(tuple(p.tensor[i][j] for j in keep) for i in keep)).checked()
    return QuotientSpace(p, keep, induced)
