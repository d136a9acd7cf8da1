"""Property suites: each structural result checked exactly on seeded random instances.

A check is a function of one instance and an RNG that returns ``None`` on
success or a short counterexample description. Suites either draw fresh
instances per case (``builtin``) or reuse the products and operators of an
instance file with freshly drawn elements.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from . import fixtures as fx
from .errors import NoAdjointError
from .exact import RatMatrix, kernel_basis, span_equal
from .lattice import (Element, LatticeSpace, abs_parts, absolute, is_positive, lattice_sup, leq,
                      non_archimedean_witness)
from .operators import (AdjointKind, RegularOperator, abs_mult_check, adjoint, check_riesz, is_adjoint,
                        is_interval_preserving, is_lattice_hom, is_normal, is_orthomorphism,
                        is_positive_operator, lattice_hom_oracle, phi, phi_map_matrix, restrict_to_quotient,
                        rk_abs, rk_abs_apply, rk_sup)
from .product import OrthoProduct, evaluate, is_definite, neutral_basis, quotient, verify

Counterexample = Optional[str]


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    applicable: int
    counterexample: Counterexample = None

    def to_json(self) -> dict:
        return {"name": self.name, "verdict": "pass" if self.passed else "fail", "cases": self.cases,
                "applicable": self.applicable, "counterexample": self.counterexample}

    def line(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        text = f"{self.name:<24} {verdict}  cases={self.cases} applicable={self.applicable}"
        if self.counterexample:
            text += f"  counterexample: {self.counterexample}"
        return text


class NotApplicable(Exception):
    """The drawn instance does not meet the hypotheses of the check."""


# -- sampling helpers ---------------------------------------------------------

def _sparse_element(rng: random.Random, space: LatticeSpace) -> Element:
    """Random element whose support is a random subset, so neutral vectors appear naturally."""
    keep = [rng.random() < 0.5 for _ in range(space.dim)]
    return Element(space, tuple(fx.random_rational(rng) if k else Fraction(0) for k in keep))


def _below(rng: random.Random, space: LatticeSpace, g: Element) -> Element:
    """Some f with 0 <= f <= g, given g >= 0."""
    if space.is_coordinatewise:
        return Element(space, tuple(x * Fraction(rng.randint(0, 4), 4) for x in g.coords))
    return g * Fraction(rng.randint(0, 4), 4)


def _mixed_product(rng: random.Random) -> OrthoProduct:
    return fx.random_lex_product(rng) if rng.random() < 0.15 else fx.random_product(rng)


def _cw(p: OrthoProduct):
    if not p.domain.is_coordinatewise:
        raise NotApplicable


# -- product checks -----------------------------------------------------------

def case_vp(p: OrthoProduct, rng: random.Random) -> Counterexample:
    f = fx.random_element(rng, p.domain)
    a = absolute(p.domain, f)
    ff, aa = evaluate(p, f, f), evaluate(p, a, a)
    if ff != aa or not is_positive(p.codomain, ff):
        return f"f={f!r}: <f,f>={ff!r}, <|f|,|f|>={aa!r}"


def case_steinberg(p: OrthoProduct, rng: random.Random) -> Counterexample:
    report = verify(p)
    if not report.ok:
        w = next((w for w in report.witnesses if w.axiom == "symmetry"), report.witnesses[0])
        return f"{w.axiom} witness <{w.f!r},{w.g!r}>={w.value!r}"
    for i in range(p.n):
        for j in range(p.n):
            if p.tensor[i][j] != p.tensor[j][i]:
                return f"asymmetric B[{i}][{j}]"
    f, g = fx.random_element(rng, p.domain), fx.random_element(rng, p.domain)
    if evaluate(p, f, g) != evaluate(p, g, f):
        return f"<f,g> != <g,f> for f={f!r}, g={g!r}"


def case_key(p: OrthoProduct, rng: random.Random) -> Counterexample:
    neutral = neutral_basis(p)
    h = fx.random_in_span(rng, p.domain, neutral)
    if not evaluate(p, h, h).is_zero():
        return f"neutral-basis combination {h!r} has <h,h> != 0"
    for j in range(p.n):
        if not evaluate(p, h, p.domain.basis(j)).is_zero():
            return f"neutral {h!r} not orthogonal to e_{j + 1}"
    f = _sparse_element(rng, p.domain)
    if evaluate(p, f, f).is_zero() != neutral.contains(f):
        return f"f={f!r}: <f,f>=0 is {evaluate(p, f, f).is_zero()} but membership in L0 is {neutral.contains(f)}"


def case_neutral(p: OrthoProduct, rng: random.Random) -> Counterexample:
    neutral = neutral_basis(p)
    f = fx.random_in_span(rng, p.domain, neutral)
    g = fx.random_in_span(rng, p.domain, neutral)
    r = fx.random_rational(rng)
    if not neutral.contains(f + g * r):
        return f"L0 not a subspace: {f!r} + {r}*{g!r}"
    a = absolute(p.domain, f)
    if not neutral.contains(a):
        return f"|f| not neutral for f={f!r}"
    h = _below(rng, p.domain, a)
    if not (leq(p.domain, p.domain.zero(), h) and leq(p.domain, h, a)):
        return f"sampler produced h={h!r} outside [0, {a!r}]"
    if not neutral.contains(h):
        return f"0 <= {h!r} <= {a!r} in L0 but h not neutral"


def case_quo(p: OrthoProduct, rng: random.Random) -> Counterexample:
    neutral = neutral_basis(p)
    f, g = fx.random_element(rng, p.domain), fx.random_element(rng, p.domain)
    h = fx.random_in_span(rng, p.domain, neutral)
    k = fx.random_in_span(rng, p.domain, neutral)
    if evaluate(p, f + h, g + k) != evaluate(p, f, g):
        return f"<f+h,g+k> != <f,g> for f={f!r}, g={g!r}, h={h!r}, k={k!r}"
    q = quotient(p)
    if not verify(q.induced).ok or not is_definite(q.induced):
        return "quotient product is not a definite orthosymmetric product"
    if q.induced.n != p.n - neutral.dim:
        return f"quotient has dimension {q.induced.n}, expected {p.n - neutral.dim}"
    if evaluate(q.induced, q.project(f), q.project(g)) != evaluate(p, f, g):
        return f"<[f],[g]> != <f,g> for f={f!r}, g={g!r}"
    if not neutral.contains(f - q.lift(q.project(f))):
        return f"representative of [f] differs from f by a non-neutral vector, f={f!r}"


def case_arch(p: OrthoProduct, rng: random.Random) -> Counterexample:
    definite = is_definite(p)
    if definite and not p.domain.is_archimedean:
        return f"definite product on non-Archimedean {p.domain}"
    witness = non_archimedean_witness(p.domain, bound=50)
    if (witness is None) != p.domain.is_archimedean:
        return f"Archimedean flag {p.domain.is_archimedean} contradicts witness search on {p.domain}"
    if witness is not None and definite:
        return f"non-Archimedean witness {witness!r} on a definite product"


def case_tech(p: OrthoProduct, rng: random.Random) -> Counterexample:
    _cw(p)
    L = p.domain
    neutral = neutral_basis(p)
    f = fx.random_element(rng, L)
    pos, neg, _ = abs_parts(L, f)
    # (i)
    if not is_positive_operator(phi(p, pos)):
        return f"Φ of positive {pos!r} is not positive"
    # (ii)
    if phi(p, f).matrix != phi(p, pos).matrix - phi(p, neg).matrix:
        return f"Φ_f != Φ_f+ - Φ_f- for f={f!r}"
    # (iii), both directions
    s = _sparse_element(rng, L)
    if phi(p, s).is_zero() != neutral.contains(s):
        return f"Φ_f = 0 is {phi(p, s).is_zero()} but f in L0 is {neutral.contains(s)} for f={s!r}"
    # (iv), on a generic f and on f = positive + neutral
    candidates = [f, absolute(L, fx.random_element(rng, L)) + fx.random_in_span(rng, L, neutral)]
    for c in candidates:
        if is_positive_operator(phi(p, c)) != neutral.contains(abs_parts(L, c)[1]):
            return f"Φ_f positive disagrees with f- in L0 for f={c!r}"


def case_main(p: OrthoProduct, rng: random.Random) -> Counterexample:
    _cw(p)
    L = p.domain
    f, g = fx.random_element(rng, L), fx.random_element(rng, L)
    if not abs_mult_check(p, f):
        return f"|Φ_f| != Φ_|f| for f={f!r}"
    kernel = kernel_basis(phi_map_matrix(p))
    if not span_equal(kernel, [b.coords for b in neutral_basis(p).basis], p.n):
        return "ker Φ differs from the neutral part"
    if rk_sup(phi(p, f), phi(p, g)).matrix != phi(p, lattice_sup(L, f, g)).matrix:
        return f"Φ_f ∨ Φ_g != Φ_(f∨g) for f={f!r}, g={g!r}"
    # sup A(f, g) over a generic positive g, evaluated directly
    w = absolute(L, fx.random_element(rng, L))
    if L.dim <= 10 and rk_abs_apply(phi(p, f), w) != evaluate(p, absolute(L, f), w):
        return f"sup A(f,g) != <|f|,g> for f={f!r}, g={w!r}"


def case_orth(p: OrthoProduct, rng: random.Random) -> Counterexample:
    _cw(p)
    L = p.domain
    d = RegularOperator.of(RatMatrix.diagonal([fx.random_rational(rng) for _ in range(L.dim)]))
    f, g = fx.random_element(rng, L), fx.random_element(rng, L)
    if evaluate(p, f, d.apply(g)) != evaluate(p, d.apply(f), g):
        return f"<f,Dg> != <Df,g> for D={d!r}, f={f!r}, g={g!r}"


PRODUCT_CHECKS: dict[str, tuple[Callable, bool]] = {
    # name -> (check, lexicographic domains allowed)
    "vp": (case_vp, True),
    "steinberg": (case_steinberg, True),
    "key": (case_key, True),
    "neutral": (case_neutral, True),
    "quo": (case_quo, True),
    "arch": (case_arch, True),
    "tech": (case_tech, False),
    "main": (case_main, False),
    "orth": (case_orth, False),
}


# -- operator checks ----------------------------------------------------------
# Operator checks take products explicitly; the builtin drivers pair each
# operator with Euclidean or positively weighted scalar products.

def _weighted(rng: random.Random, n: int) -> OrthoProduct:
    return fx.diag_product(fx.random_scalar_weights(rng, n))


def _products_for(rng: random.Random, t: RegularOperator, euclidean_only: bool):
    if euclidean_only or rng.random() < 0.5:
        return fx.euclidean(t.domain.dim), fx.euclidean(t.codomain.dim)
    return _weighted(rng, t.domain.dim), _weighted(rng, t.codomain.dim)


def op_pospos(t, pL, pM, rng) -> Counterexample:
    if not is_positive_operator(t):
        raise NotApplicable
    res = adjoint(pL, pM, t)
    if res.kind is not AdjointKind.UNIQUE or not is_definite(pM):
        raise NotApplicable
    if not is_adjoint(pL, pM, t, res.operator):
        return f"solver returned a non-adjoint for {t!r}"
    if not is_positive_operator(res.operator):
        return f"adjoint {res.operator!r} of positive {t!r} is not positive"


def op_riesz(t, pL, pM, rng) -> Counterexample:
    if not is_positive_operator(t):
        raise NotApplicable
    try:
        lh, orth = check_riesz(pL, pM, t)
    except NoAdjointError:
        raise NotApplicable from None
    if lh != orth:
        return f"lattice_hom={lh} but T*T orthomorphism={orth} for {t!r}"
    if orth and not all(sum(1 for x in t.matrix.row(i) if x) <= 1 for i in range(t.matrix.rows)):
        return f"T*T is an orthomorphism but a row of {t!r} has two nonzero entries"


def op_surjective(t, pL, pM, rng) -> Counterexample:
    from .exact import rank
    if not (is_lattice_hom(t) and rank(t.matrix) == t.codomain.dim):
        raise NotApplicable
    res = adjoint(pL, pM, t)
    if res.kind is not AdjointKind.UNIQUE:
        raise NotApplicable
    if not is_lattice_hom(res.operator):
        return f"adjoint {res.operator!r} of surjective lattice homomorphism {t!r} is not one"


def op_normal(t, pL, pM, rng) -> Counterexample:
    if not is_lattice_hom(t):
        raise NotApplicable
    if adjoint(pL, pM, t).kind is not AdjointKind.UNIQUE:
        raise NotApplicable
    if not is_normal(t):
        return f"lattice homomorphism {t!r} with an adjoint has a kernel that is not a band"


def op_interval(t, pL, pM, rng) -> Counterexample:
    if not is_positive_operator(t):
        raise NotApplicable
    res = adjoint(pL, pM, t)
    if res.kind is not AdjointKind.UNIQUE or not is_interval_preserving(res.operator):
        raise NotApplicable
    if not is_lattice_hom(t):
        return f"adjoint {res.operator!r} is interval preserving but {t!r} is not a lattice homomorphism"


def op_row_criterion(t, pL, pM, rng) -> Counterexample:
    if t.domain.dim > 8:
        raise NotApplicable
    if is_lattice_hom(t, cross_check=False) != lattice_hom_oracle(t):
        return f"row criterion and |Tf| = T|f| disagree on {t!r}"


def op_rk_agreement(t, pL, pM, rng) -> Counterexample:
    if t.domain.dim > 12:
        raise NotApplicable
    a = rk_abs(t)  # raises on disagreement with the entrywise modulus
    if a.matrix != t.matrix.map(abs):
        return f"rk_abs mismatch on {t!r}"
    g = absolute(t.domain, fx.random_element(rng, t.domain))
    if rk_abs_apply(t, g) != a.apply(g):
        return f"sup{{|Th| : |h| <= g}} != |T|g for g={g!r}"


def _gen_square_positive(rng):
    n = rng.randint(2, 5)
    if rng.random() < 0.5:
        return RegularOperator.of(fx.random_lattice_hom(rng, n, n))
    return RegularOperator.of(fx.random_positive_matrix(rng, n, n, density=rng.choice([0.2, 0.35, 0.5, 0.8])))


def _gen_positive(rng):
    m, n = rng.randint(1, 5), rng.randint(1, 5)
    r = rng.random()
    if r < 0.4:
        return RegularOperator.of(fx.random_lattice_hom(rng, m, n))
    return RegularOperator.of(fx.random_positive_matrix(rng, m, n, density=rng.choice([0.2, 0.4, 0.7])))


def _gen_surjective(rng):
    n = rng.randint(1, 5)
    return RegularOperator.of(fx.random_surjective_lattice_hom(rng, rng.randint(1, n), n))


def _gen_lattice_hom(rng):
    return RegularOperator.of(fx.random_lattice_hom(rng, rng.randint(1, 5), rng.randint(1, 5)))


def _gen_interval(rng):
    # bias toward T whose transpose has sparse columns so the hypothesis is met often
    m, n = rng.randint(1, 5), rng.randint(1, 5)
    if rng.random() < 0.5:
        return RegularOperator.of(fx.random_lattice_hom(rng, m, n))
    return RegularOperator.of(fx.random_positive_matrix(rng, m, n, density=rng.choice([0.15, 0.3, 0.6])))


def _gen_signed(rng):
    n, m = rng.randint(1, 8), rng.randint(1, 6)
    kind = rng.random()
    if kind < 0.35:
        return RegularOperator.of(fx.random_lattice_hom(rng, m, n))
    if kind < 0.6:
        return RegularOperator.of(fx.random_positive_matrix(rng, m, n, density=0.3))
    return RegularOperator.of(RatMatrix.from_rows(
        [[fx.random_rational(rng) if rng.random() < 0.5 else 0 for _ in range(n)] for _ in range(m)], cols=n))


OPERATOR_CHECKS: dict[str, tuple[Callable, Callable, bool]] = {
    # name -> (check, builtin generator, Euclidean products only)
    "pospos": (op_pospos, _gen_positive, False),
    "riesz": (op_riesz, _gen_square_positive, True),
    "row_criterion": (op_row_criterion, _gen_signed, True),
    "rk_agreement": (op_rk_agreement, _gen_signed, True),
    "surjective": (op_surjective, _gen_surjective, False),
    "normal": (op_normal, _gen_lattice_hom, False),
    "interval": (op_interval, _gen_interval, True),
}


# -- fixed examples -----------------------------------------------------------

def examples_check() -> Counterexample:
    """The worked examples, reproduced exactly."""
    for n in range(1, 7):
        p = fx.euclidean(n)
        if not verify(p).ok or neutral_basis(p).dim != 0:
            return f"euclidean({n}) is not a definite orthosymmetric product"
    p = fx.lex2()
    if not verify(p).ok or neutral_basis(p).dim != 1 or is_definite(p):
        return "lex2 should verify with a one-dimensional neutral part"
    k = fx.kaplan(4)
    if k.T.matrix != RatMatrix.from_rows([[1, -1, 0, 0], [0, 0, 0, 0], [0, 0, 1, -1], [0, 0, 0, 0]]):
        return f"kaplan T = {k.T!r}"
    if rk_abs(k.T).matrix != phi(k.product, k.u + k.v).matrix:
        return "kaplan |T| != Φ_(u+v)"
    e2 = fx.euclidean(2)
    t = fx.selfadjoint_2x2()
    if not is_adjoint(e2, e2, t, t) or is_orthomorphism(t):
        return "2x2 example should be selfadjoint and not an orthomorphism"
    e3 = fx.euclidean(3)
    t = fx.latticehom_3x3()
    res = adjoint(e3, e3, t)
    if (res.kind is not AdjointKind.UNIQUE or res.operator != fx.latticehom_3x3_adjoint()
            or not is_lattice_hom(t) or is_lattice_hom(res.operator)):
        return "3x3 example: T should be a lattice homomorphism whose adjoint is the transpose, which is not one"
    for n in (2, 3, 4, 5):
        pL, pM, t = fx.no_adjoint(n)
        if adjoint(pL, pM, t).kind is not AdjointKind.NONE:
            return f"no_adjoint({n}) has an adjoint"
    for n in (2, 4, 6):
        pL, pM, t = fx.multi_adjoint(n)
        res = adjoint(pL, pM, t)
        if res.kind is not AdjointKind.FAMILY or not res.homogeneous:
            return f"multi_adjoint({n}) should have a family of adjoints"
        if not all(is_adjoint(pL, pM, t, res.operator + h) for h in res.homogeneous):
            return f"multi_adjoint({n}) family member fails the adjoint identity"
        q = quotient(pL)
        if adjoint(q.induced, pM, restrict_to_quotient(t, q)).kind is not AdjointKind.UNIQUE:
            return f"multi_adjoint({n}) is not unique after quotienting"
    return None


# -- drivers --------------------------------------------------------------------

def _run(name: str, cases: int, draw: Callable[[], Counterexample]) -> CheckResult:
    applicable = 0
    for _ in range(cases):
        try:
            cex = draw()
        except NotApplicable:
            continue
        applicable += 1
        if cex is not None:
            return CheckResult(name, False, cases, applicable, cex)
    return CheckResult(name, True, cases, applicable)


def run_product_check(name: str, rng: random.Random, cases: int,
                      products: Iterable[OrthoProduct] | None = None, label: str | None = None) -> CheckResult:
    check, allow_lex = PRODUCT_CHECKS[name]
    fixed = list(products) if products is not None else None

    def draw():
        if fixed is None:
            p = _mixed_product(rng) if allow_lex else fx.random_product(rng)
        else:
            p = fixed[rng.randrange(len(fixed))]
        return check(p, rng)
    return _run(label or name, cases, draw)


def run_operator_check(name: str, rng: random.Random, cases: int,
                       operators: Iterable[RegularOperator] | None = None, label: str | None = None) -> CheckResult:
    check, gen, euclid = OPERATOR_CHECKS[name]
    fixed = list(operators) if operators is not None else None

    def draw():
        t = gen(rng) if fixed is None else fixed[rng.randrange(len(fixed))]
        pL, pM = _products_for(rng, t, euclid)
        return check(t, pL, pM, rng)
    return _run(label or name, cases, draw)


def run_builtin(seed: int = fx.DEFAULT_SEED, cases: int = 200) -> list[CheckResult]:
    """Every suite on freshly generated instances, one RNG per suite so suites replay independently."""
    cex = examples_check()
    results = [CheckResult("examples", cex is None, 1, 1, cex)]
    for name in PRODUCT_CHECKS:
        results.append(run_product_check(name, random.Random(f"{seed}:{name}"), cases))
    for name in OPERATOR_CHECKS:
        results.append(run_operator_check(name, random.Random(f"{seed}:{name}"), cases))
    return results


def run_instance(inst, seed: int = fx.DEFAULT_SEED, cases: int = 200) -> list[CheckResult]:
    """Suites against the products and operators of an instance file.

    Products that fail verification are reported with a witness and skipped
    by the checks that assume the axioms.
    """
    results = []
    for pname, p in inst.products.items():
        report = verify(p)
        first = report.witnesses[0] if report.witnesses else None
        results.append(CheckResult(
            f"verify[{pname}]", report.ok, 1, 1,
            None if report.ok else f"{first.axiom} witness <{first.f!r},{first.g!r}>={first.value!r}"))
        if not report.symmetry_ok:
            w = next(w for w in report.witnesses if w.axiom == "symmetry")
            results.append(CheckResult(
                f"steinberg[{pname}]", False, 1, 1,
                f"asymmetric tensor: <{w.f!r},{w.g!r}>={w.value!r} but <{w.g!r},{w.f!r}>="
                f"{evaluate(p, w.g, w.f)!r}" + ("" if report.axioms_ok else " (axioms also fail)")))
        if not report.ok:
            continue
        p = p.checked()
        for name, (check, allow_lex) in PRODUCT_CHECKS.items():
            if not allow_lex and not p.domain.is_coordinatewise:
                continue
            results.append(run_product_check(name, random.Random(f"{seed}:{pname}:{name}"), cases, [p],
                                             label=f"{name}[{pname}]"))
    for oname, t in inst.operators.items():
        for name in OPERATOR_CHECKS:
            results.append(run_operator_check(name, random.Random(f"{seed}:{oname}:{name}"), cases, [t],
                                              label=f"{name}[{oname}]"))
    return results

