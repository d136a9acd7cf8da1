"""Floating-point demonstrations on function spaces.

These are numerical illustrations only. They live apart from the exact
suites and nothing in the theorem checks depends on them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

INTEG_TOL = 1e-6
OSCILLATION_MIN_SPREAD = 0.9


@dataclass
class DemoResult:
    name: str
    observations: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)  # check name -> bool
    tolerance: float = 0.0
    exact: bool = False

    @property
    def passed(self) -> bool:
        return all(self.checks.values())


def _f(x):
    return 2.0 * math.sin(x) * math.cos(x)


def _piecewise_negative_part(x):
    # f on [0, π/2] and 0 afterwards; this is f⁺ rather than max(-f, 0)
    return _f(x) if x <= math.pi / 2 else 0.0


def _negative_part(x):
    return max(-_f(x), 0.0)


def integrate(g, x: float) -> float:
    """(T g)(x) = integral of g over [0, x]."""
    value, _ = quad(g, 0.0, x, limit=200, epsabs=1e-12, epsrel=1e-12)
    return value


def demo_integ(samples: int = 9) -> DemoResult:
    """Integration operator on C[0, π] with f = 2 sin x cos x.

    Tf = sin² x is positive while f⁻ is not in ker T, and the pointwise
    maximum of two images has a corner, so it is not itself an image.
    """
    res = DemoResult("integ", tolerance=INTEG_TOL)
    half = math.pi / 2

    piecewise = integrate(_piecewise_negative_part, half)
    res.observations["T(piecewise f-)(pi/2)"] = piecewise
    res.checks["T(f-)(pi/2) = 1"] = abs(piecewise - 1.0) <= INTEG_TOL

    tf_half = integrate(_f, half)
    res.observations["(Tf)(pi/2)"] = tf_half
    res.checks["(Tf)(pi/2) = 1"] = abs(tf_half - 1.0) <= INTEG_TOL

    xs = np.linspace(0.0, math.pi, samples)
    err = max(abs(integrate(_f, x) - math.sin(x) ** 2) for x in xs)
    res.observations["max |Tf - sin^2| on samples"] = err
    res.checks["Tf = sin^2"] = err <= INTEG_TOL

    res.observations["piecewise f-(3pi/4)"] = _piecewise_negative_part(3 * math.pi / 4)
    res.checks["piecewise f-(3pi/4) = 0"] = res.observations["piecewise f-(3pi/4)"] == 0.0

    # the true negative part max(-f, 0) lives on [π/2, π]; it is not killed by T either
    true_at_pi = integrate(_negative_part, math.pi)
    res.observations["T(max(-f,0))(pi)"] = true_at_pi
    res.checks["max(-f,0) not in ker T"] = abs(true_at_pi - 1.0) <= INTEG_TOL

    # T(1/2) = x/2 and T(cos) = sin x cross at x0; their maximum has a derivative jump there
    a, b = (lambda x: x / 2), math.sin
    x0 = brentq(lambda x: b(x) - a(x), 1.0, 3.0)
    h = 1e-5
    def upper(x):
        return max(a(x), b(x))
    left = (upper(x0) - upper(x0 - h)) / h
    right = (upper(x0 + h) - upper(x0)) / h
    res.observations["kink x0"] = x0
    res.observations["derivative jump"] = abs(right - left)
    res.checks["max of images has a kink"] = abs(right - left) > 0.5
    return res


def demo_oscillation(k_max: int = 20) -> DemoResult:
    """g(x) = x |sin(1/x)| lies in [0, x] but g(x)/x has no limit at 0."""
    res = DemoResult("oscillation", tolerance=1e-9)
    def ratio(x):
        return abs(math.sin(1.0 / x))
    peaks = [ratio(2.0 / ((2 * k + 1) * math.pi)) for k in range(1, k_max + 1)]
    zeros = [ratio(1.0 / (k * math.pi)) for k in range(1, k_max + 1)]
    spread = min(peaks) - max(zeros)
    res.observations["peak min"] = min(peaks)
    res.observations["zero max"] = max(zeros)
    res.observations["spread"] = max(peaks + zeros) - min(peaks + zeros)
    res.checks["spread >= 0.9"] = spread >= OSCILLATION_MIN_SPREAD
    res.checks["spread = 1"] = abs(res.observations["spread"] - 1.0) <= 1e-9
    return res


DEMOS = {"integ": demo_integ, "oscillation": demo_oscillation}
