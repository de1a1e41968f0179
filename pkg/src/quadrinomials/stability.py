"""Stability domain of the trinomial z^n + a z^(n-1) + b, plus the
self-reciprocal circle test.

The boundary of the (a, b) region where all trinomial zeros lie in the open
unit disk consists of two line segments (I, II) and two parametric arcs
(III, IV) ending at corner points reached only as t -> pi; the corners are
appended analytically since the parametric quotient degenerates there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .families import QuadSpec
from .polycore import RealPoly, find_roots, self_reciprocal_sign

STRICTNESS_TOL = 1e-9
T_START_OFFSET = 1e-6


def trinomial(n: int, a: float, b: float) -> RealPoly:
    c = [0.0] * (n + 1)
    c[0] = float(b)
    c[n - 1] += float(a)
    c[n] += 1.0
    return RealPoly.of(c)


def trinomial_in_disk(n: int, a: float, b: float) -> bool:
    """True iff every zero of z^n + a z^(n-1) + b has |z| < 1 - tol."""
    if n < 2:
        raise ValueError("n must be >= 2")
    p = trinomial(n, a, b)
    if p.degree < 1:
        return True
    rs = find_roots(p)
    return all(abs(r.value) < 1.0 - STRICTNESS_TOL for r in rs.roots)


def boundary_point(curve: str, n: int, t: float) -> tuple[float, float]:
    """Evaluate parametric curve III or IV at t in [(n-1)pi/n, pi)."""
    s = math.sin((n - 1) * t)
    if curve == "III":
        return (-math.sin(n * t) / s, math.sin(t) / s)
    if curve == "IV":
        return (math.sin(n * t) / s, (-1.0) ** n * math.sin(t) / s)
    raise ValueError("curve must be III or IV")


def corner_point(curve: str, n: int) -> tuple[float, float]:
    """Analytic t -> pi limit of curve III or IV."""
    if curve == "III":
        return (n / (n - 1.0), (-1.0) ** n / (n - 1.0))
    if curve == "IV":
        return (-n / (n - 1.0), 1.0 / (n - 1.0))
    raise ValueError("curve must be III or IV")


@dataclass
class CurveSet:
    """Sampled boundary curves; I/II hold (a, b) rows, III/IV hold (t, a, b)."""

    n: int
    curves: dict = field(default_factory=dict)
    t_range: tuple[float, float] = (0.0, math.pi)

    def to_csv(self, stream) -> None:
        stream.write("curve,t,a,b\n")
        for name in ("I", "II"):
            for a, b in self.curves[name]:
                stream.write(f"{name},,{a!r},{b!r}\n")
        for name in ("III", "IV"):
            for t, a, b in self.curves[name]:
                stream.write(f"{name},{t!r},{a!r},{b!r}\n")


def stability_boundary(n: int, samples: int) -> CurveSet:
    """Sample all four boundary curves with `samples` points each.

    III and IV are sampled on [start, pi) and close with the analytic corner,
    so those lists carry samples + 1 rows.
    """
    if n < 2 or samples < 2:
        raise ValueError("need n >= 2 and samples >= 2")
    edge = n / (n - 1.0)
    curves: dict[str, list] = {}
    a_i = np.linspace(-edge, 0.0, samples)
    curves["I"] = [(float(a), float(-a - 1.0) + 0.0) for a in a_i]
    a_ii = np.linspace(0.0, edge, samples)
    curves["II"] = [(float(a), float((-1.0) ** n * (a - 1.0)) + 0.0) for a in a_ii]
    t0 = (n - 1) * math.pi / n + T_START_OFFSET
    ts = np.linspace(t0, math.pi, samples, endpoint=False)
    for name in ("III", "IV"):
        rows = []
        for t in ts:
            a, b = boundary_point(name, n, float(t))
            rows.append((float(t), a, b))
        ca, cb = corner_point(name, n)
        rows.append((math.pi, ca, cb))
        curves[name] = rows
    return CurveSet(n=n, curves=curves, t_range=(t0, math.pi))


def quadrinomial_derivative_line(spec: QuadSpec):
    """Trinomial parameters (n, a, b) of the scaled quadrinomial derivative.

    p'(z)/N is a trinomial with n = N-1, a = kappa*n/(n+1), b = kappa/(n+1);
    the Q family flips the sign of b.  Exact rational kappa gives exact
    rational a, b.
    """
    n = spec.N - 1
    kap = spec.kappa
    if isinstance(kap, int):
        kap = Fraction(kap)
    if isinstance(kap, Fraction):
        a = kap * n / (n + 1)
        b = kap / (n + 1)
    else:
        a = kap * n / (n + 1.0)
        b = kap / (n + 1.0)
    if spec.family == "Q":
        b = -b
    return (n, a, b)


def cohn_on_circle(p: RealPoly, tol: float = STRICTNESS_TOL) -> bool:
    """All zeros of p on the unit circle, decided without computing them.

    Requires p self-reciprocal (either sign) and every zero of p' inside the
    closed unit disk (|z| <= 1 + tol).
    """
    if p.degree < 1:
        raise ValueError("degree must be >= 1")
    if self_reciprocal_sign(p) is None:
        return False
    dp = p.derivative()
    if dp.degree < 1:
        return True
    rs = find_roots(dp)
    return all(abs(r.value) <= 1.0 + tol for r in rs.roots)
