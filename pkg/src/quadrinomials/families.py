"""The quadrinomial families and their unit-circle structure.

Family P is 1 + kappa(z + z^(N-1)) + z^N, family Q is
1 + kappa(z - z^(N-1)) - z^N.  All zeros sit on the unit circle exactly
when kappa lies in a closed interval depending on family and the parity
of N; at the interval endpoints the polynomial factors into (1 +/- z)
powers times quadratics whose cosines come from zeros of U_{N-2} or
U'_{N-2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .chebyshev import positive_roots_U, positive_roots_U_prime
from .polycore import RealPoly, SolverOptions, find_roots


class NotALimitCase(ValueError):
    """The (family, kappa, parity) combination has no tabulated factorization."""


@dataclass(frozen=True)
class QuadSpec:
    family: str  # "P" or "Q"
    kappa: Fraction | float
    N: int

    def __post_init__(self):
        fam = str(self.family).upper()
        if fam not in ("P", "Q"):
            raise ValueError("family must be P or Q")
        object.__setattr__(self, "family", fam)
        if not isinstance(self.N, int) or self.N < 3:
            raise ValueError("N must be an integer >= 3")
        if isinstance(self.kappa, float) and not math.isfinite(self.kappa):
            raise ValueError("kappa must be finite")


def _exact_kappa(kappa) -> Fraction | None:
    """Fraction view of kappa when it is exact; floats are never exact."""
    if isinstance(kappa, Fraction):
        return kappa
    if isinstance(kappa, int):
        return Fraction(kappa)
    return None


@dataclass(frozen=True)
class FactoredForm:
    """Product of (1 - root*z)^mult linear parts and quadratics 1 + z^2 - 2cz."""

    linear: tuple[tuple[int, int], ...]  # (root in {-1, +1}, multiplicity)
    quadratics: tuple[float, ...]  # c values, each |c| <= 1
    scale: float = 1.0

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.linear) + 2 * len(self.quadratics)

    def expand(self) -> RealPoly:
        """Multiply out, pairing factors in bit-reversed order.

        Sequential left-to-right products let intermediate coefficients grow
        huge before cancellation and lose double precision by N around 60;
        the balanced tree with interleaved factor order keeps every partial
        product tame (observed max deviation under 1e-11 through N = 101).
        """
        factors: list[RealPoly] = []
        for root, mult in self.linear:
            factors.extend([RealPoly.of((1.0, -float(root)))] * mult)
        for c in self.quadratics:
            factors.append(RealPoly.of((1.0, -2.0 * c, 1.0)))
        if not factors:
            out = RealPoly.of((1.0,))
        else:
            factors = [factors[i] for i in _bit_reversed(len(factors))]
            while len(factors) > 1:
                paired = [
                    factors[i] * factors[i + 1] for i in range(0, len(factors) - 1, 2)
                ]
                if len(factors) % 2:
                    paired.append(factors[-1])
                factors = paired
            out = factors[0]
        return out if self.scale == 1.0 else out.scaled(self.scale)


def _bit_reversed(k: int) -> list[int]:
    if k <= 1:
        return list(range(k))
    bits = (k - 1).bit_length()
    def rev(i: int) -> int:
        out = 0
        for _ in range(bits):
            out = (out << 1) | (i & 1)
            i >>= 1
        return out
    return sorted(range(k), key=rev)


def build_quadrinomial(spec: QuadSpec) -> RealPoly:
    kap = float(spec.kappa)
    c = [0.0] * (spec.N + 1)
    c[0] = 1.0
    c[1] += kap
    if spec.family == "P":
        c[spec.N - 1] += kap
        c[spec.N] += 1.0
    else:
        c[spec.N - 1] += -kap
        c[spec.N] += -1.0
    return RealPoly.of(c)


def kappa_limits(family: str, N: int) -> tuple[Fraction, Fraction]:
    """Closed kappa interval on which all zeros lie on the unit circle."""
    if N < 3:
        raise ValueError("N must be >= 3")
    fam = family.upper()
    edge = Fraction(N, N - 2)
    if fam == "P":
        return (Fraction(-1), Fraction(1) if N % 2 == 0 else edge)
    if fam == "Q":
        return (-edge, Fraction(1) if N % 2 == 1 else edge)
    raise ValueError("family must be P or Q")


def circle_criterion(spec: QuadSpec) -> bool:
    lo, hi = kappa_limits(spec.family, spec.N)
    return lo <= spec.kappa <= hi


class CriterionCheck(NamedTuple):
    predicted: bool
    observed: bool
    worst_deviation: float


def verify_criterion(
    spec: QuadSpec, circle_tol: float = 1e-6, options: SolverOptions | None = None
) -> CriterionCheck:
    """Cross-check the interval rule against the actually computed roots."""
    rs = find_roots(build_quadrinomial(spec), options)
    worst = max(abs(abs(r.value) - 1.0) for r in rs.roots)
    return CriterionCheck(circle_criterion(spec), worst <= circle_tol, worst)


def factorize_limit_case(spec: QuadSpec) -> FactoredForm:
    """Closed-form factorization at the eight tabulated endpoint cases.

    Quadratic cosines come from the mapped zeros 1 - 2x^2 of U_{N-2}
    (kappa = +/-1 cases) or U'_{N-2} (kappa = +/-N/(N-2) cases).  Dispatch
    demands an exact rational kappa; a float never matches.
    """
    kap = _exact_kappa(spec.kappa)
    if kap is None:
        raise NotALimitCase("limit-case dispatch requires exact rational kappa")
    N = spec.N
    odd = N % 2 == 1
    edge = Fraction(N, N - 2)

    def beta():
        return positive_roots_U(N - 2).mapped

    def gamma():
        return positive_roots_U_prime(N - 2).mapped if N >= 4 else ()

    if spec.family == "P":
        if kap == -1:
            linear = ((-1, 1), (1, 2)) if odd else ((1, 2),)
            quadratics = tuple(-b for b in beta())
        elif kap == 1 and not odd:
            linear = ((-1, 2),)
            quadratics = tuple(beta())
        elif kap == edge and odd:
            linear = ((-1, 3),)
            quadratics = tuple(gamma())
        else:
            raise NotALimitCase(f"no tabulated case for P, kappa={kap}, N={N}")
    else:
        if kap == -edge:
            linear = ((1, 3),) if odd else ((-1, 1), (1, 3))
            quadratics = tuple(-g for g in gamma())
        elif kap == edge and not odd:
            linear = ((1, 1), (-1, 3))
            quadratics = tuple(gamma())
        elif kap == 1 and odd:
            linear = ((1, 1), (-1, 2))
            quadratics = tuple(-b for b in beta())
        else:
            raise NotALimitCase(f"no tabulated case for Q, kappa={kap}, N={N}")
    return FactoredForm(linear, quadratics, 1.0)


def verify_factorization(spec: QuadSpec) -> float:
    """Max |coefficient| gap between the factored expansion and the direct build."""
    diff = factorize_limit_case(spec).expand() - build_quadrinomial(spec)
    return diff.norm_inf


def cusp_angles(N: int) -> list[float]:
    """Angles arccos(gamma_j), ascending, for odd N >= 5.

    These locate the boundary cusps of the endpoint quadrinomial; their
    consecutive differences are close to but not exactly equal.
    """
    if N % 2 == 0 or N < 5:
        raise ValueError("N must be odd and >= 5")
    return sorted(math.acos(g) for g in positive_roots_U_prime(N - 2).mapped)
