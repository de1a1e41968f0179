"""Chebyshev polynomials of the second kind and their positive zeros.

U_n(cos t) = sin((n+1)t)/sin t.  The zeros of U_n are known in closed form;
the zeros of U'_n are found by Newton iteration inside brackets supplied by
interlacing.  Each zero x also carries the mapped value 1 - 2x**2, which is
the cosine of the doubled arcsine angle used by the quadrinomial
factorizations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class BracketFailure(RuntimeError):
    """An expected sign change was missing; indicates a bug, not bad data."""


@dataclass(frozen=True)
class ChebRootList:
    kind: str  # "U" or "U_prime"
    n: int
    values: tuple[float, ...]  # positive zeros, strictly descending

    @property
    def mapped(self) -> tuple[float, ...]:
        return tuple(1.0 - 2.0 * v * v for v in self.values)


def cheb_U(n: int, x: float) -> float:
    """U_n(x) by the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = 1.0, 2.0 * x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2.0 * x * cur - prev
    return cur


def cheb_U_prime(n: int, x: float) -> float:
    """d/dx U_n(x), switching to the exact limit near x = +/-1.

    Away from the endpoints this is ((n+2) U_{n-1} - n U_{n+1}) / (2(1-x^2));
    at x = +/-1 the limit is (+/-1)^(n-1) n(n+1)(n+2)/3.
    """
    if n < 1:
        return 0.0
    if abs(abs(x) - 1.0) <= 1e-8:
        sign = 1.0 if x > 0 else (-1.0) ** (n - 1)
        return sign * n * (n + 1) * (n + 2) / 3.0
    return ((n + 2) * cheb_U(n - 1, x) - n * cheb_U(n + 1, x)) / (2.0 * (1.0 - x * x))


def _cheb_U_second(n: int, x: float) -> float:
    # from the defining ODE (1-x^2) U'' - 3x U' + n(n+2) U = 0
    return (3.0 * x * cheb_U_prime(n, x) - n * (n + 2) * cheb_U(n, x)) / (1.0 - x * x)


def positive_roots_U(n: int) -> ChebRootList:
    """Positive zeros of U_n, descending: cos(j*pi/(n+1)) for j below (n+1)/2."""
    if n < 1:
        raise ValueError("n must be >= 1")
    values = tuple(
        math.cos(j * math.pi / (n + 1)) for j in range(1, (n + 1) // 2 + (n + 1) % 2)
    )
    values = tuple(v for v in values if v > 0)
    return ChebRootList("U", n, values)


def _newton_in_bracket(n: int, lo: float, hi: float) -> float:
    f_lo = cheb_U_prime(n, lo)
    f_hi = cheb_U_prime(n, hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise BracketFailure(f"no sign change of U'_{n} on [{lo}, {hi}]")
    x = 0.5 * (lo + hi)
    for _ in range(100):
        f = cheb_U_prime(n, x)
        if f == 0.0:
            break
        if (f > 0) == (f_lo > 0):
            lo = x
        else:
            hi = x
        d = _cheb_U_second(n, x)
        step = f / d if d != 0 else math.inf
        nxt = x - step
        if not (lo < nxt < hi):
            nxt = 0.5 * (lo + hi)
        if abs(nxt - x) <= 4 * math.ulp(abs(x) + 1.0):
            x = nxt
            break
        x = nxt
    return x


def positive_roots_U_prime(n: int) -> ChebRootList:
    """Positive zeros of U'_n, descending, via brackets from interlacing.

    U'_n has exactly one zero between consecutive zeros of U_n.  For odd n
    the innermost bracket is closed by x = 0 (U'_n is even there), giving
    (n-1)/2 positive zeros; for even n there are (n-2)/2.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    mu = positive_roots_U(n).values
    brackets = []
    for i in range(len(mu) - 1):
        brackets.append((mu[i + 1], mu[i]))
    if n % 2 == 1:
        brackets.append((0.0, mu[-1]))
    values = tuple(_newton_in_bracket(n, lo, hi) for (lo, hi) in brackets)
    values = tuple(v for v in values if v > 0)
    return ChebRootList("U_prime", n, values)
