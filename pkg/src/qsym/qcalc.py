"""q-analog and (p,q)-analog primitives.

Brackets [n] = 1 + q + ... + q^(n-1), factorials, Gaussian binomial
coefficients, brackets in base q^r, and the q-derivative acting on
truncated series.  The two-parameter versions live in (p, q) and collapse
to the one-parameter versions at p = 1.
"""

from __future__ import annotations

from functools import lru_cache

from .exactpoly import BiPoly, TruncSeries, UniPoly, one, zero


def qbracket(n: int) -> UniPoly:
    """[n] = 1 + q + ... + q^(n-1); [0] = 0."""
    if n < 0:
        raise ValueError("bracket index must be >= 0")
    return UniPoly((1,) * n)


@lru_cache(maxsize=None)
def qfactorial(n: int) -> UniPoly:
    """[n]! = [1][2]...[n]; [0]! = 1."""
    if n < 0:
        raise ValueError("factorial index must be >= 0")
    if n == 0:
        return one
    return qfactorial(n - 1) * qbracket(n)


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> UniPoly:
    """Gaussian binomial coefficient, zero outside 0 <= k <= n.

    Built by the triangular recurrence rather than by dividing factorials,
    so no rational intermediate values appear.  The cache is write-once:
    entries are fully constructed before being published.
    """
    if k < 0 or n < 0 or k > n:
        return zero
    if k == 0 or k == n:
        return one
    return qbinomial(n - 1, k - 1) + UniPoly.monomial(k) * qbinomial(n - 1, k)


def qbracket_power_base(n: int, r: int) -> UniPoly:
    """[n] with q replaced by q^r."""
    return qbracket(n).compose_power(r)


def qfactorial_power_base(n: int, r: int) -> UniPoly:
    return qfactorial(n).compose_power(r)


def qbinomial_power_base(n: int, k: int, r: int) -> UniPoly:
    p = qbinomial(n, k)
    return p.compose_power(r) if not p.is_zero() else p


def q_derivative(f: TruncSeries, r: int = 1) -> TruncSeries:
    """Apply the q-derivative r times to a truncated series.

    The coefficient of t^(n-r) in the result is [r]! * [n choose r]_q times
    the coefficient of t^n in f; the order drops by r.
    """
    if r < 1:
        raise ValueError("derivative order must be >= 1")
    if r > f.order:
        raise ValueError("derivative order exceeds the series order")
    fr = qfactorial(r)
    out = []
    for m in range(f.order - r + 1):
        out.append(fr * qbinomial(m + r, r) * f.coeff(m + r))
    return TruncSeries(out)


# ---------------------------------------------------------------------------
# two-parameter versions; stored as BiPoly even when the p-degree is zero,
# so the one-parameter degeneration is a plain p = 1 specialization.


def pq_bracket(n: int) -> BiPoly:
    """[n]_{p,q} = p^(n-1) + p^(n-2) q + ... + q^(n-1); [0]_{p,q} = 0."""
    if n < 0:
        raise ValueError("bracket index must be >= 0")
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[n - 1 - i][i] = 1
    return BiPoly(rows)


@lru_cache(maxsize=None)
def pq_factorial(n: int) -> BiPoly:
    if n < 0:
        raise ValueError("factorial index must be >= 0")
    if n == 0:
        return BiPoly.constant(1)
    return pq_factorial(n - 1) * pq_bracket(n)


@lru_cache(maxsize=None)
def pq_binomial(n: int, k: int) -> BiPoly:
    """Two-parameter Gaussian binomial, by the (p,q)-triangular recurrence."""
    if k < 0 or n < 0 or k > n:
        return BiPoly()
    if k == 0 or k == n:
        return BiPoly.constant(1)
    return (BiPoly.monomial(k, 0) * pq_binomial(n - 1, k)
            + BiPoly.monomial(0, n - k) * pq_binomial(n - 1, k - 1))


def pq_derivative(f: TruncSeries, r: int = 1) -> TruncSeries:
    """(p,q)-derivative applied r times to a series with BiPoly coefficients."""
    if r < 1:
        raise ValueError("derivative order must be >= 1")
    if r > f.order:
        raise ValueError("derivative order exceeds the series order")
    fr = pq_factorial(r)
    out = []
    for m in range(f.order - r + 1):
        out.append(fr * pq_binomial(m + r, r) * f.coeff(m + r))
    return TruncSeries(out)
