"""Carlitz q-Stirling numbers.

Second kind by the triangular recurrence S[n,k] = S[n-1,k-1] + [k] S[n-1,k];
first kind defined here as the inverse of the second-kind triangle (computed
by forward substitution), which is the only property downstream results use.
Users comparing against other first-kind normalizations in the literature
should check sign conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .exactpoly import UniPoly, json_coeff_list, one, q, zero
from .qcalc import qbinomial, qbracket
from .report import CheckReport


@lru_cache(maxsize=None)
def qstirling2(n: int, k: int) -> UniPoly:
    """Second-kind q-Stirling number S[n,k]; S[n,0] = [n == 0], 0 for k > n."""
    if n < 0 or k < 0:
        return zero
    if k == 0:
        return one if n == 0 else zero
    if k > n:
        return zero
    return qstirling2(n - 1, k - 1) + qbracket(k) * qstirling2(n - 1, k)


@dataclass(frozen=True)
class StirlingTriangle:
    kind: str                   # "first" or "second"
    n_max: int
    entries: tuple              # entries[n-1][k-1] for 1 <= k <= n <= n_max

    def entry(self, n: int, k: int) -> UniPoly:
        if 1 <= k <= n <= self.n_max:
            return self.entries[n - 1][k - 1]
        return zero

    def csv_rows(self):
        """Rows n,k,coeffs-JSON in row-major triangle order."""
        for n in range(1, self.n_max + 1):
            for k in range(1, n + 1):
                yield n, k, json_coeff_list(self.entry(n, k))


def qstirling2_triangle(n_max: int) -> StirlingTriangle:
    if n_max < 1:
        raise ValueError("triangle size must be >= 1")
    rows = tuple(tuple(qstirling2(n, k) for k in range(1, n + 1))
                 for n in range(1, n_max + 1))
    return StirlingTriangle("second", n_max, rows)


def qstirling1_triangle(n_max: int) -> StirlingTriangle:
    """First-kind triangle: the lower-triangular inverse of the second kind."""
    if n_max < 1:
        raise ValueError("triangle size must be >= 1")
    s = [[zero] * n_max for _ in range(n_max)]
    for n in range(1, n_max + 1):
        s[n - 1][n - 1] = one
        for k in range(n - 1, 0, -1):
            acc = zero
            for j in range(k, n):
                acc = acc + qstirling2(n, j) * s[j - 1][k - 1]
            s[n - 1][k - 1] = -acc
    rows = tuple(tuple(s[n - 1][k - 1] for k in range(1, n + 1))
                 for n in range(1, n_max + 1))
    return StirlingTriangle("first", n_max, rows)


def qstirling1(n: int, k: int, triangle: StirlingTriangle | None = None) -> UniPoly:
    if triangle is None or triangle.n_max < n:
        triangle = qstirling1_triangle(max(n, 1))
    return triangle.entry(n, k)


def _qminus1_powers(n: int):
    pw = [one]
    base = q - one
    for _ in range(n):
        pw.append(pw[-1] * base)
    return pw


def _oneminusq_powers(n: int):
    pw = [one]
    base = one - q
    for _ in range(n):
        pw.append(pw[-1] * base)
    return pw


def verify_carlitz_identities(n_max: int) -> CheckReport:
    """Exactly check the two expansions linking q-binomials to the triangle.

    (i)  [n k] = sum_j C(n,j) (q-1)^(j-k) S[j,k]
    (ii) (1-q)^(n-k) S[n,k] = sum_l (-1)^(l-k) C(n,l) [l k]
    for every 0 <= k <= n <= n_max.  Failures are recorded with the first
    counterexample, not raised.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    report = CheckReport()
    qm1 = _qminus1_powers(n_max)
    omq = _oneminusq_powers(n_max)
    for n in range(n_max + 1):
        for k in range(n + 1):
            lhs = qbinomial(n, k)
            rhs = zero
            for j in range(k, n + 1):
                rhs = rhs + comb(n, j) * qm1[j - k] * qstirling2(j, k)
            report.check("carlitz-qbinomial-expansion", lhs == rhs,
                         detail=f"lhs={lhs} rhs={rhs}", n=n, k=k)

            lhs2 = omq[n - k] * qstirling2(n, k)
            rhs2 = zero
            for l in range(k, n + 1):
                term = comb(n, l) * qbinomial(l, k)
                rhs2 = rhs2 + (term if (l - k) % 2 == 0 else -term)
            report.check("carlitz-inverse-expansion", lhs2 == rhs2,
                         detail=f"lhs={lhs2} rhs={rhs2}", n=n, k=k)
    return report


def _matmul(a, b, size):
    return [[sum((a[i][l] * b[l][j] for l in range(size)), zero)
             for j in range(size)] for i in range(size)]


def _is_identity(m, size) -> bool:
    return all(m[i][j] == (one if i == j else zero)
               for i in range(size) for j in range(size))


def verify_triangle_inverse(n_max: int) -> CheckReport:
    """Check that the two triangles are exact matrix inverses, size by size."""
    report = CheckReport()
    second = qstirling2_triangle(n_max)
    first = qstirling1_triangle(n_max)
    for n in range(1, n_max + 1):
        S = [[second.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
        s = [[first.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]
        report.check("stirling-triangle-inverse", _is_identity(_matmul(S, s, n), n),
                     n=n)
    return report


def verify_conjugated_inverse(n_max: int) -> CheckReport:
    """Check the scaled triangles A and B, with entries (1-q)^(i-j) times the
    second- resp. first-kind numbers, are inverse to each other.

    A is the conjugate of the second-kind triangle by diag((1-q)^(i-1)), so
    this is the matrix form of the transfer identities.
    """
    report = CheckReport()
    omq = _oneminusq_powers(n_max)
    second = qstirling2_triangle(n_max)
    first = qstirling1_triangle(n_max)
    for n in range(1, n_max + 1):
        A = [[omq[i - j] * second.entry(i, j) if i >= j else zero
              for j in range(1, n + 1)] for i in range(1, n + 1)]
        B = [[omq[i - j] * first.entry(i, j) if i >= j else zero
              for j in range(1, n + 1)] for i in range(1, n + 1)]
        report.check("scaled-triangle-inverse", _is_identity(_matmul(A, B, n), n),
                     n=n)
    return report


def stirling_suite_report(n_max: int, conjugation_n_max: int | None = None) -> CheckReport:
    """The full q-Stirling verification battery."""
    report = verify_carlitz_identities(n_max)
    report.merge(verify_triangle_inverse(n_max))
    report.merge(verify_conjugated_inverse(conjugation_n_max or min(n_max, 8)))
    return report
