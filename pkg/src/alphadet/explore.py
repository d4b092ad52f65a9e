"""Exploratory diagnostics that go beyond the proved statements.

Whether the transition matrix is semisimple is open in general; this module
lets one probe it numerically-in-spirit but with exact arithmetic: pick a
rational alpha, compute the characteristic polynomial of F(alpha) by
Faddeev-LeVerrier, strip repeated factors via gcd with the derivative, and
test whether the squarefree part annihilates the matrix.  That is exactly
the condition for diagonalizability over the algebraic closure of Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from alphadet.exact import PolyQ, QMatrix, mat_identity, mat_mul
from alphadet.symgrp import Partition
from alphadet.transition import transition_matrix


def charpoly(A: QMatrix) -> PolyQ:
    """Characteristic polynomial det(tI - A), ascending coefficients,
    computed division-free in the entries (Faddeev-LeVerrier)."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix is not square")
    cs = [Fraction(1)]  # leading coefficient of t^n
    M = mat_identity(n)
    for k in range(1, n + 1):
        AM = mat_mul(A, M)
        ck = -sum(AM[i][i] for i in range(n)) / k
        cs.append(ck)
        M = [
            [AM[i][j] + (ck if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
    return PolyQ(reversed(cs))


def poly_divmod(a: PolyQ, b: PolyQ) -> tuple[PolyQ, PolyQ]:
    if b.degree < 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    quo = [Fraction(0)] * max(0, len(rem) - b.degree)
    lead = b.coeffs[-1]
    for top in range(len(rem) - 1, b.degree - 1, -1):
        c = rem[top] / lead
        if not c:
            continue
        quo[top - b.degree] = c
        for k, bc in enumerate(b.coeffs):
            rem[top - b.degree + k] -= c * bc
    return PolyQ(quo), PolyQ(rem)


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic greatest common divisor over Q."""
    while b.degree >= 0:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a.degree < 0:
        return a
    return (1 / a.coeffs[-1]) * a


def squarefree_part(p: PolyQ) -> PolyQ:
    """p divided by gcd(p, p'), made monic; shares the roots of p, each once."""
    if p.degree <= 0:
        return PolyQ.one() if p.degree == 0 else p
    g = poly_gcd(p, p.derivative())
    q, r = poly_divmod(p, g)
    assert r.degree < 0
    return (1 / q.coeffs[-1]) * q


def _poly_at_matrix(p: PolyQ, A: QMatrix) -> QMatrix:
    n = len(A)
    out = [[Fraction(0)] * n for _ in range(n)]
    for c in reversed(p.coeffs):
        out = mat_mul(out, A)
        for i in range(n):
            out[i][i] += c
    return out


@dataclass(frozen=True)
class DiagonalizabilityProbe:
    alpha: Fraction
    char: PolyQ
    squarefree: PolyQ
    diagonalizable: bool


def probe_diagonalizable(
    n: int, l: int, lam: Partition, alpha: Fraction | int, max_size: int | None = None
) -> DiagonalizabilityProbe:
    a = Fraction(alpha)
    F = transition_matrix(n, l, lam, max_size=max_size).entries.eval_at(a)
    p = charpoly(F)
    s = squarefree_part(p)
    value = _poly_at_matrix(s, F)
    zero = all(not x for row in value for x in row)
    return DiagonalizabilityProbe(alpha=a, char=p, squarefree=s, diagonalizable=zero)


DEFAULT_PROBE_ALPHAS = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(1, 2),
    Fraction(-1, 2),
    Fraction(2),
)


def probe_many(
    n: int,
    l: int,
    lam: Partition,
    alphas=DEFAULT_PROBE_ALPHAS,
    max_size: int | None = None,
) -> list[DiagonalizabilityProbe]:
    return [probe_diagonalizable(n, l, lam, a, max_size=max_size) for a in alphas]
