"""Transition matrices of the averaged column-group operator.

For a shape lam of size n*l, the operator sum_{h in H} alpha^{nu(h)} h acts
on the seminormal module of lam; compressing it to the row-group invariant
subspace (dimension d, the rectangular Kostka number) with the Gram-orthogonal
projection yields a d x d matrix F over Q[alpha].  Its generic rank is the
multiplicity of the irreducible gl_n module with highest weight lam inside
the cyclic module generated by the l-th power of the alpha-determinant, and
its rank at a rational point is the specialized multiplicity.

The operator is assembled in factored form.  H is the internal direct
product of its l column subgroups, each isomorphic to S_n, and nu is
additive across these factors, so

    sum_{h in H} alpha^nu(h) h = prod_{p=1}^{l} sum_{sigma in S_n} alpha^nu(sigma) emb_p(sigma)

with commuting factors.  Each factor is a small sum of representation
matrices grouped by nu; the product is applied to the d invariant columns
only, which keeps the l = 5 cases cheap.  A general class function phi on H
has no such product structure and falls back to the direct sum over H.

`trace_poly` computes the trace of F by a second, independent route: zonal
spherical values averaged over K, summed over H with alpha^nu weights.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from alphadet.errors import EmptyInvariantSpaceError, SizeMismatchError
from alphadet.exact import (
    PolyMatrix,
    PolyQ,
    QMatrix,
    generic_rank,
    mat_inverse,
    rank_at,
)
from alphadet.seminormal import InvariantBasis, SeminormalRep, build_rep, invariant_basis, rep_of
from alphadet.symgrp import (
    ClassFunctionH,
    Partition,
    Permutation,
    _chi,
    embed_column,
    enumerate_H,
    enumerate_K,
    nu,
)


@dataclass(frozen=True)
class TransitionMatrix:
    """The compressed operator matrix for one shape, with its Gram form."""

    shape: Partition
    n: int
    l: int
    d: int
    entries: PolyMatrix
    trace: PolyQ
    gram: tuple[tuple[Fraction, ...], ...]

    def generic_rank(self) -> int:
        """Multiplicity at generic alpha: rank over the function field Q(a)."""
        return generic_rank(self.entries)

    def rank_at(self, a: Fraction | int) -> int:
        """Multiplicity at the specialization alpha = a."""
        return rank_at(self.entries, a)

    def gram_matrix(self) -> QMatrix:
        return [list(row) for row in self.gram]


PolyRows = list[list[PolyQ]]


def _pm_mul(M: PolyRows, T: PolyRows) -> PolyRows:
    ncols = len(T[0]) if T else 0
    out = [[PolyQ.zero()] * ncols for _ in range(len(M))]
    for i, Mi in enumerate(M):
        oi = out[i]
        for k, mik in enumerate(Mi):
            if mik.is_zero:
                continue
            Tk = T[k]
            for c in range(ncols):
                if Tk[c]:
                    oi[c] = oi[c] + mik * Tk[c]
    return out


def _column_factor(rep: SeminormalRep, p: int, n: int, l: int) -> PolyRows:
    """sum over sigma in S_n of alpha^nu(sigma) rho(emb_p(sigma)), grouped by nu."""
    f = rep.dim
    acc = [[[Fraction(0)] * n for _ in range(f)] for _ in range(f)]
    for imgs in itertools.permutations(range(1, n + 1)):
        sigma = Permutation(imgs)
        e = nu(sigma)
        R = rep_of(rep, embed_column(sigma, p, n, l))
        for i in range(f):
            Ri = R[i]
            acci = acc[i]
            for j in range(f):
                if Ri[j]:
                    acci[j][e] += Ri[j]
    return [[PolyQ(acc[i][j]) for j in range(f)] for i in range(f)]


def _full_operator(
    rep: SeminormalRep, phi: ClassFunctionH, n: int, l: int, max_size: int | None
) -> PolyRows:
    """Direct sum over H of phi(h) rho(h), for class functions without a
    per-column factorization."""
    f = rep.dim
    acc: PolyRows = [[PolyQ.zero()] * f for _ in range(f)]
    for h in enumerate_H(n, l, max_size=max_size):
        v = phi.value(h)
        if v.is_zero:
            continue
        R = rep_of(rep, h)
        for i in range(f):
            Ri = R[i]
            acci = acc[i]
            for j in range(f):
                if Ri[j]:
                    acci[j] = acci[j] + v * Ri[j]
    return acc


def _assemble(
    rep: SeminormalRep,
    basis: InvariantBasis,
    n: int,
    l: int,
    phi: ClassFunctionH | None,
    max_size: int | None,
) -> tuple[PolyMatrix, QMatrix]:
    f = rep.dim
    d = basis.d
    B = basis.column_matrix()
    D = rep.gram
    T: PolyRows = [[PolyQ.constant(B[i][c]) for c in range(d)] for i in range(f)]
    if phi is None or phi.kind == "alpha_nu":
        for p in range(1, l + 1):
            T = _pm_mul(_column_factor(rep, p, n, l), T)
    else:
        T = _pm_mul(_full_operator(rep, phi, n, l, max_size), T)
    A: PolyRows = [[PolyQ.zero()] * d for _ in range(d)]
    for r in range(d):
        for i in range(f):
            w = B[i][r] * D[i]
            if w:
                Ti = T[i]
                Ar = A[r]
                for c in range(d):
                    if Ti[c]:
                        Ar[c] = Ar[c] + w * Ti[c]
    G = [[sum(B[i][r] * D[i] * B[i][c] for i in range(f)) for c in range(d)] for r in range(d)]
    Ginv = mat_inverse(G)
    F = [
        [sum((Ginv[r][k] * A[k][c] for k in range(d)), PolyQ.zero()) for c in range(d)]
        for r in range(d)
    ]
    return PolyMatrix.from_rows(F), G


def transition_matrix(
    n: int,
    l: int,
    lam: Partition,
    phi: ClassFunctionH | None = None,
    max_size: int | None = None,
) -> TransitionMatrix:
    """The d x d operator matrix for shape lam; phi defaults to alpha^nu.

    Raises EmptyInvariantSpaceError when the rectangular Kostka number is 0
    (more than n rows), and SizeMismatchError when |lam| != n*l.
    """
    if lam.size != n * l:
        raise SizeMismatchError(f"|lam| = {lam.size} is not n*l = {n * l}")
    if phi is None:
        return _cached_transition(n, l, lam.parts, max_size)
    return _build_transition(n, l, lam, phi, max_size)


@functools.lru_cache(maxsize=None)
def _cached_transition(
    n: int, l: int, parts: tuple[int, ...], max_size: int | None
) -> TransitionMatrix:
    return _build_transition(n, l, Partition(parts), None, max_size)


def _build_transition(
    n: int,
    l: int,
    lam: Partition,
    phi: ClassFunctionH | None,
    max_size: int | None,
) -> TransitionMatrix:
    rep = build_rep(lam, max_size=max_size)
    basis = invariant_basis(rep, n, l)
    if basis.d == 0:
        raise EmptyInvariantSpaceError(
            f"shape {lam!r} has no row-group invariants for (n, l) = ({n}, {l})"
        )
    F, G = _assemble(rep, basis, n, l, phi, max_size)
    return TransitionMatrix(
        shape=lam,
        n=n,
        l=l,
        d=basis.d,
        entries=F,
        trace=F.trace(),
        gram=tuple(tuple(row) for row in G),
    )


def trace_poly(n: int, l: int, lam: Partition, max_size: int | None = None) -> PolyQ:
    """Trace of the transition matrix by the independent zonal route.

    Sums alpha^nu(h) times the K-averaged character over all h in H, never
    touching the seminormal construction.
    """
    m = n * l
    if lam.size != m:
        raise SizeMismatchError(f"|lam| = {lam.size} is not n*l = {m}")
    K = enumerate_K(n, l, max_size=max_size)
    coeffs = [Fraction(0)] * (m + 1)
    for h in enumerate_H(n, l, max_size=max_size):
        total = 0
        buckets: dict[tuple[int, ...], int] = {}
        for k in K:
            t = (k * h).cycle_type().parts
            buckets[t] = buckets.get(t, 0) + 1
        for t, mult in buckets.items():
            total += mult * _chi(lam.parts, t)
        coeffs[nu(h)] += Fraction(total, len(K))
    return PolyQ(coeffs)
