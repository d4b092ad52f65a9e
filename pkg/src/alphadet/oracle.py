"""Brute-force oracle: build the cyclic module and count its constituents.

This module never touches the seminormal machinery.  It works directly with
polynomials in the n^2 matrix entries x_ij: the alpha-determinant is expanded
literally, the Lie algebra acts by polarization operators
E_ij f = sum_s x_is d f / d x_js, and the cyclic module is the linear span of
the generator's iterated images, closed by a worklist sweep over all E_ij and
kept in echelon form.  Multiplicities are read off as dimensions of
highest-weight spaces: among the module rows of weight lam (row-degree vector),
the kernel of all raising operators E_i,i+1.

Coefficients are PolyQ for the generic module over Q(alpha) (rows are scaled
to Z[alpha] and reduced fraction-free) or plain rationals after specializing
alpha.  `vere_jones_check` is the single floating-point routine in the
package: it compares det(I - a A)^(-1/a) against the truncated sum of
alpha-determinants of index-repeated blocks, with an explicit geometric bound
on the dropped tail.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm, prod

from alphadet import kernels
from alphadet.errors import (
    CapExceededError,
    SizeMismatchError,
    SpectralRadiusError,
    ZeroAlphaError,
)
from alphadet.exact import PolyMatrix, PolyQ, QMatrix, rank_q
from alphadet.symgrp import ClassFunctionH, Partition, Permutation, enumerate_H, nu, theta

DEFAULT_ADET_CAP = 8
DEFAULT_GENERIC_CLOSURE_CAP = 6
DEFAULT_SPECIAL_CLOSURE_CAP = 8

Monomial = tuple[int, ...]


def _var(i: int, j: int, n: int) -> int:
    return (i - 1) * n + (j - 1)


class MultiPoly:
    """Sparse polynomial in the n^2 entries of an n x n variable matrix.

    Terms map exponent vectors (length n^2, variable order x11, x12, ...,
    xnn) to coefficients.  Coefficients may be PolyQ or Fraction; both
    support the ring operations used here, and falsy means zero.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Monomial, object] | None = None):
        self.n = n
        self.terms: dict[Monomial, object] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    self.terms[m] = c

    @classmethod
    def zero(cls, n: int) -> MultiPoly:
        return cls(n)

    @classmethod
    def constant(cls, n: int, c) -> MultiPoly:
        return cls(n, {(0,) * (n * n): c})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: MultiPoly) -> MultiPoly:
        out = dict(self.terms)
        for m, c in other.terms.items():
            acc = out.get(m)
            acc = c if acc is None else acc + c
            if acc:
                out[m] = acc
            elif m in out:
                del out[m]
        return MultiPoly(self.n, out)

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + other.scale(-1)

    def scale(self, c) -> MultiPoly:
        if not c:
            return MultiPoly(self.n)
        return MultiPoly(self.n, {m: x * c for m, x in self.terms.items()})

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        out: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                acc = out.get(m)
                acc = c if acc is None else acc + c
                if acc:
                    out[m] = acc
                elif m in out:
                    del out[m]
        return MultiPoly(self.n, out)

    def __pow__(self, e: int) -> MultiPoly:
        out = MultiPoly.constant(self.n, Fraction(1))
        for _ in range(e):
            out = out * self
        return out

    def apply_E(self, i: int, j: int) -> MultiPoly:
        """Polarization operator E_ij f = sum_s x_is df/dx_js."""
        n = self.n
        out: dict[Monomial, object] = {}
        for m, c in self.terms.items():
            for s in range(1, n + 1):
                e = m[_var(j, s, n)]
                if e:
                    newm = list(m)
                    newm[_var(j, s, n)] -= 1
                    newm[_var(i, s, n)] += 1
                    key = tuple(newm)
                    add = c * e
                    acc = out.get(key)
                    acc = add if acc is None else acc + add
                    if acc:
                        out[key] = acc
                    elif key in out:
                        del out[key]
        return MultiPoly(n, out)

    def eval_alpha(self, a: Fraction) -> MultiPoly:
        return MultiPoly(
            self.n,
            {m: (c(a) if isinstance(c, PolyQ) else c) for m, c in self.terms.items()},
        )

    def weight(self) -> tuple[int, ...]:
        """Row-degree vector; requires all terms to share it."""
        ws = {
            tuple(sum(m[_var(i, j, self.n)] for j in range(1, self.n + 1)) for i in range(1, self.n + 1))
            for m in self.terms
        }
        if len(ws) != 1:
            raise ValueError("polynomial is not weight-homogeneous")
        return next(iter(ws))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("MultiPoly is mutable by construction; not hashable")

    def __repr__(self) -> str:
        return f"MultiPoly(n={self.n}, {len(self.terms)} terms)"


def apply_E(i: int, j: int, f: MultiPoly) -> MultiPoly:
    return f.apply_E(i, j)


def adet_eval(A: QMatrix, a: Fraction | int, max_size: int | None = None) -> Fraction:
    """alpha-determinant of a rational matrix at alpha = a, by expansion over
    all permutations weighted with a^nu."""
    m = len(A)
    cap = DEFAULT_ADET_CAP if max_size is None else max_size
    if m > cap:
        raise CapExceededError(f"matrix size {m} exceeds adet cap {cap}")
    if any(len(row) != m for row in A):
        raise SizeMismatchError("matrix is not square")
    if m == 0:
        return Fraction(1)
    apow = [Fraction(1)]
    for _ in range(m - 1):
        apow.append(apow[-1] * a)
    total = Fraction(0)
    for imgs in itertools.permutations(range(m)):
        # nu = m - number of cycles
        term = apow[m - _cycle_count(imgs)]
        for col, row in enumerate(imgs):
            term = term * A[row][col]
            if not term:
                break
        total += term
    return total


def _cycle_count(imgs: tuple[int, ...]) -> int:
    seen = [False] * len(imgs)
    count = 0
    for s in range(len(imgs)):
        if not seen[s]:
            count += 1
            x = s
            while not seen[x]:
                seen[x] = True
                x = imgs[x]
    return count


def adet_symbolic(n: int, max_size: int | None = None) -> MultiPoly:
    """The alpha-determinant of the generic matrix, coefficients in Q[alpha]."""
    cap = DEFAULT_ADET_CAP if max_size is None else max_size
    if n > cap:
        raise CapExceededError(f"matrix size {n} exceeds adet cap {cap}")
    out: dict[Monomial, object] = {}
    for imgs in itertools.permutations(range(1, n + 1)):
        sigma = Permutation(imgs)
        m = [0] * (n * n)
        for q in range(1, n + 1):
            m[_var(sigma(q), q, n)] += 1
        key = tuple(m)
        add = PolyQ.monomial(nu(sigma))
        acc = out.get(key)
        out[key] = add if acc is None else acc + add
    return MultiPoly(n, out)


def D_of(n: int, l: int, phi: ClassFunctionH, max_size: int | None = None) -> MultiPoly:
    """Column-group average sum_h phi(h) prod_{p,q} x_{theta(h)_p(q), q}."""
    acc: dict[Monomial, object] = {}
    for h in enumerate_H(n, l, max_size=max_size):
        c = phi.value(h)
        if not c:
            continue
        comps = theta(h, n, l)
        m = [0] * (n * n)
        for p in range(1, l + 1):
            comp = comps[p - 1]
            for q in range(1, n + 1):
                m[_var(comp(q), q, n)] += 1
        key = tuple(m)
        prev = acc.get(key)
        acc[key] = c if prev is None else prev + c
    return MultiPoly(n, acc)


def weyl_dim(lam: Partition, n: int) -> int:
    """Dimension of the irreducible gl_n module with highest weight lam."""
    if lam.length > n:
        raise SizeMismatchError(f"lam has {lam.length} rows, more than n = {n}")
    num = Fraction(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            num *= Fraction(lam.part(i) - lam.part(j) + j - i, j - i)
    assert num.denominator == 1
    return int(num)


# ---------------------------------------------------------------------------
# Cyclic closure


class _PolyRowReducer:
    """Echelon reducer for sparse rows over Z[alpha] (fraction-free)."""

    def __init__(self):
        self.pivots: dict[Monomial, dict[Monomial, list[int]]] = {}

    @staticmethod
    def _strip(row: dict[Monomial, list[int]]) -> dict[Monomial, list[int]]:
        if not row:
            return row
        mons = sorted(row, reverse=True)
        entries = [row[m] for m in mons]
        stripped = kernels.zp_row_strip(entries)
        return {m: p for m, p in zip(mons, stripped) if p}

    def reduce(self, row: dict[Monomial, list[int]]) -> dict[Monomial, list[int]]:
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return self._strip(row)
            rc = row[lead]
            pc = piv[lead]
            out: dict[Monomial, list[int]] = {}
            for m in row.keys() | piv.keys():
                val = kernels.zp_sub(
                    kernels.zp_mul(pc, row.get(m, [])),
                    kernels.zp_mul(rc, piv.get(m, [])),
                )
                if val:
                    out[m] = val
            row = out
        return row

    def insert(self, row: dict[Monomial, list[int]]) -> None:
        self.pivots[max(row)] = row

    def back_reduce(self) -> list[dict[Monomial, list[int]]]:
        """Eliminate every pivot lead from every other row.

        Ascending lead order: once a row is clean, reducing against it cannot
        reintroduce pivot leads, so one elimination per occurrence suffices.
        """
        for lead in sorted(self.pivots):
            row = self.pivots[lead]
            while True:
                hit = max(
                    (m for m in row if m != lead and m in self.pivots),
                    default=None,
                )
                if hit is None:
                    break
                piv = self.pivots[hit]
                rc, pc = row[hit], piv[hit]
                new: dict[Monomial, list[int]] = {}
                for m in row.keys() | piv.keys():
                    val = kernels.zp_sub(
                        kernels.zp_mul(pc, row.get(m, [])),
                        kernels.zp_mul(rc, piv.get(m, [])),
                    )
                    if val:
                        new[m] = val
                row = new
            self.pivots[lead] = self._strip(row)
        return [self.pivots[lead] for lead in sorted(self.pivots, reverse=True)]


class _RationalRowReducer:
    """Echelon reducer for sparse rows over Q; pivots kept monic."""

    def __init__(self):
        self.pivots: dict[Monomial, dict[Monomial, Fraction]] = {}

    def reduce(self, row: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                inv = 1 / row[lead]
                return {m: c * inv for m, c in row.items()}
            coef = row[lead]
            out: dict[Monomial, Fraction] = {}
            for m in row.keys() | piv.keys():
                val = row.get(m, Fraction(0)) - coef * piv.get(m, Fraction(0))
                if val:
                    out[m] = val
            row = out
        return row

    def insert(self, row: dict[Monomial, Fraction]) -> None:
        self.pivots[max(row)] = row

    def back_reduce(self) -> list[dict[Monomial, Fraction]]:
        for lead in sorted(self.pivots):
            row = self.pivots[lead]
            while True:
                hit = max(
                    (m for m in row if m != lead and m in self.pivots),
                    default=None,
                )
                if hit is None:
                    break
                piv = self.pivots[hit]
                coef = row[hit]
                new: dict[Monomial, Fraction] = {}
                for m in row.keys() | piv.keys():
                    val = row.get(m, Fraction(0)) - coef * piv.get(m, Fraction(0))
                    if val:
                        new[m] = val
                row = new
            self.pivots[lead] = row
        return [self.pivots[lead] for lead in sorted(self.pivots, reverse=True)]


def _poly_to_zrow(f: MultiPoly) -> dict[Monomial, list[int]]:
    denoms = [c.denominator for p in f.terms.values() for c in p.coeffs]
    scale = lcm(*denoms) if denoms else 1
    return {
        m: [int(c * scale) for c in p.coeffs] for m, p in f.terms.items()
    }


def _zrow_to_poly(n: int, row: dict[Monomial, list[int]]) -> MultiPoly:
    return MultiPoly(n, {m: PolyQ(p) for m, p in row.items()})


def _qrow_to_poly(n: int, row: dict[Monomial, Fraction]) -> MultiPoly:
    return MultiPoly(n, dict(row))


@dataclass(frozen=True)
class ModuleBasis:
    """Echelon basis of the cyclic module, with its coefficient matrix.

    `generators` are the basis polynomials in row order; `monomials` label
    the columns of `coefficient_matrix` (descending lex).  `alpha` is None
    for the generic module over Q(alpha), otherwise the specialization
    point.  Each row is weight-homogeneous; `weights` lists the row-degree
    vectors.
    """

    n: int
    l: int
    alpha: Fraction | None
    generators: tuple[MultiPoly, ...]
    monomials: tuple[Monomial, ...]
    coefficient_matrix: PolyMatrix
    weights: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.generators)


def cyclic_closure(
    n: int, l: int, alpha: Fraction | int | None = None, max_size: int | None = None
) -> ModuleBasis:
    """Span of the iterated E_ij images of the l-th alpha-determinant power.

    Starts from adet(X)^l (specialized at alpha when given), repeatedly
    applies every off-diagonal polarization operator E_ij in lex order to
    newly found basis rows, reduces against the current echelon basis, and
    stops when a full sweep adds nothing.  Diagonal operators E_ii act as
    scalars on weight-homogeneous rows and cannot enlarge the span.
    """
    default_cap = (
        DEFAULT_GENERIC_CLOSURE_CAP if alpha is None else DEFAULT_SPECIAL_CLOSURE_CAP
    )
    cap = default_cap if max_size is None else max_size
    if n * l > cap:
        raise CapExceededError(
            f"n*l = {n * l} exceeds the closure cap {cap}; pass max_size to override"
        )
    gen = adet_symbolic(n, max_size=max(n, cap)) ** l
    if alpha is not None:
        gen = gen.eval_alpha(Fraction(alpha))

    generic = alpha is None
    reducer = _PolyRowReducer() if generic else _RationalRowReducer()
    to_row = _poly_to_zrow if generic else (lambda f: dict(f.terms))
    to_poly = (lambda row: _zrow_to_poly(n, row)) if generic else (
        lambda row: _qrow_to_poly(n, row)
    )

    pairs = [
        (i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j
    ]
    queue: deque[MultiPoly] = deque([gen])
    while queue:
        f = queue.popleft()
        if not f:
            continue
        row = reducer.reduce(to_row(f))
        if not row:
            continue
        reducer.insert(row)
        basis_poly = to_poly(row)
        for i, j in pairs:
            queue.append(basis_poly.apply_E(i, j))

    rows = reducer.back_reduce()
    polys = tuple(to_poly(r) for r in rows)
    monomials = tuple(sorted({m for r in rows for m in r}, reverse=True))
    colindex = {m: c for c, m in enumerate(monomials)}
    prows = []
    for r, poly in zip(rows, polys):
        line = [PolyQ.zero()] * len(monomials)
        for m, c in poly.terms.items():
            line[colindex[m]] = c if isinstance(c, PolyQ) else PolyQ.constant(c)
        prows.append(line)
    matrix = (
        PolyMatrix.from_rows(prows)
        if prows
        else PolyMatrix(0, 0, ())
    )
    return ModuleBasis(
        n=n,
        l=l,
        alpha=None if alpha is None else Fraction(alpha),
        generators=polys,
        monomials=monomials,
        coefficient_matrix=matrix,
        weights=tuple(p.weight() for p in polys),
    )


def hwv_multiplicity(basis: ModuleBasis, lam: Partition) -> int:
    """Multiplicity of the highest weight lam in the module: the dimension of
    the joint kernel of all raising operators on the weight-lam rows."""
    n = basis.n
    if lam.length > n:
        return 0
    if lam.size != n * basis.l:
        raise SizeMismatchError(f"|lam| = {lam.size} is not n*l = {n * basis.l}")
    target = tuple(lam.part(i) for i in range(1, n + 1))
    rows = [p for p, w in zip(basis.generators, basis.weights) if w == target]
    w = len(rows)
    if w == 0:
        return 0
    generic = basis.alpha is None
    columns: dict[tuple[int, Monomial], int] = {}
    data: list[dict[int, object]] = [dict() for _ in range(w)]
    for r, poly in enumerate(rows):
        for i in range(1, n):
            raised = poly.apply_E(i, i + 1)
            for m, c in raised.terms.items():
                key = (i, m)
                col = columns.setdefault(key, len(columns))
                data[r][col] = c
    ncols = len(columns)
    if ncols == 0:
        return w
    if generic:
        zrows = []
        for r in range(w):
            line = [[] for _ in range(ncols)]
            for col, c in data[r].items():
                line[col] = [int(x) for x in _clear_polyq(c)]
            zrows.append(line)
        rank, _ = kernels.zpm_rank(zrows)
    else:
        qrows = [
            [data[r].get(col, Fraction(0)) for col in range(ncols)] for r in range(w)
        ]
        rank = rank_q(qrows)
    return w - rank


def _clear_polyq(c: PolyQ) -> list[int]:
    scale = lcm(*(x.denominator for x in c.coeffs)) if c.coeffs else 1
    return [int(x * scale) for x in c.coeffs]


def weight_consistency_check(basis: ModuleBasis) -> bool:
    """sum over admissible lam of multiplicity times Weyl dimension must equal
    the closure dimension."""
    from alphadet.symgrp import admissible_shapes

    total = sum(
        hwv_multiplicity(basis, lam) * weyl_dim(lam, basis.n)
        for lam in admissible_shapes(basis.n, basis.l)
    )
    return total == basis.dim


# ---------------------------------------------------------------------------
# Floating-point quarantine


@dataclass(frozen=True)
class VereJonesResult:
    """Both sides of the truncated power-series identity and the error budget."""

    lhs: float
    rhs: float
    difference: float
    tolerance: float
    tail_bound: float
    spectral_radius: float
    k_max: int

    @property
    def ok(self) -> bool:
        return self.difference <= self.tolerance + self.tail_bound


def _det_q(M: QMatrix) -> Fraction:
    n = len(M)
    mat = [list(row) for row in M]
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if mat[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for i in range(col + 1, n):
            if mat[i][col]:
                c = mat[i][col] * inv
                mat[i] = [a - c * b for a, b in zip(mat[i], mat[col])]
    return det


def vere_jones_check(
    A: QMatrix,
    a: Fraction | int,
    k_max: int = 6,
    tol: float = 1e-9,
) -> VereJonesResult:
    """Compare det(I - a A)^(-1/a) with the truncated series

        sum_{k <= k_max} (1/k!) sum_{i_1..i_k} adet_a(A[(i),(i)]),

    where the inner sum ranges over all index tuples with repetition and
    A[(i),(i)] repeats rows and columns accordingly.  Tuples are grouped by
    multiset (the alpha-determinant is invariant under simultaneous row and
    column permutation), which turns 1/k! into 1/prod(multiplicities!).

    The dropped tail is bounded by sum_{k > k_max} C(nu+k-1, k) q^k with
    nu = n/|a| and q = |a| rho(A): each factor (1 - a lambda z)^(-1/a) of the
    generating function is coefficient-dominated by (1 - q z)^(-1/nu...),
    giving the binomial bound, and the partial sums are compared up to
    tolerance + tail.  Requires rho(a A) < 1 (checked in floating point).
    """
    import numpy as np

    a = Fraction(a)
    if a == 0:
        raise ZeroAlphaError("alpha = 0 is not in the domain of the identity")
    if k_max < 0 or k_max > 6:
        raise ValueError("k_max must lie in 0..6")
    n = len(A)
    if any(len(row) != n for row in A):
        raise SizeMismatchError("matrix is not square")

    rho = float(max(abs(np.linalg.eigvals(np.array(A, dtype=float)))) ) if n else 0.0
    if abs(float(a)) * rho >= 1.0:
        raise SpectralRadiusError(
            f"spectral radius of a*A is {abs(float(a)) * rho:.4f} >= 1"
        )

    eye_minus = [
        [Fraction(int(i == j)) - a * A[i][j] for j in range(n)] for i in range(n)
    ]
    det = _det_q(eye_minus)
    lhs = float(det) ** (-1.0 / float(a))

    rhs_exact = Fraction(0)
    for k in range(k_max + 1):
        for multiset in itertools.combinations_with_replacement(range(n), k):
            sub = [[A[i][j] for j in multiset] for i in multiset]
            mults: dict[int, int] = {}
            for i in multiset:
                mults[i] = mults.get(i, 0) + 1
            weight = prod(factorial(m) for m in mults.values())
            rhs_exact += adet_eval(sub, a) / weight
    rhs = float(rhs_exact)

    q = abs(float(a)) * (rho + 1e-12)
    nu_ = n / abs(float(a))
    ratio = q * max(1.0, (nu_ + k_max + 1) / (k_max + 2))
    if ratio >= 1.0:
        raise SpectralRadiusError(
            f"cannot certify the truncation tail: term ratio {ratio:.4f} >= 1"
        )
    head = q ** (k_max + 1)
    for t in range(k_max + 1):
        head *= (nu_ + t) / (t + 1)
    tail = head / (1.0 - ratio)
    return VereJonesResult(
        lhs=lhs,
        rhs=rhs,
        difference=abs(lhs - rhs),
        tolerance=tol,
        tail_bound=tail,
        spectral_radius=rho,
        k_max=k_max,
    )
