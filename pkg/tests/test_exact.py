"""Exact scalar/matrix layer: polynomial ring laws, ranks, specialization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alphadet.errors import SingularMatrixError
from alphadet.exact import (
    PolyMatrix,
    PolyQ,
    generic_rank,
    mat_identity,
    mat_inverse,
    mat_mul,
    nullspace_q,
    parse_rational,
    rank_at,
    rank_q,
    solve_exact,
)

A = PolyQ.variable()


def test_parse_rational():
    assert parse_rational("3") == 3
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational(" 7/3 ") == Fraction(7, 3)
    with pytest.raises(ValueError):
        parse_rational("x")
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_polyq_trims_and_degree():
    assert PolyQ([1, 2, 0, 0]).coeffs == (1, 2)
    assert PolyQ().degree == -1
    assert PolyQ([0]).degree == -1
    assert PolyQ([5]).degree == 0
    assert PolyQ.monomial(3).degree == 3
    assert not PolyQ.zero()
    assert PolyQ.one()


def test_polyq_format():
    assert PolyQ([1, -2, Fraction(3, 4)]).format() == "1 - 2*a + 3/4*a^2"
    assert PolyQ.zero().format() == "0"
    assert PolyQ([0, 1]).format() == "a"
    assert PolyQ([0, -1]).format() == "-a"
    assert PolyQ([-1, 0, 2]).format("t") == "-1 + 2*t^2"


def test_polyq_coeff_strings_round_trip():
    p = PolyQ([Fraction(1, 3), -2, 0, 5])
    assert PolyQ.from_coeff_strings(p.coeff_strings()) == p
    assert p.coeff_strings() == ["1/3", "-2", "0", "5"]


def test_polyq_arithmetic_known():
    assert (1 + A) * (1 - A) == 1 - A**2
    assert (1 + A) ** 3 == PolyQ([1, 3, 3, 1])
    assert (2 * A + 1) - (A + 1) == A
    assert A**0 == PolyQ.one()
    p = (1 + A) ** 2
    assert p(3) == 16
    assert p(Fraction(-1, 2)) == Fraction(1, 4)
    assert p.derivative() == 2 * (1 + A)


poly_st = st.builds(
    PolyQ,
    st.lists(st.integers(min_value=-4, max_value=4), min_size=0, max_size=4),
)


@given(poly_st, poly_st, poly_st)
@settings(max_examples=60, deadline=None)
def test_polyq_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p + PolyQ.zero() == p
    assert p * PolyQ.one() == p


@given(poly_st, st.integers(min_value=-3, max_value=3))
@settings(max_examples=60, deadline=None)
def test_polyq_eval_is_hom(p, x):
    q = 1 + 2 * A
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


def test_polymatrix_basics():
    m = PolyMatrix.from_rows([[PolyQ.one(), A], [PolyQ.zero(), 1 - A]])
    assert m.entry(0, 1) == A
    assert m.transpose().entry(1, 0) == A
    assert m.trace() == 2 - A
    assert m.eval_at(2) == [[1, 2], [0, -1]]
    assert PolyMatrix.identity(3).trace() == PolyQ.constant(3)
    with pytest.raises(ValueError):
        PolyMatrix.from_rows([[A], [A, A]])


def test_polymatrix_str():
    m = PolyMatrix.from_rows([[PolyQ.one(), A]])
    assert str(m) == "[ 1  a ]"


def test_generic_rank_known():
    diag = PolyMatrix.from_rows(
        [
            [PolyQ.one(), PolyQ.zero(), PolyQ.zero()],
            [PolyQ.zero(), A, PolyQ.zero()],
            [PolyQ.zero(), PolyQ.zero(), A * (1 - A)],
        ]
    )
    assert generic_rank(diag) == 3
    # second row is a times the first
    dep = PolyMatrix.from_rows([[PolyQ.one(), A], [A, A**2]])
    assert generic_rank(dep) == 1
    assert generic_rank(PolyMatrix.from_rows([[PolyQ.zero()]])) == 0
    assert generic_rank(PolyMatrix(0, 0, ())) == 0


def test_rank_at_drops_on_zero_set():
    m = PolyMatrix.from_rows([[PolyQ.one(), PolyQ.zero()], [PolyQ.zero(), 1 - A]])
    assert generic_rank(m) == 2
    assert rank_at(m, 1) == 1
    assert rank_at(m, 0) == 2
    assert rank_at(m, Fraction(1, 2)) == 2


def test_with_pivots_certifies_specialization():
    m = PolyMatrix.from_rows([[1 + A, PolyQ.one()], [PolyQ.zero(), 1 - A]])
    rank, pivots = generic_rank(m, with_pivots=True)
    assert rank == 2
    for a in (0, 2, Fraction(1, 3)):
        if all(p(a) != 0 for p in pivots):
            assert rank_at(m, a) == rank
    # a pivot vanishes at 1 or -1, and indeed the rank drops there
    assert rank_at(m, 1) == 1
    assert rank_at(m, -1) == 1


entry_st = st.lists(st.integers(min_value=-2, max_value=2), min_size=0, max_size=3)


@given(
    st.integers(min_value=1, max_value=3),
    st.integers(min_value=1, max_value=3),
    st.data(),
)
@settings(max_examples=40, deadline=None)
def test_rank_at_never_exceeds_generic(nr, nc, data):
    rows = [
        [PolyQ(data.draw(entry_st)) for _ in range(nc)] for _ in range(nr)
    ]
    m = PolyMatrix.from_rows(rows)
    g = generic_rank(m)
    assert g <= min(nr, nc)
    for a in (0, 1, -1, Fraction(1, 2)):
        assert rank_at(m, a) <= g


def test_rank_q_and_nullspace():
    rows = [
        [Fraction(1), Fraction(2), Fraction(3)],
        [Fraction(2), Fraction(4), Fraction(6)],
    ]
    assert rank_q(rows) == 1
    basis = nullspace_q(rows)
    assert len(basis) == 2
    for vec in basis:
        assert all(
            sum(r[j] * vec[j] for j in range(3)) == 0 for r in rows
        )
    assert nullspace_q([], ncols=2) == [[1, 0], [0, 1]]


def test_solve_and_inverse():
    A2 = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]]
    inv = mat_inverse(A2)
    assert mat_mul(A2, inv) == mat_identity(2)
    x = solve_exact(A2, [[Fraction(3)], [Fraction(2)]])
    assert x == [[Fraction(1)], [Fraction(1)]]
    with pytest.raises(SingularMatrixError):
        solve_exact([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]], mat_identity(2))
