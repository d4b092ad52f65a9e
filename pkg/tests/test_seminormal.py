"""Seminormal representations: defining relations, characters, invariants."""

import itertools
from fractions import Fraction

import pytest

from alphadet.errors import CapExceededError
from alphadet.exact import mat_mul
from alphadet.seminormal import (
    build_rep,
    invariant_basis,
    rep_of,
    standard_tableaux,
)
from alphadet.symgrp import Partition, Permutation, character, dim_f, kostka


def all_perms(m):
    return [Permutation(p) for p in itertools.permutations(range(1, m + 1))]


def test_standard_tableaux_counts():
    for parts in [(3,), (2, 1), (2, 2), (3, 2), (2, 2, 1), (4, 1)]:
        lam = Partition(parts)
        tabs = standard_tableaux(lam)
        assert len(tabs) == dim_f(lam)
        assert len(set(tabs)) == len(tabs)
        # every tableau is standard: rows and columns increase
        for t in tabs:
            for row in t:
                assert list(row) == sorted(row)
            for i in range(len(t) - 1):
                for j in range(len(t[i + 1])):
                    assert t[i][j] < t[i + 1][j]


def test_generator_relations():
    for parts in [(2, 1), (2, 2), (3, 1), (2, 2, 1)]:
        rep = build_rep(Partition(parts))
        m = rep.size
        gens = [rep.generator_matrix(k) for k in range(1, m)]
        f = rep.dim
        eye = [[Fraction(int(i == j)) for j in range(f)] for i in range(f)]
        for g in gens:
            assert mat_mul(g, g) == eye
        for k in range(len(gens) - 1):
            a, b = gens[k], gens[k + 1]
            assert mat_mul(mat_mul(a, b), a) == mat_mul(mat_mul(b, a), b)
        for k1 in range(len(gens)):
            for k2 in range(k1 + 2, len(gens)):
                a, b = gens[k1], gens[k2]
                assert mat_mul(a, b) == mat_mul(b, a)


def test_rep_of_is_right_action():
    rep = build_rep(Partition((3, 2)))
    for g in all_perms(5)[:40]:
        for h in all_perms(5)[:10]:
            left = rep_of(rep, g * h)
            right = mat_mul(rep_of(rep, h), rep_of(rep, g))
            assert left == right
    ident = Permutation.identity(5)
    f = rep.dim
    assert rep_of(rep, ident) == [
        [Fraction(int(i == j)) for j in range(f)] for i in range(f)
    ]


def test_trace_equals_character():
    for parts in [(3,), (2, 1), (1, 1, 1), (2, 2), (3, 1)]:
        lam = Partition(parts)
        rep = build_rep(lam)
        for g in all_perms(lam.size):
            tr = sum(rep_of(rep, g)[i][i] for i in range(rep.dim))
            assert tr == character(lam, g.cycle_type())


def test_gram_makes_generators_selfadjoint():
    for parts in [(2, 1), (2, 2), (3, 2)]:
        rep = build_rep(Partition(parts))
        gamma = rep.gram
        assert all(w > 0 for w in gamma)
        for k in range(1, rep.size):
            M = rep.generator_matrix(k)
            for i in range(rep.dim):
                for j in range(rep.dim):
                    assert gamma[i] * M[i][j] == M[j][i] * gamma[j]


def test_invariant_basis_dims():
    cases = [((4,), 2, 2), ((3, 1), 2, 2), ((2, 2), 2, 2), ((4, 2), 3, 2), ((5, 1), 3, 2)]
    for parts, n, l in cases:
        lam = Partition(parts)
        rep = build_rep(lam)
        basis = invariant_basis(rep, n, l)
        assert basis.d == kostka(lam, n, l)
    # more rows than n: empty fixed space
    rep = build_rep(Partition((1, 1, 1, 1)))
    assert invariant_basis(rep, 2, 2).d == 0


def test_invariant_basis_is_fixed_by_row_group():
    n, l = 2, 3
    lam = Partition((4, 2))
    rep = build_rep(lam)
    basis = invariant_basis(rep, n, l)
    B = basis.column_matrix()
    # row generators: adjacent transpositions inside each block row
    for i in range(1, n + 1):
        for t in range((i - 1) * l + 1, i * l):
            M = rep.generator_matrix(t)
            assert mat_mul(M, B) == B


def test_rep_cap():
    with pytest.raises(CapExceededError):
        build_rep(Partition((13,)))
    build_rep(Partition((13,)), max_size=13)
