import random

from hypothesis import given, strategies as st

from prodmin.numbers import (GaussRat, ZERO, ONE, IOTA, UNITS,
                             GaussFactorization, canonical_prime, gi_factor,
                             multiplicative_kernel, ord_root_of_unity)
from prodmin.lattice import RelationLattice, lattice_equal, lattice_member

import pytest


gauss = st.builds(GaussRat,
                  st.integers(-50, 50), st.integers(-50, 50),
                  st.integers(1, 50))
gauss_nz = gauss.filter(lambda v: not v.is_zero())


def test_canonical_form():
    v = GaussRat(2, 4, -6)
    assert (v.num_re, v.num_im, v.den) == (-1, -2, 3)
    assert (ZERO.num_re, ZERO.num_im, ZERO.den) == (0, 0, 1)
    with pytest.raises(ZeroDivisionError):
        GaussRat(1, 0, 0)


def test_arith_golden():
    assert GaussRat(1, 1) * GaussRat(1, -1) == GaussRat(2)
    assert IOTA ** 4 == ONE
    assert GaussRat(-13122).inv() == GaussRat(-1, 0, 13122)
    assert GaussRat(-13122) * GaussRat(-13122).inv() == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()


@given(gauss, gauss, gauss)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == ZERO


@given(gauss_nz)
def test_field_axioms(a):
    assert a * a.inv() == ONE
    assert a ** 3 * a ** -3 == ONE
    assert (a ** 2) == a * a
    assert a.conj().conj() == a


def test_ord_root_of_unity():
    assert ord_root_of_unity(ONE) == 1
    assert ord_root_of_unity(GaussRat(-1)) == 2
    assert ord_root_of_unity(IOTA) == 4
    assert ord_root_of_unity(GaussRat(0, -1)) == 4
    assert ord_root_of_unity(GaussRat(2)) == 0
    with pytest.raises(ZeroDivisionError):
        ord_root_of_unity(ZERO)


def test_canonical_prime_first_quadrant():
    for p in [(1, 1), (-1, 1), (2, 1), (-2, -1), (3, 0), (0, 3)]:
        c = canonical_prime(p)
        assert c[0] > 0 and c[1] >= 0
        # all four associates map to the same representative
        a = p
        for _ in range(4):
            a = (-a[1], a[0])
            assert canonical_prime(a) == c


def test_gi_factor_golden():
    f = gi_factor(IOTA)
    assert f.iota_exp == 1 and f.factors == ()
    assert gi_factor(GaussRat(5)).reconstruct() == GaussRat(5)
    assert gi_factor(GaussRat(-162)).reconstruct() == GaussRat(-162)
    with pytest.raises(ZeroDivisionError):
        gi_factor(ZERO)


@given(gauss_nz)
def test_gi_factor_reconstruct(v):
    f = gi_factor(v)
    assert f.reconstruct() == v
    # canonicalization is idempotent
    assert gi_factor(f.reconstruct()) == f


def test_multiplicative_kernel_golden():
    k = multiplicative_kernel([GaussRat(2), GaussRat(4)])
    assert lattice_equal(k, RelationLattice(2, [[2, -1]]))
    k = multiplicative_kernel([GaussRat(-1), IOTA])
    assert lattice_equal(k, RelationLattice(2, [[1, 2], [0, 4]]))
    k = multiplicative_kernel([GaussRat(2), GaussRat(3)])
    assert k.is_zero()


def test_multiplicative_kernel_brute_force():
    pool = [GaussRat(1), GaussRat(-1), IOTA, GaussRat(0, -1), GaussRat(2),
            GaussRat(3), GaussRat(5), GaussRat(1, 1), GaussRat(1, 0, 2)]
    rng = random.Random(42)
    for _ in range(30):
        vs = [rng.choice(pool) for _ in range(rng.randint(2, 3))]
        lat = multiplicative_kernel(vs)
        for row in lat.basis.entries:
            prod = ONE
            for v, e in zip(vs, row):
                prod = prod * v ** e
            assert prod == ONE
        # exhaustive |n_i| <= 3: every true relation is in the lattice
        r = len(vs)
        idx = [0] * r
        span = range(-3, 4)

        def rec(i, acc, vec):
            if i == r:
                assert (acc == ONE) == lattice_member(lat, vec), (vs, vec)
                return
            for n in span:
                rec(i + 1, acc * vs[i] ** n, vec + [n])

        rec(0, ONE, [])
