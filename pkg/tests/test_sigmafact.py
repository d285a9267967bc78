import random

import pytest

from prodmin.numbers import GaussRat, ONE
from prodmin.poly import Poly, RatFunc, P_ONE, X, dispersion_set, gcd_monic
from prodmin.sigmafact import (OrbitDecomposition, joint_orbit_decompose,
                               orbit_decompose, radical_solve,
                               sigma_quotient_solve)

from genspecs import random_ratfunc


def lin(c):
    return Poly.x_plus(GaussRat(c))


def rf(num, den=P_ONE, unit=ONE):
    return RatFunc(num, den, unit)


def sigma_quot(g):
    return g.shift(1) / g


def test_orbit_golden_single_orbit():
    f = rf(lin(1) * lin(3), lin(6), GaussRat(-162))
    dec = orbit_decompose(f)
    assert dec.unit == GaussRat(-162)
    assert len(dec.atoms) == 1
    h, exps = dec.atoms[0]
    assert h == lin(1)
    assert exps == {0: 1, 2: 1, 5: -1}
    assert dec.expand() == f


def test_orbit_golden_trivial_and_reference():
    dec = orbit_decompose(rf(P_ONE))
    assert dec.unit == ONE and dec.atoms == ()
    dec = orbit_decompose(rf(lin(6) ** 2, lin(4) ** 2))
    assert len(dec.atoms) == 1
    h, exps = dec.atoms[0]
    assert h == lin(4) and exps == {0: -2, 2: 2}


def test_orbit_reconstruction_random():
    rng = random.Random(9)
    for _ in range(40):
        fs = [random_ratfunc(rng, 3) for _ in range(rng.randint(1, 3))]
        atoms, decomps = joint_orbit_decompose(fs)
        for f, (unit, by_atom) in zip(fs, decomps):
            rebuilt = OrbitDecomposition(
                unit, [(atoms[a], e) for a, e in by_atom.items()])
            assert rebuilt.expand() == f
        # atoms pairwise shift-coprime; min recorded shift is 0 per atom
        for i in range(len(atoms)):
            for j in range(len(atoms)):
                for s in dispersion_set(atoms[i], atoms[j]):
                    if i == j and s == 0:
                        continue
                    assert gcd_monic(atoms[i], atoms[j].shift(s)).degree() < 1 \
                        or atoms[i] == atoms[j].shift(s)
        for _, by_atom in decomps:
            for a, exps in by_atom.items():
                assert all(e != 0 for e in exps.values())


def test_sigma_quotient_golden():
    w = rf(lin(6) ** 2, lin(4) ** 2)
    g = sigma_quotient_solve(w)
    assert g is not None and sigma_quot(g) == w
    ratio = g / rf(lin(4) ** 2 * lin(5) ** 2)
    assert ratio.is_constant()

    g = sigma_quotient_solve(rf(lin(1), X))
    assert g is not None and sigma_quot(g) == rf(lin(1), X)
    assert (g / rf(X)).is_constant()

    assert sigma_quotient_solve(rf(P_ONE, P_ONE, GaussRat(2))) is None
    with pytest.raises(ZeroDivisionError):
        sigma_quotient_solve(RatFunc(Poly([])))


def test_sigma_quotient_completeness_random():
    rng = random.Random(13)
    for _ in range(40):
        g = RatFunc(P_ONE)
        for _ in range(rng.randint(1, 3)):
            c = rng.randint(-5, 5)
            e = rng.randint(-3, 3)
            if e:
                g = g * rf(lin(c)) ** e
        if g.is_constant():
            continue
        w = sigma_quot(g)
        g2 = sigma_quotient_solve(w)
        assert g2 is not None
        assert sigma_quot(g2) == w
        assert (g / g2).is_constant()


def test_sigma_quotient_none_on_nonzero_orbit_sum():
    # (x+1)^2/x has orbit sum 1 != 0
    assert sigma_quotient_solve(rf(lin(1) ** 2, X)) is None


def test_radical_solve_reference():
    a = rf(lin(4) ** 7 * lin(6),
           lin(1) ** 2 * lin(2) ** 3 * lin(3) ** 3, GaussRat(-1))
    res = radical_solve(a, 2)
    assert res is not None
    rho, g = res
    assert rho == GaussRat(-1)
    assert sigma_quot(g) == a * rho
    expected = rf(lin(1) ** 2 * lin(2) ** 5 * lin(3) ** 8 * lin(4) * lin(5))
    assert (g / expected).is_constant()


def test_radical_solve_small():
    res = radical_solve(rf(P_ONE, P_ONE, GaussRat(-1)), 2)
    assert res is not None
    rho, g = res
    assert rho == GaussRat(-1) and g.is_constant()
    # m = 1 degenerates to sigma_quotient_solve
    w = rf(lin(6) ** 2, lin(4) ** 2)
    res = radical_solve(w, 1)
    assert res is not None and res[0] == ONE
    assert sigma_quot(res[1]) == w
    assert radical_solve(rf(P_ONE, P_ONE, GaussRat(2)), 4) is None


def test_radical_solve_defining_equation_random():
    rng = random.Random(17)
    units = [ONE, GaussRat(-1), GaussRat(0, 1), GaussRat(0, -1)]
    for _ in range(25):
        g = RatFunc(P_ONE)
        for _ in range(rng.randint(0, 2)):
            e = rng.randint(-2, 2)
            if e:
                g = g * rf(lin(rng.randint(-4, 4))) ** e
        rho = rng.choice(units)
        m = rng.choice([1, 2, 4])
        if not (rho ** m).is_one():
            continue
        a = sigma_quot(g) / rho
        res = radical_solve(a, m)
        assert res is not None
        rho2, g2 = res
        assert (rho2 ** m).is_one()
        assert sigma_quot(g2) == a * rho2
