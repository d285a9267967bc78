"""Shared randomized-input generators for the property and acceptance
suites: multiplicands assembled from factors (x+c)^e with c in [0,6],
|e| <= 3 and units from {1, -1, I, -I, 2, 3, 5}."""

import random

from prodmin.numbers import GaussRat
from prodmin.poly import Poly, RatFunc, integer_roots
from prodmin.drring import ProductSpec

UNIT_POOL = [GaussRat(1), GaussRat(-1), GaussRat(0, 1), GaussRat(0, -1),
             GaussRat(2), GaussRat(3), GaussRat(5)]


def random_multiplicand(rng):
    f = RatFunc.const(rng.choice(UNIT_POOL))
    for _ in range(rng.randint(1, 3)):
        c = rng.randint(0, 6)
        e = rng.randint(-3, 3)
        if e:
            f = f * RatFunc(Poly.x_plus(GaussRat(c))) ** e
    return f


def spec_lower(f):
    """Lower bound 1 adjusted past all nonnegative roots/poles of f."""
    p = f.num * f.den
    roots = [t for t in integer_roots(p) if t >= 0] if p.degree() > 0 else []
    return max(roots) + 1 if roots else 1


def random_spec(rng, max_r=5):
    r = rng.randint(1, max_r)
    prods = []
    for i in range(r):
        f = random_multiplicand(rng)
        prods.append((f"P{i}", f, spec_lower(f)))
    return ProductSpec(prods)


def random_gaussrat(rng, bound=30):
    while True:
        re = rng.randint(-bound, bound)
        im = rng.randint(-bound, bound)
        if re or im:
            return GaussRat(re, im, rng.randint(1, bound))


def random_poly(rng, max_deg=3, bound=6):
    while True:
        coeffs = [GaussRat(rng.randint(-bound, bound),
                           rng.randint(-bound, bound))
                  for _ in range(rng.randint(1, max_deg + 1))]
        p = Poly(coeffs)
        if not p.is_zero():
            return p


def random_ratfunc(rng, max_deg=3):
    num = random_poly(rng, max_deg)
    while True:
        den = random_poly(rng, max_deg)
        if not den.is_zero():
            return RatFunc(num, den, random_gaussrat(rng, 9))
