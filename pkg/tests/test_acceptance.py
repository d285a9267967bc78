"""Acceptance gate: one test per criterion, each printing a pass/fail line."""

import random
import time

from prodmin.numbers import GaussRat
from prodmin.poly import Poly, RatFunc, P_ONE
from prodmin.lattice import (IntMat, RelationLattice, lattice_equal,
                             lattice_member, smith_normal_form)
from prodmin.sigmafact import radical_solve, sigma_quotient_solve
from prodmin.drring import ProductSpec
from prodmin.pipeline import (input_to_alphas, minimal_representation,
                              relation_module)
from prodmin.cli import parse_expr
from prodmin.verify import (check_commutes, check_kernel,
                            check_relation_candidate)

from genspecs import random_spec
import refdata as rd
from test_lattice import minors_gcd


def report(num, label, ok):
    print(f"criterion {num} ({label}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num} ({label}) failed"


def test_criterion_1_worked_example_end_to_end():
    t0 = time.monotonic()
    spec = rd.ref_spec()
    rep = minimal_representation(spec)
    r = rep.report
    ok = lattice_equal(r["m_basis"], RelationLattice(4, rd.Z_REF))
    ok = ok and r["divisors"] == [1, 2]
    ok = ok and len(rep.extension.pi_monomials) == 2
    ok = ok and rep.extension.r_monomial == (GaussRat(-1), 2)
    ok = ok and r["constants"] == [GaussRat(1, 0, 400),
                                   GaussRat(1, 0, 4199040)]
    kern = RelationLattice(4, [list(e) for e, _ in rep.kernel_gens])
    ok = ok and lattice_equal(kern, r["m_basis"])
    ok = ok and [g for _, g in rep.kernel_gens] == \
        [parse_expr(rd.E1[1]), parse_expr(rd.E2[1])]
    ok = ok and check_commutes(spec, rep, 50).passed
    ok = ok and check_kernel(spec, rep.kernel_gens, 50).passed
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 2.0
    report(1, f"worked example end-to-end, {elapsed:.2f}s", ok)


def test_criterion_2_pinned_transforms_verbatim():
    rep = minimal_representation(rd.ref_spec(), z_basis=rd.Z_REF,
                                 snf=rd.ref_snf())
    ok = True
    for name, (coef_s, exps, zpow) in rd.IMAGE_STRINGS.items():
        terms = rep.images[name].terms
        ok = ok and len(terms) == 1
        coef, e, z = terms[0]
        ok = ok and coef == parse_expr(coef_s) and e == exps and z == zpow
    for (exps, g), (exps_ref, g_s) in zip(rep.kernel_gens, [rd.E1, rd.E2]):
        ok = ok and exps == exps_ref and g == parse_expr(g_s)
    report(2, "pinned transforms reproduce reference output", ok)


def test_criterion_3_substage_goldens():
    g = sigma_quotient_solve(parse_expr("(k+6)^2/(k+4)^2"))
    ok = g is not None and (g / parse_expr("(k+4)^2*(k+5)^2")).is_constant()
    res = radical_solve(parse_expr(rd.ALPHA_STRINGS[1]), 2)
    ok = ok and res is not None
    if res is not None:
        rho, gbar = res
        ok = ok and rho == GaussRat(-1)
        ok = ok and (gbar / parse_expr(rd.GBAR2)).is_constant()
    report(3, "sub-stage goldens", ok)


def test_criterion_4_random_specs():
    t0 = time.monotonic()
    rng = random.Random(2024)
    ok = True
    for trial in range(200):
        spec = random_spec(rng, max_r=5)
        r = len(spec)
        rep = minimal_representation(spec)
        u = rep.report["rank"]
        ok = ok and len(rep.extension.pi_monomials) == r - u
        ok = ok and all(d in (1, 2, 4) for d in rep.report["divisors"])
        ok = ok and check_commutes(spec, rep, None).passed  # 40 values
        ok = ok and check_kernel(spec, rep.kernel_gens).passed
        m_lat = rep.report["m_basis"]
        for row in m_lat.basis.entries:
            member, witness = check_relation_candidate(spec, tuple(row), m_lat)
            ok = ok and member and witness is not None
        kern = RelationLattice(r, [list(e) for e, _ in rep.kernel_gens])
        ok = ok and lattice_equal(kern, m_lat)
        if trial < 20:
            # a vector outside the lattice must be rejected
            for _ in range(50):
                v = [rng.randint(-3, 3) for _ in range(r)]
                if not lattice_member(m_lat, v):
                    member, witness = check_relation_candidate(spec, tuple(v),
                                                               m_lat)
                    ok = ok and not member and witness is None
                    break
        if not ok:
            break
    elapsed = time.monotonic() - t0
    ok = ok and elapsed < 60.0
    report(4, f"200 random specifications, {elapsed:.1f}s", ok)


def test_criterion_5_random_smith_forms():
    rng = random.Random(77)
    ok = True
    for _ in range(100):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        z = IntMat(rows, cols, [[rng.randint(-9, 9) for _ in range(cols)]
                                for _ in range(rows)])
        s = smith_normal_form(z)
        ok = ok and s.a.mul(z).mul(s.b) == s.d
        ok = ok and abs(s.a.det()) == 1 and abs(s.b.det()) == 1
        ds = s.divisors
        ok = ok and all(b % a == 0 for a, b in zip(ds, ds[1:]))
        prev = 1
        for k in range(1, min(rows, cols) + 1):
            g = minors_gcd(z, k)
            if k <= len(ds):
                ok = ok and g == prev * ds[k - 1]
                prev = g
            else:
                ok = ok and g == 0
        if not ok:
            break
    report(5, "100 random Smith normal forms", ok)


def test_criterion_6_minimal_edge_cases():
    spec = ProductSpec([("S", parse_expr("-1"), 1)])
    rep = minimal_representation(spec)
    ok = rep.extension.r_monomial == (GaussRat(-1), 2)
    ok = ok and rep.extension.pi_monomials == ()
    ok = ok and len(rep.kernel_gens) == 1
    exps, g = rep.kernel_gens[0]
    ok = ok and exps == (2,) and g == RatFunc(P_ONE)  # xhat^2 - 1
    ok = ok and check_commutes(spec, rep, 50).passed
    ok = ok and check_kernel(spec, rep.kernel_gens, 50).passed

    spec = ProductSpec([("P", parse_expr("2"), 1), ("Q", parse_expr("4"), 1)])
    rep = minimal_representation(spec)
    ok = ok and rep.extension.r_monomial is None
    ok = ok and len(rep.extension.pi_monomials) == 1
    ok = ok and len(rep.kernel_gens) == 1
    exps, g = rep.kernel_gens[0]
    ok = ok and exps in ((2, -1), (-2, 1)) and g == RatFunc(P_ONE)
    ok = ok and check_commutes(spec, rep, 50).passed
    ok = ok and check_kernel(spec, rep.kernel_gens, 50).passed
    report(6, "order-2 root and pure Pi edge cases", ok)
