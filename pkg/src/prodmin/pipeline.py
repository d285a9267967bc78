"""End-to-end minimal product representation: relation module -> Smith
normal form -> generator transformation mu -> special-case construction of
lambda with constants fitted from sequence data -> minimal R-Pi-extension,
images, kernel generators."""

from __future__ import annotations

from .numbers import ONE, gi_factor, ord_root_of_unity
from .poly import RatFunc
from .lattice import (IntMat, RelationLattice, SnfResult, lattice_equal,
                      smith_normal_form)
from .sigmafact import joint_orbit_decompose, radical_solve
from .drring import (LaurentExpr, RPiExtension, eval_product,
                     eval_ratfunc, eval_rpi, product_lower_bound, z_function)


class PipelineError(ArithmeticError):
    """Internal consistency violation (contradicts the ground-field theory)."""


def input_to_alphas(spec):
    """alpha_i = f_i(x+1), the sigma-quotients of the product generators."""
    return [f.shift(1) for _, f, _ in spec.products]


def relation_module(alphas):
    """Lattice { n : prod alpha_i^n_i = sigma(g)/g for some g in Q(i)(x)* }.

    The polynomial part contributes one linear condition per shift orbit
    (summed exponents must vanish); the constant content contributes the
    multiplicative lattice of the units with the mod-4 iota congruence."""
    if any(a.is_zero() for a in alphas):
        raise ZeroDivisionError("zero alpha")
    r = len(alphas)
    atoms, decomps = joint_orbit_decompose(alphas)
    facts = [gi_factor(unit) for unit, _ in decomps]
    primes = sorted({p for f in facts for p, _ in f.factors},
                    key=lambda p: (p[0] * p[0] + p[1] * p[1], p[0], p[1]))
    pcol = {p: j for j, p in enumerate(primes)}
    cols = len(atoms) + len(primes)
    rows = []
    for i in range(r):
        unit, by_atom = decomps[i]
        row = [0] * cols
        for a_idx, exps in by_atom.items():
            row[a_idx] = sum(exps.values())
        for p, e in facts[i].factors:
            row[len(atoms) + pcol[p]] = e
        rows.append(row)
    m = IntMat(r, cols, rows)
    t = [f.iota_exp for f in facts]
    from .lattice import kernel_with_congruence
    return kernel_with_congruence(m, t, 4)


def transform_generators(alphas, snf):
    """alpha_i = prod_j alphahat_j^{btilde_ij} for the rows of B^-1."""
    r = len(alphas)
    binv = snf.b_inv
    out = []
    for i in range(r):
        acc = RatFunc.const(ONE)
        for j in range(r):
            e = binv.entries[i][j]
            if e:
                acc = acc * alphas[j] ** e
        out.append(acc)
    return out


def build_mu(snf):
    """Monomial-exponent maps of the isomorphism mu and its inverse:
    mu sends exponent vector n (in xhat) to n*B, mu_inv sends m to m*B^-1."""
    b = snf.b
    binv = snf.b_inv
    r = b.rows

    def mu(n):
        return tuple(sum(n[i] * b.entries[i][j] for i in range(r))
                     for j in range(r))

    def mu_inv(m):
        return tuple(sum(m[i] * binv.entries[i][j] for i in range(r))
                     for j in range(r))

    return mu, mu_inv


def _normalize_transforms(snf, alphas_hat):
    """Deterministic canonicalization of the non-unique SNF transforms.

    Each torsion row of B^-1 is size-reduced against the earlier ones
    (allowed since d_j | d_i for j < i), then its sign is fixed so that the
    radical certificate gbar is a polynomial rather than a reciprocal
    (ties: first nonzero entry positive).  A, B, B^-1 are updated together
    so A*Z*B = D and B*B^-1 = I are preserved."""
    divs = snf.divisors
    u = len(divs)
    r = snf.b.rows
    a = snf.a.tolists()
    b = snf.b.tolists()
    binv = snf.b_inv.tolists()

    def row_add(i, j, c):  # binv row_i += c * binv row_j
        for k in range(r):
            binv[i][k] += c * binv[j][k]
        for k in range(r):
            b[k][j] -= c * b[k][i]
        q = c * (divs[i] // divs[j])
        for k in range(u):
            a[i][k] += q * a[j][k]

    def flip(i):
        binv[i] = [-x for x in binv[i]]
        for k in range(r):
            b[k][i] = -b[k][i]
        a[i] = [-x for x in a[i]]

    for i in range(u):
        for j in range(i):
            nn = sum(x * x for x in binv[j])
            dot = sum(binv[i][k] * binv[j][k] for k in range(r))
            c = (2 * dot + nn) // (2 * nn)  # rounded Gram coefficient
            if c:
                row_add(i, j, -c)
        alpha = RatFunc.const(ONE)
        for k in range(r):
            if binv[i][k]:
                alpha = alpha * alphas_hat[k] ** binv[i][k]
        res = radical_solve(alpha, divs[i])
        if res is not None:
            g = res[1]
            delta = g.num.degree() - g.den.degree()
            if delta < 0:
                flip(i)
            elif delta == 0:
                first = next((x for x in binv[i] if x), 0)
                if first < 0:
                    flip(i)
    return SnfResult(IntMat(u, u, a), IntMat(r, r, b),
                     IntMat(r, r, binv), snf.d)


class SpecialCase:
    """Output of the special-case construction for diag(d_1..d_u) lattices."""

    __slots__ = ("gbars", "rhos", "nus", "rho", "order")

    def __init__(self, gbars, rhos, nus, rho, order):
        self.gbars = list(gbars)
        self.rhos = list(rhos)
        self.nus = list(nus)
        self.rho = rho
        self.order = order


def special_case_construct(alphas_t, divisors):
    """Solve sigma(gbar_i) = rho_i * alpha_i * gbar_i for the torsion part.

    Requires the relation lattice of alphas_t to be diag(d_1..d_u) padded
    with zeros; d = d_u, rho = rho_u, nu_i with rho^{nu_i} = rho_i."""
    u = len(divisors)
    d = divisors[-1] if u else 1
    gbars, rhos = [], []
    for i in range(u):
        res = radical_solve(alphas_t[i], divisors[i])
        if res is None:
            raise PipelineError(
                f"no radical solution for generator {i + 1} at order "
                f"{divisors[i]} (contradicts radical-stability)")
        rho_i, g_i = res
        if ord_root_of_unity(rho_i) != divisors[i]:
            raise PipelineError(
                f"ord(rho_{i + 1}) = {ord_root_of_unity(rho_i)} "
                f"!= d_{i + 1} = {divisors[i]}")
        rhos.append(rho_i)
        gbars.append(g_i)
    rho = rhos[-1] if u else ONE
    nus = []
    for rho_i in rhos:
        nu = next(k for k in range(d) if rho ** k == rho_i)
        nus.append(nu)
    return SpecialCase(gbars, rhos, nus, rho, d)


def _tau_generator(spec, binv_row, n):
    """Value at n of the transformed generator prod_j F_j(n)^{btilde_j}."""
    acc = ONE
    for j, e in enumerate(binv_row):
        if e:
            _, f, lower = spec.products[j]
            acc = acc * eval_product((f, lower), n) ** e
    return acc


def _fit_point(spec, extras):
    n0 = 1
    for _, f, lower in spec.products:
        n0 = max(n0, lower, z_function(f))
    for f in extras:
        n0 = max(n0, z_function(f))
    return n0 + 1


def fit_constants(spec, snf, sc):
    """c_i with tau(x_i)(n) = c_i * rho^{n(d - nu_i)} * ev(gbar_i, n)."""
    u = len(sc.gbars)
    alphas_hat = input_to_alphas(spec)
    n0 = _fit_point(spec, alphas_hat + sc.gbars)
    d = sc.order
    cs = []
    for i in range(u):
        row = snf.b_inv.entries[i]
        e = d - sc.nus[i]
        vals = []
        for n in range(n0, n0 + 6):
            gv = eval_ratfunc(sc.gbars[i], n)
            if gv.is_zero():
                raise PipelineError(f"gbar_{i + 1} vanishes at fit point {n}")
            zv = sc.rho ** ((n * e) % d) if d > 1 else ONE
            vals.append(_tau_generator(spec, row, n) / (gv * zv))
        if any(v != vals[0] for v in vals[1:]):
            raise PipelineError(f"constant fit for c_{i + 1} is not constant")
        if vals[0].is_zero():
            raise PipelineError(f"fitted c_{i + 1} is zero")
        cs.append(vals[0])
    return cs


def compute_kappa(spec, snf, ext, u):
    """kappa per Pi-monomial: the constant ratio between the transformed
    product sequence and the extension's plain generator evaluation."""
    alphas_hat = input_to_alphas(spec)
    n0 = _fit_point(spec, alphas_hat + [a for a, _ in ext.pi_monomials])
    n0 = max(n0, max((l for _, l in ext.pi_monomials), default=1) + 1)
    kappas = []
    for t in range(len(ext.pi_monomials)):
        row = snf.b_inv.entries[u + t]
        vals = []
        for n in range(n0, n0 + 6):
            gv = eval_rpi(ext, t, n)
            if gv.is_zero():
                raise PipelineError(f"Pi-generator {t + 1} vanishes at n={n}")
            vals.append(_tau_generator(spec, row, n) / gv)
        if any(v != vals[0] for v in vals[1:]):
            raise PipelineError(f"kappa fit for generator {t + 1} not constant")
        kappas.append(vals[0])
    return kappas


class MinimalRepresentation:
    """Extension, single-monomial images per input product, kernel
    generators (exps, g) and a diagnostics report."""

    __slots__ = ("extension", "images", "kernel_gens", "report")

    def __init__(self, extension, images, kernel_gens, report):
        self.extension = extension
        self.images = dict(images)
        self.kernel_gens = list(kernel_gens)
        self.report = dict(report)


def minimal_representation(spec, z_basis=None, snf=None):
    """Full composition of the pipeline.

    `z_basis` and `snf` may pin an alternative basis matrix of the relation
    lattice and its Smith decomposition (both validated); by default the
    canonical HNF basis and the deterministic SNF are used."""
    r = len(spec)
    if r == 0:
        raise ValueError("empty product specification")
    alphas_hat = input_to_alphas(spec)
    m_lat = relation_module(alphas_hat)

    if m_lat.is_zero():
        ext = RPiExtension(
            [(alphas_hat[i], spec.products[i][2]) for i in range(r)], None)
        images = {}
        for i, name in enumerate(spec.names):
            exps = tuple(1 if j == i else 0 for j in range(r))
            images[name] = LaurentExpr.monomial(RatFunc.const(ONE), exps, 0)
        report = {"rank": 0, "divisors": [], "snf": None, "m_basis": m_lat,
                  "constants": [], "kappas": [ONE] * r, "rho": None,
                  "nus": [], "gbars": []}
        return MinimalRepresentation(ext, images, [], report)

    if z_basis is None:
        z = m_lat.basis
    else:
        z = z_basis if isinstance(z_basis, IntMat) else \
            IntMat(len(z_basis), r, z_basis)
        if not lattice_equal(RelationLattice(r, z.tolists()), m_lat):
            raise ValueError("pinned basis does not span the relation lattice")
    if snf is None:
        snf = _normalize_transforms(smith_normal_form(z), alphas_hat)
    else:
        if snf.a.mul(z).mul(snf.b) != snf.d:
            raise ValueError("pinned transforms do not satisfy A*Z*B = D")
        if snf.b.mul(snf.b_inv) != IntMat.identity(r):
            raise ValueError("pinned B inverse is wrong")
    u = z.rows
    divisors = snf.divisors
    if len(divisors) != u:
        raise PipelineError("Smith normal form lost rank")
    d = divisors[-1]

    alphas_t = transform_generators(alphas_hat, snf)
    # the transformed lattice must be diag(d_1..d_u) padded with zeros
    diag = RelationLattice(r, [[divisors[i] if j == i else 0
                                for j in range(r)] for i in range(u)])
    if not lattice_equal(relation_module(alphas_t), diag):
        raise PipelineError("transformed relation lattice is not diagonal")

    sc = special_case_construct(alphas_t, divisors)
    pi = [(alphas_t[j], product_lower_bound(alphas_t[j]))
          for j in range(u, r)]
    ext = RPiExtension(pi, (sc.rho, d) if d > 1 else None)
    cs = fit_constants(spec, snf, sc)
    kappas = compute_kappa(spec, snf, ext, u)

    b = snf.b
    images = {}
    for i, name in enumerate(spec.names):
        gamma = RatFunc.const(ONE)
        for j in range(u):
            e = b.entries[i][j]
            if e:
                gamma = gamma * (RatFunc.const(cs[j]) * sc.gbars[j]) ** e
        kfold = ONE
        for j in range(u, r):
            e = b.entries[i][j]
            if e:
                kfold = kfold * kappas[j - u] ** e
        gamma = gamma * kfold
        o_i = 0
        if d > 1:
            o_i = sum((d - sc.nus[j]) * b.entries[i][j]
                      for j in range(u)) % d
        exps = tuple(b.entries[i][j] for j in range(u, r))
        images[name] = LaurentExpr.monomial(gamma, exps, o_i)

    kernel_gens = []
    for i in range(u):
        exps = tuple(divisors[i] * snf.b_inv.entries[i][j] for j in range(r))
        g = (RatFunc.const(cs[i]) * sc.gbars[i]) ** divisors[i]
        kernel_gens.append((exps, g))

    report = {"rank": u, "divisors": divisors, "snf": snf, "m_basis": m_lat,
              "constants": cs, "kappas": kappas,
              "rho": sc.rho if d > 1 else None, "nus": sc.nus,
              "gbars": sc.gbars}
    return MinimalRepresentation(ext, images, kernel_gens, report)
