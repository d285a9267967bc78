"""Independent numeric checking of a minimal representation against the
input products: the commuting diagram, kernel-generator vanishing and
relation-candidate membership with sigma-quotient witnesses."""

from __future__ import annotations

from .numbers import ONE
from .poly import RatFunc, P_ONE
from .lattice import lattice_member
from .sigmafact import sigma_quotient_solve
from .drring import (eval_laurent, eval_product, eval_ratfunc, eval_rpi,
                     o_function, product_lower_bound, z_function)
from .pipeline import input_to_alphas


class CheckResult:
    """One checked item: the n-range, pass flag and first failing n."""

    __slots__ = ("label", "first_n", "last_n", "passed", "first_fail")

    def __init__(self, label, first_n, last_n, passed, first_fail=None):
        self.label = label
        self.first_n = first_n
        self.last_n = last_n
        self.passed = passed
        self.first_fail = first_fail

    def __repr__(self):
        state = "pass" if self.passed else f"FAIL at n={self.first_fail}"
        return (f"CheckResult({self.label}: n in "
                f"[{self.first_n}, {self.last_n}], {state})")


class VerifyReport:
    """Per-product and per-kernel-generator results; passes iff all do."""

    __slots__ = ("products", "kernel")

    def __init__(self, products=(), kernel=()):
        self.products = list(products)
        self.kernel = list(kernel)

    @property
    def passed(self):
        return all(c.passed for c in self.products + self.kernel)

    def __repr__(self):
        return (f"VerifyReport(passed={self.passed}, "
                f"products={self.products}, kernel={self.kernel})")


def _commute_start(spec, rep):
    """Smallest n from which every evaluation involved is defined and the
    generator sequences are nonzero."""
    n0 = 1
    for _, _, lower in spec.products:
        n0 = max(n0, lower)
    for alpha, lower in rep.extension.pi_monomials:
        n0 = max(n0, lower, product_lower_bound(alpha))
    for expr in rep.images.values():
        for coef, _, _ in expr.terms:
            if not coef.is_zero():
                n0 = max(n0, z_function(coef))
    return n0


def check_commutes(spec, rep, n_max=None):
    """eval_product(spec_i, n) == eval_laurent(images[i], ext, n) for all
    n in [N0, n_max], exactly."""
    n0 = _commute_start(spec, rep)
    if n_max is None:
        n_max = n0 + 40
    if n_max < n0:
        raise ValueError(f"n_max = {n_max} below starting bound {n0}")
    cache = {}
    # incremental generator values: gen(n+1) = gen(n) * ev(alpha, n)
    ext = rep.extension
    for i, (alpha, _) in enumerate(ext.pi_monomials):
        v = eval_rpi(ext, i, n0)
        cache[(i, n0)] = v
        for n in range(n0 + 1, n_max + 1):
            v = v * eval_ratfunc(alpha, n - 1)
            cache[(i, n)] = v
    results = []
    for name, f, lower in spec.products:
        expr = rep.images[name]
        first_fail = None
        fval = None
        for n in range(n0, n_max + 1):
            if fval is None:
                fval = eval_product((f, lower), n)
            else:
                fval = fval * eval_ratfunc(f, n)  # incremental product
            if eval_laurent(expr, rep.extension, n, cache) != fval:
                first_fail = n
                break
        results.append(CheckResult(name, n0, n_max, first_fail is None,
                                   first_fail))
    return VerifyReport(products=results)


def check_kernel(spec, gens, n_max=None):
    """Each binomial prod_j F_j(n)^{e_j} - ev(g, n) vanishes for all checked
    n at and above its own bound."""
    base = max([1] + [lower for _, _, lower in spec.products])
    results = []
    for idx, (exps, g) in enumerate(gens):
        if len(exps) != len(spec):
            raise ValueError(f"kernel generator {idx}: wrong arity")
        n0 = max(base, o_function(g))
        top = n_max if n_max is not None else n0 + 40
        if top < n0:
            raise ValueError(f"n_max = {top} below starting bound {n0}")
        fvals = [None] * len(spec)
        first_fail = None
        for n in range(n0, top + 1):
            acc = None
            for j, e in enumerate(exps):
                entry = (spec.products[j][1], spec.products[j][2])
                if fvals[j] is None:
                    fvals[j] = eval_product(entry, n)
                else:
                    fvals[j] = fvals[j] * eval_ratfunc(entry[0], n)
                if e:
                    term = fvals[j] ** e
                    acc = term if acc is None else acc * term
            if acc is None:
                acc = ONE
            if acc != eval_ratfunc(g, n):
                first_fail = n
                break
        results.append(CheckResult(f"gen{idx}", n0, top, first_fail is None,
                                   first_fail))
    return VerifyReport(kernel=results)


def check_relation_candidate(spec, exps, m_lat):
    """(member?, witness): lattice membership of exps in M plus, for
    members, a g with sigma(g)/g = prod alphahat^exps."""
    if len(exps) != len(spec):
        raise ValueError("exponent vector has wrong arity")
    if not lattice_member(m_lat, list(exps)):
        return False, None
    alphas = input_to_alphas(spec)
    w = None
    for a, e in zip(alphas, exps):
        if e:
            t = a ** e
            w = t if w is None else w * t
    if w is None:
        return True, RatFunc(P_ONE)
    g = sigma_quotient_solve(w)
    if g is None:
        raise ArithmeticError(
            "lattice member without a sigma-quotient witness "
            "(internal inconsistency)")
    return True, g
