"""Difference-ring data model: product specifications, Laurent expressions
over the extension generators, R-Pi-extensions and the exact evaluation
machinery (ev, o-function L, z-function Z, product/sequence evaluation)."""

from __future__ import annotations

from .numbers import GaussRat, ZERO, ONE, ord_root_of_unity
from .poly import RatFunc, integer_roots


def eval_ratfunc(f, n):
    """ev(p/q, n): value p(n)/q(n), or 0 when q(n) = 0."""
    d = f.den.eval(n)
    if d.is_zero():
        return ZERO
    return f.unit * f.num.eval(n) / d


def o_function(f):
    """Minimal l with den(f)(n + l) != 0 for all natural n."""
    if f.is_zero():
        raise ZeroDivisionError("o-function of zero")
    roots = [r for r in integer_roots(f.den) if r >= 0] if f.den.degree() > 0 else []
    return 1 + max(roots) if roots else 0


def z_function(f):
    """Minimal l with ev(f, n) != 0 for all n >= l (= L(num*den))."""
    if f.is_zero():
        raise ZeroDivisionError("z-function of zero")
    p = f.num * f.den
    roots = [r for r in integer_roots(p) if r >= 0] if p.degree() > 0 else []
    return 1 + max(roots) if roots else 0


def product_lower_bound(alpha):
    """Smallest l >= 1 such that ev(alpha, k-1) is defined and nonzero for
    all k >= l."""
    p = alpha.num * alpha.den
    roots = [r for r in integer_roots(p) if r >= 0] if p.degree() > 0 else []
    return max(roots) + 2 if roots else 1


class ProductSpec:
    """Ordered list of named products prod_{k=l}^n f(k)."""

    __slots__ = ("products",)

    def __init__(self, products):
        products = tuple(products)  # (name, RatFunc, lower)
        names = [p[0] for p in products]
        if len(set(names)) != len(names):
            raise ValueError("duplicate product names")
        for name, f, lower in products:
            if f.is_zero():
                raise ValueError(f"product {name}: zero multiplicand")
            if lower < 0:
                raise ValueError(f"product {name}: negative lower bound")
            p = f.num * f.den
            if p.degree() > 0:
                bad = [r for r in integer_roots(p) if r >= lower]
                if bad:
                    raise ValueError(
                        f"product {name}: multiplicand has a zero or pole at "
                        f"k = {min(bad)} >= lower bound {lower}")
        object.__setattr__(self, "products", products)

    def __setattr__(self, name, value):
        raise AttributeError("ProductSpec is immutable")

    def __len__(self):
        return len(self.products)

    @property
    def names(self):
        return [p[0] for p in self.products]


def eval_product(entry, n):
    """prod_{k=l}^n ev(f, k); the empty product (n < l) is 1."""
    f, lower = entry
    acc = ONE
    for k in range(lower, n + 1):
        acc = acc * eval_ratfunc(f, k)
    return acc


class RPiExtension:
    """Pi-monomials (alpha, lower) plus an optional R-monomial (rho, order)."""

    __slots__ = ("pi_monomials", "r_monomial")

    def __init__(self, pi_monomials, r_monomial=None):
        pi_monomials = tuple((a, int(l)) for a, l in pi_monomials)
        for a, l in pi_monomials:
            if a.is_zero():
                raise ValueError("zero Pi-multiplicand")
        if r_monomial is not None:
            rho, order = r_monomial
            if order <= 1 or ord_root_of_unity(rho) != order:
                raise ValueError("R-monomial must have ord(rho) = order > 1")
            r_monomial = (rho, int(order))
        object.__setattr__(self, "pi_monomials", pi_monomials)
        object.__setattr__(self, "r_monomial", r_monomial)

    def __setattr__(self, name, value):
        raise AttributeError("RPiExtension is immutable")

    @property
    def order(self):
        return self.r_monomial[1] if self.r_monomial else 1


def eval_rpi(ext, gen_index, n):
    """Value of Pi-generator gen_index at n: prod_{k=l'}^n ev(alpha, k-1)."""
    alpha, lower = ext.pi_monomials[gen_index]
    acc = ONE
    for k in range(lower, n + 1):
        acc = acc * eval_ratfunc(alpha, k - 1)
    return acc


def eval_z(ext, n):
    """rho^n, or 1 when no R-monomial is present."""
    if ext.r_monomial is None:
        return ONE
    rho, order = ext.r_monomial
    return rho ** (n % order)


class LaurentExpr:
    """Sum of terms coef * x1^e1 ... xs^es * z^zpow with RatFunc coefs."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        seen = set()
        norm = []
        for coef, exps, zpow in terms:
            exps = tuple(int(e) for e in exps)
            zpow = int(zpow)
            if zpow < 0:
                raise ValueError("negative z-power")
            if coef.is_zero():
                continue
            key = (exps, zpow)
            if key in seen:
                raise ValueError("duplicate (exps, zpow) term")
            seen.add(key)
            norm.append((coef, exps, zpow))
        object.__setattr__(self, "terms", tuple(norm))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentExpr is immutable")

    @staticmethod
    def monomial(coef, exps, zpow=0):
        return LaurentExpr([(coef, exps, zpow)])


def eval_laurent(expr, ext, n, gen_cache=None):
    """Evaluate a Laurent expression at n over the extension's sequences."""
    total = ZERO
    cache = gen_cache if gen_cache is not None else {}
    for coef, exps, zpow in expr.terms:
        v = eval_ratfunc(coef, n)
        for i, e in enumerate(exps):
            if e == 0:
                continue
            if (i, n) not in cache:
                cache[(i, n)] = eval_rpi(ext, i, n)
            g = cache[(i, n)]
            if g.is_zero() and e < 0:
                raise ZeroDivisionError(
                    f"generator {i} evaluates to zero at n={n} "
                    "under a negative exponent")
            v = v * g ** e
        if zpow:
            v = v * eval_z(ext, n) ** zpow
        total = total + v
    return total
