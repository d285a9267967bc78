"""Univariate polynomials and reduced rational functions over Q(i),
with Taylor shifts, monic gcds, integer roots and shift-dispersion."""

from __future__ import annotations

from math import comb, gcd as int_gcd

import sympy

from .numbers import GaussRat, ZERO, ONE


class Poly:
    """Dense ascending list of GaussRat coefficients; zero poly is empty."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, GaussRat) else GaussRat(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def const(c):
        return Poly([c])

    @staticmethod
    def x_plus(c):
        """The monic linear polynomial x + c."""
        return Poly([c, 1])

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def lc(self):
        if not self.coeffs:
            raise ZeroDivisionError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def __eq__(self, other):
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GaussRat):
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(out)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly([ONE])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other):
        """Exact polynomial division with remainder over the field Q(i)."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dlc = other.lc()
        dd = other.degree()
        q = [ZERO] * max(0, len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            f = c / dlc
            q[i - dd] = f
            for j, oc in enumerate(other.coeffs):
                rem[i - dd + j] = rem[i - dd + j] - f * oc
        return Poly(q), Poly(rem)

    def monic(self):
        if self.is_zero():
            return self
        l = self.lc()
        if l.is_one():
            return self
        return self * l.inv()

    def content_primitive(self):
        """Split p = content * primitive with primitive monic (field case)."""
        if self.is_zero():
            return ZERO, self
        return self.lc(), self.monic()

    def eval(self, v):
        """Evaluate at a GaussRat (or int) by Horner's rule."""
        if isinstance(v, int):
            v = GaussRat(v)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def shift(self, j):
        """Taylor shift p(x + j) for an integer j."""
        if j == 0 or self.is_zero():
            return self
        n = self.degree()
        out = [ZERO] * (n + 1)
        for i, ci in enumerate(self.coeffs):
            if ci.is_zero():
                continue
            jp = 1
            for m in range(i, -1, -1):
                out[m] = out[m] + ci * (comb(i, m) * jp)
                jp *= j
        return Poly(out)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        return "Poly(" + " + ".join(f"({c})*x^{i}" for i, c in
                                    enumerate(self.coeffs) if not c.is_zero()) + ")"


X = Poly([0, 1])
P_ONE = Poly([1])


_T = sympy.Symbol("t")


def _to_sympy(p):
    cs = []
    for c in reversed(p.coeffs):
        v = sympy.Rational(c.num_re, c.den)
        if c.num_im:
            v += sympy.Rational(c.num_im, c.den) * sympy.I
        cs.append(v)
    return sympy.Poly(cs, _T, domain="QQ_I")


def _from_sympy(sp):
    out = []
    for c in sp.all_coeffs():  # descending
        re, im = c.as_real_imag()
        re, im = sympy.Rational(re), sympy.Rational(im)
        den = int(sympy.ilcm(re.q, im.q))
        out.append(GaussRat(int(re.p) * (den // int(re.q)),
                            int(im.p) * (den // int(im.q)), den))
    return Poly(list(reversed(out)))


def gcd_monic(p, q):
    """Monic gcd over Q(i) (delegated to sympy's Gaussian-rational domain)."""
    if p.is_zero() and q.is_zero():
        raise ZeroDivisionError("gcd of two zero polynomials")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.degree() == 0 or q.degree() == 0:
        return P_ONE
    return _from_sympy(_to_sympy(p).gcd(_to_sympy(q))).monic()


def cancel_common(num, den):
    """(num/g, den/g) for the monic gcd g of two nonzero polynomials."""
    if num.degree() == 0 or den.degree() == 0:
        return num, den
    sn, sd = _to_sympy(num), _to_sympy(den)
    g = sn.gcd(sd)
    if g.degree() == 0:
        return num, den
    return _from_sympy(sn.exquo(g)), _from_sympy(sd.exquo(g))


def _rational_parts(p):
    """Split p = p1 + i*p2 with rational-coefficient Polys p1, p2."""
    p1 = Poly([GaussRat(c.num_re, 0, c.den) for c in p.coeffs])
    p2 = Poly([GaussRat(c.num_im, 0, c.den) for c in p.coeffs])
    return p1, p2


def integer_roots(p):
    """Exactly the integers n with p(n) = 0, for nonzero p."""
    if p.is_zero():
        raise ZeroDivisionError("integer roots of the zero polynomial")
    p1, p2 = _rational_parts(p)
    if p1.is_zero():
        g = p2
    elif p2.is_zero():
        g = p1
    else:
        g = gcd_monic(p1, p2)
    if g.degree() == 0:
        return set()
    coeffs = [sympy.Rational(c.num_re, c.den) for c in reversed(g.coeffs)]
    sp = sympy.Poly(coeffs, _T, domain="QQ")
    return {int(r) for r in sp.ground_roots() if r.is_integer}


# -- resultant of p(x) and q(x+t) in x, as a polynomial in t ----------

def _shifted_in_t(q):
    """Coefficients of q(x+t) w.r.t. x, each a Poly in t."""
    n = q.degree()
    out = []
    for m in range(n + 1):
        cs = [ZERO] * (n - m + 1)
        for i in range(m, n + 1):
            c = q.coeffs[i]
            if not c.is_zero():
                cs[i - m] = c * comb(i, m)
        out.append(Poly(cs))
    return out


def _det_poly_bareiss(a):
    """Fraction-free determinant of a matrix of Polys."""
    n = len(a)
    a = [row[:] for row in a]
    sign = 1
    prev = P_ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Poly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                if num.is_zero():
                    a[i][j] = num
                else:
                    q, r = num.divmod(prev)
                    assert r.is_zero()
                    a[i][j] = q
            a[i][k] = Poly()
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign == 1 else -d


def resultant_shift(p, q):
    """Res_x(p(x), q(x+t)) as a Poly in t."""
    m, n = p.degree(), q.degree()
    if m < 1 or n < 1:
        raise ValueError("resultant_shift needs nonconstant polynomials")
    qs = _shifted_in_t(q)  # length n+1, coeff of x^i is qs[i]
    size = m + n
    rows = []
    for i in range(n):  # rows of p coefficients
        row = [Poly()] * size
        for j, c in enumerate(reversed(p.coeffs)):
            row[i + j] = Poly.const(c)
        rows.append(row)
    for i in range(m):  # rows of q(x+t) coefficients
        row = [Poly()] * size
        for j, cp in enumerate(reversed(qs)):
            row[i + j] = cp
        rows.append(row)
    return _det_poly_bareiss(rows)


def dispersion_set(p, q):
    """{ j in Z : deg gcd(p(x), q(x+j)) > 0 }."""
    if p.degree() < 1 or q.degree() < 1:
        return set()
    res = resultant_shift(p, q)
    if res.is_zero():
        raise ArithmeticError("degenerate resultant")
    return {j for j in integer_roots(res)
            if gcd_monic(p, q.shift(j)).degree() > 0}


class RatFunc:
    """unit * num/den with unit a nonzero GaussRat, num/den monic coprime."""

    __slots__ = ("unit", "num", "den")

    def __init__(self, num, den=P_ONE, unit=ONE):
        if isinstance(num, (int, GaussRat)):
            num = Poly.const(num)
        if isinstance(den, (int, GaussRat)):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            object.__setattr__(self, "unit", ZERO)
            object.__setattr__(self, "num", Poly())
            object.__setattr__(self, "den", P_ONE)
            return
        u = unit * num.lc() / den.lc()
        num, den = num.monic(), den.monic()
        num, den = cancel_common(num, den)
        object.__setattr__(self, "unit", u)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def const(c):
        return RatFunc(Poly.const(c))

    def is_zero(self):
        return self.unit.is_zero()

    def is_one(self):
        return self.unit.is_one() and self.num.is_one() and self.den.is_one()

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() <= 0

    def const_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.unit

    def __eq__(self, other):
        return (self.unit, self.num, self.den) == \
            (other.unit, other.num, other.den)

    def __hash__(self):
        return hash((self.unit, self.num, self.den))

    def __mul__(self, other):
        if isinstance(other, GaussRat):
            other = RatFunc.const(other)
        if self.is_zero() or other.is_zero():
            return RatFunc(Poly())
        return RatFunc(self.num * other.num, self.den * other.den,
                       self.unit * other.unit)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num, self.unit.inv())

    def __truediv__(self, other):
        if isinstance(other, GaussRat):
            other = RatFunc.const(other)
        return self * other.inv()

    def __add__(self, other):
        if isinstance(other, GaussRat):
            other = RatFunc.const(other)
        a = (self.num * self.unit) * other.den
        b = (other.num * other.unit) * self.den
        return RatFunc(a + b, self.den * other.den)

    def __neg__(self):
        return RatFunc(self.num, self.den, -self.unit)

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        if e == 0:
            return RatFunc(P_ONE)
        if self.is_zero():
            return self
        # num, den stay monic and coprime under powering: skip re-reduction
        out = RatFunc(P_ONE)
        object.__setattr__(out, "unit", self.unit ** e)
        object.__setattr__(out, "num", self.num ** e)
        object.__setattr__(out, "den", self.den ** e)
        return out

    def shift(self, j):
        """f(x + j)."""
        return RatFunc(self.num.shift(j), self.den.shift(j), self.unit)

    def __repr__(self):
        return f"RatFunc({self.unit!r} * {self.num!r} / {self.den!r})"
