"""Exact arithmetic in Q(i): Gaussian rationals, Gaussian-integer
factorization and multiplicative relation lattices of nonzero constants."""

from __future__ import annotations

from math import gcd


class GaussRat:
    """(num_re + num_im*i) / den with den > 0 and gcd(num_re, num_im, den) = 1."""

    __slots__ = ("num_re", "num_im", "den")

    def __init__(self, num_re, num_im=0, den=1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num_re, num_im, den = -num_re, -num_im, -den
        if den != 1:  # gcd(re, im, 1) = 1, already canonical
            g = gcd(gcd(abs(num_re), abs(num_im)), den)
            if g > 1:
                num_re //= g
                num_im //= g
                den //= g
        object.__setattr__(self, "num_re", num_re)
        object.__setattr__(self, "num_im", num_im)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("GaussRat is immutable")

    # -- predicates -------------------------------------------------
    def is_zero(self):
        return self.num_re == 0 and self.num_im == 0

    def is_one(self):
        return self.num_re == 1 and self.num_im == 0 and self.den == 1

    def is_rational(self):
        return self.num_im == 0

    # -- arithmetic -------------------------------------------------
    @staticmethod
    def _coerce(v):
        if isinstance(v, GaussRat):
            return v
        if isinstance(v, int):
            return GaussRat(v)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussRat(self.num_re * o.den + o.num_re * self.den,
                        self.num_im * o.den + o.num_im * self.den,
                        self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.num_re, -self.num_im, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussRat(self.num_re * o.num_re - self.num_im * o.num_im,
                        self.num_re * o.num_im + self.num_im * o.num_re,
                        self.den * o.den)

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.num_re * self.num_re + self.num_im * self.num_im
        return GaussRat(self.den * self.num_re, -self.den * self.num_im, n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inv() ** (-e)
        result = GaussRat(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self):
        return GaussRat(self.num_re, -self.num_im, self.den)

    # -- comparison / hashing ---------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.num_re, self.num_im, self.den) == (o.num_re, o.num_im, o.den)

    def __hash__(self):
        return hash((self.num_re, self.num_im, self.den))

    def __repr__(self):
        if self.num_im == 0:
            s = str(self.num_re)
        elif self.num_re == 0:
            s = f"{self.num_im}*I"
        else:
            sign = "+" if self.num_im > 0 else "-"
            s = f"({self.num_re}{sign}{abs(self.num_im)}*I)"
        return s if self.den == 1 else f"{s}/{self.den}"


ZERO = GaussRat(0)
ONE = GaussRat(1)
IOTA = GaussRat(0, 1)
UNITS = (ONE, GaussRat(-1), IOTA, GaussRat(0, -1))


def ord_root_of_unity(v):
    """Order of v if v is in {1,-1,i,-i}, else 0."""
    if v.is_zero():
        raise ZeroDivisionError("zero has no order")
    if v == ONE:
        return 1
    if v == GaussRat(-1):
        return 2
    if v == IOTA or v == GaussRat(0, -1):
        return 4
    return 0


# -- Gaussian integers (plain (re, im) int pairs) --------------------

def _gi_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _gi_norm(a):
    return a[0] * a[0] + a[1] * a[1]


def _gi_divmod(a, b):
    """Rounded division a = q*b + r with N(r) < N(b)."""
    nb = _gi_norm(b)
    # a * conj(b) / N(b), rounded to nearest
    pr = a[0] * b[0] + a[1] * b[1]
    pi = a[1] * b[0] - a[0] * b[1]
    qr = (2 * pr + nb) // (2 * nb)
    qi = (2 * pi + nb) // (2 * nb)
    q = (qr, qi)
    qb = _gi_mul(q, b)
    return q, (a[0] - qb[0], a[1] - qb[1])


def _gi_gcd(a, b):
    while b != (0, 0):
        _, r = _gi_divmod(a, b)
        a, b = b, r
    return a


def _gi_exact_div(a, b):
    q, r = _gi_divmod(a, b)
    if r != (0, 0):
        return None
    return q


def canonical_prime(p):
    """First-quadrant associate: re > 0 and smallest nonnegative im."""
    cands = []
    a = p
    for _ in range(4):
        if a[0] > 0 and a[1] >= 0:
            cands.append(a)
        a = (-a[1], a[0])  # multiply by i
    return min(cands, key=lambda c: (c[1], c[0]))


def _sqrt_minus_one_mod(p):
    """Square root of -1 mod p for prime p = 1 mod 4."""
    for a in range(2, p):
        s = pow(a, (p - 1) // 4, p)
        if (s * s) % p == p - 1:
            return s
    raise ArithmeticError(f"no sqrt(-1) mod {p}")


def _factor_int(n):
    """Trial-division factorization of n >= 1 into {prime: exp}."""
    out = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _gi_factor_int(z):
    """Factor a nonzero Gaussian integer into canonical primes; returns
    (iota_exp, {prime: exp})."""
    factors = {}
    nf = _factor_int(_gi_norm(z))
    for p, _ in sorted(nf.items()):
        if p == 2:
            pi_list = [(1, 1)]
        elif p % 4 == 3:
            pi_list = [(p, 0)]
        else:
            s = _sqrt_minus_one_mod(p)
            pi = canonical_prime(_gi_gcd((p, 0), (s, 1)))
            pi_list = [pi, canonical_prime((pi[0], -pi[1]))]
        for pi in pi_list:
            cp = canonical_prime(pi)
            while True:
                q = _gi_exact_div(z, cp)
                if q is None:
                    break
                z = q
                factors[cp] = factors.get(cp, 0) + 1
    # remaining z must be a unit
    units = {(1, 0): 0, (0, 1): 1, (-1, 0): 2, (0, -1): 3}
    if z not in units:
        raise ArithmeticError("factorization did not terminate at a unit")
    return units[z], factors


class GaussFactorization:
    """iota_exp in {0,1,2,3} and sorted list of (canonical prime, nonzero exp)."""

    __slots__ = ("iota_exp", "factors")

    def __init__(self, iota_exp, factors):
        self.iota_exp = iota_exp % 4
        self.factors = tuple(sorted(
            ((p, e) for p, e in factors if e != 0),
            key=lambda pe: (_gi_norm(pe[0]), pe[0][0], pe[0][1])))

    def __eq__(self, other):
        return (self.iota_exp, self.factors) == (other.iota_exp, other.factors)

    def __repr__(self):
        return f"GaussFactorization(i^{self.iota_exp}, {list(self.factors)})"

    def reconstruct(self):
        v = IOTA ** self.iota_exp
        for (re, im), e in self.factors:
            v = v * GaussRat(re, im) ** e
        return v


def gi_factor(v):
    """Canonical Gaussian factorization of a nonzero GaussRat."""
    if v.is_zero():
        raise ZeroDivisionError("cannot factor zero")
    t_num, f_num = _gi_factor_int((v.num_re, v.num_im))
    t_den, f_den = _gi_factor_int((v.den, 0))
    factors = dict(f_num)
    for p, e in f_den.items():
        factors[p] = factors.get(p, 0) - e
    return GaussFactorization((t_num - t_den) % 4, factors.items())


def multiplicative_kernel(vs):
    """Basis of { n in Z^r : prod vs[i]^n[i] = 1 } as a RelationLattice."""
    from .lattice import IntMat, kernel_with_congruence

    facts = [gi_factor(v) for v in vs]
    primes = sorted({p for f in facts for p, _ in f.factors},
                    key=lambda p: (_gi_norm(p), p[0], p[1]))
    col = {p: j for j, p in enumerate(primes)}
    rows = []
    for f in facts:
        row = [0] * len(primes)
        for p, e in f.factors:
            row[col[p]] = e
        rows.append(row)
    m = IntMat(len(vs), len(primes), rows)
    t = [f.iota_exp for f in facts]
    return kernel_with_congruence(m, t, 4)
