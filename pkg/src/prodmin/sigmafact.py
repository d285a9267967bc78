"""Shift-orbit factorization of rational functions over Q(i)(x), the
first-order homogeneous solver sigma(g) = w*g and the radical-solve loop
sigma(g) = rho*a*g."""

from __future__ import annotations

from .numbers import GaussRat, ONE, UNITS, ord_root_of_unity
from .poly import Poly, RatFunc, P_ONE, gcd_monic, dispersion_set, integer_roots


class OrbitDecomposition:
    """unit * prod_a prod_k h_a(x+k)^e with pairwise shift-coprime monic
    atoms h_a, each normalized so its smallest recorded shift is 0."""

    __slots__ = ("unit", "atoms")

    def __init__(self, unit, atoms):
        # atoms: list of (Poly, {shift: exp}) with nonzero exponents
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "atoms", tuple(
            (h, dict(e)) for h, e in atoms if e))

    def __setattr__(self, name, value):
        raise AttributeError("OrbitDecomposition is immutable")

    def expand(self):
        num, den = P_ONE, P_ONE
        for h, exps in self.atoms:
            for k, e in exps.items():
                p = h.shift(k) ** abs(e)
                if e > 0:
                    num = num * p
                else:
                    den = den * p
        return RatFunc(num, den, self.unit)


def _gcd_free_insert(basis, p):
    """Insert monic nonconstant p into a pairwise-coprime basis."""
    queue = [p]
    while queue:
        p = queue.pop()
        if p.degree() < 1:
            continue
        for i, b in enumerate(basis):
            g = gcd_monic(p, b)
            if g.degree() < 1:
                continue
            if g == b:
                q, _ = p.divmod(b)
                queue.append(q)
            else:
                del basis[i]
                bq, _ = b.divmod(g)
                pq, _ = p.divmod(g)
                queue.extend([g, bq, pq])
            break
        else:
            basis.append(p)


def _split_integer_root_factors(basis):
    """Refine basis elements by splitting off linear factors at integer
    roots; keeps all resultant work on root-free residuals."""
    out = []
    for b in basis:
        changed = True
        while changed and b.degree() > 1:
            changed = False
            for n in sorted(integer_roots(b)):
                lin = Poly.x_plus(GaussRat(-n))
                q, r = b.divmod(lin)
                if r.is_zero():
                    out.append(lin)
                    b = q
                    changed = True
                    break
        if b.degree() >= 1:
            out.append(b)
    # re-establish pairwise coprimality (duplicates may have appeared)
    basis2 = []
    for p in out:
        _gcd_free_insert(basis2, p)
    return basis2


def _refine_shift_coprime(basis):
    """Split basis elements until any two (and any one against a nonzero
    shift of itself) are either coprime or exact shift-associates."""
    basis = list(basis)
    changed = True
    while changed:
        changed = False
        n = len(basis)
        for i in range(n):
            for j in range(n):
                a, b = basis[i], basis[j]
                shifts = dispersion_set(a, b)
                for s in sorted(shifts, key=abs):
                    if i == j and s == 0:
                        continue
                    bs = b.shift(s)
                    if a == bs:
                        continue
                    g = gcd_monic(a, bs)
                    if g.degree() < 1:
                        continue
                    # proper split: replace a and b by their parts
                    pieces = []
                    qa, _ = a.divmod(g)
                    pieces.extend([g, qa])
                    gb = g.shift(-s)
                    qb, _ = b.divmod(gb)
                    pieces.extend([gb, qb])
                    keep = [basis[k] for k in range(n) if k not in (i, j)]
                    new_basis = []
                    for p in keep + pieces:
                        if p.degree() >= 1:
                            _gcd_free_insert(new_basis, p)
                    basis = new_basis
                    changed = True
                    break
                if changed:
                    break
            if changed:
                break
    return basis


def _orbit_atoms(basis):
    """Group shift-associate basis elements; return list of
    (representative Poly, {basis_index: shift_from_rep})."""
    unassigned = list(range(len(basis)))
    orbits = []
    while unassigned:
        i = unassigned.pop(0)
        members = {i: 0}
        for j in list(unassigned):
            if basis[i].degree() != basis[j].degree():
                continue
            for s in dispersion_set(basis[i], basis[j]):
                if basis[i] == basis[j].shift(s):
                    # basis[j](x+s) == basis[i](x): basis[j] = rep(x - s)
                    members[j] = -s
                    unassigned.remove(j)
                    break
        orbits.append((basis[i], members))
    # normalize: representative at minimal shift 0
    out = []
    for rep, members in orbits:
        mn = min(members.values())
        rep0 = rep.shift(mn)
        out.append((rep0, {j: s - mn for j, s in members.items()}))
    return out


def joint_orbit_decompose(fs):
    """Simultaneous shift-orbit decomposition of nonzero rational functions.

    Returns (atoms, decomps) where atoms is a shared list of monic Polys
    and decomps[i] = (unit, {atom_index: {shift: exp}}) reconstructs fs[i].
    """
    fs = list(fs)
    if any(f.is_zero() for f in fs):
        raise ZeroDivisionError("zero input to orbit decomposition")
    basis = []
    for f in fs:
        for p in (f.num, f.den):
            if p.degree() >= 1:
                _gcd_free_insert(basis, p)
    basis = _split_integer_root_factors(basis)
    basis = _refine_shift_coprime(basis)
    orbits = _orbit_atoms(basis)
    atoms = [rep for rep, _ in orbits]
    # shift of every basis element relative to its orbit representative
    elem_pos = {}
    for a_idx, (_, members) in enumerate(orbits):
        for j, s in members.items():
            elem_pos[j] = (a_idx, s)

    def table(p, sign, acc):
        # factor monic p over the (shifted) basis elements by trial division
        while p.degree() >= 1:
            for j, b in enumerate(basis):
                q, r = p.divmod(b)
                if r.is_zero():
                    a_idx, s = elem_pos[j]
                    key = (a_idx, s)
                    acc[key] = acc.get(key, 0) + sign
                    p = q
                    break
            else:
                raise ArithmeticError("basis does not cover input factor")
        return p

    decomps = []
    for f in fs:
        acc = {}
        table(f.num, 1, acc)
        table(f.den, -1, acc)
        by_atom = {}
        for (a_idx, s), e in acc.items():
            if e:
                by_atom.setdefault(a_idx, {})[s] = e
        decomps.append((f.unit, by_atom))
    return atoms, decomps


def orbit_decompose(f):
    """OrbitDecomposition of a single nonzero rational function."""
    atoms, decomps = joint_orbit_decompose([f])
    unit, by_atom = decomps[0]
    return OrbitDecomposition(unit, [(atoms[a], e) for a, e in by_atom.items()])


def sigma_quotient_solve(w):
    """Some g in Q(i)(x)* with g(x+1)/g(x) = w, or None.

    Exists iff unit(w) = 1 and every atom's exponents sum to zero; the
    exponent of h(x+k) in g is the negated partial sum of w's exponents."""
    if w.is_zero():
        raise ZeroDivisionError("zero input")
    dec = orbit_decompose(w)
    if not dec.unit.is_one():
        return None
    g_atoms = []
    for h, exps in dec.atoms:
        if sum(exps.values()) != 0:
            return None
        lo, hi = min(exps), max(exps)
        g_exps = {}
        c = 0
        for k in range(lo, hi):
            c -= exps.get(k, 0)
            if c:
                g_exps[k] = c
        g_atoms.append((h, g_exps))
    g = OrbitDecomposition(ONE, g_atoms).expand()
    return g


def radical_solve(a, m):
    """First (rho, g) with rho^m = 1 and g(x+1) = rho*a(x)*g(x), trying
    rho in the fixed order 1, -1, i, -i; None if none works."""
    if a.is_zero():
        raise ZeroDivisionError("zero input")
    if m < 1:
        raise ValueError("order must be >= 1")
    for rho in UNITS:
        if ord_root_of_unity(rho) and (rho ** m).is_one():
            g = sigma_quotient_solve(a * rho)
            if g is not None:
                return rho, g
    return None
