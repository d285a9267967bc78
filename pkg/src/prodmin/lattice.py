"""Exact integer-matrix linear algebra: Hermite normal form with transform,
integer kernels (optionally with a congruence side condition), lattice
equality/membership and Smith normal form with unimodular transforms."""

from __future__ import annotations


class IntMat:
    """Immutable row-major integer matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError("inconsistent dimensions")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMat is immutable")

    @staticmethod
    def identity(n):
        return IntMat(n, n, [[1 if i == j else 0 for j in range(n)]
                             for i in range(n)])

    def row(self, i):
        return self.entries[i]

    def tolists(self):
        return [list(r) for r in self.entries]

    def __eq__(self, other):
        return (self.rows, self.cols, self.entries) == \
            (other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"IntMat({self.tolists()})"

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = [[sum(self.entries[i][k] * other.entries[k][j]
                    for k in range(self.cols))
                for j in range(other.cols)] for i in range(self.rows)]
        return IntMat(self.rows, other.cols, out)

    def det(self):
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        a = self.tolists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def hnf_row(m):
    """Row Hermite normal form.  Returns (H, U) with U*m = H, U unimodular,
    positive pivots and entries above each pivot reduced into [0, pivot)."""
    h = m.tolists()
    nrows, ncols = m.rows, m.cols
    u = IntMat.identity(nrows).tolists()
    r = 0
    for c in range(ncols):
        # clear column c below row r using gcd-style row reductions
        while True:
            piv = None
            for i in range(r, nrows):
                if h[i][c] != 0 and (piv is None or abs(h[i][c]) < abs(h[piv][c])):
                    piv = i
            if piv is None:
                break
            if piv != r:
                h[r], h[piv] = h[piv], h[r]
                u[r], u[piv] = u[piv], u[r]
            done = True
            for i in range(r + 1, nrows):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    for j in range(ncols):
                        h[i][j] -= q * h[r][j]
                    for j in range(nrows):
                        u[i][j] -= q * u[r][j]
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if r < nrows and h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            for i in range(r):
                q = h[i][c] // h[r][c]
                if q:
                    for j in range(ncols):
                        h[i][j] -= q * h[r][j]
                    for j in range(nrows):
                        u[i][j] -= q * u[r][j]
            r += 1
        if r == nrows:
            break
    return IntMat(nrows, ncols, h), IntMat(nrows, nrows, u)


class RelationLattice:
    """Integer lattice given by a canonical row-HNF basis (zero rows removed)."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim, rows):
        rows = [list(r) for r in rows if any(x != 0 for x in r)]
        if rows:
            h, _ = hnf_row(IntMat(len(rows), ambient_dim, rows))
            rows = [list(r) for r in h.entries if any(x != 0 for x in r)]
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis",
                           IntMat(len(rows), ambient_dim, rows))

    def __setattr__(self, name, value):
        raise AttributeError("RelationLattice is immutable")

    @property
    def rank(self):
        return self.basis.rows

    def is_zero(self):
        return self.basis.rows == 0

    def __repr__(self):
        return f"RelationLattice(dim={self.ambient_dim}, basis={self.basis.tolists()})"


def kernel_basis(m):
    """Lattice of integer row vectors n with n*m = 0."""
    h, u = hnf_row(m)
    rows = [list(u.row(i)) for i in range(m.rows)
            if all(x == 0 for x in h.row(i))]
    return RelationLattice(m.rows, rows)


def kernel_with_congruence(m, t, q):
    """Lattice of n with n*m = 0 and n.t = 0 (mod q), via one auxiliary
    integer variable that is projected away."""
    if len(t) != m.rows:
        raise ValueError("congruence vector length mismatch")
    if q == 1:
        return kernel_basis(m)
    rows = [list(m.row(i)) + [t[i]] for i in range(m.rows)]
    rows.append([0] * m.cols + [-q])
    aug = IntMat(m.rows + 1, m.cols + 1, rows)
    ker = kernel_basis(aug)
    projected = [list(r)[:m.rows] for r in ker.basis.entries]
    return RelationLattice(m.rows, projected)


def lattice_member(lat, n):
    """Exact membership via back-substitution against the HNF basis."""
    if len(n) != lat.ambient_dim:
        raise ValueError("dimension mismatch")
    v = list(n)
    for row in lat.basis.entries:
        c = next(j for j, x in enumerate(row) if x != 0)
        if v[c] % row[c] != 0:
            return False
        k = v[c] // row[c]
        if k:
            for j in range(len(v)):
                v[j] -= k * row[j]
    return all(x == 0 for x in v)


def lattice_equal(l1, l2):
    if l1.ambient_dim != l2.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return l1.basis == l2.basis


class SnfResult:
    """A*Z*B = D with A, B unimodular and D = diag(d1..du) padded, d1|...|du."""

    __slots__ = ("a", "b", "b_inv", "d")

    def __init__(self, a, b, b_inv, d):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "b_inv", b_inv)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("SnfResult is immutable")

    @property
    def divisors(self):
        return [self.d.entries[i][i] for i in range(self.d.rows)
                if i < self.d.cols and self.d.entries[i][i] != 0]


def smith_normal_form(z):
    """Smith normal form with accumulated transforms (smallest-pivot rule)."""
    u, r = z.rows, z.cols
    d = z.tolists()
    a = IntMat.identity(u).tolists()
    b = IntMat.identity(r).tolists()
    binv = IntMat.identity(r).tolists()

    def row_sub(i, k, q):  # row_i -= q * row_k   (left transform)
        for j in range(r):
            d[i][j] -= q * d[k][j]
        for j in range(u):
            a[i][j] -= q * a[k][j]

    def col_sub(j, k, q):  # col_j -= q * col_k   (right transform)
        for i in range(u):
            d[i][j] -= q * d[i][k]
        for i in range(r):
            b[i][j] -= q * b[i][k]
        for i in range(r):
            binv[k][i] += q * binv[j][i]

    def row_swap(i, k):
        d[i], d[k] = d[k], d[i]
        a[i], a[k] = a[k], a[i]

    def col_swap(j, k):
        for i in range(u):
            d[i][j], d[i][k] = d[i][k], d[i][j]
        for i in range(r):
            b[i][j], b[i][k] = b[i][k], b[i][j]
        binv[j], binv[k] = binv[k], binv[j]

    def col_neg(j):
        for i in range(u):
            d[i][j] = -d[i][j]
        for i in range(r):
            b[i][j] = -b[i][j]
        binv[j] = [-x for x in binv[j]]

    for k in range(min(u, r)):
        while True:
            # locate smallest nonzero pivot in the trailing submatrix
            piv = None
            for i in range(k, u):
                for j in range(k, r):
                    if d[i][j] != 0 and (piv is None or
                                         abs(d[i][j]) < abs(d[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                break
            if piv[0] != k:
                row_swap(k, piv[0])
            if piv[1] != k:
                col_swap(k, piv[1])
            dirty = False
            for i in range(k + 1, u):
                if d[i][k] != 0:
                    row_sub(i, k, d[i][k] // d[k][k])
                    if d[i][k] != 0:
                        dirty = True
            for j in range(k + 1, r):
                if d[k][j] != 0:
                    col_sub(j, k, d[k][j] // d[k][k])
                    if d[k][j] != 0:
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining submatrix by the pivot
            bad = None
            for i in range(k + 1, u):
                for j in range(k + 1, r):
                    if d[i][j] % d[k][k] != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            row_sub(k, bad, -1)  # add row `bad` into row k, retry
        if k < u and k < r and d[k][k] < 0:
            col_neg(k)

    return SnfResult(IntMat(u, u, a), IntMat(r, r, b),
                     IntMat(r, r, binv), IntMat(u, r, d))
