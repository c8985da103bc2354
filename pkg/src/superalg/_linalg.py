"""Exact linear algebra over the rationals.

Matrices are tuples of row tuples of Fraction; vectors are tuples of
Fraction.  Everything is dense (ambient dimensions stay small) and every
operation is exact: no floats anywhere.
"""

from fractions import Fraction
from math import isqrt

Q0 = Fraction(0)
Q1 = Fraction(1)


def frac(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vec(xs):
    return tuple(frac(x) for x in xs)


def zero_vec(n):
    return (Q0,) * n


def unit_vec(n, i):
    return tuple(Q1 if j == i else Q0 for j in range(n))


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c, a):
    c = frac(c)
    return tuple(c * x for x in a)


def vec_dot(a, b):
    # Fraction arithmetic dominates runtime; skipping zero factors is a
    # large constant-factor win on the sparse vectors that occur here
    return sum((x * y for x, y in zip(a, b) if x and y), Q0)


def vec_is_zero(a):
    return all(x == 0 for x in a)


def mat(rows):
    return tuple(tuple(frac(x) for x in row) for row in rows)


def zeros(n, m):
    return tuple((Q0,) * m for _ in range(n))


def identity(n):
    return tuple(unit_vec(n, i) for i in range(n))


def transpose(a):
    if not a:
        return ()
    return tuple(zip(*a))


def mat_vec(a, v):
    nz = [(j, c) for j, c in enumerate(v) if c]
    return tuple(sum((row[j] * c for j, c in nz if row[j]), Q0) for row in a)


def mat_mul(a, b):
    n = len(a)
    if n == 0:
        return ()
    m = len(b[0]) if b else 0
    out = [[Q0] * m for _ in range(n)]
    for i, row in enumerate(a):
        oi = out[i]
        for k, c in enumerate(row):
            if c:
                bk = b[k]
                for j, d in enumerate(bk):
                    if d:
                        oi[j] += c * d
    return tuple(tuple(r) for r in out)


def mat_add(a, b):
    return tuple(vec_add(x, y) for x, y in zip(a, b))


def mat_sub(a, b):
    return tuple(vec_sub(x, y) for x, y in zip(a, b))


def mat_scale(c, a):
    return tuple(vec_scale(c, row) for row in a)


def mat_is_zero(a):
    return all(vec_is_zero(row) for row in a)


def rref(rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns); zero rows
    are dropped, pivots are 1 and alone in their column."""
    m = [list(r) for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Q1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    out = tuple(tuple(row) for row in m[:r])
    return out, tuple(pivots)


def rank(a):
    return len(rref(a)[0])


def nullspace(a, ncols=None):
    """Canonical basis of {x : a·x = 0}, one row per free column of rref(a)."""
    if not a:
        if ncols is None:
            raise ValueError("nullspace of empty system needs ncols")
        return identity(ncols)
    ncols = len(a[0])
    red, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Q0] * ncols
        v[fc] = Q1
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(tuple(v))
    return tuple(basis)


def solve(a, b, ncols=None):
    """One exact solution x of a·x = b with zeros in the free coordinates,
    or None when the system is inconsistent."""
    if not a:
        if ncols is None:
            raise ValueError("solve of empty system needs ncols")
        return zero_vec(ncols)
    ncols = len(a[0])
    aug = [list(row) + [bb] for row, bb in zip(a, b)]
    red, pivots = rref(aug)
    x = [Q0] * ncols
    for row, pc in zip(red, pivots):
        if pc == ncols:
            return None
        x[pc] = row[ncols]
    # pivot rows may still reference free columns; with free coords at 0 the
    # pivot value is exactly the augmented entry, so x is already correct
    return tuple(x)


def inverse(a):
    n = len(a)
    if n == 0:
        return ()
    aug = [list(row) + list(unit_vec(n, i)) for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if len(red) < n or any(p != i for i, p in enumerate(pivots[:n])):
        return None
    return tuple(tuple(row[n:]) for row in red)


def det(a):
    n = len(a)
    if n == 0:
        return Q1
    m = [list(row) for row in a]
    sign = Q1
    d = Q1
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return Q0
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            sign = -sign
        d *= m[c][c]
        inv = Q1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return sign * d


def charpoly(a):
    """Coefficients (c0=1, c1, ..., cn) of det(x·I − a) = Σ ci x^(n−i),
    by the Faddeev–LeVerrier recursion (exact)."""
    n = len(a)
    coeffs = [Q1]
    m = identity(n)
    for k in range(1, n + 1):
        am = mat_mul(a, m)
        tr = sum((am[i][i] for i in range(n)), Q0)
        c = -tr / k
        coeffs.append(c)
        m = mat_add(am, mat_scale(c, identity(n)))
    return tuple(coeffs)


def poly_eval(coeffs, x):
    acc = Q0
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_divmod_linear(coeffs, root):
    """Divide Σ ci x^(n−i) by (x − root); returns (quotient, remainder)."""
    out = []
    acc = Q0
    for c in coeffs:
        acc = acc * root + c
        out.append(acc)
    return tuple(out[:-1]), out[-1]


def _divisors(n):
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def rational_roots(coeffs):
    """All rational roots of Σ ci x^(n−i) with multiplicities, as a list of
    (root, multiplicity) sorted by (numerator, denominator)."""
    work = list(coeffs)
    while len(work) > 1 and work[0] == 0:
        work.pop(0)
    if len(work) <= 1:
        return []
    roots = {}
    # strip zero roots
    while work[-1] == 0 and len(work) > 1:
        roots[Q0] = roots.get(Q0, 0) + 1
        work.pop()
    if len(work) > 1:
        den_lcm = 1
        for c in work:
            den_lcm = den_lcm * c.denominator // _gcd(den_lcm, c.denominator)
        ints = [int(c * den_lcm) for c in work]
        lead, trail = ints[0], ints[-1]
        seen = set()
        for p in _divisors(trail):
            for q in _divisors(lead):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand in seen:
                        continue
                    seen.add(cand)
                    cur = tuple(work)
                    mult = 0
                    while True:
                        quo, rem = poly_divmod_linear(cur, cand)
                        if rem != 0:
                            break
                        mult += 1
                        cur = quo
                        if len(cur) <= 1:
                            break
                    if mult:
                        roots[cand] = mult
    return sorted(roots.items(), key=lambda kv: (kv[0].numerator, kv[0].denominator))


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def apply_poly(coeffs, a):
    """Matrix polynomial Σ ci a^(n−i)."""
    n = len(a)
    acc = zeros(n, n)
    for c in coeffs:
        acc = mat_add(mat_mul(acc, a), mat_scale(c, identity(n)))
    return acc


def rational_sqrt(x):
    """Exact square root of a Fraction, or None."""
    x = frac(x)
    if x < 0:
        return None
    np, dp = isqrt(x.numerator), isqrt(x.denominator)
    if np * np == x.numerator and dp * dp == x.denominator:
        return Fraction(np, dp)
    return None
