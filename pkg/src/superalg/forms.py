"""Homogeneous bilinear forms on a Lie superalgebra: parity patterns,
(skew-)supersymmetry, invariance, the scalar 2-cocycle identity,
non-degeneracy, orthogonals, adjoints, and exact solving for spaces of
invariant forms.

Sign conventions fixed here (validated by the test suite on every
catalog input):

* invariance is the literal identity  beta([X,Y],Z) = beta(X,[Y,Z]),
  with no Koszul signs;
* the adjoint D* of D with respect to a non-degenerate omega satisfies
  omega(D(X),Y) = (−1)^{|D||X|} omega(X, D*(Y));
* "skew-symmetric with respect to beta" means
  beta(D(X),Y) = −(−1)^{|D||X|} beta(X, D(Y)).
"""

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la
from .core import EVEN, ODD, ksign, bracket, span, Subspace
from .errors import DegenerateForm, ParityPatternViolation

DEFAULT_SEED = 20240131


@dataclass(frozen=True)
class BilinearForm:
    matrix: tuple
    parity: int

    def __call__(self, x, y):
        return la.vec_dot(la.mat_vec(self.matrix, tuple(y)), tuple(x))

    @property
    def dim(self):
        return len(self.matrix)


def form(rows, parity):
    return BilinearForm(la.mat(rows), parity)


def zero_form(n, parity):
    return BilinearForm(la.zeros(n, n), parity)


def parity_pattern_ok(b, beta):
    for i in range(b.dim):
        for j in range(b.dim):
            same = b.parity(i) == b.parity(j)
            if beta.matrix[i][j] != 0 and (same != (beta.parity == EVEN)):
                return False
    return True


@dataclass(frozen=True)
class FormReport:
    parity: int
    supersymmetric: bool
    skew_supersymmetric: bool
    invariant: bool
    cocycle: bool
    nondegenerate: bool
    witnesses: dict = field(default_factory=dict)

    def is_quadratic(self):
        return self.supersymmetric and self.invariant and self.nondegenerate

    def is_symplectic(self):
        return self.skew_supersymmetric and self.cocycle and self.nondegenerate


def classify_form(g, beta):
    """Exhaustive exact evaluation of the structural predicates on basis
    tuples; witnesses record the first violating tuple per failed flag.

    The triple checks run off cached matrix products: with B_x = ad(b_x)
    and M the Gram matrix, invariance at (i,j,k) is
    (B_i^T M)[j][k] = (M B_j)[i][k] and the cocycle terms are sign-
    weighted entries of the M B_x."""
    from .core import ad_matrix

    b = g.basis
    if not parity_pattern_ok(b, beta):
        raise ParityPatternViolation(
            f"matrix entries contradict declared {'even' if beta.parity == EVEN else 'odd'} parity"
        )
    m = beta.matrix
    n = b.dim
    wit = {}
    sup = skw = True
    for i in range(n):
        for j in range(n):
            s = ksign(b.parity(i), b.parity(j))
            if sup and m[i][j] != s * m[j][i]:
                sup = False
                wit.setdefault("supersymmetric", (b.labels[i], b.labels[j]))
            if skw and m[i][j] != -s * m[j][i]:
                skw = False
                wit.setdefault("skew_supersymmetric", (b.labels[i], b.labels[j]))
    ads = [ad_matrix(g, la.unit_vec(n, x)) for x in range(n)]
    mb = [la.mat_mul(m, a) for a in ads]  # (M B_x)
    qm = [la.mat_mul(la.transpose(a), m) for a in ads]  # (B_x^T M)
    p = b.parities
    inv = coc = True
    zero = Fraction(0)
    for i in range(n):
        qi = qm[i]
        for j in range(n):
            pj = mb[j]
            for k in range(n):
                if inv and qi[j][k] != pj[i][k]:
                    inv = False
                    wit.setdefault("invariant", (b.labels[i], b.labels[j], b.labels[k]))
                if coc:
                    t1 = pj[i][k]
                    t2 = mb[k][j][i]
                    t3 = mb[i][k][j]
                    if t1 or t2 or t3:
                        acc = zero
                        if t1:
                            acc += ksign(p[k], p[i]) * t1
                        if t2:
                            acc += ksign(p[i], p[j]) * t2
                        if t3:
                            acc += ksign(p[j], p[k]) * t3
                        if acc != 0:
                            coc = False
                            wit.setdefault(
                                "cocycle", (b.labels[i], b.labels[j], b.labels[k])
                            )
                if not inv and not coc:
                    break
            if not inv and not coc:
                break
        if not inv and not coc:
            break
    nondeg = la.rank(m) == n
    if not nondeg:
        wit.setdefault("nondegenerate", ())
    return FormReport(beta.parity, sup, skw, inv, coc, nondeg, wit)


def is_quadratic(g, beta, parity=None):
    rep = classify_form(g, beta)
    return rep.is_quadratic() and (parity is None or beta.parity == parity)


def is_symplectic(g, omega, parity=None):
    rep = classify_form(g, omega)
    return rep.is_symplectic() and (parity is None or omega.parity == parity)


def orthogonal_subspace(g, beta, s):
    """{x : beta(x, v) = 0 for all v in S}, as an exact nullspace."""
    if s.dim == 0:
        rows = ()
    else:
        rows = tuple(la.mat_vec(beta.matrix, v) for v in s.rows)
    ker = la.nullspace(rows, ncols=g.dim)
    return span(g.basis, ker)


def _block_signs(b, degree):
    return tuple(
        Fraction(ksign(degree, b.parity(i))) for i in range(b.dim)
    )


def adjoint_map(g, omega, dmap):
    """D* with omega(D(X),Y) = (−1)^{|D||X|} omega(X, D*(Y))."""
    from .maps import LinearMap

    inv = la.inverse(omega.matrix)
    if inv is None:
        raise DegenerateForm("adjoint needs a non-degenerate form")
    n = g.dim
    s = _block_signs(g.basis, dmap.degree)
    # rows: (S Omega) D* = D^T Omega
    somega = tuple(
        tuple(s[i] * omega.matrix[i][j] for j in range(n)) for i in range(n)
    )
    rhs = la.mat_mul(la.transpose(dmap.matrix), omega.matrix)
    dstar = la.mat_mul(la.inverse(somega), rhs)
    return LinearMap(dstar, dmap.degree)


@dataclass(frozen=True)
class FormSpace:
    ambient: object  # GradedBasis
    parity: int
    basis_forms: tuple

    @property
    def dim(self):
        return len(self.basis_forms)


def invariant_form_space(g, parity, symmetry):
    """Exact solution space of {parity pattern, chosen symmetry,
    invariance or the cocycle identity} in the matrix entries.

    symmetry: "supersymmetric" pairs with invariance,
    "skew_supersymmetric_cocycle" pairs with the cocycle identity.
    """
    if symmetry not in ("supersymmetric", "skew_supersymmetric_cocycle"):
        raise ValueError(f"unknown symmetry {symmetry!r}")
    b = g.basis
    n = b.dim
    nv = n * n
    rows = []

    def e(i, j):
        return i * n + j

    for i in range(n):
        for j in range(n):
            same = b.parity(i) == b.parity(j)
            if same != (parity == EVEN):
                r = [Fraction(0)] * nv
                r[e(i, j)] = Fraction(1)
                rows.append(tuple(r))
    sgn = 1 if symmetry == "supersymmetric" else -1
    for i in range(n):
        for j in range(i, n):
            r = [Fraction(0)] * nv
            r[e(i, j)] += Fraction(1)
            r[e(j, i)] -= Fraction(sgn * ksign(b.parity(i), b.parity(j)))
            if any(x != 0 for x in r):
                rows.append(tuple(r))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                r = [Fraction(0)] * nv
                if symmetry == "supersymmetric":
                    for t, c in g.bracket_basis(i, j).items():
                        r[e(t, k)] += c
                    for t, c in g.bracket_basis(j, k).items():
                        r[e(i, t)] -= c
                else:
                    for (x, y, z), sg in (
                        ((i, j, k), ksign(b.parity(k), b.parity(i))),
                        ((j, k, i), ksign(b.parity(i), b.parity(j))),
                        ((k, i, j), ksign(b.parity(j), b.parity(k))),
                    ):
                        for t, c in g.bracket_basis(y, z).items():
                            r[e(x, t)] += sg * c
                if any(x != 0 for x in r):
                    rows.append(tuple(r))
    ker = la.nullspace(tuple(rows), ncols=nv)
    forms = tuple(
        BilinearForm(tuple(tuple(v[e(i, j)] for j in range(n)) for i in range(n)), parity)
        for v in ker
    )
    return FormSpace(b, parity, forms)


@dataclass(frozen=True)
class NondegeneracyAnswer:
    status: str  # "yes" | "no" | "unknown"
    coefficients: tuple = None
    witness: object = None  # BilinearForm

    def __bool__(self):
        return self.status == "yes"


def _det_polynomial(mats):
    """det(sum c_i M_i) as {exponent tuple: coeff}, by cofactor expansion
    memoized on (row, used-column set)."""
    k = len(mats)
    n = len(mats[0]) if mats else 0

    def pmul(p, q):
        out = {}
        for ea, ca in p.items():
            for eb, cb in q.items():
                ee = tuple(x + y for x, y in zip(ea, eb))
                out[ee] = out.get(ee, Fraction(0)) + ca * cb
        return {e: c for e, c in out.items() if c != 0}

    def entry_poly(i, j):
        out = {}
        for t in range(k):
            c = mats[t][i][j]
            if c != 0:
                e = tuple(1 if s == t else 0 for s in range(k))
                out[e] = out.get(e, Fraction(0)) + c
        return out

    one = {(0,) * k: Fraction(1)}
    cache = {}

    def rec(row, used):
        if row == n:
            return one
        key = (row, used)
        if key in cache:
            return cache[key]
        acc = {}
        sign = 1
        for j in range(n):
            if used & (1 << j):
                continue
            p = entry_poly(row, j)
            if p:
                sub = rec(row + 1, used | (1 << j))
                for e, c in pmul(p, sub).items():
                    acc[e] = acc.get(e, Fraction(0)) + sign * c
            sign = -sign
        acc = {e: c for e, c in acc.items() if c != 0}
        cache[key] = acc
        return acc

    return rec(0, 0)


def exists_nondegenerate(space, seed=DEFAULT_SEED):
    """Decide whether the span of space.basis_forms contains a
    non-degenerate form.  Exact (determinant as a polynomial in the
    span coordinates) for ambient dim <= 8 and space dim <= 4; above
    that, Schwartz–Zippel sampling that can return "unknown"."""
    k = space.dim
    n = space.ambient.dim
    if k == 0:
        return NondegeneracyAnswer("no") if n > 0 else NondegeneracyAnswer(
            "yes", (), zero_form(0, space.parity)
        )
    mats = [f.matrix for f in space.basis_forms]

    def combine(coeffs):
        acc = la.zeros(n, n)
        for c, m in zip(coeffs, mats):
            if c != 0:
                acc = la.mat_add(acc, la.mat_scale(c, m))
        return acc

    if n <= 8 and k <= 4:
        poly = _det_polynomial(mats)
        if not poly:
            return NondegeneracyAnswer("no")
        # the determinant has degree <= n in each coordinate, so it cannot
        # vanish on the whole grid {0..n}^k unless it is the zero polynomial
        for point in itertools.product(range(n + 1), repeat=k):
            coeffs = tuple(Fraction(x) for x in point)
            if la.det(combine(coeffs)) != 0:
                return NondegeneracyAnswer(
                    "yes", coeffs, BilinearForm(combine(coeffs), space.parity)
                )
        raise AssertionError("nonzero determinant polynomial with no grid witness")
    rng = random.Random(seed)
    bound = 10 * n * k
    for _ in range(20):
        coeffs = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(k))
        if la.det(combine(coeffs)) != 0:
            return NondegeneracyAnswer(
                "yes", coeffs, BilinearForm(combine(coeffs), space.parity)
            )
    return NondegeneracyAnswer("unknown")


def admits_both_quadratic(g, seed=DEFAULT_SEED):
    """"yes" iff both the even and the odd invariant supersymmetric form
    spaces contain a non-degenerate element; "unknown" propagates."""
    answers = []
    for parity in (EVEN, ODD):
        space = invariant_form_space(g, parity, "supersymmetric")
        answers.append(exists_nondegenerate(space, seed=seed).status)
    if "no" in answers:
        return "no"
    if "unknown" in answers:
        return "unknown"
    return "yes"


def restrict_form(beta, rows):
    """Gram matrix of beta on the given spanning rows."""
    return tuple(
        tuple(
            la.vec_dot(la.mat_vec(beta.matrix, w), v)
            for w in rows
        )
        for v in rows
    )
