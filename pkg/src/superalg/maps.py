"""Homogeneous linear maps on a graded basis: superderivation and
skew-symmetry predicates, supercommutators, the derivation linking a
quadratic form to a symplectic one, and exact rational eigen-splitting.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from .core import EVEN, ODD, ksign, span, Subspace, vector_parity
from .errors import (
    DegenerateForm,
    InvariantViolation,
    NotADerivation,
)

__all__ = [
    "LinearMap",
    "linear_map",
    "zero_map",
    "identity_map",
    "map_from_images",
    "degree_pattern_ok",
    "DerivationReport",
    "superderivation_check",
    "skew_check",
    "supercommutator",
    "symplectic_derivation",
    "EigenSplit",
    "rational_eigen_split",
]


@dataclass(frozen=True)
class LinearMap:
    matrix: tuple  # column i = image of basis vector i
    degree: int

    def __call__(self, v):
        return la.mat_vec(self.matrix, tuple(v))

    @property
    def dim(self):
        return len(self.matrix)

    def is_invertible(self):
        return la.inverse(self.matrix) is not None


def linear_map(rows, degree):
    return LinearMap(la.mat(rows), degree)


def zero_map(n, degree):
    return LinearMap(la.zeros(n, n), degree)


def identity_map(n):
    return LinearMap(la.identity(n), EVEN)


def map_from_images(b, images, degree):
    """Build a LinearMap from {label: {label: coeff}} images."""
    n = b.dim
    m = [[Fraction(0)] * n for _ in range(n)]
    for src, img in images.items():
        j = b.index(src)
        for dst, c in img.items():
            m[b.index(dst)][j] = la.frac(c)
    return LinearMap(tuple(tuple(r) for r in m), degree)


def degree_pattern_ok(b, dmap):
    for i in range(b.dim):
        for j in range(b.dim):
            if dmap.matrix[i][j] != 0:
                if (b.parity(i) + b.parity(j)) % 2 != dmap.degree % 2:
                    return False
    return True


@dataclass(frozen=True)
class DerivationReport:
    ok: bool
    witness: tuple = None  # (label_i, label_j)
    residual: tuple = None

    def __bool__(self):
        return self.ok


def superderivation_check(g, dmap):
    """D[X,Y] = [D(X),Y] + (−1)^{|D||X|}[X,D(Y)] on all basis pairs,
    checked per generator i through the matrix identity
    D·ad(b_i) = ad(D b_i) + (−1)^{|D||b_i|} ad(b_i)·D."""
    from .core import ad_matrix

    n = g.dim
    d = dmap.degree
    for i in range(n):
        adi = ad_matrix(g, la.unit_vec(n, i))
        lhs = la.mat_mul(dmap.matrix, adi)
        di = tuple(dmap.matrix[t][i] for t in range(n))
        addi = ad_matrix(g, di)
        s = Fraction(ksign(d, g.basis.parity(i)))
        rhs = la.mat_add(addi, la.mat_scale(s, la.mat_mul(adi, dmap.matrix)))
        if lhs != rhs:
            for j in range(n):
                col_l = tuple(lhs[t][j] for t in range(n))
                col_r = tuple(rhs[t][j] for t in range(n))
                if col_l != col_r:
                    resid = tuple(x - y for x, y in zip(col_l, col_r))
                    return DerivationReport(
                        False, (g.basis.labels[i], g.basis.labels[j]), resid
                    )
    return DerivationReport(True)


def skew_check(g, beta, dmap):
    """beta(D(X),Y) = −(−1)^{|D||X|} beta(X,D(Y)) on all basis pairs,
    i.e. D^T B = −S B D with S the block sign of (−1)^{|D||X|}."""
    n = g.dim
    lhs = la.mat_mul(la.transpose(dmap.matrix), beta.matrix)
    s = tuple(Fraction(ksign(dmap.degree, g.basis.parity(i))) for i in range(n))
    sbd = la.mat_mul(beta.matrix, dmap.matrix)
    rhs = tuple(tuple(-s[i] * sbd[i][j] for j in range(n)) for i in range(n))
    return lhs == rhs


def supercommutator(d1, d2):
    """[D1,D2] = D1∘D2 − (−1)^{|D1||D2|} D2∘D1, of degree |D1|+|D2|."""
    if d1.dim != d2.dim:
        raise InvariantViolation("supercommutator", "ambient dimension mismatch")
    a = la.mat_mul(d1.matrix, d2.matrix)
    b = la.mat_mul(d2.matrix, d1.matrix)
    s = ksign(d1.degree, d2.degree)
    m = la.mat_sub(a, la.mat_scale(Fraction(s), b))
    return LinearMap(m, (d1.degree + d2.degree) % 2)


def symplectic_derivation(g, quad, symp):
    """The unique Delta with symp(X,Y) = quad(Delta(X),Y); its degree is
    |quad|+|symp|.  The result is re-verified to be an invertible
    skew-symmetric superderivation, as the characterization demands."""
    binv = la.inverse(quad.matrix)
    if binv is None:
        raise DegenerateForm("quadratic form is singular")
    # symp = Delta^T · quad  =>  Delta = (symp · quad^{-1})^T
    delta = la.transpose(la.mat_mul(symp.matrix, binv))
    degree = (quad.parity + symp.parity) % 2
    out = LinearMap(delta, degree)
    if not degree_pattern_ok(g.basis, out):
        raise NotADerivation("solved map is not homogeneous of the expected degree")
    if la.inverse(delta) is None:
        raise DegenerateForm("symplectic candidate is degenerate")
    if not skew_check(g, quad, out):
        raise NotADerivation("solved map is not skew-symmetric for the quadratic form")
    rep = superderivation_check(g, out)
    if not rep.ok:
        raise NotADerivation(f"solved map fails the derivation identity at {rep.witness}")
    return out


@dataclass(frozen=True)
class EigenSplit:
    pairs: tuple  # ((eigenvalue, Subspace), ...) sorted by (num, den)
    residual: Subspace

    def eigenvalues(self):
        return tuple(ev for ev, _ in self.pairs)

    def complete(self):
        return sum(s.dim for _, s in self.pairs) + self.residual.dim

    def eigenspace(self, ev):
        for e, s in self.pairs:
            if e == ev:
                return s
        return None


def rational_eigen_split(dmap, s):
    """All rational eigenvalues of D restricted to the invariant subspace
    S, with exact eigenspaces (plain kernels), plus the kernel of the
    root-free factor of the characteristic polynomial as residual."""
    amb = s.ambient
    rows = s.rows
    m = len(rows)
    if m == 0:
        return EigenSplit((), span(amb, ()))
    # restriction matrix: D(row_j) expressed in row coordinates
    cols = tuple(tuple(rows[j][i] for j in range(m)) for i in range(amb.dim))
    rcols = []
    for r in rows:
        img = dmap(r)
        c = la.solve(cols, img)
        if c is None:
            raise InvariantViolation("eigen-split", "subspace not invariant under the map")
        rcols.append(c)
    rmat = tuple(tuple(rcols[j][i] for j in range(m)) for i in range(m))
    poly = la.charpoly(rmat)
    roots = la.rational_roots(poly)
    pairs = []
    rest = list(poly)
    for ev, mult in roots:
        shifted = la.mat_sub(rmat, la.mat_scale(ev, la.identity(m)))
        ker = la.nullspace(shifted, ncols=m)
        vecs = [_lift(c, rows, amb.dim) for c in ker]
        pairs.append((ev, span(amb, vecs)))
        for _ in range(mult):
            rest, rem = la.poly_divmod_linear(tuple(rest), ev)
            rest = list(rest)
    if len(rest) > 1:
        qd = la.apply_poly(tuple(rest), rmat)
        ker = la.nullspace(qd, ncols=m)
        resid = span(amb, [_lift(c, rows, amb.dim) for c in ker])
    else:
        resid = span(amb, ())
    return EigenSplit(tuple(pairs), resid)


def _lift(coeffs, rows, n):
    v = la.zero_vec(n)
    for c, r in zip(coeffs, rows):
        if c != 0:
            v = la.vec_add(v, la.vec_scale(c, r))
    return v
