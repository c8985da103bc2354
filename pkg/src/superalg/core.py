"""Graded bases, subspaces and the structure-constant model of a Lie
superalgebra, together with the basic structural operations: brackets,
the graded Jacobi check, center, lower central series, direct sums and
the parity-flipped dual basis.

Conventions baked in here and relied on everywhere else:

* parities are ints, 0 = even, 1 = odd; a basis always lists its even
  vectors first;
* a bracket table stores entries only for index pairs i <= j; the pair
  (j, i) is derived through super skew-symmetry, and an even diagonal
  entry [b_i, b_i] is forced to vanish by the storage itself;
* all values are immutable after construction and all operations are
  pure functions, so concurrent use is safe.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from .errors import DimensionMismatch, InvariantViolation

EVEN = 0
ODD = 1


def ksign(p, q):
    """Koszul sign (−1)^{pq} for parities p, q."""
    return -1 if (p & 1) and (q & 1) else 1


@dataclass(frozen=True)
class GradedBasis:
    labels: tuple
    parities: tuple

    def __post_init__(self):
        if len(self.labels) != len(self.parities):
            raise InvariantViolation("basis", "labels/parities length mismatch")
        if len(set(self.labels)) != len(self.labels):
            raise InvariantViolation("basis", "duplicate labels")
        if any(p not in (EVEN, ODD) for p in self.parities):
            raise InvariantViolation("basis", "parities must be 0 or 1")
        seen_odd = False
        for p in self.parities:
            if p == ODD:
                seen_odd = True
            elif seen_odd:
                raise InvariantViolation("basis", "even vectors must precede odd ones")

    @property
    def dim(self):
        return len(self.labels)

    @property
    def n_even(self):
        return sum(1 for p in self.parities if p == EVEN)

    @property
    def n_odd(self):
        return self.dim - self.n_even

    def parity(self, i):
        return self.parities[i]

    def index(self, label):
        return self.labels.index(label)

    def __str__(self):
        return f"({self.n_even}|{self.n_odd})"


def basis(labels_parities):
    """Build a GradedBasis from (label, parity) pairs."""
    labels = tuple(l for l, _ in labels_parities)
    parities = tuple(p for _, p in labels_parities)
    return GradedBasis(labels, parities)


def vector_parity(b, v):
    """Parity of a vector over basis b: 0, 1, or None if mixed / zero."""
    ps = {b.parity(i) for i, c in enumerate(v) if c != 0}
    if len(ps) == 1:
        return ps.pop()
    return None


@dataclass(frozen=True)
class Subspace:
    """Row-echelonized span inside an ambient graded basis."""

    ambient: GradedBasis
    rows: tuple
    graded: bool

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, v):
        red, pivots = la.rref(self.rows + (tuple(v),))
        return len(red) == len(self.rows)

    def intersect(self, other):
        # kernel trick: x in both spans
        if self.dim == 0 or other.dim == 0:
            return span(self.ambient, ())
        stacked = self.rows + other.rows
        ker = la.nullspace(tuple(zip(*stacked)), ncols=len(stacked))
        vecs = []
        for c in ker:
            v = la.zero_vec(self.ambient.dim)
            for ci, row in zip(c[: self.dim], self.rows):
                v = la.vec_add(v, la.vec_scale(ci, row))
            vecs.append(v)
        return span(self.ambient, vecs)

    def add(self, other):
        return span(self.ambient, self.rows + other.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))


def span(ambient, vectors):
    rows, _ = la.rref(tuple(tuple(la.frac(x) for x in v) for v in vectors))
    graded = all(vector_parity(ambient, r) is not None for r in rows)
    return Subspace(ambient, rows, graded)


def full_space(ambient):
    return Subspace(ambient, la.identity(ambient.dim), True)


def _normalize_table(dim, parities, entries):
    """Validate and canonicalize a sparse table {(i,j): {k: coeff}}."""
    norm = []
    for (i, j), row in sorted(entries.items()):
        if not (0 <= i <= j < dim):
            raise InvariantViolation("table", f"bad index pair ({i},{j})")
        cleaned = tuple(
            (k, la.frac(c)) for k, c in sorted(row.items()) if la.frac(c) != 0
        )
        if not cleaned:
            continue
        if any(not 0 <= k < dim for k, _ in cleaned):
            raise InvariantViolation("table", f"bad target index in ({i},{j})")
        if i == j and parities[i] == EVEN:
            raise InvariantViolation(
                "table", f"nonzero [b{i},b{i}] with b{i} even violates skew-symmetry"
            )
        want = (parities[i] + parities[j]) % 2
        if any(parities[k] != want for k, _ in cleaned):
            raise InvariantViolation(
                "table", f"entry ({i},{j}) breaks parity additivity"
            )
        norm.append(((i, j), cleaned))
    return tuple(norm)


@dataclass(frozen=True)
class LieSuperalgebra:
    basis: GradedBasis
    table: tuple

    def __post_init__(self):
        tab = {}
        for (i, j), row in self.table:
            tab[(i, j)] = dict(row)
            if i != j:
                s = -ksign(self.basis.parity(i), self.basis.parity(j))
                tab[(j, i)] = {k: s * c for k, c in row}
        object.__setattr__(self, "_tab", tab)
        object.__setattr__(self, "_empty", {})

    @property
    def dim(self):
        return self.basis.dim

    def bracket_basis(self, i, j):
        """[b_i, b_j] as a sparse dict, any index order."""
        return self._tab.get((i, j), self._empty)

    def is_abelian(self):
        return not self.table


def algebra(b, entries):
    """Build a LieSuperalgebra from a basis and {(i,j): {k: coeff}} with i<=j."""
    return LieSuperalgebra(b, _normalize_table(b.dim, b.parities, entries))


def algebra_from_labels(b, named_entries):
    """Entries keyed by label pairs, values {label: coeff}."""
    idx = {l: i for i, l in enumerate(b.labels)}
    entries = {}
    for (li, lj), row in named_entries.items():
        i, j = idx[li], idx[lj]
        if i > j:
            i, j = j, i
            s = -ksign(b.parities[idx[li]], b.parities[idx[lj]])
            row = {l: s * la.frac(c) for l, c in row.items()}
        entries[(i, j)] = {idx[l]: la.frac(c) for l, c in row.items()}
    return algebra(b, entries)


def zero_algebra():
    return algebra(GradedBasis((), ()), {})


def bracket(g, x, y):
    """Bilinear extension of the table to arbitrary vectors."""
    n = g.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(f"expected vectors of length {n}")
    out = [Fraction(0)] * n
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        for j, yj in enumerate(y):
            if yj == 0:
                continue
            for k, c in g.bracket_basis(i, j).items():
                out[k] += xi * yj * c
    return tuple(out)


def _bracket_sparse(g, row, j):
    """[v, b_j] for sparse v given as {i: coeff}."""
    out = {}
    for i, ci in row.items():
        for k, c in g.bracket_basis(i, j).items():
            out[k] = out.get(k, Fraction(0)) + ci * c
    return {k: c for k, c in out.items() if c != 0}


@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    witness: tuple = None  # (label_i, label_j, label_k)
    residual: tuple = None

    def __bool__(self):
        return self.ok


def graded_jacobi_check(g):
    """Exact check of the graded Jacobi identity

        (−1)^{|x||z|}[X,[Y,Z]] + (−1)^{|x||y|}[Y,[Z,X]] + (−1)^{|y||z|}[Z,[X,Y]] = 0

    on basis triples.  Scanning i <= j <= k suffices: the table derives
    every bracket through super skew-symmetry, under which the Jacobi
    expression is permutation-symmetric up to an overall sign."""
    n = g.dim
    p = g.basis.parities
    for i in range(n):
        for j in range(i, n):
            for k in range(j, n):
                out = {}
                for (a, bc1, bc2), sgn in (
                    ((i, j, k), ksign(p[i], p[k])),
                    ((j, k, i), ksign(p[i], p[j])),
                    ((k, i, j), ksign(p[j], p[k])),
                ):
                    inner = g.bracket_basis(bc1, bc2)
                    for t, c in inner.items():
                        for u, d in g.bracket_basis(a, t).items():
                            out[u] = out.get(u, Fraction(0)) + sgn * c * d
                res = {u: c for u, c in out.items() if c != 0}
                if res:
                    resid = [Fraction(0)] * n
                    for u, c in res.items():
                        resid[u] = c
                    labels = g.basis.labels
                    return JacobiReport(
                        False, (labels[i], labels[j], labels[k]), tuple(resid)
                    )
    return JacobiReport(True)


def ad_matrix(g, v):
    """Matrix of ad(v): column j holds [v, b_j]."""
    n = g.dim
    cols = []
    for j in range(n):
        col = [Fraction(0)] * n
        for i, ci in enumerate(v):
            if ci == 0:
                continue
            for k, c in g.bracket_basis(i, j).items():
                col[k] += ci * c
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def center(g):
    """Exact kernel of X -> ad(X), computed per parity block so the
    echelon generators stay homogeneous."""
    n = g.dim
    blocks = []
    for par in (EVEN, ODD):
        idxs = [i for i in range(n) if g.basis.parity(i) == par]
        if not idxs:
            continue
        rows = []
        for j in range(n):
            for k in range(n):
                rows.append(tuple(g.bracket_basis(i, j).get(k, Fraction(0)) for i in idxs))
        ker = la.nullspace(tuple(rows), ncols=len(idxs))
        for kv in ker:
            v = [Fraction(0)] * n
            for pos, i in enumerate(idxs):
                v[i] = kv[pos]
            blocks.append(tuple(v))
    return span(g.basis, blocks)


def lower_central_series(g):
    """C1 = g, C(k+1) = [g, Ck], listed until stabilization."""
    series = [full_space(g.basis)]
    while True:
        cur = series[-1]
        vecs = []
        for row in cur.rows:
            srow = {i: c for i, c in enumerate(row) if c != 0}
            for j in range(g.dim):
                br = _bracket_sparse(g, srow, j)
                if br:
                    v = [Fraction(0)] * g.dim
                    for k, c in br.items():
                        v[k] = c
                    vecs.append(tuple(v))
        nxt = span(g.basis, vecs)
        if nxt == cur:
            break
        series.append(nxt)
        if nxt.dim == 0:
            break
    return series


def is_nilpotent(g):
    return lower_central_series(g)[-1].dim == 0


def direct_sum(g, h, prefixes=("l:", "r:")):
    """Block-diagonal sum; labels are prefixed so they stay unique."""
    pg, ph = prefixes
    lp = [(pg + l, p) for l, p in zip(g.basis.labels, g.basis.parities) if p == EVEN]
    lp += [(ph + l, p) for l, p in zip(h.basis.labels, h.basis.parities) if p == EVEN]
    lp += [(pg + l, p) for l, p in zip(g.basis.labels, g.basis.parities) if p == ODD]
    lp += [(ph + l, p) for l, p in zip(h.basis.labels, h.basis.parities) if p == ODD]
    b = basis(lp)
    gmap = {}
    hmap = {}
    for i, l in enumerate(g.basis.labels):
        gmap[i] = b.index(pg + l)
    for i, l in enumerate(h.basis.labels):
        hmap[i] = b.index(ph + l)
    entries = {}
    for src, mp in ((g, gmap), (h, hmap)):
        for (i, j), row in src.table:
            ni, nj = mp[i], mp[j]
            sgn = 1
            if ni > nj:
                ni, nj = nj, ni
                sgn = -ksign(src.basis.parity(i), src.basis.parity(j))
            entries[(ni, nj)] = {mp[k]: sgn * c for k, c in row}
    return algebra(b, entries)


def parity_flip_dual(g):
    """Basis of P(g*): one starred dual label per basis vector, parity
    flipped, re-sorted even-first (duals of odd vectors first)."""
    evens = [(l + "*", EVEN) for l, p in zip(g.basis.labels, g.basis.parities) if p == ODD]
    odds = [(l + "*", ODD) for l, p in zip(g.basis.labels, g.basis.parities) if p == EVEN]
    return basis(evens + odds)


def change_of_basis(g, vectors, labels, parities):
    """Re-express g in a new basis given by `vectors` (old coordinates).
    The vectors must form a homogeneous basis matching `parities`."""
    n = g.dim
    if len(vectors) != n:
        raise DimensionMismatch("change of basis needs dim(g) vectors")
    cols = tuple(tuple(vectors[j][i] for j in range(n)) for i in range(n))
    inv = la.inverse(cols)
    if inv is None:
        raise InvariantViolation("basis-change", "vectors are not a basis")
    for v, p in zip(vectors, parities):
        if not la.vec_is_zero(v) and vector_parity(g.basis, v) != p:
            raise InvariantViolation("basis-change", "vector parity mismatch")
    b = basis(list(zip(labels, parities)))
    entries = {}
    for i in range(n):
        for j in range(i, n):
            br = bracket(g, vectors[i], vectors[j])
            coeffs = la.mat_vec(inv, br)
            row = {k: c for k, c in enumerate(coeffs) if c != 0}
            if row:
                entries[(i, j)] = row
    return algebra(b, entries)
