"""Forward constructions: trivial double extensions and derivation lifts,
the tensor construction over an odd-symmetric associative superalgebra,
central extensions, the one-dimensional symplectic (generalized) double
extensions, the one-dimensional odd-quadratic generalized odd double
extension with its symplectic enrichment, and the two-dimensional
quadratic(-symplectic) generalized double extensions.

Every construction is validation-first: the displayed compatibility
equations are checked exactly before anything is built, and the output
is re-verified (Jacobi, form classification, derivation predicates)
before it is returned.

Coadjoint convention: X acts on a dual functional f by
(X·f)(Z) = −(−1)^{|X||f|} f([X,Z]) with |f| the parity of f in the
extended algebra (so flipped parities in the odd variants).
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from .core import (
    EVEN,
    ODD,
    GradedBasis,
    LieSuperalgebra,
    algebra,
    basis,
    bracket,
    ad_matrix,
    graded_jacobi_check,
    ksign,
    vector_parity,
)
from .errors import (
    ConditionViolated,
    InvariantViolation,
    NotADerivation,
    NotAssociative,
    NotCoboundary,
    NotInvertible,
    NotSupercommutative,
    WrongParity,
    ZeroLambda,
)
from .forms import BilinearForm, classify_form, parity_pattern_ok
from .maps import (
    LinearMap,
    degree_pattern_ok,
    skew_check,
    supercommutator,
    superderivation_check,
    symplectic_derivation,
)

Q0 = Fraction(0)
Q1 = Fraction(1)


# ---------------------------------------------------------------------------
# result containers


@dataclass(frozen=True)
class QuadSympAlgebra:
    algebra: LieSuperalgebra
    quadratic: BilinearForm = None
    symplectic: BilinearForm = None
    derivation: LinearMap = None

    @property
    def dim(self):
        return self.algebra.dim


def check_quad_symp(qsa):
    """Exact verification of every role a QuadSympAlgebra claims."""
    results = {"jacobi": bool(graded_jacobi_check(qsa.algebra))}
    if qsa.quadratic is not None:
        rep = classify_form(qsa.algebra, qsa.quadratic)
        results["quadratic"] = rep.is_quadratic()
    if qsa.symplectic is not None:
        rep = classify_form(qsa.algebra, qsa.symplectic)
        results["symplectic"] = rep.is_symplectic()
    if qsa.derivation is not None and qsa.quadratic is not None:
        d = qsa.derivation
        results["derivation"] = (
            degree_pattern_ok(qsa.algebra.basis, d)
            and d.is_invertible()
            and skew_check(qsa.algebra, qsa.quadratic, d)
            and bool(superderivation_check(qsa.algebra, d))
        )
        if qsa.symplectic is not None:
            want = la.mat_mul(la.transpose(d.matrix), qsa.quadratic.matrix)
            results["compatibility"] = want == qsa.symplectic.matrix
    return results


def assert_valid(qsa):
    results = check_quad_symp(qsa)
    bad = [k for k, v in results.items() if not v]
    if bad:
        raise InvariantViolation("postcondition", ", ".join(bad))
    return qsa


@dataclass(frozen=True)
class Ext1Data:
    """Parameters of a one-dimensional (generalized) double extension."""

    D: LinearMap
    mode: str  # "double" | "generalized"
    x0: tuple = None  # even vector, generalized mode
    b0: tuple = None  # even vector, double mode (solved when omitted)
    k: Fraction = Q0
    c1: tuple = None  # odd vector, symplectic enrichment
    lam: Fraction = None


@dataclass(frozen=True)
class Ext2Data:
    """Parameters of a two-dimensional generalized double extension."""

    D: LinearMap
    Dbar: LinearMap
    x0: tuple
    x1: tuple
    k: Fraction = Q0
    c0: tuple = None
    c1: tuple = None
    lam: Fraction = None
    alpha: Fraction = Q0


# ---------------------------------------------------------------------------
# basis plumbing


def _fresh_labels(taken, candidates):
    suffix = 0
    while True:
        tag = "" if suffix == 0 else str(suffix + 1)
        labels = [c + tag for c in candidates]
        if all(l not in taken for l in labels):
            return labels
        suffix += 1


def _extended_basis(base, duals, news):
    """New basis with, inside each parity block, dual vectors first, then
    the base block, then the new vectors.  Returns (basis, base_map,
    positions) with positions[label] for every added vector."""
    ev, od = [], []
    for label, p in duals:
        (ev if p == EVEN else od).append(label)
    bev = [l for l, p in zip(base.labels, base.parities) if p == EVEN]
    bod = [l for l, p in zip(base.labels, base.parities) if p == ODD]
    ev += bev
    od += bod
    for label, p in news:
        (ev if p == EVEN else od).append(label)
    labels = ev + od
    parities = [EVEN] * len(ev) + [ODD] * len(od)
    b = basis(list(zip(labels, parities)))
    base_map = {i: b.index(l) for i, l in enumerate(base.labels)}
    positions = {l: b.index(l) for l, _ in list(duals) + list(news)}
    return b, base_map, positions


class _Builder:
    """Accumulates a bracket table in arbitrary index order."""

    def __init__(self, b):
        self.b = b
        self.entries = {}

    def set(self, i, j, sparse):
        sparse = {k: la.frac(c) for k, c in sparse.items() if la.frac(c) != 0}
        if not sparse:
            return
        if i > j:
            s = -ksign(self.b.parity(i), self.b.parity(j))
            i, j = j, i
            sparse = {k: s * c for k, c in sparse.items()}
        cur = self.entries.setdefault((i, j), {})
        for k, c in sparse.items():
            cur[k] = cur.get(k, Q0) + c

    def embed_base(self, g, base_map):
        for (i, j), row in g.table:
            self.set(base_map[i], base_map[j], {base_map[k]: c for k, c in row})

    def build(self):
        return algebra(self.b, self.entries)


def _embed_vector(v, base_map, n):
    out = [Q0] * n
    for i, c in enumerate(v):
        out[base_map[i]] = c
    return tuple(out)


def _sym_pair(m, b, i, j, val, skew=False):
    """Set m[i][j] = val and fill m[j][i] by (skew-)supersymmetry."""
    m[i][j] = la.frac(val)
    s = ksign(b.parity(i), b.parity(j))
    m[j][i] = (-1 if skew else 1) * s * la.frac(val)


def _embed_form(mat_rows, base_map, n):
    out = [[Q0] * n for _ in range(n)]
    for i, row in enumerate(mat_rows):
        for j, c in enumerate(row):
            out[base_map[i]][base_map[j]] = c
    return out


def _check_even_vector(g, v, name):
    if v is None:
        raise ConditionViolated(name, "missing vector")
    if len(v) != g.dim:
        raise ConditionViolated(name, "wrong length")
    if not la.vec_is_zero(v) and vector_parity(g.basis, v) != EVEN:
        raise ConditionViolated(name, "must be an even vector")
    return tuple(la.frac(c) for c in v)


def _check_odd_vector(g, v, name):
    if v is None:
        raise ConditionViolated(name, "missing vector")
    if len(v) != g.dim:
        raise ConditionViolated(name, "wrong length")
    if not la.vec_is_zero(v) and vector_parity(g.basis, v) != ODD:
        raise ConditionViolated(name, "must be an odd vector")
    return tuple(la.frac(c) for c in v)


# ---------------------------------------------------------------------------
# trivial double extensions and derivation lifts


def _trivial_layout(h, variant):
    """Basis of h + h* (even variant) or h + P(h*) (odd variant); inside
    each parity block the base vectors come first, duals appended."""
    flip = 1 if variant == "odd" else 0
    ev, od = [], []
    for l, p in zip(h.basis.labels, h.basis.parities):
        (ev if p == EVEN else od).append(l)
    for l, p in zip(h.basis.labels, h.basis.parities):
        dp = (p + flip) % 2
        (ev if dp == EVEN else od).append(l + "*")
    labels = ev + od
    parities = [EVEN] * len(ev) + [ODD] * len(od)
    b = basis(list(zip(labels, parities)))
    base_map = {i: b.index(l) for i, l in enumerate(h.basis.labels)}
    dual_map = {i: b.index(l + "*") for i, l in enumerate(h.basis.labels)}
    return b, base_map, dual_map


def _coadjoint_entries(h, b, base_map, dual_map, builder):
    """[b_i, b_j*] = −(−1)^{|b_i||b_j*|} Σ_k (coeff of b_j in [b_i,b_k]) b_k*."""
    n = h.dim
    for i in range(n):
        for j in range(n):
            img = {}
            for k in range(n):
                c = h.bracket_basis(i, k).get(j, Q0)
                if c != 0:
                    img[dual_map[k]] = img.get(dual_map[k], Q0) + c
            if img:
                s = -ksign(h.basis.parity(i), b.parity(dual_map[j]))
                builder.set(
                    base_map[i], dual_map[j], {k: s * c for k, c in img.items()}
                )


def trivial_double_extension(h, variant):
    """h + h* (variant "even") or h + P(h*) (variant "odd") with the
    coadjoint bracket and the canonical pairing as quadratic form."""
    if variant not in ("even", "odd"):
        raise ValueError("variant must be 'even' or 'odd'")
    b, base_map, dual_map = _trivial_layout(h, variant)
    bld = _Builder(b)
    bld.embed_base(h, base_map)
    _coadjoint_entries(h, b, base_map, dual_map, bld)
    g = bld.build()
    n = b.dim
    m = [[Q0] * n for _ in range(n)]
    for i in range(h.dim):
        pi = h.basis.parity(i)
        if variant == "even":
            m[base_map[i]][dual_map[i]] = Fraction(ksign(pi, pi))
            m[dual_map[i]][base_map[i]] = Q1
        else:
            m[base_map[i]][dual_map[i]] = Q1
            m[dual_map[i]][base_map[i]] = Q1
    pairing = BilinearForm(tuple(tuple(r) for r in m), EVEN if variant == "even" else ODD)
    out = QuadSympAlgebra(g, quadratic=pairing)
    return assert_valid(out)


def lift_derivation(h, dmap, variant, require_invertible=True):
    """Lift an invertible homogeneous superderivation D of h to
    D~(X+f) = D(X) + D*(f) on the trivial double extension, where
    D*(f) = −(−1)^{|f| |D|} f∘D with |f| taken in the extension.

    The skew/derivation conclusions hold without invertibility, so
    require_invertible=False admits singular derivations (the lift is
    then singular as well)."""
    if not degree_pattern_ok(h.basis, dmap):
        raise NotADerivation("map is not homogeneous")
    rep = superderivation_check(h, dmap)
    if not rep.ok:
        raise NotADerivation(f"derivation identity fails at {rep.witness}")
    invertible = dmap.is_invertible()
    if require_invertible and not invertible:
        raise NotInvertible("lift needs an invertible derivation")
    b, base_map, dual_map = _trivial_layout(h, variant)
    n = b.dim
    d = dmap.degree
    m = [[Q0] * n for _ in range(n)]
    for i in range(h.dim):
        for j in range(h.dim):
            c = dmap.matrix[i][j]
            if c != 0:
                m[base_map[i]][base_map[j]] = c
    # f∘D for f = b_j* has dual coordinates given by the transpose of D
    for j in range(h.dim):
        alpha = b.parity(dual_map[j])
        s = -ksign(alpha, d)
        for k in range(h.dim):
            c = dmap.matrix[j][k]
            if c != 0:
                m[dual_map[k]][dual_map[j]] = s * c
    lift = LinearMap(tuple(tuple(r) for r in m), d)
    ext = trivial_double_extension(h, variant)
    if invertible and not lift.is_invertible():
        raise NotInvertible("lifted map is singular")
    if not degree_pattern_ok(b, lift):
        raise InvariantViolation("lift", "lifted map is not homogeneous")
    if not superderivation_check(ext.algebra, lift).ok:
        raise NotADerivation("lifted map fails the derivation identity")
    if not skew_check(ext.algebra, ext.quadratic, lift):
        raise InvariantViolation("lift", "lifted map is not skew for the pairing")
    return lift


# ---------------------------------------------------------------------------
# associative superalgebras and the tensor construction


@dataclass(frozen=True)
class AssocSuperalgebra:
    basis: GradedBasis
    table: tuple  # ((i, j), ((k, coeff), ...)) over all index pairs

    def __post_init__(self):
        object.__setattr__(self, "_tab", {ij: dict(row) for ij, row in self.table})

    @property
    def dim(self):
        return self.basis.dim

    def product_basis(self, i, j):
        return self._tab.get((i, j), {})


def assoc_algebra(b, entries):
    norm = []
    for (i, j), row in sorted(entries.items()):
        cleaned = tuple((k, la.frac(c)) for k, c in sorted(row.items()) if la.frac(c) != 0)
        if not cleaned:
            continue
        want = (b.parity(i) + b.parity(j)) % 2
        if any(b.parity(k) != want for k, _ in cleaned):
            raise InvariantViolation("assoc-table", f"entry ({i},{j}) breaks parity")
        norm.append(((i, j), cleaned))
    return AssocSuperalgebra(b, tuple(norm))


def is_associative(a):
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = {}
                for t, c in a.product_basis(i, j).items():
                    for u, d in a.product_basis(t, k).items():
                        left[u] = left.get(u, Q0) + c * d
                right = {}
                for t, c in a.product_basis(j, k).items():
                    for u, d in a.product_basis(i, t).items():
                        right[u] = right.get(u, Q0) + c * d
                left = {u: c for u, c in left.items() if c != 0}
                right = {u: c for u, c in right.items() if c != 0}
                if left != right:
                    return False
    return True


def is_supercommutative(a):
    n = a.dim
    for i in range(n):
        for j in range(n):
            s = ksign(a.basis.parity(i), a.basis.parity(j))
            left = {k: c for k, c in a.product_basis(i, j).items() if c != 0}
            right = {k: s * c for k, c in a.product_basis(j, i).items() if s * c != 0}
            if left != right:
                return False
    return True


def _assoc_form_invariant(a, bform):
    n = a.dim
    m = bform.matrix
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = sum((c * m[t][k] for t, c in a.product_basis(i, j).items()), Q0)
                rhs = sum((c * m[i][t] for t, c in a.product_basis(j, k).items()), Q0)
                if lhs != rhs:
                    return False
    return True


def tensor_odd_symmetric(h, omega, a, b_a):
    """g = h⊗A for a symplectic (purely even) Lie algebra (h, omega) and
    an odd-symmetric associative supercommutative superalgebra (A, B_A):
    [X⊗a, Y⊗b] = [X,Y]_h ⊗ a·b with Omega(X⊗a, Y⊗b) = omega(X,Y) B_A(a,b)."""
    if h.basis.n_odd != 0:
        raise ConditionViolated("tensor-base", "h must be purely even")
    rep = classify_form(h, omega)
    if not rep.is_symplectic():
        raise ConditionViolated("tensor-omega", "omega must be symplectic on h")
    if not is_associative(a):
        raise NotAssociative("A is not associative")
    if not is_supercommutative(a):
        raise NotSupercommutative("A is not supercommutative")
    if b_a.parity != ODD or not parity_pattern_ok(a.basis, b_a):
        raise ConditionViolated("tensor-form", "B_A must be odd")
    for i in range(a.dim):
        for j in range(a.dim):
            s = ksign(a.basis.parity(i), a.basis.parity(j))
            if b_a.matrix[i][j] != s * b_a.matrix[j][i]:
                raise ConditionViolated("tensor-form", "B_A must be supersymmetric")
    if not _assoc_form_invariant(a, b_a):
        raise ConditionViolated("tensor-form", "B_A must be invariant")
    if la.rank(b_a.matrix) != a.dim:
        raise ConditionViolated("tensor-form", "B_A must be non-degenerate")

    pairs = []  # A-major ordering, evens first comes out automatically
    for j in range(a.dim):
        for i in range(h.dim):
            pairs.append((i, j))
    pairs.sort(key=lambda ij: a.basis.parity(ij[1]))
    labels = [f"{h.basis.labels[i]}.{a.basis.labels[j]}" for i, j in pairs]
    parities = [a.basis.parity(j) for _, j in pairs]
    b = basis(list(zip(labels, parities)))
    pos = {ij: t for t, ij in enumerate(pairs)}
    bld = _Builder(b)
    for t1, (i1, j1) in enumerate(pairs):
        for t2, (i2, j2) in enumerate(pairs):
            if t1 > t2:
                continue
            out = {}
            for k, c in h.bracket_basis(i1, i2).items():
                for l, d in a.product_basis(j1, j2).items():
                    idx = pos[(k, l)]
                    out[idx] = out.get(idx, Q0) + c * d
            if t1 == t2 and b.parity(t1) == EVEN:
                if any(c != 0 for c in out.values()):
                    raise InvariantViolation("tensor", "even diagonal bracket")
                continue
            bld.set(t1, t2, out)
    g = bld.build()
    n = b.dim
    m = [[Q0] * n for _ in range(n)]
    for t1, (i1, j1) in enumerate(pairs):
        for t2, (i2, j2) in enumerate(pairs):
            m[t1][t2] = omega.matrix[i1][i2] * b_a.matrix[j1][j2]
    big = BilinearForm(tuple(tuple(r) for r in m), ODD)
    return assert_valid(QuadSympAlgebra(g, symplectic=big))


# ---------------------------------------------------------------------------
# central extensions (one dual line)


def _central_gamma(g, omega, dmap, variant):
    """gamma(X,Y) = −[omega(D X, Y) + (−1)^{|e||x|} omega(X, D Y)], with an
    extra global −(−1)^{|e|} for the even-symplectic variant."""
    n = g.dim
    d = dmap.degree
    factor = Fraction(-1) if variant == "odd" else Fraction(-ksign(d, 1))
    dm = dmap.matrix
    om = omega.matrix
    out = [[Q0] * n for _ in range(n)]
    for i in range(n):
        si = ksign(d, g.basis.parity(i))
        for j in range(n):
            val = Q0
            for t in range(n):
                if dm[t][i] != 0:
                    val += dm[t][i] * om[t][j]
                if dm[t][j] != 0:
                    val += si * om[i][t] * dm[t][j]
            out[i][j] = factor * val
    return out


def central_extension(g, omega, dmap, variant):
    """Central extension of g by the line spanned by e*, with bracket
    [X,Y] = gamma(X,Y) e* + [X,Y]_g; e* sits in P(K e*) for the odd
    variant (parity |e|+1) and in K e* for the even variant (parity |e|)."""
    if variant not in ("even", "odd"):
        raise ValueError("variant must be 'even' or 'odd'")
    want = ODD if variant == "odd" else EVEN
    if omega.parity != want or not parity_pattern_ok(g.basis, omega):
        raise WrongParity(f"omega must be a {variant} form")
    if not degree_pattern_ok(g.basis, dmap):
        raise NotADerivation("D is not homogeneous")
    rep = superderivation_check(g, dmap)
    if not rep.ok:
        raise NotADerivation(f"derivation identity fails at {rep.witness}")
    d = dmap.degree
    estar_parity = (d + 1) % 2 if variant == "odd" else d
    (estar_label,) = _fresh_labels(set(g.basis.labels), ["e*"])
    b, base_map, pos = _extended_basis(g.basis, [(estar_label, estar_parity)], [])
    gamma = _central_gamma(g, omega, dmap, variant)
    bld = _Builder(b)
    bld.embed_base(g, base_map)
    es = pos[estar_label]
    for i in range(g.dim):
        for j in range(g.dim):
            if i <= j and gamma[i][j] != 0:
                bld.set(base_map[i], base_map[j], {es: gamma[i][j]})
    out = bld.build()
    rep = graded_jacobi_check(out)
    if not rep.ok:
        raise InvariantViolation("postcondition", f"jacobi fails at {rep.witness}")
    return out


# ---------------------------------------------------------------------------
# one-dimensional symplectic (generalized) double extension


def _theta_matrix(g, omega, dmap, omega_parity):
    """theta(X,Y) = t · omega((D² + D*² [+ 2 D*D for even |e|])(X), Y);
    t = 1 for the odd-symplectic case and −(−1)^{|e|} for the even one."""
    from .forms import adjoint_map

    d = dmap.degree
    dstar = adjoint_map(g, omega, dmap)
    op = la.mat_add(
        la.mat_mul(dmap.matrix, dmap.matrix), la.mat_mul(dstar.matrix, dstar.matrix)
    )
    if d % 2 == 0:
        op = la.mat_add(op, la.mat_scale(2, la.mat_mul(dstar.matrix, dmap.matrix)))
    t = Q1 if omega_parity == ODD else Fraction(-ksign(d, 1))
    return la.mat_scale(t, la.mat_mul(la.transpose(op), omega.matrix))


def symplectic_double_extension(g, omega, data, omega_parity):
    """Double extension (mode "double", |e| even, by means of (D, b0)) or
    generalized double extension (mode "generalized", |e| odd, by means
    of (D, x0)) of the symplectic algebra (g, omega) by a line K e.

    New brackets on (e*-line) + g + K e:
        [e,e] = (1/2)(1−(−1)^{|e|}) x0,   [e,X] = D(X) + s·omega(b0, X) e*,
        [X,Y] = [X,Y]_g + gamma(X,Y) e*,
    with s = −1 for odd omega and +1 for even omega, and Omega extending
    omega by Omega(e*, e) = 1."""
    if omega_parity not in ("even", "odd"):
        raise ValueError("omega_parity must be 'even' or 'odd'")
    par = ODD if omega_parity == "odd" else EVEN
    if omega.parity != par or not parity_pattern_ok(g.basis, omega):
        raise WrongParity(f"omega must be a {omega_parity} form")
    dmap = data.D
    if not degree_pattern_ok(g.basis, dmap):
        raise NotADerivation("D is not homogeneous")
    rep = superderivation_check(g, dmap)
    if not rep.ok:
        raise NotADerivation(f"derivation identity fails at {rep.witness}")
    d = dmap.degree
    if data.mode == "generalized":
        if d != ODD:
            raise ConditionViolated("mode", "generalized extension needs odd D")
        x0 = _check_even_vector(g, data.x0, "x0")
        if not la.vec_is_zero(dmap(x0)):
            raise ConditionViolated("D(x0)=0")
        dd = la.mat_mul(dmap.matrix, dmap.matrix)
        half_ad = la.mat_scale(Fraction(1, 2), ad_matrix(g, x0))
        if dd != half_ad:
            raise ConditionViolated("D^2 = (1/2) ad(x0)")
        if omega_parity == "even" and omega(x0, x0) != 0:
            raise ConditionViolated("omega(x0,x0) = 0")
        b0 = la.vec_scale(Fraction(1, 2), x0)
    elif data.mode == "double":
        if d != EVEN:
            raise ConditionViolated("mode", "double extension needs even D")
        x0 = la.zero_vec(g.dim)
        b0 = data.b0
    else:
        raise ValueError("mode must be 'double' or 'generalized'")

    theta = _theta_matrix(g, omega, dmap, par)
    if data.mode == "double":
        b0 = _solve_or_check_b0(g, omega, theta, b0)
    else:
        # the theorem asserts theta = omega(x0/2, [.,.]) for odd D
        _verify_coboundary(g, omega, theta, b0, strict=True)

    s = Fraction(-1) if omega_parity == "odd" else Q1
    estar_parity = (d + 1) % 2 if omega_parity == "odd" else d
    estar_label, e_label = _fresh_labels(set(g.basis.labels), ["e*", "e"])
    b, base_map, pos = _extended_basis(
        g.basis, [(estar_label, estar_parity)], [(e_label, d)]
    )
    es, ee = pos[estar_label], pos[e_label]
    gamma = _central_gamma(g, omega, dmap, omega_parity)
    bld = _Builder(b)
    bld.embed_base(g, base_map)
    for i in range(g.dim):
        for j in range(i, g.dim):
            if gamma[i][j] != 0:
                bld.set(base_map[i], base_map[j], {es: gamma[i][j]})
    # omega(b0, X) as a functional of X
    omega_b0 = tuple(
        la.vec_dot(b0, tuple(omega.matrix[t][j] for t in range(g.dim)))
        for j in range(g.dim)
    )
    for j in range(g.dim):
        img = {base_map[t]: dmap.matrix[t][j] for t in range(g.dim)}
        if omega_b0[j] != 0:
            img[es] = img.get(es, Q0) + s * omega_b0[j]
        bld.set(ee, base_map[j], img)
    if d == ODD:
        ee_img = {base_map[t]: c for t, c in enumerate(x0)}
        bld.set(ee, ee, ee_img)
    out = bld.build()
    n = b.dim
    m = _embed_form(omega.matrix, base_map, n)
    _sym_pair(m, b, es, ee, Q1, skew=True)
    big = BilinearForm(tuple(tuple(r) for r in m), par)
    result = QuadSympAlgebra(out, symplectic=big)
    return assert_valid(result)


def _solve_or_check_b0(g, omega, theta, b0):
    """Find (or verify) the even b0 with omega(b0, [X,Y]) = theta(X,Y)."""
    if b0 is not None:
        b0 = _check_even_vector(g, b0, "b0")
        _verify_coboundary(g, omega, theta, b0, strict=False)
        return b0
    evens = [i for i in range(g.dim) if g.basis.parity(i) == EVEN]
    rows, rhs = [], []
    for i in range(g.dim):
        for j in range(i, g.dim):
            br = g.bracket_basis(i, j)
            if not br and theta[i][j] == 0:
                continue
            v = [Q0] * g.dim
            for k, c in br.items():
                v[k] = c
            func = la.mat_vec(omega.matrix, tuple(v))
            rows.append(tuple(func[t] for t in evens))
            rhs.append(theta[i][j])
    if not rows:
        return la.zero_vec(g.dim)
    sol = la.solve(tuple(rows), tuple(rhs))
    if sol is None:
        raise NotCoboundary("theta is not the coboundary of any even b0")
    out = [Q0] * g.dim
    for pos, i in enumerate(evens):
        out[i] = sol[pos]
    return tuple(out)


def _verify_coboundary(g, omega, theta, b0, strict):
    for i in range(g.dim):
        for j in range(g.dim):
            br = g.bracket_basis(i, j)
            v = [Q0] * g.dim
            for k, c in br.items():
                v[k] = c
            want = la.vec_dot(b0, la.mat_vec(omega.matrix, tuple(v)))
            if theta[i][j] != want:
                if strict:
                    raise ConditionViolated(
                        "theta coboundary",
                        f"theta != omega(b0,[.,.]) at ({g.basis.labels[i]},{g.basis.labels[j]})",
                    )
                raise NotCoboundary(
                    f"omega(b0,[X,Y]) != theta(X,Y) at ({g.basis.labels[i]},{g.basis.labels[j]})"
                )


# ---------------------------------------------------------------------------
# generalized odd double extension by one odd line (odd-quadratic case)


def _check_skew_derivation(g, bform, dmap, degree, name):
    if dmap.degree != degree or not degree_pattern_ok(g.basis, dmap):
        raise ConditionViolated(name, "wrong degree or not homogeneous")
    rep = superderivation_check(g, dmap)
    if not rep.ok:
        raise ConditionViolated(name, f"derivation identity fails at {rep.witness}")
    if not skew_check(g, bform, dmap):
        raise ConditionViolated(name, "not skew-symmetric for the form")


def _form_functional(bform, v):
    """B(v, .) as a coordinate tuple."""
    n = len(bform.matrix)
    return tuple(
        sum((v[t] * bform.matrix[t][j] for t in range(n)), Q0) for j in range(n)
    )


def gode_1d(g, bform, data):
    """Generalized odd double extension of the odd-quadratic (g, B) by an
    odd line K e by means of (Dbar, x0, k):

        [e,e] = x0 + k e*,  [e,X] = Dbar(X) + B(x0,X) e*,
        [X,Y] = [X,Y]_g + B(Dbar(X),Y) e*,

    with the odd form extended by B~(e*, e) = 1."""
    rep = classify_form(g, bform)
    if bform.parity != ODD or not rep.is_quadratic():
        raise ConditionViolated("B", "base form must be odd-quadratic")
    dbar = data.D
    _check_skew_derivation(g, bform, dbar, ODD, "Dbar")
    x0 = _check_even_vector(g, data.x0 if data.x0 is not None else la.zero_vec(g.dim), "x0")
    if not la.vec_is_zero(dbar(x0)):
        raise ConditionViolated("Dbar(x0)=0")
    dd = la.mat_mul(dbar.matrix, dbar.matrix)
    if dd != la.mat_scale(Fraction(1, 2), ad_matrix(g, x0)):
        raise ConditionViolated("Dbar^2 = (1/2) ad(x0)")
    k = la.frac(data.k)
    estar_label, e_label = _fresh_labels(set(g.basis.labels), ["e*", "e"])
    b, base_map, pos = _extended_basis(g.basis, [(estar_label, EVEN)], [(e_label, ODD)])
    es, ee = pos[estar_label], pos[e_label]
    bx0 = _form_functional(bform, x0)
    bld = _Builder(b)
    bld.embed_base(g, base_map)
    for i in range(g.dim):
        di = tuple(dbar.matrix[t][i] for t in range(g.dim))
        for j in range(i, g.dim):
            val = sum((di[t] * bform.matrix[t][j] for t in range(g.dim)), Q0)
            if val != 0:
                bld.set(base_map[i], base_map[j], {es: val})
    for j in range(g.dim):
        img = {base_map[t]: dbar.matrix[t][j] for t in range(g.dim)}
        if bx0[j] != 0:
            img[es] = img.get(es, Q0) + bx0[j]
        bld.set(ee, base_map[j], img)
    ee_img = {base_map[t]: c for t, c in enumerate(x0)}
    if k != 0:
        ee_img[es] = k
    bld.set(ee, ee, ee_img)
    out = bld.build()
    n = b.dim
    m = _embed_form(bform.matrix, base_map, n)
    _sym_pair(m, b, es, ee, Q1, skew=False)
    big = BilinearForm(tuple(tuple(r) for r in m), ODD)
    return assert_valid(QuadSympAlgebra(out, quadratic=big))


def gode_1d_symplectic(g, bform, omega, data):
    """Symplectic enrichment of gode_1d: (g, B, omega) odd-quadratic
    odd-symplectic via the even derivation delta, parameters
    (Dbar, x0, c1, lambda, k) subject to

        B(c1,x0) = lambda k,  2 Dbar(c1) = delta(x0) + 2 lambda x0,
        [delta, Dbar] + lambda Dbar = ad(c1),

    and Delta(e*) = lambda e*, Delta(X) = delta(X) − B(c1,X) e*,
    Delta(e) = −lambda e + c1."""
    delta = symplectic_derivation(g, bform, omega)
    if delta.degree != EVEN:
        raise ConditionViolated("delta", "pair must be odd-quadratic odd-symplectic")
    if data.lam is None or la.frac(data.lam) == 0:
        raise ZeroLambda("lambda must be a nonzero scalar")
    lam = la.frac(data.lam)
    c1 = _check_odd_vector(g, data.c1 if data.c1 is not None else la.zero_vec(g.dim), "c1")
    x0 = _check_even_vector(g, data.x0 if data.x0 is not None else la.zero_vec(g.dim), "x0")
    k = la.frac(data.k)
    if bform(c1, x0) != lam * k:
        raise ConditionViolated("B(c1,x0) = lambda k")
    lhs = la.vec_scale(2, data.D(c1))
    rhs = la.vec_add(delta(x0), la.vec_scale(2 * lam, x0))
    if lhs != rhs:
        raise ConditionViolated("2 Dbar(c1) = delta(x0) + 2 lambda x0")
    comm = supercommutator(delta, data.D)
    want = la.mat_add(comm.matrix, la.mat_scale(lam, data.D.matrix))
    if want != ad_matrix(g, c1):
        raise ConditionViolated("[delta,Dbar] + lambda Dbar = ad(c1)")
    base = gode_1d(g, bform, data)
    b = base.algebra.basis
    estar_idx = _locate(b, g.basis, EVEN)
    e_idx = _locate(b, g.basis, ODD)
    base_map = {i: b.index(l) for i, l in enumerate(g.basis.labels)}
    n = b.dim
    m = [[Q0] * n for _ in range(n)]
    m[estar_idx][estar_idx] = lam
    bc1 = _form_functional(bform, c1)
    for j in range(g.dim):
        for t in range(g.dim):
            m[base_map[t]][base_map[j]] = delta.matrix[t][j]
        if bc1[j] != 0:
            m[estar_idx][base_map[j]] = -bc1[j]
    m[e_idx][e_idx] = -lam
    for t, c in enumerate(c1):
        if c != 0:
            m[base_map[t]][e_idx] = c
    dmap = LinearMap(tuple(tuple(r) for r in m), EVEN)
    omega_big = BilinearForm(
        la.mat_mul(la.transpose(dmap.matrix), base.quadratic.matrix), ODD
    )
    result = QuadSympAlgebra(base.algebra, base.quadratic, omega_big, dmap)
    return assert_valid(result)


def _locate(ext_basis, base_basis, parity):
    """Index of the single appended vector of the given parity (the dual
    sits at the front of its block, the new vector at the back)."""
    taken = set(base_basis.labels)
    idxs = [
        i
        for i, (l, p) in enumerate(zip(ext_basis.labels, ext_basis.parities))
        if l not in taken and p == parity
    ]
    if len(idxs) != 1:
        raise InvariantViolation("layout", "ambiguous appended vector")
    return idxs[0]


# ---------------------------------------------------------------------------
# two-dimensional generalized double extensions


def _gde_conditions(g, bform, data, parity):
    dmap, dbar = data.D, data.Dbar
    _check_skew_derivation(g, bform, dmap, EVEN, "D")
    _check_skew_derivation(g, bform, dbar, ODD, "Dbar")
    x0 = _check_even_vector(g, data.x0, "x0")
    x1 = _check_odd_vector(g, data.x1, "x1")
    if la.mat_mul(dbar.matrix, dbar.matrix) != la.mat_scale(
        Fraction(1, 2), ad_matrix(g, x0)
    ):
        raise ConditionViolated("Dbar^2 = (1/2) ad(x0)")
    if not la.vec_is_zero(dbar(x0)):
        raise ConditionViolated("Dbar(x0) = 0")
    if supercommutator(dmap, dbar).matrix != ad_matrix(g, x1):
        raise ConditionViolated("[D,Dbar] = ad(x1)")
    if dmap(x0) != la.vec_scale(2, dbar(x1)):
        raise ConditionViolated("D(x0) = 2 Dbar(x1)")
    if parity == "odd":
        if bform(x0, x1) != 0:
            raise ConditionViolated("B(x0,x1) = 0")
    else:
        if bform(x0, x0) != 0:
            raise ConditionViolated("B(x0,x0) = 0")
    return x0, x1


def gde_2d(g, bform, parity, data):
    """Generalized (odd for parity "odd", even for parity "even") double
    extension of the quadratic (g, B) by the two-dimensional abelian
    superalgebra K e0 + K e1, by means of (D, Dbar, x0, x1, k)."""
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    want = ODD if parity == "odd" else EVEN
    rep = classify_form(g, bform)
    if bform.parity != want or not rep.is_quadratic():
        raise ConditionViolated("B", f"base form must be {parity}-quadratic")
    x0, x1 = _gde_conditions(g, bform, data, parity)
    k = la.frac(data.k)
    dmap, dbar = data.D, data.Dbar
    # parity bookkeeping: e0 is even and e1 odd in both variants; the odd
    # variant's duals are parity-flipped and pair crosswise (B(e0*,e1) = 1
    # = B(e1*,e0), forced by homogeneity of the displayed brackets), the
    # even variant's pair directly (B(e0*,e0) = 1 = B(e1*,e1))
    dual_parities = {"e0*": EVEN, "e1*": ODD}
    e0s, e1s, e0l, e1l = _fresh_labels(set(g.basis.labels), ["e0*", "e1*", "e0", "e1"])
    b, base_map, pos = _extended_basis(
        g.basis,
        [(e0s, dual_parities["e0*"]), (e1s, dual_parities["e1*"])],
        [(e0l, EVEN), (e1l, ODD)],
    )
    i0s, i1s, i0, i1 = pos[e0s], pos[e1s], pos[e0l], pos[e1l]
    bx0 = _form_functional(bform, x0)
    bx1 = _form_functional(bform, x1)
    bld = _Builder(b)
    bld.embed_base(g, base_map)
    for i in range(g.dim):
        for j in range(i, g.dim):
            vd = sum((dbar.matrix[t][i] * bform.matrix[t][j] for t in range(g.dim)), Q0)
            ve = sum((dmap.matrix[t][i] * bform.matrix[t][j] for t in range(g.dim)), Q0)
            corr = {}
            if parity == "odd":
                # + B(Dbar X, Y) e0* + B(D X, Y) e1*
                if vd != 0:
                    corr[i0s] = vd
                if ve != 0:
                    corr[i1s] = ve
            else:
                # − B(Dbar X, Y) e1* + B(D X, Y) e0*
                if vd != 0:
                    corr[i1s] = -vd
                if ve != 0:
                    corr[i0s] = ve
            if corr:
                bld.set(base_map[i], base_map[j], corr)
    for j in range(g.dim):
        img0 = {base_map[t]: dmap.matrix[t][j] for t in range(g.dim)}
        img1 = {base_map[t]: dbar.matrix[t][j] for t in range(g.dim)}
        if parity == "odd":
            if bx1[j] != 0:
                img0[i0s] = img0.get(i0s, Q0) - bx1[j]
            if bx0[j] != 0:
                img1[i0s] = img1.get(i0s, Q0) + bx0[j]
            if bx1[j] != 0:
                img1[i1s] = img1.get(i1s, Q0) + bx1[j]
        else:
            if bx1[j] != 0:
                img0[i1s] = img0.get(i1s, Q0) + bx1[j]
            if bx0[j] != 0:
                img1[i1s] = img1.get(i1s, Q0) - bx0[j]
            if bx1[j] != 0:
                img1[i0s] = img1.get(i0s, Q0) + bx1[j]
        bld.set(i0, base_map[j], img0)
        bld.set(i1, base_map[j], img1)
    e01 = {base_map[t]: c for t, c in enumerate(x1)}
    e11 = {base_map[t]: c for t, c in enumerate(x0)}
    if parity == "odd":
        if k != 0:
            e11[i0s] = k
    else:
        if k != 0:
            e11[i0s] = k
            e01[i1s] = k
    bld.set(i0, i1, e01)
    bld.set(i1, i1, e11)
    out = bld.build()
    n = b.dim
    m = _embed_form(bform.matrix, base_map, n)
    if parity == "odd":
        _sym_pair(m, b, i0s, i1, Q1, skew=False)
        _sym_pair(m, b, i1s, i0, Q1, skew=False)
    else:
        _sym_pair(m, b, i0s, i0, Q1, skew=False)
        _sym_pair(m, b, i1s, i1, Q1, skew=False)
    gamma = BilinearForm(tuple(tuple(r) for r in m), want)
    return assert_valid(QuadSympAlgebra(out, quadratic=gamma))


def gde_2d_symplectic(g, bform, omega, parity, data):
    """Symplectic enrichment of gde_2d, parameters (D, Dbar, x0, x1,
    c0, c1, lambda, alpha) subject to the five displayed conditions of
    the matching proposition; Omega = gamma(Delta(.), .)."""
    delta = symplectic_derivation(g, bform, omega)
    if delta.degree != ODD:
        raise ConditionViolated("delta", "enrichment needs an odd derivation")
    if data.lam is None or la.frac(data.lam) == 0:
        raise ZeroLambda("lambda must be a nonzero scalar")
    lam = la.frac(data.lam)
    alpha = la.frac(data.alpha)
    c0 = _check_even_vector(g, data.c0 if data.c0 is not None else la.zero_vec(g.dim), "c0")
    c1 = _check_odd_vector(g, data.c1 if data.c1 is not None else la.zero_vec(g.dim), "c1")
    x0 = _check_even_vector(g, data.x0, "x0")
    x1 = _check_odd_vector(g, data.x1, "x1")
    k = la.frac(data.k)
    dmap, dbar = data.D, data.Dbar
    cd = supercommutator(delta, dmap).matrix  # [delta, D]
    cdb = supercommutator(delta, dbar).matrix  # [delta, Dbar]
    if parity == "odd":
        if ad_matrix(g, c0) != la.mat_sub(cdb, la.mat_scale(lam, dmap.matrix)):
            raise ConditionViolated("ad(c0) = [delta,Dbar] − lambda D")
        if ad_matrix(g, c1) != la.mat_add(cd, la.mat_scale(lam, dbar.matrix)):
            raise ConditionViolated("ad(c1) = [delta,D] + lambda Dbar")
        if delta(x0) != la.vec_add(
            la.vec_scale(-2, dbar(c0)), la.vec_scale(2 * lam, x1)
        ):
            raise ConditionViolated("delta(x0) = −2 Dbar(c0) + 2 lambda x1")
        if delta(x1) != la.vec_sub(
            la.vec_add(dmap(c0), dbar(c1)), la.vec_scale(lam, x0)
        ):
            raise ConditionViolated("delta(x1) = D(c0) + Dbar(c1) − lambda x0")
        if lam * k != bform(c1, x0) - 2 * bform(x1, c0):
            raise ConditionViolated("lambda k = B(c1,x0) − 2 B(x1,c0)")
    else:
        if ad_matrix(g, c1) != la.mat_sub(cd, la.mat_scale(lam, dbar.matrix)):
            raise ConditionViolated("ad(c1) = [delta,D] − lambda Dbar")
        if ad_matrix(g, c0) != la.mat_add(cdb, la.mat_scale(lam, dmap.matrix)):
            raise ConditionViolated("ad(c0) = [delta,Dbar] + lambda D")
        if delta(x0) != la.vec_sub(
            la.vec_scale(-2 * lam, x1), la.vec_scale(2, dbar(c0))
        ):
            raise ConditionViolated("delta(x0) = −2 lambda x1 − 2 Dbar(c0)")
        if delta(x1) != la.vec_add(
            la.vec_scale(lam, x0), la.vec_add(dmap(c0), dbar(c1))
        ):
            raise ConditionViolated("delta(x1) = lambda x0 + D(c0) + Dbar(c1)")
        if lam * k != bform(c0, x0):
            raise ConditionViolated("lambda k = B(c0,x0)")
    base = gde_2d(g, bform, parity, data)
    b = base.algebra.basis
    base_map = {i: b.index(l) for i, l in enumerate(g.basis.labels)}
    taken = set(g.basis.labels)
    added = [l for l in b.labels if l not in taken]
    stars = [l for l in added if "*" in l]
    plain = [l for l in added if "*" not in l]
    i0s = b.index(min(stars))  # e0* sorts before e1*
    i1s = b.index(max(stars))
    i0 = b.index(min(plain))
    i1 = b.index(max(plain))
    n = b.dim
    m = [[Q0] * n for _ in range(n)]
    m[i1s][i0s] = lam  # Delta(e0*) = lambda e1*
    m[i0s][i1s] = lam  # Delta(e1*) = lambda e0*
    bc0 = _form_functional(bform, c0)
    bc1 = _form_functional(bform, c1)
    if parity == "odd":
        # Delta(e0) = c1 − lambda e1 ; Delta(e1) = alpha e0* + c0 + lambda e0
        for t, c in enumerate(c1):
            m[base_map[t]][i0] = c
        m[i1][i0] = -lam
        m[i0s][i1] = alpha
        for t, c in enumerate(c0):
            m[base_map[t]][i1] = c
        m[i0][i1] = lam
        for j in range(g.dim):
            if bc0[j] != 0:
                m[i0s][base_map[j]] = bc0[j]
            if bc1[j] != 0:
                m[i1s][base_map[j]] = -bc1[j]
            for t in range(g.dim):
                m[base_map[t]][base_map[j]] = delta.matrix[t][j]
    else:
        # Delta(e0) = alpha e1* + c1 + lambda e1 ; Delta(e1) = −alpha e0* + c0 − lambda e0
        m[i1s][i0] = alpha
        for t, c in enumerate(c1):
            m[base_map[t]][i0] = c
        m[i1][i0] = lam
        m[i0s][i1] = -alpha
        for t, c in enumerate(c0):
            m[base_map[t]][i1] = c
        m[i0][i1] = -lam
        for j in range(g.dim):
            if bc1[j] != 0:
                m[i0s][base_map[j]] = -bc1[j]
            if bc0[j] != 0:
                m[i1s][base_map[j]] = -bc0[j]
            for t in range(g.dim):
                m[base_map[t]][base_map[j]] = delta.matrix[t][j]
    dmap_big = LinearMap(tuple(tuple(r) for r in m), ODD)
    omega_big = BilinearForm(
        la.mat_mul(la.transpose(dmap_big.matrix), base.quadratic.matrix),
        (base.quadratic.parity + 1) % 2,
    )
    result = QuadSympAlgebra(base.algebra, base.quadratic, omega_big, dmap_big)
    return assert_valid(result)
