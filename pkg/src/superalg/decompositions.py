"""Inverse procedures: peel a (quadratic-)symplectic Lie superalgebra
with non-trivial center back to a smaller one plus the extension
parameters that rebuild it.

Every split re-runs the matching forward construction on (base, params)
and checks, entry by entry, that the embedded structure constants and
forms reproduce the original ones.  A split that cannot certify its own
round trip raises instead of returning.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from .core import (
    EVEN,
    ODD,
    LieSuperalgebra,
    algebra,
    basis,
    bracket,
    center,
    ksign,
    span,
    vector_parity,
    direct_sum,
)
from .errors import (
    ConditionViolated,
    EmptyBase,
    EmptyCenter,
    InvariantViolation,
    IrrationalSpectrum,
    UnsupportedParities,
)
from .forms import BilinearForm, classify_form, restrict_form
from .maps import LinearMap, rational_eigen_split, symplectic_derivation
from .constructions import (
    Ext1Data,
    Ext2Data,
    QuadSympAlgebra,
    gde_2d_symplectic,
    gode_1d_symplectic,
    symplectic_double_extension,
)

Q0 = Fraction(0)
Q1 = Fraction(1)


@dataclass(frozen=True)
class DirectSumParts:
    ideal_vector: tuple  # central odd vector with omega(v,v) != 0
    pairing: Fraction  # omega(v, v)


@dataclass(frozen=True)
class SplitResult:
    kind: str
    base: QuadSympAlgebra
    params: object  # Ext1Data | Ext2Data | DirectSumParts
    embedding: tuple  # original-coordinate vector per reconstructed basis slot
    reconstructed: QuadSympAlgebra


# ---------------------------------------------------------------------------
# shared plumbing


def _base_labels(g, rows):
    """Deterministic labels for recovered base vectors: the original label
    when the row is a unit vector, h<i> otherwise."""
    labels = []
    taken = set()
    for idx, r in enumerate(rows):
        nz = [(i, c) for i, c in enumerate(r) if c != 0]
        cand = None
        if len(nz) == 1 and nz[0][1] == 1:
            cand = g.basis.labels[nz[0][0]]
        if cand is None or cand in taken:
            cand = f"h{idx}"
            while cand in taken:
                cand += "'"
        labels.append(cand)
        taken.add(cand)
    return labels


def _coords(vectors):
    """Inverse of the column matrix of the given basis vectors."""
    n = len(vectors)
    cols = tuple(tuple(vectors[j][i] for j in range(n)) for i in range(n))
    inv = la.inverse(cols)
    if inv is None:
        raise InvariantViolation("split", "selected vectors are not a basis")
    return inv


def _solve_partner(g, form_matrix, targets, parity, extra=()):
    """Minimal homogeneous vector e of the given parity with
    form(row_i, e) = target_i for the given functional rows, plus extra
    homogeneous linear constraints (row, value)."""
    idxs = [i for i in range(g.dim) if g.basis.parity(i) == parity]
    rows, rhs = [], []
    for v, t in targets:
        func = tuple(
            sum((v[a] * form_matrix[a][j] for a in range(g.dim)), Q0)
            for j in range(g.dim)
        )
        rows.append(tuple(func[i] for i in idxs))
        rhs.append(la.frac(t))
    for func, t in extra:
        rows.append(tuple(func[i] for i in idxs))
        rhs.append(la.frac(t))
    sol = la.solve(tuple(rows), tuple(rhs), ncols=len(idxs))
    if sol is None:
        raise InvariantViolation("split", "no partner vector exists")
    out = [Q0] * g.dim
    for pos, i in enumerate(idxs):
        out[i] = sol[pos]
    return tuple(out)


def _functional(form_matrix, v):
    n = len(form_matrix)
    return tuple(sum((v[a] * form_matrix[a][j] for a in range(n)), Q0) for j in range(n))


def _sub_algebra(g, rows, labels=None):
    """The Lie superalgebra carried by the span of `rows`, expressing
    brackets in row coordinates; extra coordinates must vanish (checked
    by the caller via _decomposer)."""
    parities = tuple(vector_parity(g.basis, r) for r in rows)
    if any(p is None for p in parities):
        raise InvariantViolation("split", "base rows must be homogeneous")
    if labels is None:
        labels = _base_labels(g, rows)
    return labels, parities


class _Decomposer:
    """Coordinates of g relative to [specials..., h rows..., tails...]."""

    def __init__(self, g, head, rows, tail):
        self.g = g
        self.head = list(head)
        self.rows = list(rows)
        self.tail = list(tail)
        self.vectors = self.head + self.rows + self.tail
        self.inv = _coords(self.vectors)
        self.nh = len(self.head)
        self.m = len(rows)

    def split(self, v):
        c = la.mat_vec(self.inv, tuple(v))
        head = tuple(c[: self.nh])
        mid = tuple(c[self.nh : self.nh + self.m])
        tail = tuple(c[self.nh + self.m :])
        return head, mid, tail

    def expect_in_ideal(self, v, what):
        head, mid, tail = self.split(v)
        if any(x != 0 for x in tail):
            raise ConditionViolated(
                "split", f"{what} leaves the coisotropic ideal; input is inconsistent"
            )
        return head, mid


def _base_table(g, dec):
    entries = {}
    m = dec.m
    for i in range(m):
        for j in range(i, m):
            v = bracket(g, dec.rows[i], dec.rows[j])
            _, mid = dec.expect_in_ideal(v, f"[h{i},h{j}]")
            row = {k: c for k, c in enumerate(mid) if c != 0}
            if row:
                entries[(i, j)] = row
    return entries


def _restrict_map_columns(dec, images, what):
    """Columns of a base-level map from images of the h rows."""
    cols = []
    heads = []
    for j, img in enumerate(images):
        head, mid = dec.expect_in_ideal(img, what)
        cols.append(mid)
        heads.append(head)
    m = dec.m
    matrix = tuple(tuple(cols[j][i] for j in range(m)) for i in range(m))
    return matrix, heads


def _verify_roundtrip(g, forms_orig, recon, embedding):
    """Exact structure-constant and form equality through the embedding."""
    n = recon.algebra.dim
    if len(embedding) != n:
        raise InvariantViolation("roundtrip", "embedding size mismatch")
    emb = [tuple(v) for v in embedding]
    for i in range(n):
        for j in range(i, n):
            want = bracket(g, emb[i], emb[j])
            got = [Q0] * g.dim
            for k, c in recon.algebra.bracket_basis(i, j).items():
                got = [x + c * y for x, y in zip(got, emb[k])]
            if tuple(got) != tuple(want):
                raise InvariantViolation(
                    "roundtrip",
                    f"bracket mismatch at ({recon.algebra.basis.labels[i]},{recon.algebra.basis.labels[j]})",
                )
    ecols = tuple(tuple(emb[j][i] for j in range(n)) for i in range(len(emb[0]) if emb else 0))
    for orig, new in forms_orig:
        if new is None:
            continue
        pulled = la.mat_mul(la.mat_mul(la.transpose(ecols), orig.matrix), ecols)
        if pulled != new.matrix:
            raise InvariantViolation("roundtrip", "form mismatch")


def _embedding_by_label(recon, mapping):
    return tuple(mapping[l] for l in recon.algebra.basis.labels)


# ---------------------------------------------------------------------------
# symplectic split (one line)


def _pick_isotropic_central_odd(g, omega, odd_rows):
    for v in odd_rows:
        if omega(v, v) == 0:
            return v
    for i in range(len(odd_rows)):
        for j in range(i + 1, len(odd_rows)):
            a = omega(odd_rows[i], odd_rows[i])
            b = omega(odd_rows[j], odd_rows[j])
            c = omega(odd_rows[i], odd_rows[j])
            if b == 0:
                return odd_rows[j]
            disc = c * c - a * b
            s = la.rational_sqrt(disc)
            if s is not None:
                t = (-c + s) / b
                return la.vec_add(odd_rows[i], la.vec_scale(t, odd_rows[j]))
    return None


def split_symplectic(g, omega):
    """Inverse of the one-dimensional symplectic double extensions: peel a
    central line off (g, omega); for even omega the non-isotropic
    1-dimensional-center case degenerates to an orthogonal direct sum."""
    rep = classify_form(g, omega)
    if not rep.is_symplectic():
        raise ConditionViolated("omega", "input form is not symplectic")
    if omega.parity == EVEN and g.dim == 1:
        raise EmptyBase("the (0|1) even-symplectic algebra cannot be split")
    z = center(g)
    if z.dim == 0:
        raise EmptyCenter("splitting needs a nonzero center")
    even_rows = [r for r in z.rows if vector_parity(g.basis, r) == EVEN]
    odd_rows = [r for r in z.rows if vector_parity(g.basis, r) == ODD]
    if omega.parity == ODD:
        estar = z.rows[0]
    else:
        if even_rows:
            estar = even_rows[0]
        else:
            estar = _pick_isotropic_central_odd(g, omega, odd_rows)
            if estar is None:
                if len(odd_rows) == 1:
                    return _split_direct_sum(g, omega, odd_rows[0])
                raise IrrationalSpectrum(
                    "no central odd vector is isotropic over the rationals"
                )
    p_star = vector_parity(g.basis, estar)
    p_e = (p_star + 1) % 2 if omega.parity == ODD else p_star
    e = _solve_partner(g, omega.matrix, [(estar, Q1)], p_e)
    if omega(e, e) != 0:
        # only possible for even omega with odd e; normalize so that the
        # extension form (null outside omega and the new pairing) matches
        e = la.vec_sub(e, la.vec_scale(omega(e, e) / 2, estar))
    f1 = _functional(omega.matrix, estar)
    f2 = _functional(omega.matrix, e)
    rows = span(g.basis, la.nullspace((f1, f2), ncols=g.dim)).rows
    labels, parities = _sub_algebra(g, rows)
    order = sorted(range(len(rows)), key=lambda i: parities[i])
    new_rows = [rows[i] for i in order]
    b = basis([(labels[i], parities[i]) for i in order])
    dec = _Decomposer(g, [estar], new_rows, [e])
    entries = {}
    for i in range(len(new_rows)):
        for j in range(i, len(new_rows)):
            v = bracket(g, new_rows[i], new_rows[j])
            head, mid = dec.expect_in_ideal(v, "base bracket")
            row = {k: c for k, c in enumerate(mid) if c != 0}
            if row:
                entries[(i, j)] = row
    halg = algebra(b, entries)
    omega_h = BilinearForm(tuple(map(tuple, restrict_form(omega, new_rows))), omega.parity)
    images = [bracket(g, e, r) for r in new_rows]
    dmat, heads = _restrict_map_columns(dec, images, "[e,X]")
    d_degree = p_e
    dmap = LinearMap(dmat, d_degree)
    beta = tuple(h[0] for h in heads)
    s = Fraction(-1) if omega.parity == ODD else Q1
    if p_e == ODD:
        vee = bracket(g, e, e)
        head, mid = dec.expect_in_ideal(vee, "[e,e]")
        if head[0] != 0:
            raise ConditionViolated("split", "[e,e] has a dual component (k != 0)")
        x0 = mid
        half = la.vec_scale(Fraction(1, 2), x0)
        for j in range(len(new_rows)):
            want = s * la.vec_dot(half, la.mat_vec(omega_h.matrix, la.unit_vec(len(new_rows), j)))
            if beta[j] != want:
                raise ConditionViolated("split", "beta != s omega(x0/2, .)")
        params = Ext1Data(D=dmap, mode="generalized", x0=x0)
        kind = "odd_symp_1d" if omega.parity == ODD else "even_symp_1d_generalized"
    else:
        m = len(new_rows)
        rowsys = tuple(
            tuple(omega_h.matrix[t][j] for t in range(m)) for j in range(m)
        )
        b0 = la.solve(rowsys, tuple(s * x for x in beta), ncols=m)
        if b0 is None:
            raise ConditionViolated("split", "beta is not representable by omega_h")
        params = Ext1Data(D=dmap, mode="double", b0=b0)
        kind = "odd_symp_1d" if omega.parity == ODD else "even_symp_1d_double"
    base = QuadSympAlgebra(halg, symplectic=omega_h)
    recon = symplectic_double_extension(
        halg, omega_h, params, "odd" if omega.parity == ODD else "even"
    )
    mapping = {}
    for i, l in enumerate(halg.basis.labels):
        mapping[l] = new_rows[i]
    added = [l for l in recon.algebra.basis.labels if l not in mapping]
    star = [l for l in added if "*" in l][0]
    plain = [l for l in added if "*" not in l][0]
    mapping[star] = estar
    mapping[plain] = e
    embedding = _embedding_by_label(recon, mapping)
    _verify_roundtrip(g, [(omega, recon.symplectic)], recon, embedding)
    return SplitResult(kind, base, params, embedding, recon)


def _split_direct_sum(g, omega, v):
    """Prop-style degenerate case: the center is one anisotropic odd line;
    g is the orthogonal direct sum of that line and its orthogonal."""
    k = omega(v, v)
    func = _functional(omega.matrix, v)
    comp_rows = la.nullspace((func,), ncols=g.dim)
    comp = span(g.basis, comp_rows)
    rows = comp.rows
    dec = _Decomposer(g, [v], rows, [])
    labels, parities = _sub_algebra(g, rows)
    order = sorted(range(len(rows)), key=lambda i: parities[i])
    new_rows = [rows[i] for i in order]
    b = basis([(labels[i], parities[i]) for i in order])
    dec = _Decomposer(g, [v], new_rows, [])
    entries = {}
    for i in range(len(new_rows)):
        for j in range(i, len(new_rows)):
            w = bracket(g, new_rows[i], new_rows[j])
            head, mid = dec.expect_in_ideal(w, "complement bracket")
            if head[0] != 0:
                raise ConditionViolated("split", "complement is not an ideal")
            row = {t: c for t, c in enumerate(mid) if c != 0}
            if row:
                entries[(i, j)] = row
    calg = algebra(b, entries)
    omega_c = BilinearForm(tuple(map(tuple, restrict_form(omega, new_rows))), omega.parity)
    base = QuadSympAlgebra(calg, symplectic=omega_c)
    atom = algebra(basis([("e", ODD)]), {})
    recon_alg = direct_sum(atom, calg)
    n = recon_alg.dim
    m = [[Q0] * n for _ in range(n)]
    ai = recon_alg.basis.index("l:e")
    m[ai][ai] = k
    for i in range(calg.dim):
        for j in range(calg.dim):
            m[recon_alg.basis.index("r:" + calg.basis.labels[i])][
                recon_alg.basis.index("r:" + calg.basis.labels[j])
            ] = omega_c.matrix[i][j]
    recon = QuadSympAlgebra(
        recon_alg, symplectic=BilinearForm(tuple(map(tuple, m)), omega.parity)
    )
    rep = classify_form(recon_alg, recon.symplectic)
    if not rep.is_symplectic():
        raise InvariantViolation("roundtrip", "direct-sum pieces are not symplectic")
    mapping = {"l:e": v}
    for i, l in enumerate(calg.basis.labels):
        mapping["r:" + l] = new_rows[i]
    embedding = _embedding_by_label(recon, mapping)
    _verify_roundtrip(g, [(omega, recon.symplectic)], recon, embedding)
    params = DirectSumParts(tuple(v), k)
    return SplitResult("direct_sum", base, params, embedding, recon)


# ---------------------------------------------------------------------------
# quadratic-symplectic splits


def _eigen_line_even_center(delta, zeven, need_square_root):
    """First admissible eigenvector of Delta (or of Delta^2 when the
    derivation is odd) on the even part of the center."""
    if zeven.dim == 0:
        raise EmptyCenter("center has no even part to split along")
    if not need_square_root:
        es = rational_eigen_split(delta, zeven)
        for ev, space in es.pairs:
            if ev != 0 and space.dim > 0:
                return ev, space.rows[0]
        raise IrrationalSpectrum("no nonzero rational eigenvalue on the even center")
    sq = LinearMap(la.mat_mul(delta.matrix, delta.matrix), EVEN)
    es = rational_eigen_split(sq, zeven)
    for ev, space in es.pairs:
        if ev == 0 or space.dim == 0:
            continue
        lam = la.rational_sqrt(ev)
        if lam is not None and lam != 0:
            return lam, space.rows[0]
    raise IrrationalSpectrum(
        "no rational square-root eigenvalue of Delta^2 on the even center"
    )


def _center_even_part(g, within=None):
    z = center(g)
    if within is not None:
        z = z.intersect(within)
    rows = [r for r in z.rows if vector_parity(g.basis, r) == EVEN]
    return z, span(g.basis, rows)


def split_quadratic_symplectic(g, bform, omega, within=None, other=None):
    """Inverse of the quadratic-symplectic extensions, dispatching on the
    parities (|B|, |omega|): (odd, odd) peels one line, (odd, even) and
    (even, odd) peel a four-dimensional block; (even, even) is out of
    scope.  `within` restricts the central eigenvector search (used by
    the Manin inverse), `other` restricts the partner search."""
    brep = classify_form(g, bform)
    if not brep.is_quadratic():
        raise ConditionViolated("B", "input form is not quadratic")
    orep = classify_form(g, omega)
    if not orep.is_symplectic():
        raise ConditionViolated("omega", "input form is not symplectic")
    if bform.parity == EVEN and omega.parity == EVEN:
        raise UnsupportedParities(
            "the even-quadratic even-symplectic split is out of scope"
        )
    z = center(g)
    if z.dim == 0:
        raise EmptyCenter("quadratic-symplectic algebras must have a center")
    delta = symplectic_derivation(g, bform, omega)
    if bform.parity == ODD and omega.parity == ODD:
        return _split_qs_1d(g, bform, omega, delta, within, other)
    return _split_qs_2d(g, bform, omega, delta, within, other)


def _split_qs_1d(g, bform, omega, delta, within, other):
    _, zeven = _center_even_part(g, within)
    lam, estar = _eigen_line_even_center(delta, zeven, need_square_root=False)
    extra = []
    if other is not None:
        extra = _span_constraints(other, g.dim)
    e = _solve_partner(g, bform.matrix, [(estar, Q1)], ODD, extra)
    f1 = _functional(bform.matrix, estar)
    f2 = _functional(bform.matrix, e)
    rows = span(g.basis, la.nullspace((f1, f2), ncols=g.dim)).rows
    labels, parities = _sub_algebra(g, rows)
    order = sorted(range(len(rows)), key=lambda i: parities[i])
    new_rows = [rows[i] for i in order]
    b = basis([(labels[i], parities[i]) for i in order])
    dec = _Decomposer(g, [estar], new_rows, [e])
    entries = {}
    for i in range(len(new_rows)):
        for j in range(i, len(new_rows)):
            v = bracket(g, new_rows[i], new_rows[j])
            _, mid = dec.expect_in_ideal(v, "base bracket")
            row = {t: c for t, c in enumerate(mid) if c != 0}
            if row:
                entries[(i, j)] = row
    halg = algebra(b, entries)
    b_h = BilinearForm(tuple(map(tuple, restrict_form(bform, new_rows))), bform.parity)
    omega_h = BilinearForm(tuple(map(tuple, restrict_form(omega, new_rows))), omega.parity)
    images = [bracket(g, e, r) for r in new_rows]
    dmat, _ = _restrict_map_columns(dec, images, "[e,X]")
    dbar = LinearMap(dmat, ODD)
    vee = bracket(g, e, e)
    head, x0 = dec.expect_in_ideal(vee, "[e,e]")
    k = head[0]
    # Delta(e) = c1 − lambda e with no dual component (forced by skewness)
    dhead, c1, dtail = dec.split(delta(e))
    if dhead[0] != 0 or dtail[0] != -lam:
        raise ConditionViolated("split", "Delta(e) is not of the expected shape")
    dmat2, heads2 = _restrict_map_columns(
        dec, [delta(r) for r in new_rows], "Delta(X)"
    )
    delta_h = LinearMap(dmat2, EVEN)
    params = Ext1Data(D=dbar, mode="generalized", x0=x0, k=k, c1=c1, lam=lam)
    base = QuadSympAlgebra(halg, quadratic=b_h, symplectic=omega_h, derivation=delta_h)
    recon = gode_1d_symplectic(halg, b_h, omega_h, params)
    mapping = {l: new_rows[i] for i, l in enumerate(halg.basis.labels)}
    added = [l for l in recon.algebra.basis.labels if l not in mapping]
    star = [l for l in added if "*" in l][0]
    plain = [l for l in added if "*" not in l][0]
    mapping[star] = estar
    mapping[plain] = e
    embedding = _embedding_by_label(recon, mapping)
    _verify_roundtrip(
        g,
        [(bform, recon.quadratic), (omega, recon.symplectic)],
        recon,
        embedding,
    )
    return SplitResult("oddquad_oddsymp_1d", base, params, embedding, recon)


def _span_constraints(sub, n):
    """Linear constraints forcing membership in the span of `sub`."""
    if sub.dim == 0:
        return [(la.unit_vec(n, i), Q0) for i in range(n)]
    perp = la.nullspace(sub.rows, ncols=n)
    return [(f, Q0) for f in perp]


def _split_qs_2d(g, bform, omega, delta, within, other):
    _, zeven = _center_even_part(g, within)
    lam, e0s = _eigen_line_even_center(delta, zeven, need_square_root=True)
    e1s = la.vec_scale(Q1 / lam, delta(e0s))
    variant = "odd" if bform.parity == ODD else "even"
    extra = _span_constraints(other, g.dim) if other is not None else []
    if variant == "odd":
        # B(e0, e1*) = 1; then B(e1, e0*) = 1 with B(e1, e0) = 0
        e0 = _solve_partner(g, bform.matrix, [(e1s, Q1)], EVEN, extra)
        e1 = _solve_partner(
            g,
            bform.matrix,
            [(e0s, Q1), (e0, Q0)],
            ODD,
            extra,
        )
    else:
        # B(e0*, e0) = 1 with B(e0,e0) = 0 (corrected); B(e1*, e1) = 1
        v = _solve_partner(g, bform.matrix, [(e0s, Q1)], EVEN, extra)
        e0 = la.vec_sub(v, la.vec_scale(bform(v, v) / 2, e0s))
        e1 = _solve_partner(g, bform.matrix, [(e1s, Q1)], ODD, extra)
    funcs = tuple(_functional(bform.matrix, w) for w in (e0s, e1s, e0, e1))
    rows = span(g.basis, la.nullspace(funcs, ncols=g.dim)).rows
    labels, parities = _sub_algebra(g, rows)
    order = sorted(range(len(rows)), key=lambda i: parities[i])
    new_rows = [rows[i] for i in order]
    b = basis([(labels[i], parities[i]) for i in order])
    dec = _Decomposer(g, [e0s, e1s], new_rows, [e0, e1])
    entries = {}
    for i in range(len(new_rows)):
        for j in range(i, len(new_rows)):
            v = bracket(g, new_rows[i], new_rows[j])
            _, mid = dec.expect_in_ideal(v, "base bracket")
            row = {t: c for t, c in enumerate(mid) if c != 0}
            if row:
                entries[(i, j)] = row
    halg = algebra(b, entries)
    b_h = BilinearForm(tuple(map(tuple, restrict_form(bform, new_rows))), bform.parity)
    omega_h = BilinearForm(tuple(map(tuple, restrict_form(omega, new_rows))), omega.parity)
    dmat, _ = _restrict_map_columns(dec, [bracket(g, e0, r) for r in new_rows], "[e0,X]")
    dbmat, _ = _restrict_map_columns(dec, [bracket(g, e1, r) for r in new_rows], "[e1,X]")
    dmap = LinearMap(dmat, EVEN)
    dbar = LinearMap(dbmat, ODD)
    h01, x1 = dec.expect_in_ideal(bracket(g, e0, e1), "[e0,e1]")
    h11, x0 = dec.expect_in_ideal(bracket(g, e1, e1), "[e1,e1]")
    k = h11[0]
    if variant == "even" and h01[1] != k:
        raise ConditionViolated("split", "[e0,e1] and [e1,e1] disagree on k")
    # Delta(e0) and Delta(e1) carry new-vector components per the display:
    # odd:  Delta(e0) = c1 − lambda e1,  Delta(e1) = alpha e0* + c0 + lambda e0
    # even: Delta(e0) = alpha e1* + c1 + lambda e1,
    #       Delta(e1) = −alpha e0* + c0 − lambda e0
    hd0, c1, td0 = dec.split(delta(e0))
    hd1, c0, td1 = dec.split(delta(e1))
    if variant == "odd":
        alpha = hd1[0]
        shape_ok = hd0 == (Q0, Q0) and td0 == (Q0, -lam) and hd1[1] == 0 and td1 == (lam, Q0)
    else:
        alpha = hd0[1]
        shape_ok = (
            hd0[0] == 0
            and td0 == (Q0, lam)
            and hd1 == (-alpha, Q0)
            and td1 == (-lam, Q0)
        )
    if not shape_ok:
        raise ConditionViolated("split", "Delta on the new vectors has an unexpected shape")
    dmat2, _ = _restrict_map_columns(dec, [delta(r) for r in new_rows], "Delta(X)")
    delta_h = LinearMap(dmat2, ODD)
    params = Ext2Data(
        D=dmap, Dbar=dbar, x0=x0, x1=x1, k=k, c0=c0, c1=c1, lam=lam, alpha=alpha
    )
    base = QuadSympAlgebra(halg, quadratic=b_h, symplectic=omega_h, derivation=delta_h)
    recon = gde_2d_symplectic(halg, b_h, omega_h, variant, params)
    mapping = {l: new_rows[i] for i, l in enumerate(halg.basis.labels)}
    added = [l for l in recon.algebra.basis.labels if l not in mapping]
    stars = sorted(l for l in added if "*" in l)
    plains = sorted(l for l in added if "*" not in l)
    mapping[stars[0]] = e0s
    mapping[stars[1]] = e1s
    mapping[plains[0]] = e0
    mapping[plains[1]] = e1
    embedding = _embedding_by_label(recon, mapping)
    _verify_roundtrip(
        g,
        [(bform, recon.quadratic), (omega, recon.symplectic)],
        recon,
        embedding,
    )
    kind = "oddquad_evensymp_2d" if variant == "odd" else "evenquad_oddsymp_2d"
    return SplitResult(kind, base, params, embedding, recon)
