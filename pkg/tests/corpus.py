"""Seeded random corpus builders shared by the property and acceptance
tests.

The samplers construct extension parameters inside families that satisfy
the displayed compatibility equations exactly (derivations with image in
an isotropic central subspace killing the derived algebra and the
center, eigenvector-aligned x0 choices, central c-parameters), so every
sample feeds the validation-first constructions without rejection; the
constructions re-check every equation and raise on any sampler bug.
"""

import random
from fractions import Fraction

import superalg._linalg as la
from superalg.core import (
    EVEN,
    ODD,
    algebra,
    basis,
    center,
    span,
    vector_parity,
    zero_algebra,
)
from superalg.forms import BilinearForm, classify_form
from superalg.maps import LinearMap, zero_map, supercommutator, symplectic_derivation
from superalg.constructions import (
    Ext1Data,
    Ext2Data,
    QuadSympAlgebra,
    gde_2d_symplectic,
    gode_1d_symplectic,
    symplectic_double_extension,
)
from superalg.core import ad_matrix

Q0 = Fraction(0)
Q1 = Fraction(1)


def _derived_plus_center(g):
    vecs = []
    for (i, j), row in g.table:
        v = [Q0] * g.dim
        for k, c in row:
            v[k] = c
        vecs.append(tuple(v))
    sub = span(g.basis, vecs)
    return sub.add(center(g))


def _isotropic_central(g, omega, rng):
    """A few central vectors spanning an omega-isotropic subspace."""
    rows = list(center(g).rows)
    rng.shuffle(rows)
    picked = []
    for v in rows:
        if omega(v, v) != 0:
            continue
        if all(omega(v, w) == 0 and omega(w, v) == 0 for w in picked):
            picked.append(v)
    return picked


def random_central_derivation(g, omega, degree, rng):
    """Homogeneous degree-d derivation with image inside an isotropic
    central subspace and kernel containing [g,g] + z(g); such maps have
    D^2 = 0 and a vanishing coboundary obstruction."""
    n = g.dim
    targets = _isotropic_central(g, omega, rng)
    if not targets or n == 0:
        return zero_map(n, degree)
    killed = _derived_plus_center(g)
    ann = la.nullspace(killed.rows, ncols=n) if killed.dim else la.identity(n)
    m = [[Q0] * n for _ in range(n)]
    made = False
    for a in ann:
        for par in (EVEN, ODD):
            func = tuple(c if g.basis.parity(i) == par else Q0 for i, c in enumerate(a))
            if all(c == 0 for c in func):
                continue
            want = (par + degree) % 2
            pool = [z for z in targets if vector_parity(g.basis, z) == want]
            if not pool or rng.random() < 0.4:
                continue
            z = rng.choice(pool)
            c = Fraction(rng.randint(-2, 2))
            if c == 0:
                continue
            made = True
            for i in range(n):
                if func[i] != 0:
                    for t in range(n):
                        m[t][i] += c * func[i] * z[t]
    if not made:
        return zero_map(n, degree)
    return LinearMap(tuple(tuple(r) for r in m), degree)


def random_symplectic_ext1(g, omega, parity, rng):
    """Parameters for a random 1-dimensional (generalized) symplectic
    double extension of (g, omega)."""
    degree = rng.choice((EVEN, ODD))
    dmap = random_central_derivation(g, omega, degree, rng)
    if degree == ODD:
        pool = [
            v
            for v in _isotropic_central(g, omega, rng)
            if vector_parity(g.basis, v) == EVEN and la.vec_is_zero(dmap(v))
        ]
        x0 = la.zero_vec(g.dim)
        if pool and rng.random() < 0.7:
            x0 = la.vec_scale(Fraction(rng.randint(1, 3)), rng.choice(pool))
        return Ext1Data(D=dmap, mode="generalized", x0=x0)
    return Ext1Data(D=dmap, mode="double", b0=None)


def random_symplectic_tower(parity, steps, seed):
    """Iterated random symplectic double extensions from an atom."""
    rng = random.Random(seed)
    if parity == "even" and rng.random() < 0.4:
        g = algebra(basis([("u", ODD)]), {})
        omega = BilinearForm(((Q1,),), EVEN)
    else:
        g = zero_algebra()
        omega = BilinearForm((), ODD if parity == "odd" else EVEN)
    layers = [(g, omega)]
    for _ in range(steps):
        data = random_symplectic_ext1(g, omega, parity, rng)
        out = symplectic_double_extension(g, omega, data, parity)
        g, omega = out.algebra, out.symplectic
        layers.append((g, omega))
    return layers


def abelian_oddquad_oddsymp(n, rng):
    """Abelian (n|n) with the odd pairing B and a diagonal even invertible
    skew derivation delta; omega = B(delta., .)."""
    labels = [(f"a{i}", EVEN) for i in range(n)] + [(f"u{i}", ODD) for i in range(n)]
    g = algebra(basis(labels), {})
    m = [[Q0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        m[i][n + i] = Q1
        m[n + i][i] = Q1
    bform = BilinearForm(tuple(map(tuple, m)), ODD)
    mus = [Fraction(rng.choice([1, 2, -1, -2, 3])) for _ in range(n)]
    d = [[Q0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        d[i][i] = mus[i]
        d[n + i][n + i] = -mus[i]
    delta = LinearMap(tuple(map(tuple, d)), EVEN)
    omega = BilinearForm(la.mat_mul(la.transpose(delta.matrix), bform.matrix), ODD)
    return g, bform, omega, delta, mus


def random_gode_symp_input(seed):
    """(g, B, omega, Ext1Data) valid for gode_1d_symplectic, possibly
    after some growing layers."""
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    g, bform, omega, delta, mus = abelian_oddquad_oddsymp(n, rng)
    depth = rng.randint(0, 1)
    for _ in range(depth):
        data = _gode_params(g, bform, omega, delta, rng)
        out = gode_1d_symplectic(g, bform, omega, data)
        g, bform, omega, delta = out.algebra, out.quadratic, out.symplectic, out.derivation
    return g, bform, omega, _gode_params(g, bform, omega, delta, rng)


def _gode_params(g, bform, omega, delta, rng):
    """Dbar = 0 family: x0 must be a central even delta-eigenvector with
    delta(x0) = −2 lambda x0, c1 central odd, k = B(c1,x0)/lambda."""
    z = center(g)
    evens = [v for v in z.rows if vector_parity(g.basis, v) == EVEN]
    odds = [v for v in z.rows if vector_parity(g.basis, v) == ODD]
    x0 = la.zero_vec(g.dim)
    lam = Fraction(rng.choice([1, 2, -1, 3]))
    cands = []
    for v in evens:
        img = delta(v)
        # eigenvector test: delta(v) = mu v
        nz = next((i for i, c in enumerate(v) if c != 0), None)
        if nz is None or v[nz] == 0:
            continue
        mu = img[nz] / v[nz]
        if la.vec_scale(mu, v) == img and mu != 0:
            cands.append((v, mu))
    if cands and rng.random() < 0.7:
        v, mu = rng.choice(cands)
        x0 = la.vec_scale(Fraction(rng.randint(1, 2)), v)
        lam = -mu / 2
    c1 = la.zero_vec(g.dim)
    if odds and rng.random() < 0.7:
        c1 = la.vec_scale(Fraction(rng.randint(-2, 2)), rng.choice(odds))
    k = bform(c1, x0) / lam
    return Ext1Data(D=zero_map(g.dim, ODD), mode="generalized", x0=x0, k=k, c1=c1, lam=lam)


def abelian_quad_oddsplit(n, variant, rng):
    """Abelian (2n|2n) carrying a quadratic B of the requested parity and
    an odd invertible skew delta built from 4-dimensional blocks whose
    squares are diagonal (so eigen-aligned x0 choices exist); returns
    (g, B, omega, delta)."""
    n2 = 2 * n
    labels = [(f"a{i}", EVEN) for i in range(n2)] + [(f"u{i}", ODD) for i in range(n2)]
    g = algebra(basis(labels), {})
    m = [[Q0] * (2 * n2) for _ in range(2 * n2)]
    d = [[Q0] * (2 * n2) for _ in range(2 * n2)]
    for i in range(n):
        a0, a1 = 2 * i, 2 * i + 1
        u0, u1 = n2 + 2 * i, n2 + 2 * i + 1
        if variant == "odd":
            # odd pairing B(a_j, u_j) = 1; skew block
            # delta: a0 -> s u1, a1 -> −s u0, u0 -> t a1, u1 -> t a0
            m[a0][u0] = m[u0][a0] = Q1
            m[a1][u1] = m[u1][a1] = Q1
            s = Fraction(rng.choice([1, -1]))
            t = Fraction(rng.choice([2, -2, 1, 8]))
            d[u1][a0] = s
            d[u0][a1] = -s
            d[a1][u0] = t
            d[a0][u1] = t
        else:
            # even form: hyperbolic pair on evens, symplectic pair on odds
            # delta: a0 -> q u1, a1 -> r u0, u0 -> q a1, u1 -> −r a0
            m[a0][a1] = m[a1][a0] = Q1
            m[u0][u1] = Q1
            m[u1][u0] = -Q1
            q = Fraction(rng.choice([1, 2, -1]))
            r = Fraction(rng.choice([1, 2, -2, 8]))
            d[u1][a0] = q
            d[u0][a1] = r
            d[a1][u0] = q
            d[a0][u1] = -r
    bform = BilinearForm(tuple(map(tuple, m)), ODD if variant == "odd" else EVEN)
    delta = LinearMap(tuple(map(tuple, d)), ODD)
    omega = BilinearForm(
        la.mat_mul(la.transpose(delta.matrix), bform.matrix),
        (bform.parity + 1) % 2,
    )
    return g, bform, omega, delta


def random_gde2_symp_input(variant, seed):
    """(g, B, omega, Ext2Data) valid for gde_2d_symplectic of the given
    variant ("odd" = odd-quadratic even-symplectic base)."""
    rng = random.Random(seed)
    n = rng.randint(1, 2)
    g, bform, omega, delta = abelian_quad_oddsplit(n, variant, rng)
    depth = rng.randint(0, 1)
    for _ in range(depth):
        data = _gde2_params(g, bform, omega, delta, variant, rng)
        out = gde_2d_symplectic(g, bform, omega, variant, data)
        g, bform, omega, delta = out.algebra, out.quadratic, out.symplectic, out.derivation
    return g, bform, omega, _gde2_params(g, bform, omega, delta, variant, rng)


def _gde2_params(g, bform, omega, delta, variant, rng):
    """D = Dbar = 0 family: c0, c1 central; (x0, x1) either zero or an
    eigen-plane pair with delta^2 x0 = −2 lambda^2 x0."""
    z = center(g)
    evens = [v for v in z.rows if vector_parity(g.basis, v) == EVEN]
    odds = [v for v in z.rows if vector_parity(g.basis, v) == ODD]
    lam = Fraction(rng.choice([1, 2, -1]))
    x0 = la.zero_vec(g.dim)
    x1 = la.zero_vec(g.dim)
    sq = la.mat_mul(delta.matrix, delta.matrix)
    cands = []
    for v in evens:
        img = la.mat_vec(sq, v)
        nz = next((i for i, c in enumerate(v) if c != 0), None)
        if nz is None:
            continue
        mu = img[nz] / v[nz]
        if la.vec_scale(mu, v) == img and mu < 0:
            half = la.rational_sqrt(-mu / 2)
            if half is not None and half != 0:
                cands.append((v, half))
    if cands and rng.random() < 0.7:
        v, half = rng.choice(cands)
        lam = half if rng.random() < 0.5 else -half
        x0 = v
        img = delta(x0)
        if variant == "odd":
            x1 = la.vec_scale(Q1 / (2 * lam), img)
        else:
            x1 = la.vec_scale(-Q1 / (2 * lam), img)
        if not z.contains(x1) or (variant == "even" and bform(x0, x0) != 0):
            x0 = la.zero_vec(g.dim)
            x1 = la.zero_vec(g.dim)
    c0 = la.zero_vec(g.dim)
    c1 = la.zero_vec(g.dim)
    if evens and rng.random() < 0.5:
        c0 = la.vec_scale(Fraction(rng.randint(-2, 2)), rng.choice(evens))
    if odds and rng.random() < 0.5:
        c1 = la.vec_scale(Fraction(rng.randint(-2, 2)), rng.choice(odds))
    # the scalar condition fixes k (conditions with D = Dbar = 0 and the
    # eigen-aligned x's reduce to the displayed ones)
    if variant == "odd":
        need0 = la.vec_sub(delta(x0), la.vec_scale(2 * lam, x1))
        need1 = la.vec_add(delta(x1), la.vec_scale(lam, x0))
        k = (bform(c1, x0) - 2 * bform(x1, c0)) / lam
    else:
        need0 = la.vec_add(delta(x0), la.vec_scale(2 * lam, x1))
        need1 = la.vec_sub(delta(x1), la.vec_scale(lam, x0))
        k = bform(c0, x0) / lam
    if not (la.vec_is_zero(need0) and la.vec_is_zero(need1)):
        x0 = la.zero_vec(g.dim)
        x1 = la.zero_vec(g.dim)
        k = Q0 if variant == "odd" else bform(c0, x0) / lam
    alpha = Fraction(rng.randint(-2, 2))
    return Ext2Data(
        D=zero_map(g.dim, EVEN),
        Dbar=zero_map(g.dim, ODD),
        x0=x0,
        x1=x1,
        k=k,
        c0=c0,
        c1=c1,
        lam=lam,
        alpha=alpha,
    )
