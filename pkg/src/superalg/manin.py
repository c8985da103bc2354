"""Homogeneous-Manin structure: detection of special symplectic Manin
splits through the eigen-decomposition of the squared derivation, the
isotropy/stability criterion, and the Manin-compatible double-extension
wrappers with their inverse.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _linalg as la
from .core import EVEN, ODD, bracket, center, full_space, span, vector_parity
from .errors import (
    ConditionViolated,
    EmptyCenterInFactors,
    InvariantViolation,
    IrrationalSpectrum,
    StabilityViolated,
    ZeroEigenvalue,
)
from .forms import classify_form
from .maps import LinearMap, rational_eigen_split, supercommutator, symplectic_derivation
from .constructions import Ext1Data, Ext2Data, gde_2d_symplectic, gode_1d_symplectic
from .decompositions import split_quadratic_symplectic

Q0 = Fraction(0)


@dataclass(frozen=True)
class ManinSplit:
    a: object  # Subspace
    b: object  # Subspace
    spectrum: object = None  # EigenSplit of the even split map, when computed
    positive_set: tuple = None
    center_in_a: bool = None
    center_in_b: bool = None


def _split_map(g, bform, omega):
    """The even invertible skew derivation whose eigenspaces carry the
    split: Delta itself when even, [Delta, Delta] = 2 Delta^2 when odd
    (for an even Delta the supercommutator with itself vanishes)."""
    delta = symplectic_derivation(g, bform, omega)
    if delta.degree == ODD:
        return delta, supercommutator(delta, delta)
    return delta, delta


def _is_subalgebra(g, sub):
    for i in range(sub.dim):
        for j in range(i, sub.dim):
            if not sub.contains(bracket(g, sub.rows[i], sub.rows[j])):
                return False
    return True


def _isotropic(form, sub):
    return all(form(v, w) == 0 for v in sub.rows for w in sub.rows)


def _stable(sub, dmap):
    return all(sub.contains(dmap(v)) for v in sub.rows)


def manin_split(g, bform, omega):
    """Split g into the positive and negative eigenspace sums of the even
    split map; both halves are verified to be isotropic Delta-stable
    subalgebras meeting the special-Manin contract."""
    delta, even_map = _split_map(g, bform, omega)
    es = rational_eigen_split(even_map, full_space(g.basis))
    if es.residual.dim > 0 or es.complete() < g.dim:
        raise IrrationalSpectrum("the split map has an incomplete rational spectrum")
    for ev, _ in es.pairs:
        if ev == 0:
            raise ZeroEigenvalue("invertible split map cannot have eigenvalue 0")
    dims = {ev: space.dim for ev, space in es.pairs}
    for ev, d in dims.items():
        if dims.get(-ev) != d:
            raise InvariantViolation(
                "manin", "spectrum is not symmetric under negation"
            )
    pos = [(ev, s) for ev, s in es.pairs if ev > 0]
    neg = [(ev, s) for ev, s in es.pairs if ev < 0]
    a = span(g.basis, [r for _, s in pos for r in s.rows])
    b = span(g.basis, [r for _, s in neg for r in s.rows])
    split = ManinSplit(
        a,
        b,
        spectrum=es,
        positive_set=tuple(ev for ev, _ in pos),
        center_in_a=center(g).intersect(a).dim > 0,
        center_in_b=center(g).intersect(b).dim > 0,
    )
    if not special_check(g, bform, omega, a, b):
        raise InvariantViolation("manin", "eigen split fails the special-Manin checks")
    return split


def special_check(g, bform, omega, a, b):
    """Defn of a special homogeneous-symplectic homogeneous-Manin split:
    a, b complementary totally-isotropic subalgebras for B on which omega
    also vanishes.  Both characterizations of the criterion (omega-
    isotropy vs Delta-stability) are evaluated and must agree."""
    if a.dim + b.dim != g.dim or a.intersect(b).dim != 0:
        return False
    if not (_is_subalgebra(g, a) and _is_subalgebra(g, b)):
        return False
    if not (_isotropic(bform, a) and _isotropic(bform, b)):
        return False
    omega_iso = _isotropic(omega, a) and _isotropic(omega, b)
    try:
        delta = symplectic_derivation(g, bform, omega)
    except Exception:
        return False
    stable = _stable(a, delta) and _stable(b, delta)
    if omega_iso != stable:
        raise InvariantViolation(
            "manin", "isotropy and stability characterizations disagree"
        )
    return omega_iso


def _require_in_span(sub, v, name):
    if v is not None and not sub.contains(tuple(v)):
        raise StabilityViolated(f"{name} must lie in the second factor")


def _require_stabilizes(sub, dmap, name):
    if not _stable(sub, dmap):
        raise StabilityViolated(f"{name} must stabilize the factor")


def manin_double_extension(g, bform, omega, a, b, kind, data):
    """Manin-compatible wrappers of the symplectic-quadratic extensions:
    parameters confined to the factor b, derivations stabilizing b, the
    scalar k (and alpha) forced to zero; the extended split gains the
    dual lines on the a side and the new vectors on the b side."""
    if not special_check(g, bform, omega, a, b):
        raise ConditionViolated("manin", "input split is not special")
    delta = symplectic_derivation(g, bform, omega)
    _require_stabilizes(a, delta, "delta(a)")
    _require_stabilizes(b, delta, "delta(b)")
    if kind == "odd_odd_1d":
        _require_stabilizes(b, data.D, "Dbar(b)")
        _require_in_span(b, data.x0, "x0")
        _require_in_span(b, data.c1, "c1")
        forced = Ext1Data(
            D=data.D, mode="generalized", x0=data.x0, k=Q0, c1=data.c1, lam=data.lam
        )
        out = gode_1d_symplectic(g, bform, omega, forced)
    elif kind in ("odd_even_2d", "even_odd_2d"):
        variant = "odd" if kind == "odd_even_2d" else "even"
        _require_stabilizes(b, data.D, "D(b)")
        _require_stabilizes(b, data.Dbar, "Dbar(b)")
        for name in ("x0", "x1", "c0", "c1"):
            _require_in_span(b, getattr(data, name), name)
        forced = Ext2Data(
            D=data.D,
            Dbar=data.Dbar,
            x0=data.x0,
            x1=data.x1,
            k=Q0,
            c0=data.c0,
            c1=data.c1,
            lam=data.lam,
            alpha=Q0,
        )
        out = gde_2d_symplectic(g, bform, omega, variant, forced)
    else:
        raise ValueError(f"unknown manin extension kind {kind!r}")
    big = out.algebra.basis
    base_map = {i: big.index(l) for i, l in enumerate(g.basis.labels)}
    taken = set(g.basis.labels)
    added = [l for l in big.labels if l not in taken]
    stars = sorted(l for l in added if "*" in l)
    plain = sorted(l for l in added if "*" not in l)
    n = big.dim

    def embed(v):
        out_v = [Q0] * n
        for i, c in enumerate(v):
            out_v[base_map[i]] = c
        return tuple(out_v)

    a_rows = [embed(v) for v in a.rows] + [la.unit_vec(n, big.index(l)) for l in stars]
    b_rows = [embed(v) for v in b.rows] + [la.unit_vec(n, big.index(l)) for l in plain]
    a_new = span(big, a_rows)
    b_new = span(big, b_rows)
    if not special_check(out.algebra, out.quadratic, out.symplectic, a_new, b_new):
        raise InvariantViolation("manin", "extended split is not special")
    split = ManinSplit(
        a_new,
        b_new,
        center_in_a=center(out.algebra).intersect(a_new).dim > 0,
        center_in_b=center(out.algebra).intersect(b_new).dim > 0,
    )
    return out, split


def manin_inverse(g, bform, omega, a, b):
    """Inverse of the Manin double extensions: run the matching
    quadratic-symplectic split with the central element chosen inside a
    (or b) and the partner vectors inside the other factor, then verify
    the recovered base inherits the split with k = 0 (and alpha = 0)."""
    if not special_check(g, bform, omega, a, b):
        raise ConditionViolated("manin", "input split is not special")
    z = center(g)
    za, zb = z.intersect(a), z.intersect(b)
    if za.dim > 0:
        inside, other = a, b
    elif zb.dim > 0:
        inside, other = b, a
    else:
        raise EmptyCenterInFactors("the center avoids both factors")
    result = split_quadratic_symplectic(g, bform, omega, within=inside, other=other)
    if isinstance(result.params, Ext1Data):
        if result.params.k != 0:
            raise InvariantViolation("manin", "recovered k is nonzero")
    else:
        if result.params.k != 0 or result.params.alpha != 0:
            raise InvariantViolation("manin", "recovered k or alpha is nonzero")
    hbasis = result.base.algebra.basis
    # base vectors of the split live in original coordinates via the
    # embedding; intersect the factors with the recovered complement
    emb = {l: v for l, v in zip(result.reconstructed.algebra.basis.labels, result.embedding)}
    h_rows = [emb[l] for l in hbasis.labels]
    hspace = span(g.basis, h_rows)
    a_h = a.intersect(hspace)
    b_h = b.intersect(hspace)
    if a_h.dim + b_h.dim != hspace.dim:
        raise InvariantViolation("manin", "factors do not restrict to the base")
    coords = _coords_in_rows(h_rows)

    def pull(sub):
        return span(hbasis, [coords(v) for v in sub.rows])

    a_base, b_base = pull(a_h), pull(b_h)
    if not special_check(
        result.base.algebra, result.base.quadratic, result.base.symplectic, a_base, b_base
    ):
        raise InvariantViolation("manin", "recovered base split is not special")
    return result, ManinSplit(
        a_base,
        b_base,
        center_in_a=center(result.base.algebra).intersect(a_base).dim > 0,
        center_in_b=center(result.base.algebra).intersect(b_base).dim > 0,
    )


def _coords_in_rows(rows):
    m = len(rows)
    if m == 0:
        return lambda v: ()
    n = len(rows[0])
    cols = tuple(tuple(rows[j][i] for j in range(m)) for i in range(n))

    def coords(v):
        c = la.solve(cols, tuple(v), ncols=m)
        if c is None:
            raise InvariantViolation("manin", "vector outside the base span")
        return c

    return coords
