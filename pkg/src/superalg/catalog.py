"""Deterministic builders for the worked examples used as regression
fixtures: the two-dimensional algebra m, the four-dimensional nilpotent
algebra L with its derivations D and Delta, the trivial double
extensions of L carrying the three quadratic-symplectic structures, the
truncated polynomial superalgebras A_n with their odd pairing, the
tensor algebras h (x) A_n, and the twelve-dimensional two-step
extension built from L + L*.

Basis orders are frozen: L is (l0, k0 | l1, k1); trivial extensions
append starred duals after the base block of each parity; extension
vectors follow the construction module's layout.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la
from .core import EVEN, ODD, algebra, algebra_from_labels, basis
from .errors import BadParams, UnknownEntry
from .forms import BilinearForm, form
from .maps import LinearMap, map_from_images, zero_map
from .constructions import (
    AssocSuperalgebra,
    Ext2Data,
    QuadSympAlgebra,
    assoc_algebra,
    gde_2d,
    lift_derivation,
    tensor_odd_symmetric,
    trivial_double_extension,
)

NAMES = (
    "m",
    "L",
    "L_odd_trivial",
    "L_even_trivial",
    "A_n",
    "h_tensor_A_n",
    "Ex5.2",
)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: object = None  # LieSuperalgebra
    assoc: AssocSuperalgebra = None
    forms: dict = field(default_factory=dict)
    maps: dict = field(default_factory=dict)
    expected: tuple = ()
    n: int = None


def _L():
    b = basis([("l0", EVEN), ("k0", EVEN), ("l1", ODD), ("k1", ODD)])
    alg = algebra_from_labels(
        b, {("l0", "l1"): {"k1": 1}, ("l1", "l1"): {"k0": 1}}
    )
    dmap = map_from_images(
        b, {"l0": {"l0": 1}, "l1": {"l1": 1}, "k0": {"k0": 2}, "k1": {"k1": 2}}, EVEN
    )
    delta = map_from_images(
        b, {"l0": {"l1": 1}, "l1": {"l0": 1}, "k0": {"k1": 2}, "k1": {"k0": 1}}, ODD
    )
    dbar = map_from_images(b, {"k0": {"k1": 2}, "l1": {"l0": 1}}, ODD)
    return alg, dmap, delta, dbar


def _omega_from(dmap, quad):
    return BilinearForm(
        la.mat_mul(la.transpose(dmap.matrix), quad.matrix), (dmap.degree + quad.parity) % 2
    )


def _a_n(n):
    if n < 1:
        raise BadParams("A_n needs n >= 1")
    labels = [(f"e{i}", EVEN) for i in range(1, n + 1)] + [
        (f"f{i}", ODD) for i in range(1, n + 1)
    ]
    b = basis(labels)
    ent = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i + j <= n:
                ent[(i - 1, j - 1)] = {i + j - 1: 1}  # e_i e_j = e_{i+j}
                ent[(i - 1, n + j - 1)] = {n + i + j - 1: 1}  # e_i f_j = f_{i+j}
                ent[(n + i - 1, j - 1)] = {n + i + j - 1: 1}  # f_i e_j = f_{i+j}
    a = assoc_algebra(b, ent)
    m = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(1, n + 1):
        j = n + 1 - i
        m[i - 1][n + j - 1] = Fraction(1)  # B(e_i, f_{n+1-i}) = 1
        m[n + j - 1][i - 1] = Fraction(1)
    b_a = BilinearForm(tuple(tuple(r) for r in m), ODD)
    return a, b_a


def _h_nonabelian():
    b = basis([("x", EVEN), ("y", EVEN)])
    alg = algebra_from_labels(b, {("x", "y"): {"y": 1}})
    omega = form([[0, 1], [-1, 0]], EVEN)
    return alg, omega


def build(name, n=None):
    """Build a catalog entry; n parametrizes the A_n-based families."""
    if name == "m":
        b = basis([("e0", EVEN), ("e1", ODD)])
        alg = algebra_from_labels(b, {("e0", "e1"): {"e1": 1}})
        omega = form([[0, 1], [-1, 0]], ODD)
        return CatalogEntry(
            name,
            algebra=alg,
            forms={"omega": omega},
            expected=("jacobi", "symplectic:omega"),
        )
    if name == "L":
        alg, dmap, delta, dbar = _L()
        return CatalogEntry(
            name,
            algebra=alg,
            maps={"D": dmap, "Delta": delta, "Dbar": dbar},
            expected=(
                "jacobi",
                "nilpotent",
                "superderivation:D",
                "superderivation:Delta",
                "superderivation:Dbar",
                "invertible:D",
                "invertible:Delta",
            ),
        )
    if name == "L_odd_trivial":
        alg, dmap, delta, _ = _L()
        ext = trivial_double_extension(alg, "odd")
        dt = lift_derivation(alg, dmap, "odd")
        deltat = lift_derivation(alg, delta, "odd")
        return CatalogEntry(
            name,
            algebra=ext.algebra,
            forms={
                "B": ext.quadratic,
                "omega_D": _omega_from(dt, ext.quadratic),
                "omega_Delta": _omega_from(deltat, ext.quadratic),
            },
            maps={"D_lift": dt, "Delta_lift": deltat},
            expected=(
                "jacobi",
                "quadratic:B",
                "symplectic:omega_D",
                "symplectic:omega_Delta",
                "superderivation:D_lift",
                "superderivation:Delta_lift",
                "skew:D_lift:B",
                "skew:Delta_lift:B",
                "invertible:D_lift",
                "invertible:Delta_lift",
            ),
        )
    if name == "L_even_trivial":
        alg, dmap, delta, dbar = _L()
        ext = trivial_double_extension(alg, "even")
        deltat = lift_derivation(alg, delta, "even")
        dt = lift_derivation(alg, dmap, "even")
        dbart = lift_derivation(alg, dbar, "even", require_invertible=False)
        return CatalogEntry(
            name,
            algebra=ext.algebra,
            forms={"B": ext.quadratic, "omega_Delta": _omega_from(deltat, ext.quadratic)},
            maps={"D_lift": dt, "Delta_lift": deltat, "Dbar_lift": dbart},
            expected=(
                "jacobi",
                "quadratic:B",
                "symplectic:omega_Delta",
                "superderivation:Delta_lift",
                "skew:Delta_lift:B",
                "invertible:Delta_lift",
            ),
        )
    if name == "A_n":
        if n is None:
            raise BadParams("A_n needs the parameter n")
        a, b_a = _a_n(n)
        return CatalogEntry(
            name,
            assoc=a,
            forms={"B_A": b_a},
            expected=("associative", "supercommutative", "assoc_form:B_A"),
            n=n,
        )
    if name == "h_tensor_A_n":
        if n is None:
            raise BadParams("h_tensor_A_n needs the parameter n")
        h, omega_h = _h_nonabelian()
        a, b_a = _a_n(n)
        out = tensor_odd_symmetric(h, omega_h, a, b_a)
        g = out.algebra
        images = {}
        for i in range(1, n + 1):
            for hl in ("x", "y"):
                images[f"{hl}.e{i}"] = {f"{hl}.f{i}": i}
                images[f"{hl}.f{i}"] = {f"{hl}.e{i}": 1}
        dmap = map_from_images(g.basis, images, ODD)
        return CatalogEntry(
            name,
            algebra=g,
            forms={"Omega": out.symplectic},
            maps={"D": dmap},
            expected=(
                "jacobi",
                "symplectic:Omega",
                "superderivation:D",
                "invertible:D",
            ),
            n=n,
        )
    if name == "Ex5.2":
        alg, dmap, _, dbar = _L()
        ext = trivial_double_extension(alg, "even")
        dt = lift_derivation(alg, dmap, "even")
        dbart = lift_derivation(alg, dbar, "even", require_invertible=False)
        zero8 = la.zero_vec(8)
        out = gde_2d(
            ext.algebra,
            ext.quadratic,
            "even",
            Ext2Data(D=dt, Dbar=dbart, x0=zero8, x1=zero8, k=Fraction(0)),
        )
        # the parameter maps live on the 8-dimensional base and are exposed
        # through the L_even_trivial entry
        return CatalogEntry(
            name,
            algebra=out.algebra,
            forms={"gamma": out.quadratic},
            expected=("jacobi", "quadratic:gamma"),
        )
    raise UnknownEntry(f"no catalog entry named {name!r}")


def expected_report(entry):
    """Evaluate each expected-property name of an entry exactly."""
    from .core import graded_jacobi_check, is_nilpotent
    from .forms import classify_form, parity_pattern_ok
    from .maps import skew_check, superderivation_check
    from .constructions import is_associative, is_supercommutative, _assoc_form_invariant

    out = {}
    for prop in entry.expected:
        parts = prop.split(":")
        kind = parts[0]
        if kind == "jacobi":
            out[prop] = bool(graded_jacobi_check(entry.algebra))
        elif kind == "nilpotent":
            out[prop] = is_nilpotent(entry.algebra)
        elif kind == "quadratic":
            out[prop] = classify_form(entry.algebra, entry.forms[parts[1]]).is_quadratic()
        elif kind == "symplectic":
            out[prop] = classify_form(entry.algebra, entry.forms[parts[1]]).is_symplectic()
        elif kind == "superderivation":
            out[prop] = bool(superderivation_check(entry.algebra, entry.maps[parts[1]]))
        elif kind == "invertible":
            out[prop] = entry.maps[parts[1]].is_invertible()
        elif kind == "skew":
            out[prop] = skew_check(
                entry.algebra, entry.forms[parts[2]], entry.maps[parts[1]]
            )
        elif kind == "associative":
            out[prop] = is_associative(entry.assoc)
        elif kind == "supercommutative":
            out[prop] = is_supercommutative(entry.assoc)
        elif kind == "assoc_form":
            bf = entry.forms[parts[1]]
            ok = bf.parity == ODD and parity_pattern_ok(entry.assoc.basis, bf)
            ok = ok and _assoc_form_invariant(entry.assoc, bf)
            ok = ok and la.rank(bf.matrix) == entry.assoc.dim
            out[prop] = ok
        else:
            raise UnknownEntry(f"unknown expected property {prop!r}")
    return out
