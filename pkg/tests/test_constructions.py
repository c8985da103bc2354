from fractions import Fraction

import pytest

import superalg._linalg as la
from superalg.core import (
    EVEN,
    ODD,
    algebra,
    algebra_from_labels,
    basis,
    bracket,
    center,
    graded_jacobi_check,
    zero_algebra,
)
from superalg.errors import (
    ConditionViolated,
    NotADerivation,
    NotAssociative,
    NotCoboundary,
    NotInvertible,
    NotSupercommutative,
    WrongParity,
    ZeroLambda,
)
from superalg.forms import BilinearForm, classify_form, form, zero_form
from superalg.maps import (
    LinearMap,
    linear_map,
    map_from_images,
    skew_check,
    supercommutator,
    superderivation_check,
    zero_map,
)
from superalg.constructions import (
    AssocSuperalgebra,
    Ext1Data,
    Ext2Data,
    assoc_algebra,
    central_extension,
    check_quad_symp,
    gde_2d,
    gde_2d_symplectic,
    gode_1d,
    gode_1d_symplectic,
    is_associative,
    is_supercommutative,
    lift_derivation,
    symplectic_double_extension,
    tensor_odd_symmetric,
    trivial_double_extension,
)


def all_ok(qsa):
    return all(check_quad_symp(qsa).values())


# ---------------------------------------------------------------------------
# trivial double extensions and lifts


def test_trivial_double_extension(L, m_alg, zero):
    out = trivial_double_extension(zero, "even")
    assert out.dim == 0
    out = trivial_double_extension(L, "odd")
    assert out.dim == 8
    assert out.algebra.basis.n_even == 4 and out.algebra.basis.n_odd == 4
    assert all_ok(out)
    assert out.quadratic.parity == ODD
    out = trivial_double_extension(m_alg, "even")
    assert out.dim == 4 and all_ok(out)
    assert out.quadratic.parity == EVEN


def test_lift_derivation(L, L_maps):
    d, delta, dbar = L_maps
    dt = lift_derivation(L, d, "odd")
    evs = sorted(dt.matrix[i][i] for i in range(8))
    assert evs == [-2, -2, -1, -1, 1, 1, 2, 2]
    ext = trivial_double_extension(L, "odd")
    assert superderivation_check(ext.algebra, dt).ok
    assert skew_check(ext.algebra, ext.quadratic, dt)
    deltat = lift_derivation(L, delta, "odd")
    assert deltat.degree == ODD and deltat.is_invertible()
    # identity on an abelian base lifts to diag(1,...,-1,...)
    ab = algebra(basis([("a", 0), ("u", 1)]), {})
    idm = linear_map([[1, 0], [0, 1]], EVEN)
    lifted = lift_derivation(ab, idm, "even")
    diag = [lifted.matrix[i][i] for i in range(4)]
    assert sorted(diag) == [-1, -1, 1, 1]
    with pytest.raises(NotInvertible):
        lift_derivation(L, dbar, "even")
    lifted_dbar = lift_derivation(L, dbar, "even", require_invertible=False)
    assert la.mat_is_zero(la.mat_mul(lifted_dbar.matrix, lifted_dbar.matrix))
    with pytest.raises(NotADerivation):
        lift_derivation(L, map_from_images(L.basis, {"l0": {"l0": 1}}, EVEN), "odd")


def test_example_2_12_structures(L, L_maps):
    d, delta, _ = L_maps
    ext_odd = trivial_double_extension(L, "odd")
    ext_even = trivial_double_extension(L, "even")
    dt = lift_derivation(L, d, "odd")
    deltat_odd = lift_derivation(L, delta, "odd")
    deltat_even = lift_derivation(L, delta, "even")
    w1 = BilinearForm(la.mat_mul(la.transpose(dt.matrix), ext_odd.quadratic.matrix), ODD)
    w2 = BilinearForm(
        la.mat_mul(la.transpose(deltat_odd.matrix), ext_odd.quadratic.matrix), EVEN
    )
    w3 = BilinearForm(
        la.mat_mul(la.transpose(deltat_even.matrix), ext_even.quadratic.matrix), ODD
    )
    assert classify_form(ext_odd.algebra, w1).is_symplectic()
    assert classify_form(ext_odd.algebra, w2).is_symplectic()
    assert classify_form(ext_even.algebra, w3).is_symplectic()
    assert ext_odd.quadratic.parity == ODD and ext_even.quadratic.parity == EVEN


# ---------------------------------------------------------------------------
# tensor construction


def _pairing_a1():
    b = basis([("e1", 0), ("f1", 1)])
    a = assoc_algebra(b, {})  # all products vanish past n = 1
    b_a = form([[0, 1], [1, 0]], ODD)
    return a, b_a


def test_tensor_odd_symmetric():
    h = algebra_from_labels(basis([("x", 0), ("y", 0)]), {("x", "y"): {"y": 1}})
    omega = form([[0, 1], [-1, 0]], EVEN)
    a, b_a = _pairing_a1()
    out = tensor_odd_symmetric(h, omega, a, b_a)
    assert out.dim == 4 and all_ok(out)
    assert out.algebra.is_abelian()  # A_1 has zero products
    # associative but not supercommutative: e.e = e, e.f = f, f.e = 0
    bad = assoc_algebra(
        basis([("e", 0), ("f", 1)]), {(0, 0): {0: 1}, (0, 1): {1: 1}}
    )
    assert is_associative(bad) and not is_supercommutative(bad)
    with pytest.raises(NotSupercommutative):
        tensor_odd_symmetric(h, omega, bad, b_a)
    # non-associative input rejected first
    nonassoc = assoc_algebra(
        basis([("e", 0), ("f", 1)]), {(0, 1): {1: 1}}
    )
    assert not is_associative(nonassoc)
    with pytest.raises(NotAssociative):
        tensor_odd_symmetric(h, omega, nonassoc, b_a)


def test_tensor_with_a2():
    from superalg.catalog import _a_n

    h = algebra_from_labels(basis([("x", 0), ("y", 0)]), {("x", "y"): {"y": 1}})
    omega = form([[0, 1], [-1, 0]], EVEN)
    a, b_a = _a_n(2)
    assert is_associative(a) and is_supercommutative(a)
    out = tensor_odd_symmetric(h, omega, a, b_a)
    assert out.dim == 8 and all_ok(out)
    assert not out.algebra.is_abelian()


# ---------------------------------------------------------------------------
# central extensions


def test_central_extension_zero_map(m_alg, m_omega):
    out = central_extension(m_alg, m_omega, zero_map(2, EVEN), "odd")
    assert out.dim == 3
    assert graded_jacobi_check(out).ok
    # gamma = 0: the new line is a split central line
    assert center(out).dim == 1


def test_central_extension_gamma(m_alg, m_omega, abelian11):
    # identity is a derivation only of abelian algebras; there
    # gamma(x, y) = −[w(x,y) + w(x,y)] = −2
    om = form([[0, 1], [-1, 0]], ODD)
    out = central_extension(abelian11, om, linear_map([[1, 0], [0, 1]], EVEN), "odd")
    assert graded_jacobi_check(out).ok
    ies = out.basis.index("e*")
    assert out.bracket_basis(out.basis.index("x"), out.basis.index("y")) == {ies: -2}
    assert out.basis.parity(ies) == ODD
    # on m itself the scaling derivation D = diag(0,1) gives gamma = −1
    d = map_from_images(m_alg.basis, {"e1": {"e1": 1}}, EVEN)
    out = central_extension(m_alg, m_omega, d, "odd")
    assert graded_jacobi_check(out).ok
    ies = out.basis.index("e*")
    row = out.bracket_basis(out.basis.index("e0"), out.basis.index("e1"))
    assert row.get(ies) == -1
    # identity map is rejected on the non-abelian m
    with pytest.raises(NotADerivation):
        central_extension(m_alg, m_omega, linear_map([[1, 0], [0, 1]], EVEN), "odd")


def test_central_extension_odd_D(abelian11):
    om = form([[0, 1], [-1, 0]], ODD)
    swap = linear_map([[0, 1], [1, 0]], ODD)
    out = central_extension(abelian11, om, swap, "odd")
    assert graded_jacobi_check(out).ok
    assert out.basis.parity(out.basis.index("e*")) == EVEN
    with pytest.raises(WrongParity):
        central_extension(abelian11, om, swap, "even")
    with pytest.raises(NotADerivation):
        central_extension(
            algebra_from_labels(basis([("e0", 0), ("e1", 1)]), {("e0", "e1"): {"e1": 1}}),
            om,
            map_from_images(basis([("e0", 0), ("e1", 1)]), {"e0": {"e0": 1}}, EVEN),
            "odd",
        )


# ---------------------------------------------------------------------------
# one-dimensional symplectic double extensions


def test_sde_over_zero(zero):
    for parity in ("odd", "even"):
        out = symplectic_double_extension(
            zero, BilinearForm((), ODD if parity == "odd" else EVEN),
            Ext1Data(D=zero_map(0, EVEN), mode="double"), parity
        )
        assert out.dim == 2 and all_ok(out)
        b = out.algebra.basis
        if parity == "odd":
            assert (b.n_even, b.n_odd) == (1, 1)
        else:
            assert (b.n_even, b.n_odd) == (2, 0)


def test_sde_generalized(abelian11):
    om = form([[0, 1], [-1, 0]], ODD)
    out = symplectic_double_extension(
        abelian11, om, Ext1Data(D=zero_map(2, ODD), mode="generalized", x0=(0, 0)), "odd"
    )
    assert out.dim == 4 and all_ok(out)
    # Omega restricted to the base equals omega; Omega(e*, e) = 1
    b = out.algebra.basis
    ix, iy = b.index("x"), b.index("y")
    assert out.symplectic.matrix[ix][iy] == 1
    assert out.symplectic.matrix[b.index("e*")][b.index("e")] == 1


def test_sde_theta_not_coboundary(abelian11):
    # over an abelian base theta = 4 omega for D = id: never a coboundary
    om = form([[0, 1], [-1, 0]], ODD)
    with pytest.raises(NotCoboundary):
        symplectic_double_extension(
            abelian11, om, Ext1Data(D=linear_map([[1, 0], [0, 1]], EVEN), mode="double"), "odd"
        )


def test_sde_coboundary_solved(m_alg, m_omega):
    # over m the derived algebra spans e1, so theta is a coboundary
    d = map_from_images(m_alg.basis, {"e1": {"e1": 1}}, EVEN)
    assert superderivation_check(m_alg, d).ok
    out = symplectic_double_extension(m_alg, m_omega, Ext1Data(D=d, mode="double"), "odd")
    assert all_ok(out)


def test_sde_condition_violated(abelian11, m_alg, m_omega):
    om = form([[0, 1], [-1, 0]], ODD)
    with pytest.raises(ConditionViolated):
        # generalized mode needs odd D
        symplectic_double_extension(
            abelian11, om, Ext1Data(D=zero_map(2, EVEN), mode="generalized", x0=(0, 0)), "odd"
        )
    with pytest.raises(ConditionViolated):
        # D^2 = (1/2) ad(x0) violated: odd D with D^2 != 0 on abelian
        dmap = linear_map([[0, 1], [1, 0]], ODD)
        symplectic_double_extension(
            abelian11, om, Ext1Data(D=dmap, mode="generalized", x0=(0, 0)), "odd"
        )
    with pytest.raises(ConditionViolated):
        # omega(x0,x0) = 0 fails in the even case
        g = algebra(basis([("u", 1)]), {})
        omg = form([[1]], EVEN)
        symplectic_double_extension(
            g, omg, Ext1Data(D=zero_map(1, ODD), mode="generalized", x0=None), "even"
        )


def test_sde_even_parity_bookkeeping():
    g = algebra(basis([("x", 0), ("y", 0)]), {})
    om = form([[0, 1], [-1, 0]], EVEN)
    out = symplectic_double_extension(
        g, om, Ext1Data(D=zero_map(2, ODD), mode="generalized", x0=(0, 0)), "even"
    )
    b = out.algebra.basis
    assert (b.n_even, b.n_odd) == (2, 2)  # odd |e|: adds (0, +2)
    assert all_ok(out)
    out = symplectic_double_extension(g, om, Ext1Data(D=zero_map(2, EVEN), mode="double"), "even")
    b = out.algebra.basis
    assert (b.n_even, b.n_odd) == (4, 0)  # even |e|: adds (+2, 0)


# ---------------------------------------------------------------------------
# odd-quadratic 1-dimensional extension and enrichment


def test_gode_over_zero(zero):
    out = gode_1d(zero, BilinearForm((), ODD), Ext1Data(D=zero_map(0, ODD), mode="generalized", x0=(), k=1))
    assert out.dim == 2 and all_ok(out)
    b = out.algebra.basis
    ie, ies = b.index("e"), b.index("e*")
    assert out.algebra.bracket_basis(ie, ie) == {ies: 1}
    assert out.quadratic.matrix[ies][ie] == 1


def test_gode_abelian_base(abelian11):
    b11 = form([[0, 1], [1, 0]], ODD)
    out = gode_1d(abelian11, b11, Ext1Data(D=zero_map(2, ODD), mode="generalized", x0=(0, 0), k=0))
    assert out.dim == 4 and all_ok(out)
    assert out.algebra.is_abelian()


def test_gode_on_L_ext(L, L_maps):
    # a nonzero skew Dbar on the odd trivial extension of L
    _, _, dbar = L_maps
    ext = trivial_double_extension(L, "odd")
    dbart = lift_derivation(L, dbar, "odd", require_invertible=False)
    out = gode_1d(
        ext.algebra,
        ext.quadratic,
        Ext1Data(D=dbart, mode="generalized", x0=la.zero_vec(8), k=0),
    )
    assert out.dim == 10 and all_ok(out)
    assert not out.algebra.is_abelian()


def test_gode_symplectic(abelian11):
    b11 = form([[0, 1], [1, 0]], ODD)
    om = form([[0, 1], [-1, 0]], ODD)
    out = gode_1d_symplectic(
        abelian11, b11, om,
        Ext1Data(D=zero_map(2, ODD), mode="generalized", x0=(0, 0), k=0, c1=(0, 0), lam=1),
    )
    assert out.dim == 4 and all_ok(out)
    with pytest.raises(ZeroLambda):
        gode_1d_symplectic(
            abelian11, b11, om,
            Ext1Data(D=zero_map(2, ODD), mode="generalized", x0=(0, 0), k=0, c1=(0, 0), lam=0),
        )


def test_gode_symplectic_on_L_ext(L, L_maps):
    # conditions hold with Dbar = 0, x0 = 0, c1 = 0, lambda = 1, k = 0
    d, _, _ = L_maps
    ext = trivial_double_extension(L, "odd")
    dt = lift_derivation(L, d, "odd")
    om = BilinearForm(la.mat_mul(la.transpose(dt.matrix), ext.quadratic.matrix), ODD)
    out = gode_1d_symplectic(
        ext.algebra, ext.quadratic, om,
        Ext1Data(D=zero_map(8, ODD), mode="generalized", x0=la.zero_vec(8), k=0,
                 c1=la.zero_vec(8), lam=1),
    )
    assert out.dim == 10 and all_ok(out)


# ---------------------------------------------------------------------------
# two-dimensional generalized double extensions


def test_gde_2d_over_zero(zero):
    for parity, quad in (("odd", BilinearForm((), ODD)), ("even", BilinearForm((), EVEN))):
        out = gde_2d(
            zero, quad, parity,
            Ext2Data(D=zero_map(0, EVEN), Dbar=zero_map(0, ODD), x0=(), x1=(), k=Fraction(5)),
        )
        assert out.dim == 4 and all_ok(out)
        b = out.algebra.basis
        i0s = b.index("e0*")
        i1s = b.index("e1*")
        i0, i1 = b.index("e0"), b.index("e1")
        assert out.algebra.bracket_basis(i1, i1) == {i0s: 5}
        if parity == "even":
            assert out.algebra.bracket_basis(i0, i1) == {i1s: 5}
        else:
            assert out.algebra.bracket_basis(i0, i1) == {}
        # dual parities: even variant direct, odd variant flipped crosswise
        if parity == "odd":
            assert b.parity(i0s) == EVEN and b.parity(i1s) == ODD
            assert out.quadratic.matrix[i0s][i1] == 1
            assert out.quadratic.matrix[i1s][i0] == 1
        else:
            assert b.parity(i0s) == EVEN and b.parity(i1s) == ODD
            assert out.quadratic.matrix[i0s][i0] == 1
            assert out.quadratic.matrix[i1s][i1] == 1


def test_gde_2d_ex52_shape(L, L_maps):
    d, _, dbar = L_maps
    ext = trivial_double_extension(L, "even")
    dt = lift_derivation(L, d, "even")
    dbart = lift_derivation(L, dbar, "even", require_invertible=False)
    out = gde_2d(
        ext.algebra, ext.quadratic, "even",
        Ext2Data(D=dt, Dbar=dbart, x0=la.zero_vec(8), x1=la.zero_vec(8), k=0),
    )
    assert out.dim == 12 and all_ok(out)
    assert (out.algebra.basis.n_even, out.algebra.basis.n_odd) == (6, 6)


def test_gde_2d_odd_with_nonzero_derivations(L, L_maps):
    d, _, dbar = L_maps
    ext = trivial_double_extension(L, "odd")
    dt = lift_derivation(L, d, "odd")
    dbart = lift_derivation(L, dbar, "odd", require_invertible=False)
    assert la.mat_is_zero(supercommutator(dt, dbart).matrix)
    out = gde_2d(
        ext.algebra, ext.quadratic, "odd",
        Ext2Data(D=dt, Dbar=dbart, x0=la.zero_vec(8), x1=la.zero_vec(8), k=Fraction(2)),
    )
    assert out.dim == 12 and all_ok(out)


def test_gde_2d_condition_checks(abelian11):
    b11 = form([[0, 1], [1, 0]], ODD)
    with pytest.raises(ConditionViolated):
        gde_2d(
            abelian11, b11, "odd",
            Ext2Data(D=zero_map(2, EVEN), Dbar=linear_map([[0, 1], [1, 0]], ODD),
                     x0=(0, 0), x1=(0, 0), k=0),
        )


def test_gde_2d_symplectic(zero):
    # over the empty base: 4-dimensional quadratic symplectic algebras
    for parity in ("odd", "even"):
        quad = BilinearForm((), ODD if parity == "odd" else EVEN)
        symp = BilinearForm((), EVEN if parity == "odd" else ODD)
        out = gde_2d_symplectic(
            zero, quad, symp, parity,
            Ext2Data(D=zero_map(0, EVEN), Dbar=zero_map(0, ODD), x0=(), x1=(),
                     k=0, c0=(), c1=(), lam=Fraction(3), alpha=Fraction(1)),
        )
        assert out.dim == 4 and all_ok(out)
        with pytest.raises(ZeroLambda):
            gde_2d_symplectic(
                zero, quad, symp, parity,
                Ext2Data(D=zero_map(0, EVEN), Dbar=zero_map(0, ODD), x0=(), x1=(),
                         k=0, c0=(), c1=(), lam=0),
            )


def test_base_embeds(L, L_maps):
    # brackets of base elements in the extension project to base brackets
    d, _, _ = L_maps
    ext = trivial_double_extension(L, "odd")
    g = ext.algebra
    for (i, j), row in L.table:
        gi, gj = g.basis.index(L.basis.labels[i]), g.basis.index(L.basis.labels[j])
        got = g.bracket_basis(gi, gj)
        base_part = {
            k: c for k, c in got.items() if g.basis.labels[k] in L.basis.labels
        }
        want = {g.basis.index(L.basis.labels[k]): c for k, c in row}
        assert base_part == want
