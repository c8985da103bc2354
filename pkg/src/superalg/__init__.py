"""Exact-arithmetic toolkit for finite-dimensional Lie superalgebras
carrying homogeneous quadratic and symplectic structures: structure
constants over the rationals, structural predicates, (generalized)
double extensions with their inverse splits, Manin splits, a worked
example catalog, canonical serialization and a batch CLI."""

from .core import (
    EVEN,
    ODD,
    GradedBasis,
    LieSuperalgebra,
    Subspace,
    algebra,
    algebra_from_labels,
    basis,
    bracket,
    center,
    change_of_basis,
    direct_sum,
    graded_jacobi_check,
    is_nilpotent,
    lower_central_series,
    parity_flip_dual,
    span,
    zero_algebra,
)
from .forms import (
    BilinearForm,
    FormReport,
    FormSpace,
    admits_both_quadratic,
    adjoint_map,
    classify_form,
    exists_nondegenerate,
    form,
    invariant_form_space,
    orthogonal_subspace,
)
from .maps import (
    EigenSplit,
    LinearMap,
    linear_map,
    map_from_images,
    rational_eigen_split,
    skew_check,
    supercommutator,
    superderivation_check,
    symplectic_derivation,
    zero_map,
)
from .constructions import (
    AssocSuperalgebra,
    Ext1Data,
    Ext2Data,
    QuadSympAlgebra,
    assoc_algebra,
    central_extension,
    check_quad_symp,
    gde_2d,
    gde_2d_symplectic,
    gode_1d,
    gode_1d_symplectic,
    lift_derivation,
    symplectic_double_extension,
    tensor_odd_symmetric,
    trivial_double_extension,
)
from .decompositions import SplitResult, split_quadratic_symplectic, split_symplectic
from .manin import ManinSplit, manin_double_extension, manin_inverse, manin_split, special_check
from . import catalog, errors, io

__version__ = "0.1.0"
