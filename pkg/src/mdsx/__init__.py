"""Finite-field linear codes: constructions, extensions, covering radii,
and deep holes, with exhaustive desk-scale verification."""

from . import errors
from .field import (
    FieldCtx,
    FieldElement,
    Poly,
    field_new,
    lagrange_interpolate,
    minimal_poly_over_base,
    poly_eval,
    poly_mul,
    quadratic_extension,
)
from .matrix import (
    Matrix,
    all_k_columns_independent,
    egrs_generator,
    first_dependent_columns,
    grs_generator,
)
from .code import (
    LinearCode,
    code_from_generator,
    dual,
    extend_g,
    extend_u,
    extension_parity_check,
    full_code,
    is_mds,
    min_distance,
    same_code,
    weight_enumerator,
    zero_code,
)
from .covering import (
    CoveringReport,
    Theorem6Check,
    covering_radius,
    distance_to_code,
    full_radius_witness,
    is_deep_hole,
    is_deep_hole_via_mds,
    syndrome_criterion,
    verify_theorem6,
)
from .constructions import (
    CuExtensionFacts,
    CyclicSpec,
    DeepHoleCandidate,
    GrsSpec,
    cu_extension_facts,
    cyclic_cu,
    cyclic_spec,
    deep_hole_family_rs,
    egrs,
    egrs_code,
    egrs_dual_code,
    grs,
    grs_code,
    grs_dual_weights,
    nk_delta_set_check,
    prs,
    roth_lempel,
    subset_sums,
    subset_sums_bruteforce,
    t_set,
    t_set_bruteforce,
    thm12_u,
    thm14_vector,
    thm7_u,
)
from .kernels import DEFAULT_BUDGET
from .suites import SUITES, run_suite

__version__ = "0.1.0"
