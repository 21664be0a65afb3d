"""Exact engine for the quantum SL(2) coordinate ring at a root of unity.

The package proves, by exact computation, that the ring is a free module
of rank l^3 over its l-th-power (classical) subalgebra, exhibits the
explicit basis and elimination relations, certifies the result with an
independent brute-force linear-algebra oracle, and provides the two
localization charts plus a closure diagnostic for the anomalous root
order 2l with l odd.
"""

from .cyclo import (
    Cyclotomic,
    Rational,
    RootSpec,
    approx_complex,
    cyclotomic_from_json,
    cyclotomic_polynomial,
    euler_phi,
    gauss_binomial,
    make_root_spec,
    p_coeff,
    p_expansion,
    remark_root_spec,
    root_spec_from_json,
    root_spec_to_json,
    zeta_pow,
)
from .qalgebra import (
    ClassicalElement,
    ClassicalMonomial,
    QElement,
    QMonomial,
    TensorElement,
    Word,
    antipode,
    classical_element_from_json,
    classical_mul,
    classical_normalize,
    coproduct,
    counit,
    power,
    qelement_from_json,
    qmul,
    straighten,
    tensor_mul,
)
from .frobenius import (
    ClosureReport,
    ModuleElement,
    central_reduce,
    closure_diagnostic,
    is_central,
    lift,
    module_element_from_json,
    module_recompose,
)
from .basis import (
    BasisIndex,
    Decomposition,
    DegreeBoundError,
    FamilyA,
    FamilyD,
    FreenessError,
    FreenessReport,
    LocalizedElement,
    chart_monomial_element,
    clear_denominators,
    decompose,
    decomposition_from_json,
    eliminate_a_family,
    eliminate_d_family,
    enumerate_basis,
    is_basis_monomial,
    localize,
    oracle_decompose,
    recompose,
    verify_freeness,
)
from .exactla import ExactMatrix, nullspace, rref, solve

__version__ = "0.1.0"
