"""The identity catalogue: direct-summation oracles, closed forms, theorem checks, suite driver."""

from .catalog import (
    CATALOG,
    CatalogEntry,
    SuiteConfig,
    UnknownIdentityError,
    UnverifiableIdentityError,
    run_suite,
)
from .report import DOCUMENTED_MISPRINT, FAIL, PASS, IdentityReport, Variant
from .sequences import IntegrandSpec, SequenceSpec
from .sums import (
    lhs_even_binom,
    lhs_inv_binom_pow_sum,
    lhs_inverse_binom_sum,
    lhs_k_weighted,
    rhs_corollary1,
    rhs_eq2,
    rhs_even_binom,
    rhs_example2,
    rhs_general_ab,
    rhs_prop_mt12,
    rhs_rockett,
)
from .theorems import (
    dirichlet_exact_check,
    random_theorem1_instances,
    theorem1_coefficient_check,
    theorem_geth_check,
    theorem_mt11_check,
)
