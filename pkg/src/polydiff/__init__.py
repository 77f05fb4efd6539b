"""Differentiation matrices for polynomial bases, with exact arithmetic.

The package constructs, applies, and verifies differentiation matrices
(and their antidifferentiation companions) for the monomial, Chebyshev,
Legendre, Newton, Lagrange, Hermite-interpolational, and Bernstein
bases.  Exact rational arithmetic is the default; floating fields are
used for the conditioning experiments exposed through the CLI.
"""

from .core import (
    BernsteinBasis,
    CoeffVector,
    DegreeGradedBasis,
    DenseMatrix,
    Field,
    FieldError,
    HermiteBasis,
    LagrangeBasis,
    NodeSet,
    SingularMatrixError,
    approx_equal,
    as_node_set,
    coerce_scalar,
    field_of,
    join_fields,
    mat_apply,
    mat_inf_norm,
    mat_power,
    promote_matrix,
    promote_vector,
    vec_inf_norm,
)
from .degree_graded import (
    DividedDifferenceTable,
    RecurrenceSpec,
    chebyshev_antideriv_matrix,
    chebyshev_basis,
    chebyshev_diff_matrix,
    chebyshev_recurrence,
    diff_matrix_degree_graded,
    divided_differences,
    legendre_antideriv_matrix,
    legendre_basis,
    legendre_recurrence,
    monomial_basis,
    monomial_recurrence,
    multiply_by_x,
    newton_basis,
    newton_diff_matrix,
    newton_recurrence,
)
from .lagrange import (
    BaryWeights,
    bary_weights,
    diff_matrix_lagrange,
    eval_first_form,
    eval_second_form,
    lagrange_derivative_values,
    node_polynomial_value,
)
from .hermite import (
    GenBaryWeights,
    constant_data,
    diff_matrix_hermite,
    gen_bary_weights,
    hermite_basis_element,
    hermite_eval,
    node_polynomial_taylor,
)
from .bernstein import (
    bernstein_eval,
    bernstein_norm_table,
    diff_matrix_bernstein,
    monomial_in_bernstein,
)
from .structure import (
    MonomialImages,
    build_V,
    conjugation_oracle,
    invert_matrix,
    jordan_block,
    jordan_check,
    monomial_images,
    nilpotency_index,
    pseudo_inverse,
    verify_generalized_inverse,
)
from .experiments import (
    ExperimentRecord,
    chebyshev_points,
    equispaced_points,
    records_to_csv,
    run_experiment,
)
from .verify import CheckResult, run_checks

__version__ = "0.1.0"
