"""kmm: generalized Bloch vectors and maximally-mixed-reduction analysis.

Subpackages follow the pipeline: pauli (symplectic operator algebra),
bloch (expansion, partial trace, k-MM tests), balanced (Pauli-subgroup
states), bounds (existence bounds), symmetric (Dicke/Majorana pipeline
and the odd-component census), dense (small-n ground truth), io + cli.
"""

import os as _os

# KMM_THREADS caps the parallelism of the numeric backends; it must be
# exported before numpy loads its BLAS, hence here.
_threads = _os.environ.get("KMM_THREADS")
if _threads:
    for _var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        _os.environ.setdefault(_var, _threads)

__version__ = "0.1.0"

from .pauli import (  # noqa: E402
    LambdaIndex,
    Parity,
    PauliOperator,
    commutes,
    lambda_of,
    multiply,
    parity,
    to_dense,
    weight,
)
from .bloch import (  # noqa: E402
    BlochVector,
    StateVector,
    bloch_from_state,
    is_k_mm,
    linear_entropy,
    purity_residuals,
    reduce,
    subspace_dim,
)
from .balanced import (  # noqa: E402
    BalancedState,
    PauliSubgroup,
    build_state,
    close,
    fixture_groups,
    fixture_states,
    mm_level,
    validate_balanced,
)
from .bounds import (  # noqa: E402
    BoundVerdict,
    Region,
    asymptotic_region,
    finite_bounds,
    rate_function,
    root_x0,
)
from .symmetric import (  # noqa: E402
    MajoranaSpec,
    SymmetricState,
    count_lambda,
    dicke_from_majorana,
    lambda_components,
    majorana_from_dicke,
    odd_census,
    table1_states,
    tau_matrix,
    theorem2_witness,
)

__all__ = [
    "LambdaIndex", "Parity", "PauliOperator", "commutes", "lambda_of",
    "multiply", "parity", "to_dense", "weight",
    "BlochVector", "StateVector", "bloch_from_state", "is_k_mm",
    "linear_entropy", "purity_residuals", "reduce", "subspace_dim",
    "BalancedState", "PauliSubgroup", "build_state", "close",
    "fixture_groups", "fixture_states", "mm_level", "validate_balanced",
    "BoundVerdict", "Region", "asymptotic_region", "finite_bounds",
    "rate_function", "root_x0",
    "MajoranaSpec", "SymmetricState", "count_lambda", "dicke_from_majorana",
    "lambda_components", "majorana_from_dicke", "odd_census", "table1_states",
    "tau_matrix", "theorem2_witness",
    "__version__",
]
