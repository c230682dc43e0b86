"""Schroeder trees, their tridendriform products, coproduct and primitives."""

__version__ = "0.1.0"

from .treecode import (  # noqa: E402
    MAX_ANGLES,
    UNIT,
    CapacityError,
    CodeError,
    ForestCode,
    PackedWordError,
    TreeCode,
    code_from_packed_word,
    corolla,
    enumerate_trees,
    hash_pair,
    hash_tree,
    is_valid_code,
    packed_word,
    parse_grid,
    render_grid,
    vee,
)
from .algebra import (  # noqa: E402
    TreeVector,
    atomic_product,
    get_forest,
    left_comb,
    ltl,
    mid,
    prec,
    preceq,
    product,
    right_comb,
    rtl,
    star,
    succ,
    succeq,
)
from .coalgebra import (  # noqa: E402
    SingleCut,
    TensorVector,
    apply_pruning,
    coproduct,
    enumerate_prunings,
    is_primitive,
    reduced_coproduct,
    single_cuts,
)
from .primitives import (  # noqa: E402
    GradedPrimitiveBasis,
    PipelineConfig,
    TensorWord,
    extract_basis,
    kernel_oracle,
    omega,
    omega_prec,
    omega_succeq,
    pipeline,
    theta,
)
