"""Random attention with unobserved references: axiom checks, identification, simulation."""

from .axioms import (
    THEOREM1,
    THEOREM2,
    AxiomReport,
    check_all,
    check_cwarp,
    check_eda,
    check_eda_star,
    check_exp,
    check_nt,
    check_rasym,
    check_reg,
    check_riia,
    check_rind,
    verify_witness,
)
from .core import (
    DEFAULT,
    AttentionFunction,
    CycleError,
    GroundSetTooLarge,
    PreferenceRelation,
    RamUrIraModel,
    RamUrModel,
    StochasticChoiceFunction,
    ValidationError,
    count_linear_extensions,
    default_prob,
    linear_extensions,
    transitive_closure,
    validate_scf,
)
from .forward import (
    InvalidAttention,
    SampleRun,
    check_attention,
    eval_ira,
    eval_ram,
    eval_ramur,
    evaluate,
    ira_attention,
    random_model,
    sample_choices,
)
from .identify_ira import identify_ira, represent_ira
from .identify_ramur import (
    AxiomFailure,
    build_attention,
    build_P,
    identify_ramur,
    represent_ramur,
    reveal_references,
)
from .oracle import compatible_orders, exhaustive_necessity
from .rum import RumModel, build_rum, eval_rum, verify_rum_restrictions

__version__ = "0.1.0"
