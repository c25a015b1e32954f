"""Point-module moduli of monomial algebras attached to symbolic dynamics.

Everything is exact: counts are Python integers, generating functions are
reduced integer-coefficient rational functions. Results computed from a
finite prefix of an infinite word carry ``Exactness.HEURISTIC``.
"""

from .algebra import (
    GrowthReport,
    MonomialAlgebra,
    OracleAlgebra,
    Presentation,
    PresentationAlgebra,
    TransferGraph,
    as_algebra,
    graded_dim,
    growth_class,
    hilbert_series,
    is_nonzero,
)
from .errors import (
    AlphabetTooLarge,
    BudgetExceeded,
    DegreeTooSmall,
    DepthMismatch,
    EmptySubshift,
    InsufficientPrecision,
    LengthBeyondOracle,
    MonopointError,
    NonProlongingSubstitution,
    NotProlongable,
    SchemaError,
    SturmianCheckFailed,
)
from .exact import RationalGF, Recurrence
from .genfun import (
    CountSequence,
    Quiver,
    brute_force_counts,
    build_quiver,
    count_via_matrix,
    counting_gf,
    generating_function,
    recurrence_check,
)
from .moduli import (
    ComponentSet,
    PointModuleTrunc,
    SubsetSeq,
    Variant,
    components,
    count_components,
    dim_profile,
    irreducibility_report,
    is_coherent,
    is_prolongable_seq,
    p1_report,
    verify_point_module,
)
from .morphisms import (
    MonGraph,
    graded_aut_permutations,
    iso_monomial,
    iso_truncated,
    mon_graph,
    mon_graph_iso,
)
from .radical import (
    RadicalReport,
    dead_states,
    is_prolongable,
    prolongable_radical,
    subshift_language,
)
from .words import (
    Alphabet,
    CharacteristicSturmian,
    EventuallyPeriodic,
    Exactness,
    ExplicitPrefix,
    FactorSet,
    Side,
    SubstitutionFixedPoint,
    factors,
    fibonacci,
    generate_prefix,
    is_k_balanced,
    special_factors,
    thue_morse,
    uniform_recurrence_report,
)

__version__ = "0.1.0"
