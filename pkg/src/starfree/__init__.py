"""Transformation-semigroup toolkit for star-free languages.

Core pieces: the algebra of (partial) transformations, semigroup closure
with witnesses, DFA/IDFA minimization and complexity measures, monotonic
order search and language classification, the extremal generator families
with their counting formulas, language operations, and an exhaustive search
for the largest aperiodic transition semigroups at small sizes.
"""

from .automata import (
    ComplexityReport,
    Dfa,
    Idfa,
    accepts,
    automaton_from_doc,
    automaton_to_doc,
    complexity_report,
    empty_state,
    is_minimal,
    is_star_free,
    minimize,
    to_dfa,
    to_idfa,
    transition_semigroup,
)
from .errors import (
    AlphabetMismatchError,
    AutomatonFormatError,
    BudgetExceededError,
    ClosureLimitError,
    NotAperiodicError,
    NotMinimalError,
    SizeMismatchError,
    StarfreeError,
    TransformationParseError,
    UnknownLetterError,
)
from .families import (
    FamilyReport,
    aperiodic_count,
    build,
    complete_partial,
    family_letters,
    monotonic_count,
    nearly_monotonic_count,
    partial_monotonic_count,
    verify_family,
)
from .langops import (
    Nfa,
    boolean_op,
    complement,
    concat,
    determinize,
    difference,
    equivalent,
    intersection,
    left_quotient,
    star,
    symmetric_difference,
    union,
)
from .monotonic import Classification, check_order, classify, find_monotonic_order
from .search import (
    ConflictGraph,
    SearchResult,
    conflict_graph,
    conflicts,
    max_aperiodic,
    max_conflict_free,
)
from .semigroup import (
    Semigroup,
    generate,
    is_aperiodic_semigroup,
    is_locally_maximal_aperiodic,
    is_minimal_generating_set,
)
from .transform import (
    Forest,
    Transformation,
    compose,
    enumerate_aperiodic,
    enumerate_forests,
    forest_to_transformation,
    transformation_to_forest,
)

__version__ = "0.1.0"
