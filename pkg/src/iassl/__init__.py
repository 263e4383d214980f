"""Integer additive set-sequential labelings of small graphs.

Sum-set classification of a ground set, verification of the labeling
predicates, deterministic constructions, exact labeling search and a
claim-by-claim audit over bounded ranges.
"""

__version__ = "0.1.0"

from .errors import (
    CapacityError,
    ConstructionError,
    DomainError,
    IasslError,
    IncompleteLabelingError,
    PreconditionError,
    RepresentationError,
)
from .setalg import (
    GroundSet,
    LabelSet,
    PowersetClassification,
    classify_powerset,
    is_nontrivial_summand,
    is_nontrivial_sumset,
    nontrivial_decompositions,
    sumset,
)
from .graph import FStarImage, LabeledGraph
from .verifier import (
    VerificationReport,
    check_iasgl,
    check_iasi,
    check_iasl,
    check_iassi,
    check_iassl,
    compute_kappa,
    structural_audit,
    verify,
)
from .construct import construct_iassi_graph, construct_iassl_graph, minimality_stats
from .search import SearchOptions, SearchResult, find_labelings, min_ground_set, sweep_graphs
from .audit import AuditBounds, AuditReport, run_full_audit
