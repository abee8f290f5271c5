"""Jeu de taquin minors of standard Young tableaux and reconstruction from them."""
from .errors import SytError
from .minors import (
    MinorMultiset,
    MinorSet,
    apply_remove_range,
    canonical_decode,
    canonical_encode,
    minor_multiset,
    minor_set,
)
from .reconstruction import (
    BoundReport,
    OcClassification,
    ReconstructionResult,
    bound_report,
    classify_corners,
    inner_filter,
    locate_n,
    locate_top_entries,
    monks_shape_guarantee,
    reconstruct,
    reconstruct_from_1minors,
    reconstruct_from_2minors,
    reconstruct_multiset,
    recover_shape,
    search_reconstruct,
)
from .tableau import (
    CellCoord,
    Partition,
    Tableau,
    contained_partitions,
    count_syt,
    enumerate_syt,
    enumerate_syt_of_shape,
    outer_corners,
    regions,
    validate_tableau,
)
from .taquin import (
    DeletionTrace,
    dual_promotion,
    jdt_delete,
    jdt_delete_traced,
    promotion,
    remove_top_range,
)
from .verify import (
    ConjectureReport,
    SweepReport,
    check_identities,
    injectivity_sweep,
    verify_conjecture,
)

__version__ = "0.1.0"
