"""Betti numbers of facet ideals of simplicial forests via well ordered facet covers."""

from .betti import (
    RegularityBounds,
    graded_betti,
    multigraded_betti,
    nonvanishing_certificates,
    pd_reg,
    regularity_lower_bounds,
    top_betti_recursive,
)
from .complex import (
    UNIT_IDEAL,
    SimplicialComplex,
    connected_components,
    induced_subcollection,
    is_forest,
    is_leaf,
    leaves,
    localize,
    localize_at,
)
from .covers import (
    find_well_ordered_covers,
    is_well_ordered,
    max_induced_matching_weight,
    minimal_facet_covers,
    minimal_vertex_covers,
)
from .errors import CapExceeded, ComplexError, NotAForest, WellcoverError
from .graphs import (
    Bouquet,
    BouquetSet,
    Graph,
    bouquet_decomposition,
    bouquets_from_wofc,
    is_strongly_disjoint,
    wofc_from_bouquets,
)
from .lyubeznik import barile_witnesses, boundary_matrices, chain_condition_holds, lyubeznik_complex, order_from_wofc
from .oracle import betti_oracle
from .table import BettiDiagram, BettiTable

__version__ = "0.1.0"
