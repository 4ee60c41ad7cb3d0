"""Cubic-lattice knots from arc presentations, with exact bound evaluation."""
from .bounds import (
    BoundReport,
    arc_index_upper,
    bound_from_sticks,
    bound_general,
    bound_nonalt_prime,
    bound_torus,
    class_bound,
    max_axis_edges,
    ropelength_bounds,
)
from .catalog import CatalogEntry, load_catalog
from .grid import (
    Arc,
    ArcPresentation,
    InvalidPresentationError,
    KnotMeta,
    dual,
    find_lift_pair,
    symmetry_orbit,
    validate,
)
from .lattice import (
    LatticeKnot,
    StickBudget,
    build_basic,
    build_lifted,
    construct,
    is_properly_leveled,
    reduce_ends,
    stick_budget,
    verify_embedding,
)
from .laurent import LaurentPolynomial
from .verify import (
    PlanarDiagram,
    alexander_from_arcs,
    alexander_from_diagram,
    poly_equal_up_to_units,
    project,
)

__version__ = "0.1.0"
