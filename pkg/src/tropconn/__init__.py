"""Exact polyhedral complexes, tropical hypersurfaces, and
codimension-1 connectivity.

The kernel is exact rational arithmetic end to end; see the README for
the CLI and document formats.
"""

from .rational import Rat, as_rat
from .polyhedra import (
    AffineFunctional,
    Polyhedron,
    functional,
    dimension,
    fm_project,
    hull_from_generators,
    implicit_equalities,
    intersect,
    is_face,
    lp_optimize,
    relative_interior_point,
)
from .complexes import (
    FacetGraph,
    PolyhedralComplex,
    cartesian_product,
    common_refinement,
    is_connected,
    is_connected_through_codim1,
    supports_equal,
    translate,
    union_with_repair,
    validate,
)
from .tropical import (
    RootValuationMultiset,
    TropicalPolynomial,
    ValuedUnivariate,
    root_valuations,
    tropical_hypersurface,
    uniform_bergman_fan,
)
from .maps import IntegerMatrix, change_coordinates, generic_basis, linear_image
from .pipeline import (
    FacetWalk,
    SliceCertificate,
    choose_slicing_translate,
    lift_walk,
    properness_check,
    slice_complex,
    theorem_walk,
    walk_bfs,
)

__version__ = "0.1.0"
