"""Invariants of surface singularities from their resolution graphs.

The usual entry points are :func:`load_graph` / :func:`parse_graph`, then
the invariants in :mod:`singlip.cycles`, :mod:`singlip.minimality` and
:mod:`singlip.decomposition`.  Plane curve tools live in
:mod:`singlip.puiseux`, :mod:`singlip.curves` and :mod:`singlip.planetree`.
"""

from .curves import CurveCollection, an_curve, discriminant_collection
from .cycles import (
    arithmetic_genus,
    brute_force_minimal_cycle,
    fundamental_cycle,
    hyperplane_arrows,
    is_rational,
    laufer_minimal_cycle,
    multiplicity_rational,
)
from .decomposition import (
    DecoratedGraph,
    Piece,
    build_gamma0,
    geometric_decomposition,
    separate_adjacent_nodes,
)
from .dot import emit_dot
from .errors import ComputationError, InputError, SinglipError
from .graph import (
    Cycle,
    ResolutionGraph,
    Vertex,
    blow_up_edge,
    blow_up_free,
    canonical_pairing,
    load_graph,
    pair,
    parse_graph,
)
from .minimality import (
    PolarProfile,
    SValues,
    Verdict,
    central_edges,
    central_vertices,
    is_lne,
    is_minimal,
    l_nodes,
    polar_profile,
    s_values,
)
from .planetree import PlaneTree, carrousel_pieces, resolution_tree
from .puiseux import (
    PuiseuxBranch,
    blow_up_branch,
    characteristic_exponents,
    contact_exponent,
    essential_integer_exponents,
)

__version__ = "0.1.0"
