"""Tutte polynomials of matroids through internal and external basis activities,
with exhaustive checks that the result does not depend on the chosen order."""

__version__ = "0.1.0"

from .activities import activities, tutte, whitney_multiset
from .constructors import Graph, gf2_linear_matroid, graphic_matroid, uniform_matroid
from .linkings import Linking, classify_linking, complement_linking, identity_linking, verify_linking
from .matroid import GroundSet, PreMatroid, check_exchange, dual, validate_prematroid
from .multiset import BivarMultiSet, MultiSet, multi_image
from .orders import LinearOrder, OrderEdge, Transposition
