"""
Signed Graph Coloring

Edge colorings of signed graphs: exact chromatic index, constructive
Δ-colorings of cacti, wheels, necklaces and complete bipartite graphs, and
classification into the signed classes 1± and 2±.
"""

__version__ = "1.0.0"
__author__ = "Signed Coloring Contributors"

from .config import Config
from .models import (
    ColorSet,
    Graph,
    Incidence,
    IncidenceColoring,
    Signature,
    SignedGraph,
    build_signed_graph,
    color_set,
    max_degree,
    verify_coloring,
)
from .switching import SwitchSet, is_balanced, switch, switching_equivalent
from .exact import exact_chromatic_index
from .colorers import COLORER_REGISTRY, auto_color
from .classify import ClassVerdict, class_ratio, is_class_2pm_structural, signed_class

__all__ = [
    "Config",
    "ColorSet",
    "Graph",
    "Incidence",
    "IncidenceColoring",
    "Signature",
    "SignedGraph",
    "build_signed_graph",
    "color_set",
    "max_degree",
    "verify_coloring",
    "SwitchSet",
    "is_balanced",
    "switch",
    "switching_equivalent",
    "exact_chromatic_index",
    "COLORER_REGISTRY",
    "auto_color",
    "ClassVerdict",
    "class_ratio",
    "is_class_2pm_structural",
    "signed_class",
]
