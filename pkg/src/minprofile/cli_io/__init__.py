"""Text formats, instance generators and the command-line tool."""

from .formats import GraphDocument, emit_graph, parse_graph, parse_ordering
from .generators import FAMILIES, generate, vap_gadget, vap_parameters

__all__ = ["FAMILIES", "GraphDocument", "emit_graph", "generate", "parse_graph", "parse_ordering", "vap_gadget", "vap_parameters"]
