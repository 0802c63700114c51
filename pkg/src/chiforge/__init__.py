"""Certified colorings for 2K2-free graph classes, with exact oracles and sweep tools."""

from chiforge.errors import (
    BoundViolated,
    BudgetExceeded,
    ChiForgeError,
    NotInClass,
    ParseError,
    StructureViolation,
)
from chiforge.graph import (
    Coloring,
    Graph,
    complement,
    expansion,
    induced,
    is_proper,
    new_graph,
    read_graph6,
    write_graph6,
)
from chiforge.oracles import chromatic_exact, chromatic_number, clique_number, max_clique
from chiforge.patterns import PatternId, find_induced, get_class, is_free

__version__ = "0.1.0"

__all__ = [
    "BoundViolated", "BudgetExceeded", "ChiForgeError", "Coloring", "Graph", "NotInClass",
    "ParseError", "PatternId", "StructureViolation", "chromatic_exact", "chromatic_number",
    "clique_number", "complement", "expansion", "find_induced", "get_class", "induced",
    "is_free", "is_proper", "max_clique", "new_graph", "read_graph6", "write_graph6",
]
