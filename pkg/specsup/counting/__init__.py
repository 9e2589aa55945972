"""Exact substructure counting."""

from .triangles import (
    triangle_stats,
    triangle_count,
    booksize,
    triangular_edge_count,
    count_triangles_bruteforce,
)
from .bowties import count_bowties, count_bowties_bruteforce, contains_fk, fk_number
from .matching import max_matching
from .cover import triangle_cover_number

__all__ = [
    "triangle_stats",
    "triangle_count",
    "booksize",
    "triangular_edge_count",
    "count_triangles_bruteforce",
    "count_bowties",
    "count_bowties_bruteforce",
    "contains_fk",
    "fk_number",
    "max_matching",
    "triangle_cover_number",
]
