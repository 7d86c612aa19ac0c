"""Catalog of representations, invariant operators and two-body operators."""

from .families import RepParams, GeneratorFamily, label_str, label_key
from .catalog import (REP_IDS, make_rep, make_schrodinger_op,
                      make_parabolic_N, two_body)

__all__ = [
    "RepParams", "GeneratorFamily", "label_str", "label_key",
    "REP_IDS", "make_rep", "make_schrodinger_op", "make_parabolic_N",
    "two_body",
]
