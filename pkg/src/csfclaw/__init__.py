"""Chromatic symmetric functions of small graphs, claw tests, and counterexample search."""

from .errors import CapacityError, ContractError, CsfError, DomainError, Graph6Error
from .graph import Graph
from .symfunc import SymExpr

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ContractError",
    "CsfError",
    "DomainError",
    "Graph",
    "Graph6Error",
    "SymExpr",
]
