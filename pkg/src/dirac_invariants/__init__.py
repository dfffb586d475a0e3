"""Lorentz invariant entanglement polynomials for multi-particle Dirac spinor states."""
from .catalog import eval_many, eval_named, get, list_names
from .contraction import PatternError, evaluate, evaluate_naive, parse, plan
from .states import StateTensor, basis_state, catalog_state, load_state, product_state, random_state

__version__ = "0.1.0"

__all__ = [
    "PatternError", "StateTensor", "basis_state", "catalog_state", "eval_many", "eval_named",
    "evaluate", "evaluate_naive", "get", "list_names", "load_state", "parse", "plan",
    "product_state", "random_state",
]
