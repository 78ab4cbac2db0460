"""Finite graded monads, their laws, and the constructions built on them."""

from .core import FinCategory, Functor, NatTrans, category_laws
from .errors import WorkbenchError
from .graded import CommutativeGradedMonad, GradedMonad, GradedMorphism
from .laws import Law, Report, Witness
from .monoidal import MonoidalStructure
from .runner import run_suite
from .serialize import Bundle, dump_doc, load_doc, load_path

__all__ = [
    "Bundle", "CommutativeGradedMonad", "FinCategory", "Functor", "GradedMonad", "GradedMorphism",
    "Law", "MonoidalStructure", "NatTrans", "Report", "Witness", "WorkbenchError",
    "category_laws", "dump_doc", "load_doc", "load_path", "run_suite",
]
