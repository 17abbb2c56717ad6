"""Symbolic verification of the q-deformed boson algebra with continuous
momentum labels (discretised to a finite lattice) and its inhomogeneous
invariance quantum group."""

from .algebra import Element, Generator, Kind, TensorElement, gen
from .hopf import Model
from .relations import build_group_rules, build_oscillator_rules, g
from .rewrite import normal_order, normal_order_tensor
from .scalar import ONE, Q, QINV, ZERO, Laurent
from .verify import SUITES, run_all, run_suite

__all__ = [
    "Element",
    "Generator",
    "Kind",
    "TensorElement",
    "gen",
    "Model",
    "build_group_rules",
    "build_oscillator_rules",
    "g",
    "normal_order",
    "normal_order_tensor",
    "ONE",
    "Q",
    "QINV",
    "ZERO",
    "Laurent",
    "SUITES",
    "run_all",
    "run_suite",
]

__version__ = "0.1.0"
