"""Involution classes of reductive groups and quasi-split symmetric spaces.

The library builds based root systems for products of simple types, lists
conjugacy classes of algebraic involutions as (diagram automorphism, grading
orbit) pairs, and decides combinatorially which symmetric pairs are
quasi-split.
"""

from .rootdata import (
    RootDataError,
    RootSystem,
    build_root_system,
    diagram_automorphisms,
    parse_type_string,
    type_string,
)
from .involution import InvolutionClass, enumerate_involution_classes, trivial_class
from .classify import classify_involution, ClassSummary

__all__ = [
    "RootDataError",
    "RootSystem",
    "build_root_system",
    "diagram_automorphisms",
    "parse_type_string",
    "type_string",
    "InvolutionClass",
    "enumerate_involution_classes",
    "trivial_class",
    "classify_involution",
    "ClassSummary",
]

__version__ = "0.1.0"
