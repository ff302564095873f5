"""Thick and dense representations of complex semi-simple Lie groups.

An irreducible module is thick iff it is weight multiplicity-free and its
weight poset is totally ordered.  This package computes weight systems
exactly, applies that test, decides density through exterior powers, and
checks transversality numerically on explicit matrix realizations.
"""

from .rootsystem import CartanType, RootSystem, build_root_system, product_root_system
from .character import Character, IrrepLabel, weight_system, weyl_dim, exterior_power, decompose
from .poset import Order, build_poset, dominance_compare, is_chain, is_wmf
from .classify import (
    Mode,
    ProductLabel,
    Reason,
    ThicknessVerdict,
    classify,
    dual_highest_weight,
    enumerate_classification,
    is_dense,
    is_m_dense,
    is_thick,
    product_thickness,
)

__all__ = [
    "CartanType", "RootSystem", "build_root_system", "product_root_system",
    "Character", "IrrepLabel", "weight_system", "weyl_dim", "exterior_power", "decompose",
    "Order", "build_poset", "dominance_compare", "is_chain", "is_wmf",
    "Mode", "ProductLabel", "Reason", "ThicknessVerdict", "classify", "dual_highest_weight",
    "enumerate_classification", "is_dense", "is_m_dense", "is_thick", "product_thickness",
]
