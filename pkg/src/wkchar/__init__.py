"""Exact characters of W-algebra highest-weight modules.

Subpackages build on each other: finite root data, the affine weight/Weyl
layer, integral Weyl groups with Bruhat order, a Kazhdan-Lusztig engine over
an abstract Coxeter interface, and the q-series character formulas.
"""

from .rootdata import LieType, RootSystem, FiniteRoot, build_root_system

__version__ = "0.1.0"

__all__ = ["LieType", "RootSystem", "FiniteRoot", "build_root_system", "__version__"]
