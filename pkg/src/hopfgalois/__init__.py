"""Exact smash products, Galois-order certificates, and distribution modules."""

from .numberfield import NumberField, ZeroDivisorError
from .params import ParamField, ParamElem
from .polyring import Poly, PolyRing, RatFunc, Jet, taylor_jet, try_divide
from .smash import GroupPart, InfGenerator, Setting, SmashElement
from . import catalog

__all__ = [
    "NumberField", "ZeroDivisorError", "ParamField", "ParamElem",
    "Poly", "PolyRing", "RatFunc", "Jet", "taylor_jet", "try_divide",
    "GroupPart", "InfGenerator", "Setting", "SmashElement", "catalog",
]

__version__ = "0.1.0"
