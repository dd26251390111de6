from .codec import decode_element, encode_element
from .constants import RingKind
from .elements import GaussInt, Integer, PolyMod, Rational, RingElement, element, from_int, one, polymod_ring, zero
from .fraction import FractionElement
from .service import canonical_associate, divexact, divides, euclid_div, ext_gcd, gcd_all, lcm
from .types import GAUSS, INTEGER, RATIONAL, ExtGcdResult, RingDescriptor, is_prime

__all__ = [
    "RingKind",
    "RingDescriptor",
    "ExtGcdResult",
    "INTEGER",
    "RATIONAL",
    "GAUSS",
    "polymod_ring",
    "is_prime",
    "RingElement",
    "Integer",
    "Rational",
    "GaussInt",
    "PolyMod",
    "FractionElement",
    "element",
    "from_int",
    "one",
    "zero",
    "euclid_div",
    "ext_gcd",
    "canonical_associate",
    "divexact",
    "divides",
    "gcd_all",
    "lcm",
    "encode_element",
    "decode_element",
]
