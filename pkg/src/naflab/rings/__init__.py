"""Groups with an expanding endomorphism: Z[tau] and Z."""

from naflab.rings.base import GroupRing, InvalidSystemError, SystemKind
from naflab.rings.factory import Ring, create_ring, create_ring_from_token, parse_system_token
from naflab.rings.integer import IntegerRing
from naflab.rings.quadratic import QuadraticRing

__all__ = [
    "GroupRing",
    "IntegerRing",
    "InvalidSystemError",
    "QuadraticRing",
    "Ring",
    "SystemKind",
    "create_ring",
    "create_ring_from_token",
    "parse_system_token",
]
