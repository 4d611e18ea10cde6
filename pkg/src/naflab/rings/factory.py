"""Factory for number-system groups."""

from __future__ import annotations

from naflab.rings.base import InvalidSystemError
from naflab.rings.integer import IntegerRing
from naflab.rings.quadratic import QuadraticRing
from naflab.ztau import InvalidTauParametersError, TauParams

Ring = QuadraticRing | IntegerRing


def parse_system_token(token: str) -> tuple[str, tuple[int, ...]]:
    """Split ``tau:P,Q`` or ``int:B`` into a kind prefix and integer arguments."""
    text = token.strip()
    if ":" not in text:
        raise InvalidSystemError(
            "system must use '<kind>:<args>' format (example: tau:3,3, int:2)"
        )
    prefix, raw_args = text.split(":", 1)
    prefix = prefix.strip().lower()
    try:
        args = tuple(int(part) for part in raw_args.split(","))
    except ValueError as exc:
        raise InvalidSystemError(f"system arguments must be integers: {token!r}") from exc
    if prefix == "tau" and len(args) == 2:
        return prefix, args
    if prefix == "int" and len(args) == 1:
        return prefix, args
    raise InvalidSystemError(f"unsupported system token: {token!r}")


def create_ring(*, p: int | None = None, q: int | None = None, base: int | None = None) -> Ring:
    quadratic = p is not None or q is not None
    if quadratic and base is not None:
        raise InvalidSystemError("--base cannot be combined with -p/-q")
    if base is not None:
        return IntegerRing(base)
    if p is None:
        raise InvalidSystemError("-p is required (or use --base for an integer base)")
    if q is None:
        raise InvalidSystemError("-q is required (or use --base for an integer base)")
    try:
        params = TauParams(p, q)
        params.require_expanding()
    except InvalidTauParametersError as exc:
        raise InvalidSystemError(f"-p/-q: {exc}") from exc
    return QuadraticRing(params)


def create_ring_from_token(token: str) -> Ring:
    prefix, args = parse_system_token(token)
    if prefix == "tau":
        return create_ring(p=args[0], q=args[1])
    return create_ring(base=args[0])
