"""Expansions, multi-expansions and the w-NAF recoding."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from typing import Any

import numpy as np

from naflab.digitset import DEFAULT_DIGIT_CAP, DigitSet, build_digit_set
from naflab.rings.base import SystemKind
from naflab.rings.factory import Ring, create_ring

LOGGER = logging.getLogger(__name__)


class ExpansionLimitError(RuntimeError):
    """Raised when the recoding loop exceeds its iteration cap."""


@dataclass(frozen=True, slots=True)
class Singleton:
    """A pair (digit, exponent) with value Phi^exponent(digit)."""

    digit: Any
    exponent: int

    def __post_init__(self) -> None:
        if self.exponent < 0:
            raise ValueError(f"negative exponent {self.exponent}")


def _sort_key(item: Singleton) -> tuple[int, Any]:
    return item.exponent, item.digit


@dataclass(frozen=True, slots=True)
class Expansion:
    """Sparse expansion: ascending (exponent, digit) pairs with distinct exponents."""

    terms: tuple[tuple[int, Any], ...] = ()

    def __post_init__(self) -> None:
        exponents = [n for n, _ in self.terms]
        if any(n < 0 for n in exponents):
            raise ValueError(f"negative exponent in {exponents}")
        if exponents != sorted(set(exponents)):
            raise ValueError(f"exponents must be distinct and ascending: {exponents}")

    @classmethod
    def from_mapping(cls, entries: Mapping[int, Any]) -> Expansion:
        return cls(tuple(sorted(entries.items(), key=lambda item: item[0])))

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, Any]]) -> Expansion:
        entries: dict[int, Any] = {}
        for exponent, digit in pairs:
            if exponent in entries:
                raise ValueError(f"exponent {exponent} appears twice")
            entries[exponent] = digit
        return cls.from_mapping(entries)

    @property
    def weight(self) -> int:
        return len(self.terms)

    def to_pairs(self) -> list[tuple[Any, int]]:
        """(digit, exponent) pairs, lowest exponent first."""
        return [(d, n) for n, d in self.terms]

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self.terms)

    @property
    def highest_exponent(self) -> int:
        return self.terms[-1][0] if self.terms else -1

    def as_multi(self) -> MultiExpansion:
        return MultiExpansion.of(Singleton(d, n) for n, d in self.terms)


@dataclass(frozen=True, slots=True)
class MultiExpansion:
    """Multiset of singletons, kept in a canonical order so == is multiset equality."""

    singletons: tuple[Singleton, ...] = ()

    @classmethod
    def of(cls, items: Iterable[Singleton | tuple[Any, int]]) -> MultiExpansion:
        singletons = [
            item if isinstance(item, Singleton) else Singleton(item[0], item[1])
            for item in items
        ]
        return cls(tuple(sorted(singletons, key=_sort_key)))

    @property
    def weight(self) -> int:
        return len(self.singletons)


@dataclass(frozen=True, slots=True, eq=False)
class NumberSystem:
    """Group, Phi = multiplication by the base, and the digit set for width w."""

    ring: Ring
    w: int
    digit_set: DigitSet

    @classmethod
    def build(
        cls, ring: Ring, w: int, *, digit_cap: int | None = DEFAULT_DIGIT_CAP
    ) -> NumberSystem:
        return cls(ring=ring, w=w, digit_set=build_digit_set(ring, w, digit_cap=digit_cap))

    @classmethod
    def quadratic(
        cls, p: int, q: int, w: int, *, digit_cap: int | None = DEFAULT_DIGIT_CAP
    ) -> NumberSystem:
        return cls.build(create_ring(p=p, q=q), w, digit_cap=digit_cap)

    @classmethod
    def integer(cls, b: int, w: int, *, digit_cap: int | None = DEFAULT_DIGIT_CAP) -> NumberSystem:
        return cls.build(create_ring(base=b), w, digit_cap=digit_cap)

    @property
    def kind(self) -> SystemKind:
        return self.ring.kind

    @property
    def label(self) -> str:
        return f"{self.ring.label},w={self.w}"

    def shift(self, z: Any, n: int) -> Any:
        return self.ring.shift(z, n)


def value(e: Expansion | MultiExpansion, sys: NumberSystem) -> Any:
    ring = sys.ring
    total = ring.zero
    pairs = e.terms if isinstance(e, Expansion) else ((s.exponent, s.digit) for s in e.singletons)
    for exponent, digit in pairs:
        total = ring.add(total, ring.shift(digit, exponent))
    return total


def weight(e: Expansion | MultiExpansion) -> int:
    return e.weight


def is_wnaf(e: Expansion, w: int) -> bool:
    exponents = e.exponents
    return all(later - earlier >= w for earlier, later in zip(exponents, exponents[1:]))


def wnaf_expand(z: Any, sys: NumberSystem) -> Expansion:
    """The unique w-NAF expansion of z over the system's digit set."""
    ring = sys.ring
    w = sys.w
    digit_set = sys.digit_set
    cap = 64 * (ring.norm(z).bit_length() + w + 16)
    entries: dict[int, Any] = {}
    exponent = 0
    steps = 0
    while not ring.is_zero(z):
        steps += 1
        if steps > cap:
            raise ExpansionLimitError(
                f"w-NAF recoding for {sys.label} exceeded {cap} iterations"
            )
        quotient = ring.div_base(z)
        if quotient is not None:
            z = quotient
            exponent += 1
            continue
        digit = digit_set.digit_for_residue(ring.residue_key(z, w))
        entries[exponent] = digit
        z = ring.sub(z, digit)
        for _ in range(w):
            quotient = ring.div_base(z)
            if quotient is None:
                raise ExpansionLimitError(
                    f"digit {digit} does not match the class of the remainder for {sys.label}"
                )
            z = quotient
        exponent += w
    return Expansion.from_mapping(entries)


def is_singleton_value(z: Any, sys: NumberSystem) -> bool:
    """True when z = Phi^j(d) for a nonzero digit d, i.e. its w-NAF has weight 1."""
    ring = sys.ring
    if ring.is_zero(z):
        return False
    while True:
        quotient = ring.div_base(z)
        if quotient is None:
            return sys.digit_set.contains(z)
        z = quotient


def random_wnaf(sys: NumberSystem, rng: np.random.Generator, *, max_terms: int = 6) -> Expansion:
    """Random w-NAF with gaps of w to 2w and digits drawn from the digit set."""
    nonzero = sys.digit_set.nonzero_digits
    count = int(rng.integers(0, max_terms + 1))
    entries: dict[int, Any] = {}
    exponent = int(rng.integers(0, sys.w))
    for _ in range(count):
        entries[exponent] = nonzero[int(rng.integers(0, len(nonzero)))]
        exponent += int(rng.integers(sys.w, 2 * sys.w + 1))
    return Expansion.from_mapping(entries)


def describe(e: Expansion | MultiExpansion, sys: NumberSystem) -> str:
    """Most significant term first, e.g. ``(-1)τ^4 + (1)τ^0``."""
    symbol = "τ" if sys.kind is SystemKind.QUADRATIC else f"({sys.ring.label[2:]})"
    if isinstance(e, Expansion):
        pairs = list(e.terms)
    else:
        pairs = [(s.exponent, s.digit) for s in e.singletons]
    if not pairs:
        return "0"
    rendered = [
        f"({sys.ring.describe(digit)}){symbol}^{exponent}"
        for exponent, digit in sorted(pairs, key=lambda item: -item[0])
    ]
    return " + ".join(rendered)
