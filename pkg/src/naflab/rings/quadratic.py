"""Z[tau] as the group of a tau-adic number system."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from naflab import ztau
from naflab.rings.base import Coords, SystemKind
from naflab.voronoi import circumradius_sq, lattice_ball
from naflab.ztau import TauParams, ZTauElem


@dataclass(frozen=True, slots=True)
class QuadraticRing:
    params: TauParams

    @property
    def kind(self) -> SystemKind:
        return SystemKind.QUADRATIC

    @property
    def label(self) -> str:
        return f"p={self.params.p},q={self.params.q}"

    @property
    def modulus(self) -> int:
        return self.params.q

    @property
    def base_norm(self) -> int:
        return self.params.q

    @property
    def cell_radius_sq(self) -> Fraction:
        return circumradius_sq(self.params)

    @property
    def zero(self) -> ZTauElem:
        return ztau.ZERO

    def is_zero(self, z: ZTauElem) -> bool:
        return z.is_zero()

    def add(self, x: ZTauElem, y: ZTauElem) -> ZTauElem:
        return ztau.add(x, y)

    def sub(self, x: ZTauElem, y: ZTauElem) -> ZTauElem:
        return ztau.sub(x, y)

    def neg(self, z: ZTauElem) -> ZTauElem:
        return ztau.neg(z)

    def mul(self, x: ZTauElem, y: ZTauElem) -> ZTauElem:
        return ztau.mul(x, y, self.params)

    def shift(self, z: ZTauElem, n: int) -> ZTauElem:
        if n == 0:
            return z
        return ztau.mul(z, ztau.tau_power(n, self.params), self.params)

    def div_base(self, z: ZTauElem) -> ZTauElem | None:
        return ztau.div_tau(z, self.params)

    def residue_key(self, z: ZTauElem, w: int) -> tuple[int, ...]:
        return ztau.residue_key(z, w, self.params)

    def norm(self, z: ZTauElem) -> int:
        return ztau.norm_sq(z, self.params)

    def ball(self, radius_sq: Fraction | int) -> Iterator[ZTauElem]:
        return lattice_ball(self.params, radius_sq)

    def parse_element(self, text: str) -> ZTauElem:
        return ZTauElem.parse(text)

    def format_element(self, z: ZTauElem) -> str:
        return str(z)

    def describe(self, z: ZTauElem) -> str:
        return ztau.describe(z)

    def to_coords(self, elements: Sequence[ZTauElem]) -> Coords:
        a = np.fromiter((z.a for z in elements), dtype=np.int64, count=len(elements))
        b = np.fromiter((z.b for z in elements), dtype=np.int64, count=len(elements))
        return a, b

    def from_coords(self, coords: Sequence[int]) -> ZTauElem:
        return ZTauElem(int(coords[0]), int(coords[1]))

    def batch_is_zero(self, coords: Coords) -> np.ndarray:
        a, b = coords
        return (a == 0) & (b == 0)

    def batch_divisible(self, coords: Coords) -> np.ndarray:
        return coords[0] % self.params.q == 0

    def batch_div_base(self, coords: Coords) -> Coords:
        a, b = coords
        k = a // self.params.q
        return b + self.params.p * k, -k

    def batch_residue_index(self, coords: Coords, w: int) -> np.ndarray:
        q = self.params.q
        p = self.params.p
        a, b = coords
        index = np.zeros(a.shape, dtype=np.int64)
        weight = 1
        for _ in range(w):
            r = a % q
            index += r * weight
            weight *= q
            k = (a - r) // q
            a, b = b + p * k, -k
        return index
