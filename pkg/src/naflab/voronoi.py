"""Voronoi cell of 0 in Z[tau] and its restricted (half-open) version."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor

from naflab.arith import floor_sqrt
from naflab.ztau import (
    PlanePoint,
    TauParams,
    ZTauElem,
    inner2,
    mul,
    norm_sq,
    plane_inner,
    plane_mul_tau_inv,
    plane_norm_sq,
    tau_power,
    to_plane,
)

LOGGER = logging.getLogger(__name__)
_HALF = Fraction(1, 2)


class VoronoiGeometryError(RuntimeError):
    """Raised when a boundary point matches no vertex, midpoint or edge."""


class BoundaryTag(StrEnum):
    INTERIOR = "interior"
    OUTSIDE = "outside"
    ON_OPEN_HALF_EDGE = "on_open_half_edge"
    AT_MIDPOINT = "at_midpoint"
    AT_VERTEX = "at_vertex"
    ON_EXCLUDED_BOUNDARY = "on_excluded_boundary"


@dataclass(frozen=True, slots=True)
class BoundaryClass:
    tag: BoundaryTag
    index: int | None = None

    def reflected(self, m: int) -> BoundaryClass:
        """Class of the point reflected through 0."""
        if self.index is None:
            return self
        return BoundaryClass(self.tag, (self.index + m // 2) % m)

    def __str__(self) -> str:
        if self.index is None:
            return self.tag.value
        return f"{self.tag.value}({self.index})"


INTERIOR = BoundaryClass(BoundaryTag.INTERIOR)
OUTSIDE = BoundaryClass(BoundaryTag.OUTSIDE)
EXCLUDED = BoundaryClass(BoundaryTag.ON_EXCLUDED_BOUNDARY)


@dataclass(frozen=True, slots=True)
class VoronoiCell:
    """Vertices v_0..v_{m-1} in cyclic order, edge midpoints and facet vectors."""

    params: TauParams
    vertices: tuple[PlanePoint, ...]
    midpoints: tuple[PlanePoint, ...]
    relevant_vectors: tuple[ZTauElem, ...]
    circumradius_sq: Fraction

    @property
    def m(self) -> int:
        return len(self.vertices)


def lattice_ball(params: TauParams, radius_sq: Fraction | int) -> Iterator[ZTauElem]:
    """Yield every z with norm_sq(z) <= radius_sq, b ascending then a ascending."""
    if radius_sq < 0:
        return
    msq = params.msq
    half_p = params.half_p
    b_max = floor_sqrt(Fraction(radius_sq) / msq)
    for b in range(-b_max, b_max + 1):
        slack = radius_sq - msq * b * b
        if slack < 0:
            continue
        reach = floor_sqrt(slack) + 1
        center = -half_p * b
        for a in range(floor(center - reach), ceil(center + reach) + 1):
            z = ZTauElem(a, b)
            if norm_sq(z, params) <= radius_sq:
                yield z


def circumradius_sq(params: TauParams) -> Fraction:
    """|V|^2, the squared distance from 0 to every vertex."""
    msq = params.msq
    if params.frac == 0:
        return (1 + msq) / 4
    return (msq + Fraction(1, 4)) ** 2 / (4 * msq)


@lru_cache(maxsize=256)
def build_cell(params: TauParams) -> VoronoiCell:
    msq = params.msq
    f = params.frac
    v0 = PlanePoint(_HALF, (msq + f * f - f) / (2 * msq))
    v1 = PlanePoint(f - _HALF, (msq - f * f + f) / (2 * msq))
    v2 = v0 - PlanePoint.of(1, 0)
    if f == 0:
        vertices = (v0, v1, -v0, -v1)
    else:
        vertices = (v0, v1, v2, -v0, -v1, -v2)
    m = len(vertices)
    midpoints = tuple(
        (vertices[k] + vertices[(k + 1) % m]).scaled(_HALF) for k in range(m)
    )
    radius_sq = plane_norm_sq(v0, params)
    relevant = tuple(z for z in lattice_ball(params, 4 * radius_sq) if not z.is_zero())
    LOGGER.debug(
        "Voronoi cell for %s: m=%s |V|^2=%s relevant=%s", params, m, radius_sq, len(relevant)
    )
    return VoronoiCell(
        params=params,
        vertices=vertices,
        midpoints=midpoints,
        relevant_vectors=relevant,
        circumradius_sq=radius_sq,
    )


def _edge_parameter(pt: PlanePoint, start: PlanePoint, end: PlanePoint) -> Fraction | None:
    """Position t in (0, 1) of pt on the open segment, or None."""
    dx = end.x - start.x
    dy = end.y - start.y
    rx = pt.x - start.x
    ry = pt.y - start.y
    if dx * ry - dy * rx:
        return None
    t = (rx * dx + ry * dy) / (dx * dx + dy * dy)
    if 0 < t < 1:
        return t
    return None


def _resolve_boundary(pt: PlanePoint, cell: VoronoiCell) -> BoundaryClass:
    for k, vertex in enumerate(cell.vertices):
        if pt == vertex:
            return BoundaryClass(BoundaryTag.AT_VERTEX, k)
    for k, midpoint in enumerate(cell.midpoints):
        if pt == midpoint:
            return BoundaryClass(BoundaryTag.AT_MIDPOINT, k)
    m = cell.m
    for k in range(m):
        t = _edge_parameter(pt, cell.vertices[k], cell.vertices[(k + 1) % m])
        if t is None:
            continue
        if t > _HALF:
            return BoundaryClass(BoundaryTag.ON_OPEN_HALF_EDGE, k)
        return EXCLUDED
    raise VoronoiGeometryError(f"boundary point {pt} lies on no edge of the cell for {cell.params}")


def classify(pt: PlanePoint, cell: VoronoiCell) -> BoundaryClass:
    params = cell.params
    on_boundary = False
    for y in cell.relevant_vectors:
        gap = norm_sq(y, params) - 2 * plane_inner(pt, to_plane(y, params), params)
        if gap < 0:
            return OUTSIDE
        if gap == 0:
            on_boundary = True
    if not on_boundary:
        return INTERIOR
    return _resolve_boundary(pt, cell)


def is_restricted_class(cls: BoundaryClass, m: int) -> bool:
    match cls.tag:
        case BoundaryTag.INTERIOR | BoundaryTag.ON_OPEN_HALF_EDGE:
            return True
        case BoundaryTag.AT_MIDPOINT:
            return cls.index is not None and cls.index < m // 2
        case BoundaryTag.AT_VERTEX:
            return cls.index is not None and 1 <= cls.index <= m // 3
    return False


def in_restricted(pt: PlanePoint, cell: VoronoiCell) -> bool:
    return is_restricted_class(classify(pt, cell), cell.m)


@dataclass(frozen=True, slots=True)
class ScaledCell:
    """The cell tau**k * V, tested on lattice points with integer arithmetic.

    A point z is classified like ``tau**-k * z`` against V; only ties fall back to
    the rational boundary resolution.
    """

    cell: VoronoiCell
    k: int
    facets: tuple[tuple[ZTauElem, int], ...]
    scale: int

    @classmethod
    def build(cls, cell: VoronoiCell, k: int) -> ScaledCell:
        params = cell.params
        lift = tau_power(k, params)
        facets = []
        for y in cell.relevant_vectors:
            scaled = mul(lift, y, params)
            facets.append((scaled, norm_sq(scaled, params)))
        return cls(cell=cell, k=k, facets=tuple(facets), scale=params.q**k)

    def classify(self, z: ZTauElem) -> BoundaryClass:
        params = self.cell.params
        # |z| < |tau|^k / 2 lies inside the inscribed disc
        if 4 * norm_sq(z, params) < self.scale:
            return INTERIOR
        on_boundary = False
        for y, y_norm in self.facets:
            gap = y_norm - inner2(z, y, params)
            if gap < 0:
                return OUTSIDE
            if gap == 0:
                on_boundary = True
        if not on_boundary:
            return INTERIOR
        return _resolve_boundary(plane_mul_tau_inv(to_plane(z, params), self.k, params), self.cell)

    def contains_restricted(self, z: ZTauElem) -> bool:
        return is_restricted_class(self.classify(z), self.cell.m)


def classify_scaled(z: ZTauElem, k: int, cell: VoronoiCell) -> BoundaryClass:
    """Classify tau**-k * z for a lattice point z."""
    return ScaledCell.build(cell, k).classify(z)


def in_restricted_scaled(z: ZTauElem, k: int, cell: VoronoiCell) -> bool:
    return ScaledCell.build(cell, k).contains_restricted(z)
