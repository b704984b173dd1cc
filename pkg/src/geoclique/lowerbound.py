"""Antipodal sector constructions that plant octahedral subgraphs.

The construction places 2k narrow annulus sectors around the domain center
(the square's midpoint, or the disk origin), each of angular width
theta0 = pi / (3k), spaced so consecutive sectors are 2*theta0 apart.  The
radial band [r1, r2] is chosen so that

* two points in *antipodal* sectors (k apart) are farther than the
  adjacency threshold — never an edge, and
* two points anywhere else in the band (same sector or any non-antipodal
  pair of sectors) are within the threshold — always an edge.

Hence picking one vertex from each sector of t antipodally occupied pairs
induces an octahedral subgraph O_t, which forces at least 2^t maximal
cliques.  On the square the band is

    r1 = r / sqrt(2 + 2 cos(theta0)),   r2 = r / sqrt(2 + 2 cos(2 theta0)),

the tight radii for the worst angular gaps pi - theta0 (antipodal) and
pi - 2 theta0 (non-antipodal); both worst cases sit exactly on the
threshold, strictly inside it elsewhere.  On the disk of radius R,

    cosh(2 r1) = cosh(R) / cos^2(theta0 / 2),
    cosh(2 r2) = (cosh(R) - 1) / cos^2(theta0),

which leave strict margins sin^2(theta0/2) and cos^2(theta0) in
cosh-distance at the corresponding corners.  The disk construction needs
r1 < r2 <= R, which fails for small graphs: that is reported as
InvalidConstruction, not silently clamped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import InvalidConstruction, InvalidParameter
from .geometry import (
    AnnulusSector,
    EuclideanModel,
    HyperbolicModel,
    PlaneModel,
    region_probability,
    threshold,
)
from .octahedron import OtWitness

__all__ = [
    "RegionFamily",
    "SeparationReport",
    "default_k",
    "build_regions",
    "classify_points",
    "occupied_pairs",
    "check_separation",
    "occupancy_probability",
    "euclidean_leading_term",
]

_SQUARE_CENTER = (0.5, 0.5)


@dataclass(frozen=True)
class RegionFamily:
    """2k planting sectors with their radial band and spacing angle."""

    model: PlaneModel
    k: int
    theta0: float
    r1: float
    r2: float
    sectors: tuple[AnnulusSector, ...]

    def partner(self, i: int) -> int:
        """Index of the sector antipodal to sector ``i`` (0-based)."""
        return (i + self.k) % (2 * self.k)


@dataclass(frozen=True)
class SeparationReport:
    """Monte-Carlo audit of the sector pair adjacency dichotomy.

    ``violations`` counts sampled pairs on the wrong side of the threshold
    (an antipodal pair within it, or any other pair beyond it) and must be
    zero; the margins are the smallest observed distances to the threshold
    from the correct side, in plane distance units.
    """

    checked: int
    violations: int
    min_nonadjacent_gap: float
    min_adjacent_slack: float


def default_k(model: PlaneModel) -> int:
    """Sector-pair count k if none is requested.

    Grows as n^(1/3) on the square and n^((1-alpha)/3) on the disk, floored
    at the construction's own minimum k = 4.
    """
    if isinstance(model, EuclideanModel):
        return max(4, math.ceil(model.n ** (1.0 / 3.0)))
    return max(4, math.ceil(model.n ** ((1.0 - model.alpha) / 3.0)))


def build_regions(model: PlaneModel, k: Optional[int] = None) -> RegionFamily:
    """Construct the 2k-sector planting family for ``model``.

    Raises InvalidConstruction when the radial band is empty (r1 >= r2,
    the small-disk regime), reaches past the disk rim (r2 > R), or does not
    fit the unit square around its center (r2 >= 1/2).
    """
    if k is None:
        k = default_k(model)
    if k < 4:
        raise InvalidParameter(f"k must be >= 4, got {k}")
    theta0 = math.pi / (3.0 * k)
    if isinstance(model, EuclideanModel):
        r = model.r
        r1 = r / math.sqrt(2.0 + 2.0 * math.cos(theta0))
        r2 = r / math.sqrt(2.0 + 2.0 * math.cos(2.0 * theta0))
        if r2 >= 0.5:
            raise InvalidConstruction(
                f"outer radius {r2:.4f} >= 1/2: sectors leave the unit "
                f"square (threshold r = {r} too large)")
        center = _SQUARE_CENTER
    else:
        c = math.cosh(model.R)
        r1 = 0.5 * math.acosh(c / math.cos(theta0 / 2.0) ** 2)
        r2_arg = (c - 1.0) / math.cos(theta0) ** 2
        if r2_arg < 1.0:
            raise InvalidConstruction("disk too small for any radial band")
        r2 = 0.5 * math.acosh(r2_arg)
        if r2 > model.R:
            raise InvalidConstruction(
                f"outer radius {r2:.4f} exceeds disk radius {model.R:.4f}")
        center = None
    if not r1 < r2:
        raise InvalidConstruction(
            f"empty radial band: r1 = {r1:.6f} >= r2 = {r2:.6f} "
            f"(need larger n or smaller k)")
    sectors = tuple(
        AnnulusSector(r_lo=r1, r_hi=r2,
                      phi_lo=3 * i * theta0, phi_hi=(3 * i + 1) * theta0,
                      center=center)
        for i in range(2 * k))
    return RegionFamily(model=model, k=k, theta0=theta0, r1=r1, r2=r2,
                        sectors=sectors)


# ---------------------------------------------------------------------------
# Point classification and occupancy
# ---------------------------------------------------------------------------

def _polar(points: np.ndarray, family: RegionFamily
           ) -> tuple[np.ndarray, np.ndarray]:
    """(rho, phi in [0, 2 pi)) of each point in the family's polar frame."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if isinstance(family.model, EuclideanModel):
        dx = pts[:, 0] - _SQUARE_CENTER[0]
        dy = pts[:, 1] - _SQUARE_CENTER[1]
        return np.hypot(dx, dy), np.arctan2(dy, dx) % (2.0 * math.pi)
    return pts[:, 0], pts[:, 1] % (2.0 * math.pi)


def classify_points(points: np.ndarray, family: RegionFamily
                    ) -> list[np.ndarray]:
    """Indices of the points inside each of the 2k sectors, in input order."""
    rho, phi = _polar(points, family)
    in_band = (family.r1 <= rho) & (rho <= family.r2)
    slot = np.floor(phi / family.theta0).astype(np.int64)
    # sector i covers angular slot 3i; slots 3i+1 and 3i+2 are the gap
    member = in_band & (slot % 3 == 0) & (slot < 6 * family.k)
    sector_of = slot[member] // 3
    ids = np.nonzero(member)[0]
    out = [np.empty(0, dtype=np.int64) for _ in range(2 * family.k)]
    order = np.argsort(sector_of, kind="stable")
    sector_sorted = sector_of[order]
    ids_sorted = ids[order]
    starts = np.searchsorted(sector_sorted, np.arange(2 * family.k + 1))
    for i in range(2 * family.k):
        out[i] = ids_sorted[starts[i]:starts[i + 1]]
    return out


def occupied_pairs(points: np.ndarray, family: RegionFamily
                   ) -> tuple[int, OtWitness]:
    """Count antipodal sector pairs with both sides occupied and return the
    witness taking the lowest-index vertex from each side."""
    occupancy = classify_points(points, family)
    pairs = []
    for i in range(family.k):
        a, b = occupancy[i], occupancy[family.partner(i)]
        if a.size and b.size:
            pairs.append((int(a[0]), int(b[0])))
    return len(pairs), OtWitness(tuple(pairs))


def occupancy_probability(family: RegionFamily) -> float:
    """Probability 1 - exp(-n F(U1)) that one sector holds at least one
    point of a Poissonized sample with the model's mean count."""
    f1 = region_probability(family.model, family.sectors[0])
    return 1.0 - math.exp(-family.model.n * f1)


def euclidean_leading_term(r: float, theta0: float) -> float:
    """Small-angle approximation (3/32) r^2 theta0^3 of the square-model
    sector probability F(U1)."""
    return (3.0 / 32.0) * r * r * theta0 ** 3


# ---------------------------------------------------------------------------
# Separation audit
# ---------------------------------------------------------------------------

def check_separation(family: RegionFamily, samples: int = 10_000,
                     seed: int = 0) -> SeparationReport:
    """Monte-Carlo check of the construction's adjacency dichotomy.

    Draws ``samples`` pairs (sector indices uniform, positions uniform over
    each sector's (rho, phi) rectangle — full support, corners included)
    and verifies: antipodal sectors -> distance strictly above the
    threshold; any other combination (same sector included) -> distance
    within it.
    """
    if samples < 1:
        raise InvalidParameter(f"samples must be >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    two_k = 2 * family.k
    si = rng.integers(0, two_k, size=samples)
    sj = rng.integers(0, two_k, size=samples)
    antipodal = (si - sj) % two_k == family.k

    def draw(sector_idx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        rho = rng.uniform(family.r1, family.r2, size=samples)
        phi = (3 * sector_idx + rng.uniform(0.0, 1.0, size=samples)) \
            * family.theta0
        return rho, phi

    rho_u, phi_u = draw(si)
    rho_v, phi_v = draw(sj)
    cut = threshold(family.model)
    if isinstance(family.model, EuclideanModel):
        dist = np.hypot(rho_u * np.cos(phi_u) - rho_v * np.cos(phi_v),
                        rho_u * np.sin(phi_u) - rho_v * np.sin(phi_v))
        adjacent = dist <= cut
    else:
        # decide in cosh space: margins there stay O(1) while distances
        # differ from R by only ~margin/cosh(R)
        cosh_d = (np.cosh(rho_u) * np.cosh(rho_v)
                  - np.sinh(rho_u) * np.sinh(rho_v) * np.cos(phi_u - phi_v))
        adjacent = cosh_d <= math.cosh(cut)
        dist = np.arccosh(np.maximum(cosh_d, 1.0))
    bad = int(np.count_nonzero(antipodal == adjacent))
    gaps = dist[antipodal] - cut
    slacks = cut - dist[~antipodal]
    return SeparationReport(
        checked=samples,
        violations=bad,
        min_nonadjacent_gap=float(gaps.min()) if gaps.size else math.inf,
        min_adjacent_slack=float(slacks.min()) if slacks.size else math.inf,
    )
