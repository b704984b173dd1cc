"""Distance models and segment-pair geometry.

Two planes are supported:

* ``EuclideanModel`` -- n points on the unit square ``[0,1]^2`` with uniform
  density, two points adjacent iff their Euclidean distance is at most ``r``
  (inclusive).
* ``HyperbolicModel`` -- n points on the hyperbolic disk of radius
  ``R = 2 ln n + C``, radial density ``alpha * sinh(alpha*r)`` with
  ``alpha = (gamma - 1) / 2``, two points adjacent iff their hyperbolic
  distance is at most ``R`` (inclusive).

Points are plain ``(x, y)`` tuples for the square and native polar
``(r, phi)`` tuples for the disk.  Hyperbolic distances are evaluated through
the cancellation-free identity

    cosh d = cosh(r_u - r_v) + 2 sinh(r_u) sinh(r_v) sin^2(dphi / 2)

and adjacency tests compare cosh values directly, never round-tripping
through arccosh.  Crossing points and midpoints on the disk are computed in
the Poincare chart (``rho = tanh(r/2)``), where geodesics are circular arcs
orthogonal to the unit circle and the chart is conformal, so chart angles are
hyperbolic angles.  Chart coordinates stay resolvable in doubles up to
``R ~ 34`` (about ``n = 1e7`` at ``C = 0``); beyond that, boundary points
collapse onto the unit circle and pair geometry degrades.

A *segment* is an unordered point pair whose distance exceeds the adjacency
threshold (a non-edge).  Two segments sharing no endpoint are *independent*
when all four cross distances are at most the threshold; independent segments
always cross, and ``intersection_and_angle`` returns the full geometry record
of the crossing.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import (
    EndpointCollision,
    InvalidParameter,
    NoCrossing,
    NotIndependent,
    NumericalDegeneracy,
    OutOfDomain,
)

Point = tuple[float, float]

TWO_PI = 2.0 * math.pi

# |sin| below this means the configuration is treated as collinear.
_COLLINEAR_EPS = 1e-12
# Relative slack for "the crossing lies on both segments".
_ON_SEGMENT_RTOL = 1e-6


@dataclass(frozen=True)
class EuclideanModel:
    """Unit-square model: ``n`` points, adjacency threshold ``r``."""

    n: int
    r: float

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameter(f"n must be >= 0, got {self.n}")
        if not (0.0 < self.r < math.sqrt(2.0)):
            raise InvalidParameter(f"r must lie in (0, sqrt(2)), got {self.r}")


@dataclass(frozen=True)
class HyperbolicModel:
    """Hyperbolic-disk model: ``n`` points, exponent ``gamma``, offset ``C``.

    ``gamma`` is the target degree power-law exponent and must lie in (2, 3);
    ``alpha = (gamma - 1) / 2`` and the disk radius is ``R = 2 ln n + C``.
    """

    n: int
    gamma: float
    C: float = 0.0

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameter(f"n must be >= 1, got {self.n}")
        if not (2.0 < self.gamma < 3.0):
            raise InvalidParameter(f"gamma must lie in (2, 3), got {self.gamma}")
        if self.R <= 0.0:
            raise InvalidParameter(
                f"disk radius 2 ln n + C = {self.R} must be positive")

    @property
    def alpha(self) -> float:
        return (self.gamma - 1.0) / 2.0

    @property
    def R(self) -> float:
        return 2.0 * math.log(self.n) + self.C


PlaneModel = EuclideanModel | HyperbolicModel


def threshold(model: PlaneModel) -> float:
    """Adjacency threshold: ``r`` on the square, ``R`` on the disk."""
    return model.r if isinstance(model, EuclideanModel) else model.R


def in_domain(model: PlaneModel, p: Point) -> bool:
    """Whether ``p`` lies in the model's support."""
    if isinstance(model, EuclideanModel):
        return 0.0 <= p[0] <= 1.0 and 0.0 <= p[1] <= 1.0
    return 0.0 <= p[0] <= model.R


def angular_difference(phi_u: float, phi_v: float) -> float:
    """Wrapped angle between two headings, ``pi - |pi - |phi_u - phi_v||``."""
    d = math.fmod(abs(phi_u - phi_v), TWO_PI)
    return math.pi - abs(math.pi - d)


def _cosh_distance_m1(p: Point, q: Point) -> float:
    # cosh(d) - 1 as a sum of two nonnegative terms: fully cancellation-free,
    # so it keeps relative precision for nearby deep points where the
    # classical cosh*cosh - sinh*sinh*cos form loses every digit.
    dr = math.sinh(0.5 * (p[0] - q[0]))
    s = math.sin(0.5 * angular_difference(p[1], q[1]))
    return 2.0 * (dr * dr + math.sinh(p[0]) * math.sinh(q[0]) * s * s)


def cosh_distance(model: HyperbolicModel, p: Point, q: Point) -> float:
    """``cosh`` of the hyperbolic distance between native polar points.

    Evaluated without the ``cosh*cosh - sinh*sinh*cos`` cancellation, so it is
    accurate for nearby points at large radii.
    """
    return 1.0 + _cosh_distance_m1(p, q)


def distance(model: PlaneModel, p: Point, q: Point) -> float:
    """Distance in the model's plane."""
    if isinstance(model, EuclideanModel):
        return math.hypot(p[0] - q[0], p[1] - q[1])
    x = _cosh_distance_m1(p, q)
    return math.log1p(x + math.sqrt(x * (x + 2.0)))


def _within_threshold(model: PlaneModel, p: Point, q: Point) -> bool:
    # Inclusive adjacency; compare squared / cosh values so boundary cases
    # are decided on exactly the quantities the generators use.
    if isinstance(model, EuclideanModel):
        dx, dy = p[0] - q[0], p[1] - q[1]
        return dx * dx + dy * dy <= model.r * model.r
    return cosh_distance(model, p, q) <= math.cosh(model.R)


@dataclass(frozen=True)
class Segment:
    """Unordered point pair with its cached plane distance."""

    p0: Point
    p1: Point
    length: float


def make_segment(model: PlaneModel, p0: Point, p1: Point) -> Segment:
    """Build a segment, validating that both endpoints are in the domain."""
    for p in (p0, p1):
        if not in_domain(model, p):
            raise OutOfDomain(f"point {p} outside the model domain")
    return Segment(tuple(map(float, p0)), tuple(map(float, p1)),
                   distance(model, p0, p1))


def is_long(model: PlaneModel, s: Segment) -> bool:
    """Whether the segment's endpoints form a non-edge (length > threshold)."""
    return not _within_threshold(model, s.p0, s.p1)


def is_independent(model: PlaneModel, s: Segment, t: Segment) -> bool:
    """Independence predicate for two non-edge segments.

    True iff all four cross distances (each endpoint of ``s`` to each endpoint
    of ``t``) are within the adjacency threshold.  Raises
    ``EndpointCollision`` when the segments share an endpoint and
    ``InvalidParameter`` when either segment is not a non-edge.
    """
    for a in (s.p0, s.p1):
        for b in (t.p0, t.p1):
            if a == b:
                raise EndpointCollision(f"segments share endpoint {a}")
    if not is_long(model, s) or not is_long(model, t):
        raise InvalidParameter("independence is defined only for non-edge segments")
    return all(
        _within_threshold(model, a, b)
        for a in (s.p0, s.p1)
        for b in (t.p0, t.p1)
    )


# ---------------------------------------------------------------------------
# Poincare chart helpers (disk model only)

def to_disk(p: Point) -> complex:
    """Native polar -> Poincare chart coordinate ``tanh(r/2) e^{i phi}``."""
    return math.tanh(0.5 * p[0]) * cmath.exp(1j * p[1])


def from_disk(z: complex) -> Point:
    """Poincare chart coordinate -> native polar ``(r, phi)`` with phi in [0, 2pi)."""
    m = abs(z)
    if m >= 1.0:
        raise NumericalDegeneracy(f"chart point |z| = {m} reached the ideal boundary")
    r = math.log1p(2.0 * m / (1.0 - m))
    phi = cmath.phase(z) % TWO_PI if m > 0.0 else 0.0
    return (r, phi)


def _mobius_to(z0: complex, z: complex) -> complex:
    """Isometry sending ``z0`` to the chart origin."""
    return (z - z0) / (1.0 - z0.conjugate() * z)


def _mobius_from(z0: complex, z: complex) -> complex:
    """Inverse of ``_mobius_to(z0, .)``."""
    return (z + z0) / (1.0 + z0.conjugate() * z)


def _frame_geodesic(z1: complex, z2: complex) -> tuple[str, complex]:
    """Chart geodesic through two frame points, as ``("circle", center)`` or,
    when it runs through the frame origin, ``("line", unit_direction)``.

    A geodesic at hyperbolic distance ``d`` from the frame origin has
    ``|center| = coth(d)``, so a far geodesic (``d`` large) is numerically
    indistinguishable from the unit circle; that case raises
    ``NumericalDegeneracy`` and callers must re-center the frame nearer the
    geodesic.  It is told apart from the through-origin case by the angle the
    endpoints subtend at the origin: pi for a through-origin chord, ~0 for a
    far geodesic.
    """
    det = (z1.conjugate() * z2).imag
    scale = max(abs(z1) * abs(z2), 1e-300)
    if abs(det) > _COLLINEAR_EPS * scale:
        c = (z2 * (1.0 + abs(z1) ** 2) - z1 * (1.0 + abs(z2) ** 2)) / (2j * det)
        if abs(c) ** 2 > 1.0:
            return ("circle", c)
    if (z1.conjugate() * z2).real < 0.0:
        chord = z2 - z1
        return ("line", chord / abs(chord))
    raise NumericalDegeneracy(
        "geodesic too far from the frame origin to resolve")


def _wrap_signed(angle: float) -> float:
    # Wrap to (-pi, pi].
    a = math.fmod(angle, TWO_PI)
    if a > math.pi:
        return a - TWO_PI
    if a <= -math.pi:
        return a + TWO_PI
    return a


def direction_from(model: PlaneModel, p: Point, x: Point) -> float:
    """Initial heading at ``p`` of the geodesic toward ``x``.

    Hyperbolic headings are absolute: heading ``phi_p`` points radially away
    from the disk origin and headings grow counter-clockwise, matching the
    conformal-chart frame at ``p``.
    """
    if isinstance(model, EuclideanModel):
        return math.atan2(x[1] - p[1], x[0] - p[0])
    rp, phip = p
    if rp < 1.0:
        # Shallow base: triangle formulas lose conditioning, the chart does
        # not (every other point is far from the chart boundary scale here).
        w = _mobius_to(to_disk(p), to_disk(x))
        if abs(w) == 0.0:
            raise NumericalDegeneracy("heading toward a coincident point")
        return cmath.phase(w)
    d = distance(model, p, x)
    if d < 1e-15:
        raise NumericalDegeneracy("heading toward a coincident point")
    # Angle at p between the rays toward the origin and toward x, from the
    # sine/cosine rules of the triangle (origin, p, x).
    dphi = _wrap_signed(x[1] - phip)
    sin_w = min(1.0, abs(math.sin(dphi)) * math.sinh(x[0]) / math.sinh(d))
    cos_w = ((math.cosh(rp) * math.cosh(d) - math.cosh(x[0]))
             / (math.sinh(rp) * math.sinh(d)))
    omega = math.atan2(sin_w, cos_w)
    nu = math.copysign(math.pi - omega, dphi)
    return phip + nu


def geodesic_walk(model: PlaneModel, p: Point, heading: float, dist: float) -> Point:
    """Point at geodesic distance ``dist`` from ``p`` along ``heading``.

    The heading frame matches ``direction_from``.  The result may leave the
    model domain; callers validate with ``in_domain``.
    """
    if isinstance(model, EuclideanModel):
        return (p[0] + dist * math.cos(heading), p[1] + dist * math.sin(heading))
    if dist == 0.0:
        return p
    rp, phip = p
    if rp < 1.0:
        if rp == 0.0:
            return (dist, heading % TWO_PI)
        w = math.tanh(0.5 * dist) * cmath.exp(1j * heading)
        return from_disk(_mobius_from(to_disk(p), w))
    # nu is the heading relative to the outward radial ray; the new radius
    # comes from a cancellation-free law of cosines (a sum of nonnegative
    # terms), the angular advance from the sine rule plus a cosine-rule
    # quadrant disambiguation.
    nu = _wrap_signed(heading - phip)
    h = math.sinh(0.5 * (rp - dist))
    cg = math.cos(0.5 * nu)
    x1 = 2.0 * (h * h + math.sinh(rp) * math.sinh(dist) * cg * cg)
    rx = math.log1p(x1 + math.sqrt(x1 * (x1 + 2.0)))
    if rx < 1e-15:
        return (0.0, 0.0)
    sin_dphi = min(1.0, math.sinh(dist) * abs(math.sin(nu)) / math.sinh(rx))
    cos_dphi = ((math.cosh(rp) * math.cosh(rx) - math.cosh(dist))
                / (math.sinh(rp) * math.sinh(rx)))
    dphi = math.atan2(sin_dphi, cos_dphi)
    return (rx, (phip + math.copysign(dphi, nu)) % TWO_PI)


def midpoint(model: PlaneModel, s: Segment) -> Point:
    """Geodesic midpoint of a segment."""
    if isinstance(model, EuclideanModel):
        return (0.5 * (s.p0[0] + s.p1[0]), 0.5 * (s.p0[1] + s.p1[1]))
    z0, z1 = to_disk(s.p0), to_disk(s.p1)
    w = _mobius_to(z0, z1)
    m = abs(w)
    if m == 0.0:
        return s.p0
    half = math.tanh(0.25 * s.length) * (w / m)
    return from_disk(_mobius_from(z0, half))


def center_distance(model: PlaneModel, p: Point) -> float:
    """Distance from ``p`` to the plane's reference point: the disk origin,
    or the square center ``(1/2, 1/2)``."""
    if isinstance(model, EuclideanModel):
        return math.hypot(p[0] - 0.5, p[1] - 0.5)
    return p[0]


# ---------------------------------------------------------------------------
# Crossing geometry

@dataclass(frozen=True)
class SegmentPair:
    """Full geometry record of two crossing independent segments.

    The first segment's labeled endpoints are ``v1`` (lexicographically
    smaller) and ``v2``; the second segment's are ``w1`` and ``w2``, where
    ``w1`` is the endpoint first hit when rotating counter-clockwise from the
    ray ``q -> v1``.  With that labeling the crossing angle ``theta`` is the
    counter-clockwise angle from ray ``q -> v1`` to ray ``q -> w1`` and lies
    in (0, pi); swapping the roles of the two segments maps ``theta`` to
    ``pi - theta``.
    """

    v1: Point
    v2: Point
    w1: Point
    w2: Point
    q: Point                 # crossing point
    m: Point                 # midpoint of the first segment
    theta: float             # crossing angle, in (0, pi)
    length_first: float      # |v1 v2|
    length_second: float     # |w1 w2|
    cut_first: float         # dist(v1, q)
    cut_second: float        # dist(w1, q)
    midpoint_reach: float    # dist(m, w1)
    midpoint_angle: float    # angle w1-m-v1, in [0, pi]
    midpoint_radius: float   # center_distance(m)


def _euclid_line_cross(s: Segment, t: Segment) -> Point:
    d1 = (s.p1[0] - s.p0[0], s.p1[1] - s.p0[1])
    d2 = (t.p1[0] - t.p0[0], t.p1[1] - t.p0[1])
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    scale = math.hypot(*d1) * math.hypot(*d2)
    if abs(denom) <= _COLLINEAR_EPS * scale:
        raise NumericalDegeneracy("parallel or collinear segments")
    rx, ry = t.p0[0] - s.p0[0], t.p0[1] - s.p0[1]
    a = (rx * d2[1] - ry * d2[0]) / denom
    return (s.p0[0] + a * d1[0], s.p0[1] + a * d1[1])


def _inside_root(g: float) -> float:
    # In-disk root of t^2 - 2 t g + 1 = 0 (the other root is its inversion).
    return math.copysign(1.0, g) / (abs(g) + math.sqrt(g * g - 1.0))


def _cross_in_frame(sa: complex, sb: complex, ta: complex, tb: complex) -> complex:
    """Crossing of the geodesics (sa, sb) and (ta, tb), in frame coordinates.

    Each geodesic is a chart circle or a through-origin line; a line-line
    frame means both geodesics pass through the origin, which is then the
    crossing.  Circle-circle pairs are intersected along their radical axis,
    which passes through the origin because both circles are orthogonal to
    the unit circle.  Raises ``NoCrossing`` when they do not meet.
    """
    kind_s, gs = _frame_geodesic(sa, sb)
    kind_t, gt = _frame_geodesic(ta, tb)
    if kind_s == "line" and kind_t == "line":
        return 0j
    if kind_s == "line" or kind_t == "line":
        u, c = (gs, gt) if kind_s == "line" else (gt, gs)
        axis = u
    else:
        dc = gs - gt
        if abs(dc) <= 1e-9 * max(abs(gs), abs(gt)):
            raise NumericalDegeneracy("geodesics nearly coincide")
        axis, c = 1j * dc / abs(dc), gs
    g = (c * axis.conjugate()).real
    if g * g <= 1.0:
        raise NoCrossing("geodesics do not meet")
    return _inside_root(g) * axis


def _hyperbolic_cross(model: HyperbolicModel, s: Segment, t: Segment) -> Point:
    # First pass centered on t's midpoint: for crossing non-edge pairs the
    # crossing lies within O(log(1/sin theta)) of it, keeping both geodesics
    # resolvable.  Then re-center on the estimate and solve again, which
    # pins the crossing to near machine precision independent of the first
    # pass's conditioning.
    def solve(frame: complex) -> complex:
        return _cross_in_frame(
            _mobius_to(frame, to_disk(s.p0)), _mobius_to(frame, to_disk(s.p1)),
            _mobius_to(frame, to_disk(t.p0)), _mobius_to(frame, to_disk(t.p1)))

    z0 = to_disk(midpoint(model, t))
    q = solve(z0)
    if abs(q) >= 1.0:
        raise NoCrossing("crossing at the ideal boundary")
    zq = _mobius_from(z0, q)
    try:
        q2 = solve(zq)
    except (NoCrossing, NumericalDegeneracy):
        return from_disk(zq)  # polish hit noise level; first estimate stands
    return from_disk(_mobius_from(zq, q2) if abs(q2) < 1.0 else zq)


def intersection_and_angle(model: PlaneModel, s: Segment, t: Segment) -> SegmentPair:
    """Crossing point, labeled endpoints, and derived scalars for an
    independent pair ``(s, t)``.

    Raises ``NotIndependent`` when the pair fails the independence predicate,
    ``NoCrossing`` when the crossing point does not lie on both segments (for
    independent inputs this falsifies the crossing guarantee), and
    ``NumericalDegeneracy`` on collinear configurations.
    """
    if not is_independent(model, s, t):
        raise NotIndependent("segments are not independent")

    q = (_euclid_line_cross(s, t) if isinstance(model, EuclideanModel)
         else _hyperbolic_cross(model, s, t))

    v1, v2 = (s.p0, s.p1) if s.p0 <= s.p1 else (s.p1, s.p0)
    a, b = s.length, t.length

    # The crossing of the underlying lines must lie on both closed segments.
    c = distance(model, v1, q)
    if c + distance(model, q, v2) > a + _ON_SEGMENT_RTOL * max(1.0, a):
        raise NoCrossing("line crossing misses the first segment")
    dw0 = distance(model, t.p0, q)
    if dw0 + distance(model, q, t.p1) > b + _ON_SEGMENT_RTOL * max(1.0, b):
        raise NoCrossing("line crossing misses the second segment")

    ref = direction_from(model, q, v1)
    delta = (direction_from(model, q, t.p0) - ref) % TWO_PI
    if min(delta % math.pi, math.pi - (delta % math.pi)) <= _COLLINEAR_EPS:
        raise NumericalDegeneracy("crossing angle collapsed to 0 or pi")
    if delta < math.pi:
        w1, w2, theta, d = t.p0, t.p1, delta, dw0
    else:
        w1, w2, theta, d = t.p1, t.p0, delta - math.pi, distance(model, t.p1, q)

    m = midpoint(model, s)
    r0 = distance(model, m, w1)
    phi = angular_difference(direction_from(model, m, w1),
                             direction_from(model, m, v1))
    return SegmentPair(
        v1=v1, v2=v2, w1=w1, w2=w2, q=q, m=m, theta=theta,
        length_first=a, length_second=b, cut_first=c, cut_second=d,
        midpoint_reach=r0, midpoint_angle=phi,
        midpoint_radius=center_distance(model, m),
    )


def length_slack(theta: float, R: float) -> float:
    """Slack term ``ln(2 (1 + e^{-2R}) / (1 + cos theta))``.

    Bounds how far independent-pair lengths and midpoint reaches can exceed
    their baselines as the crossing angle ``theta`` grows; increasing on
    (0, pi) and ~``ln 2`` at ``theta = pi/2`` for large ``R``.
    """
    if not (0.0 <= theta < math.pi):
        raise InvalidParameter(f"theta must lie in [0, pi), got {theta}")
    return math.log(2.0 * (1.0 + math.exp(-2.0 * R))) - math.log1p(math.cos(theta))


# ---------------------------------------------------------------------------
# Regions

@dataclass(frozen=True)
class AnnulusSector:
    """Annulus sector ``r_lo <= rho <= r_hi``, ``phi_lo <= phi <= phi_hi``.

    ``center`` anchors the polar frame on the unit square and must be omitted
    (plane origin) on the disk.  Angles are absolute headings; the angular
    span must be positive and at most ``2 pi``.
    """

    r_lo: float
    r_hi: float
    phi_lo: float
    phi_hi: float
    center: Point | None = None

    def __post_init__(self):
        if not (0.0 <= self.r_lo < self.r_hi):
            raise InvalidParameter(
                f"need 0 <= r_lo < r_hi, got [{self.r_lo}, {self.r_hi}]")
        span = self.phi_hi - self.phi_lo
        if not (0.0 < span <= TWO_PI):
            raise InvalidParameter(f"angular span {span} outside (0, 2*pi]")

    @property
    def span(self) -> float:
        return self.phi_hi - self.phi_lo


def region_probability(model: PlaneModel, sector: AnnulusSector) -> float:
    """Probability that one model-distributed point lands in the sector.

    On the square the density is uniform so this is the sector area, and the
    sector must fit inside the square (checked conservatively through the
    enclosing disk).  On the disk the sector must be centered at the origin
    and reach at most ``R``; the radial integral has the closed form
    ``(cosh(alpha r_hi) - cosh(alpha r_lo)) / (cosh(alpha R) - 1)``.
    """
    if isinstance(model, EuclideanModel):
        if sector.center is None:
            raise OutOfDomain("square sectors need an explicit center")
        cx, cy = sector.center
        rim = sector.r_hi
        if not (rim <= cx <= 1.0 - rim and rim <= cy <= 1.0 - rim):
            raise OutOfDomain(
                f"sector disk of radius {rim} around {sector.center} "
                f"leaves the unit square")
        return 0.5 * (sector.r_hi ** 2 - sector.r_lo ** 2) * sector.span
    if sector.center is not None:
        raise OutOfDomain("disk sectors are supported only at the origin")
    if sector.r_hi > model.R:
        raise OutOfDomain(f"sector reaches {sector.r_hi} > R = {model.R}")
    al = model.alpha
    radial = ((math.cosh(al * sector.r_hi) - math.cosh(al * sector.r_lo))
              / (math.cosh(al * model.R) - 1.0))
    return (sector.span / TWO_PI) * radial


def sector_contains(model: PlaneModel, sector: AnnulusSector, p: Point) -> bool:
    """Membership test matching ``region_probability``'s geometry."""
    if isinstance(model, EuclideanModel):
        if sector.center is None:
            raise OutOfDomain("square sectors need an explicit center")
        dx, dy = p[0] - sector.center[0], p[1] - sector.center[1]
        rho = math.hypot(dx, dy)
        ang = math.atan2(dy, dx)
    else:
        rho, ang = p
    if not (sector.r_lo <= rho <= sector.r_hi):
        return False
    return (ang - sector.phi_lo) % TWO_PI <= sector.span


def point_density(model: HyperbolicModel, radius: float) -> float:
    """Area density ``rho(r) = f(r) / sinh(r)`` of the disk point process,
    where ``f`` is the full joint density including the uniform angular
    factor; decreasing in ``r``."""
    if isinstance(model, EuclideanModel):
        raise InvalidParameter("point_density is defined for the disk model")
    if not (0.0 < radius <= model.R):
        raise OutOfDomain(f"radius {radius} outside (0, R]")
    al = model.alpha
    f = al * math.sinh(al * radius) / (TWO_PI * (math.cosh(al * model.R) - 1.0))
    return f / math.sinh(radius)
