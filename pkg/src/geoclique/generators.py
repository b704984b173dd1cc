"""Random point samples and their adjacency graphs.

Sampling is deterministic per ``(model, seed)``: a counter-based Philox
generator is seeded from ``SeedSequence((seed, stream))``, with stream 0
reserved for the Poissonized point count and stream 1 for positions.  The
position stream is consumed in a single vectorized pass, so results are
independent of thread count, and fixed-count and Poissonized draws with the
same seed agree on their common prefix of points.

Graph construction compares squared distances (square) or cosh distances
(disk) against the threshold inclusively, with exactly the same expressions
on the brute-force and accelerated paths.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InvalidParameter
from .geometry import EuclideanModel, HyperbolicModel, PlaneModel
from .graph import Graph, from_edges

# Below this many points the O(k^2) scan beats the bookkeeping of the
# accelerated paths.
_BRUTE_LIMIT = 2000

_COUNT_STREAM = 0
_POSITION_STREAM = 1


def _rng(seed: int, stream: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(
        np.random.SeedSequence((seed, stream))))


def sample_count(model: PlaneModel, seed: int) -> int:
    """Poissonized point count with mean ``model.n``."""
    return int(_rng(seed, _COUNT_STREAM).poisson(model.n))


def sample_points(model: PlaneModel, seed: int, *,
                  poissonize: bool = False) -> np.ndarray:
    """Sample point coordinates, shape ``(k, 2)``.

    Rows are ``(x, y)`` on the square and native polar ``(r, phi)`` on the
    disk; ``k`` is ``model.n``, or Poisson-distributed with that mean when
    ``poissonize`` is set.
    """
    k = sample_count(model, seed) if poissonize else model.n
    u = _rng(seed, _POSITION_STREAM).random((k, 2))
    if isinstance(model, EuclideanModel):
        return u
    al = model.alpha
    out = np.empty_like(u)
    out[:, 0] = np.arccosh(1.0 + u[:, 0] * (math.cosh(al * model.R) - 1.0)) / al
    out[:, 1] = u[:, 1] * (2.0 * math.pi)
    return out


def _emit(pairs: list[np.ndarray], a, b) -> None:
    if len(a):
        pairs.append(np.column_stack([a, b]))


def _collect(k: int, pairs: list[np.ndarray]) -> Graph:
    edges = (np.concatenate(pairs) if pairs
             else np.empty((0, 2), dtype=np.int64))
    return from_edges(k, edges)


def _euclid_brute(points: np.ndarray, r: float) -> list[np.ndarray]:
    k = len(points)
    r2 = r * r
    pairs = []
    for i0 in range(0, k, 512):
        i1 = min(i0 + 512, k)
        dx = points[i0:i1, 0, None] - points[None, :, 0]
        dy = points[i0:i1, 1, None] - points[None, :, 1]
        close = dx * dx + dy * dy <= r2
        ii, jj = np.nonzero(close)
        keep = ii + i0 < jj
        _emit(pairs, ii[keep] + i0, jj[keep])
    return pairs


def _euclid_grid(points: np.ndarray, r: float) -> list[np.ndarray]:
    k = len(points)
    ncell = max(1, int(1.0 / r))
    width = 1.0 / ncell
    ij = np.minimum((points / width).astype(np.int64), ncell - 1)
    cell = ij[:, 0] * ncell + ij[:, 1]
    order = np.argsort(cell, kind="stable")
    starts = np.searchsorted(cell[order], np.arange(ncell * ncell + 1))
    r2 = r * r
    pairs = []

    def block(a: np.ndarray, b: np.ndarray, same: bool) -> None:
        pa, pb = points[a], points[b]
        dx = pa[:, 0, None] - pb[None, :, 0]
        dy = pa[:, 1, None] - pb[None, :, 1]
        ii, jj = np.nonzero(dx * dx + dy * dy <= r2)
        ga, gb = a[ii], b[jj]
        keep = ga < gb if same else ga != gb
        lo = np.minimum(ga[keep], gb[keep])
        hi = np.maximum(ga[keep], gb[keep])
        _emit(pairs, lo, hi)

    for cx in range(ncell):
        for cy in range(ncell):
            c = cx * ncell + cy
            here = order[starts[c]:starts[c + 1]]
            if not len(here):
                continue
            block(here, here, same=True)
            for ox, oy in ((0, 1), (1, -1), (1, 0), (1, 1)):
                nx, ny = cx + ox, cy + oy
                if not (0 <= nx < ncell and 0 <= ny < ncell):
                    continue
                c2 = nx * ncell + ny
                there = order[starts[c2]:starts[c2 + 1]]
                if len(there):
                    block(here, there, same=False)
    return pairs


def _cosh_pair(r_a, r_b, dphi):
    h = np.sinh(0.5 * (r_a - r_b))
    s = np.sin(0.5 * dphi)
    return 1.0 + 2.0 * (h * h + np.sinh(r_a) * np.sinh(r_b) * s * s)


def _wrap_pi(dphi):
    return np.pi - np.abs(np.pi - np.abs(dphi) % (2.0 * np.pi))


def _hyperbolic_brute(points: np.ndarray, R: float) -> list[np.ndarray]:
    k = len(points)
    cr = math.cosh(R)
    pairs = []
    for i0 in range(0, k, 512):
        i1 = min(i0 + 512, k)
        dphi = _wrap_pi(points[i0:i1, 1, None] - points[None, :, 1])
        close = _cosh_pair(points[i0:i1, 0, None], points[None, :, 0],
                           dphi) <= cr
        ii, jj = np.nonzero(close)
        keep = ii + i0 < jj
        _emit(pairs, ii[keep] + i0, jj[keep])
    return pairs


def angular_window(radius, shell_min: float, R: float):
    """Largest angular separation at which a point at ``radius`` can be
    within distance ``R`` of any point of radius at least ``shell_min``.

    Decreasing in both radii arguments, so evaluating at the shell's inner
    rim bounds every pair inside the shell.
    """
    radius = np.asarray(radius, dtype=np.float64)
    num = math.cosh(R) - np.cosh(radius - shell_min)
    den = 2.0 * np.sinh(radius) * math.sinh(shell_min)
    sin2 = np.clip(num / np.maximum(den, 1e-300), 0.0, 1.0)
    return 2.0 * np.arcsin(np.sqrt(sin2))


def _hyperbolic_windows(points: np.ndarray, R: float) -> list[np.ndarray]:
    k = len(points)
    half = 0.5 * R
    cr = math.cosh(R)
    radii, phis = points[:, 0], points[:, 1]
    core = np.nonzero(radii <= half)[0]
    shell = np.nonzero(radii > half)[0]
    pairs = []

    # Core points reach any angle, so scan them against everything.
    for i, u in enumerate(core):
        others = np.concatenate([core[i + 1:], shell])
        dphi = _wrap_pi(phis[u] - phis[others])
        close = _cosh_pair(radii[u], radii[others], dphi) <= cr
        _emit(pairs, np.full(int(close.sum()), u), others[close])

    # Shell points only reach a bounded angular window; enumerate each pair
    # once from the angularly earlier endpoint (forward half-window).
    order = shell[np.argsort(phis[shell], kind="stable")]
    sphi = phis[order]
    windows = angular_window(radii[order], half, R)
    ext_phi = np.concatenate([sphi, sphi + 2.0 * math.pi])
    ext_idx = np.concatenate([order, order])
    for j, u in enumerate(order):
        hi = np.searchsorted(ext_phi, sphi[j] + windows[j], side="right")
        cand = ext_idx[j + 1:hi]
        if not len(cand):
            continue
        dphi = _wrap_pi(phis[u] - phis[cand])
        close = _cosh_pair(radii[u], radii[cand], dphi) <= cr
        cand = cand[close]
        if len(cand):
            _emit(pairs, np.minimum(u, cand), np.maximum(u, cand))
    return pairs


def build_graph(model: PlaneModel, points: np.ndarray) -> Graph:
    """Adjacency graph of sampled points under the model's threshold."""
    points = np.asarray(points, dtype=np.float64)
    if points.ndim != 2 or (len(points) and points.shape[1] != 2):
        raise InvalidParameter("points must have shape (k, 2)")
    k = len(points)
    if k < 2:
        return from_edges(k, np.empty((0, 2), dtype=np.int64))
    if isinstance(model, EuclideanModel):
        fn = _euclid_brute if k < _BRUTE_LIMIT else _euclid_grid
        return _collect(k, fn(points, model.r))
    fn = _hyperbolic_brute if k < _BRUTE_LIMIT else _hyperbolic_windows
    return _collect(k, fn(points, model.R))


def generate(model: PlaneModel, seed: int, *,
             poissonize: bool = False) -> tuple[Graph, np.ndarray]:
    """Sample points and build their graph in one step."""
    points = sample_points(model, seed, poissonize=poissonize)
    return build_graph(model, points), points
