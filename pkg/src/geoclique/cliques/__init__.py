"""Maximal-clique counting and enumeration.

Counting runs on a compiled kernel when the extension built, falling back
to the pure-Python implementation otherwise (or when the environment
variable ``GEOCLIQUE_PURE`` is set to a non-empty value other than ``0``).
Both kernels implement the same algorithm — degeneracy-ordered outer loop
with Tomita pivoting — and produce identical counts.
"""

from __future__ import annotations

import math
import os
import time
from dataclasses import dataclass
from typing import Callable, Optional

from ..errors import ConditionUnmet, InvalidParameter, TooLarge
from ..graph import Graph
from . import _kernel_py

_FORCE_PURE = os.environ.get("GEOCLIQUE_PURE", "") not in ("", "0")
_compiled = None
if not _FORCE_PURE:
    try:
        from . import _kernel_cy as _compiled
    except ImportError:
        _compiled = None

_SATURATION = (1 << 127) - 1


def kernel_name() -> str:
    """Name of the counting kernel selected at import: cython or pure."""
    return "pure" if _compiled is None else "cython"


@dataclass(frozen=True)
class CliqueStats:
    """Maximal-clique census of one graph.

    ``histogram[s]`` counts maximal cliques of size ``s`` (length
    ``omega + 1``); ``M`` is their total.  Counters saturate at 2^127 - 1,
    in which case ``overflowed`` is set.
    """

    M: int
    omega: int
    histogram: tuple[int, ...]
    overflowed: bool
    seconds: float


def _stats_from_hist(hist: list[int], seconds: float) -> CliqueStats:
    omega = 0
    for size in range(len(hist) - 1, -1, -1):
        if hist[size]:
            omega = size
            break
    overflow = False
    trimmed = []
    for size in range(omega + 1):
        c = hist[size]
        if c > _SATURATION:
            c = _SATURATION
            overflow = True
        trimmed.append(c)
    m = sum(trimmed)
    if m > _SATURATION:
        m = _SATURATION
        overflow = True
    return CliqueStats(M=m, omega=omega, histogram=tuple(trimmed),
                       overflowed=overflow, seconds=seconds)


Visitor = Callable[[tuple[int, ...]], None]


def enumerate_maximal(g: Graph,
                      visitor: Optional[Visitor] = None) -> CliqueStats:
    """Count maximal cliques; with ``visitor``, also hand each one over.

    Every maximal clique (including singletons at isolated vertices) is
    visited exactly once, as a sorted vertex tuple.  Counting mode never
    materializes cliques.
    """
    start = time.perf_counter()
    if visitor is None and _compiled is not None and g.n > 0:
        hist = _compiled.count_histogram(g.indptr, g.indices)
    else:
        hist = _kernel_py.count_and_visit(g, visitor)
    return _stats_from_hist(list(hist), time.perf_counter() - start)


def brute_force_maximal(g: Graph) -> CliqueStats:
    """Check all 2^n subsets; the testing oracle for small graphs."""
    n = g.n
    if n > 20:
        raise TooLarge("brute force is capped at 20 vertices")
    start = time.perf_counter()
    adj = [0] * n
    for v in range(n):
        for u in g.neighbors(v):
            adj[v] |= 1 << int(u)
    # clique[S] and cn[S] = common neighborhood, by lowest-bit recurrence
    size = 1 << n
    clique = bytearray(size)
    cn = [0] * size
    clique[0] = 1
    cn[0] = (1 << n) - 1
    hist = [0] * (n + 1)
    for s in range(1, size):
        low = s & -s
        v = low.bit_length() - 1
        rest = s ^ low
        if clique[rest] and rest & ~adj[v] == 0:
            clique[s] = 1
            cn[s] = cn[rest] & adj[v]
            if cn[s] & ~s == 0:
                hist[s.bit_count()] += 1
    return _stats_from_hist(hist, time.perf_counter() - start)


def moon_moser_limit(n: int) -> int:
    """Upper bound 3^ceil(n/3) on the number of maximal cliques of any
    graph with ``n`` vertices (attained when ``n`` is divisible by 3)."""
    if n < 0:
        raise InvalidParameter("n must be nonnegative")
    return 3 ** ((n + 2) // 3)


def clique_count_log_bound(n: int, t: int) -> float:
    """ln of the clique-count bound (n/t)^(2t), valid when n >= 4t."""
    if t < 1:
        raise InvalidParameter("t must be at least 1")
    if n < 4 * t:
        raise ConditionUnmet(f"bound requires n >= 4t (n={n}, t={t})")
    return 2.0 * t * math.log(n / t)
