"""Compact undirected graphs with sorted adjacency.

Graphs are immutable CSR structures over vertices ``0..n-1``: ``indptr``
(length ``n + 1``) delimits each vertex's neighbor slice in ``indices``, and
every slice is strictly increasing.  Simple graphs only — parallel edges and
self-loops are dropped at construction.
"""

from __future__ import annotations

import gzip
import io
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidParameter, InvalidVertex, MalformedLine


@dataclass(frozen=True)
class Graph:
    """Immutable undirected graph in CSR form."""

    indptr: np.ndarray
    indices: np.ndarray
    _degrees: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_degrees", np.diff(self.indptr))
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)

    @property
    def n(self) -> int:
        return len(self.indptr) - 1

    @property
    def m(self) -> int:
        return len(self.indices) // 2

    def degree(self, v: int) -> int:
        return int(self._degrees[self._check(v)])

    @property
    def degrees(self) -> np.ndarray:
        return self._degrees

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of ``v`` (a read-only view)."""
        v = self._check(v)
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        u, v = self._check(u), self._check(v)
        if u == v:
            return False
        if self._degrees[u] > self._degrees[v]:
            u, v = v, u
        row = self.neighbors(u)
        k = np.searchsorted(row, v)
        return k < len(row) and row[k] == v

    def common_neighbors(self, u: int, v: int) -> np.ndarray:
        """Sorted ids adjacent to both ``u`` and ``v``."""
        return np.intersect1d(self.neighbors(u), self.neighbors(v),
                              assume_unique=True)

    def _check(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} outside 0..{self.n - 1}")
        return v


def from_edges(n: int, edges) -> Graph:
    """Graph on ``0..n-1`` from an iterable or array of vertex pairs.

    Duplicate edges (in either orientation) and self-loops are dropped.
    """
    if n < 0:
        raise InvalidParameter(f"n must be >= 0, got {n}")
    e = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges,
                   dtype=np.int64)
    if e.size == 0:
        e = e.reshape(0, 2)
    if e.ndim != 2 or e.shape[1] != 2:
        raise InvalidParameter("edges must be pairs")
    if e.size and (e.min() < 0 or e.max() >= n):
        bad = e[(e < 0) | (e >= n)].flat[0]
        raise InvalidVertex(f"vertex {bad} outside 0..{n - 1}")
    e = e[e[:, 0] != e[:, 1]]
    both = np.vstack([e, e[:, ::-1]])
    if both.size and n < 2**31:
        # Dedupe via a scalar key; much faster than row-wise np.unique.
        key = np.unique(both[:, 0] * np.int64(n) + both[:, 1])
        src, dst = key // n, key % n
    elif both.size:
        both = np.unique(both, axis=0)
        src, dst = both[:, 0], both[:, 1]
    else:
        src, dst = both[:, 0], both[:, 1]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return Graph(indptr=indptr, indices=dst.astype(np.int64))


def from_labeled_edges(pairs) -> tuple[Graph, np.ndarray]:
    """Graph from pairs with arbitrary integer labels.

    Labels are relabeled to ``0..n-1`` in increasing label order; the second
    return value maps new ids back to the original labels.
    """
    e = np.asarray(list(pairs) if not isinstance(pairs, np.ndarray) else pairs,
                   dtype=np.int64)
    if e.size == 0:
        return from_edges(0, e.reshape(0, 2)), np.empty(0, dtype=np.int64)
    if e.ndim != 2 or e.shape[1] != 2:
        raise InvalidParameter("edges must be pairs")
    labels, flat = np.unique(e.ravel(), return_inverse=True)
    return from_edges(len(labels), flat.reshape(e.shape)), labels


def read_edge_file(path) -> tuple[Graph, np.ndarray]:
    """Parse a whitespace-separated edge list file, gzipped or plain.

    Lines starting with ``#`` are comments; blank lines are skipped; every
    other line must hold exactly two integer labels.  Returns the graph and
    the original vertex labels (new id ``i`` had label ``labels[i]``).
    Raises ``MalformedLine`` with the 1-based line number otherwise.
    """
    with open(path, "rb") as fh:
        magic = fh.read(2)
    opener = gzip.open if magic == b"\x1f\x8b" else open
    pairs = []
    with opener(path, "rb") as fh:
        for line_no, raw in enumerate(io.BufferedReader(fh), start=1):
            try:
                text = raw.decode("utf-8")
            except UnicodeDecodeError:
                raise MalformedLine(line_no, repr(raw[:80])) from None
            stripped = text.strip()
            if not stripped or stripped.startswith("#"):
                continue
            fields = stripped.split()
            if len(fields) != 2:
                raise MalformedLine(line_no, stripped[:80])
            try:
                pairs.append((int(fields[0]), int(fields[1])))
            except ValueError:
                raise MalformedLine(line_no, stripped[:80]) from None
    return from_labeled_edges(pairs)


def degeneracy_ordering(g: Graph) -> tuple[np.ndarray, int]:
    """Vertices in smallest-last (degeneracy) order, with the degeneracy.

    Repeatedly removes a minimum-degree vertex; every vertex has at most
    ``degeneracy`` neighbors appearing later in the returned order.  Classic
    bucket implementation, O(n + m); deterministic for a given graph.
    """
    n = g.n
    if n == 0:
        return np.empty(0, dtype=np.int64), 0
    deg = g.degrees.astype(np.int64).copy()
    order_by_deg = np.argsort(deg, kind="stable").astype(np.int64)
    pos = np.empty(n, dtype=np.int64)
    pos[order_by_deg] = np.arange(n)
    bucket_start = np.zeros(int(deg.max()) + 2, dtype=np.int64)
    np.cumsum(np.bincount(deg, minlength=len(bucket_start) - 1),
              out=bucket_start[1:])
    bucket_start = bucket_start[:-1].copy()
    degeneracy = 0
    for i in range(n):
        v = int(order_by_deg[i])
        dv = int(deg[v])
        if dv > degeneracy:
            degeneracy = dv
        for u in g.neighbors(v):
            u = int(u)
            du = int(deg[u])
            # Degrees equal to the current minimum stay frozen; that both
            # keeps processed vertices out (their frozen degree is <= dv)
            # and keeps the bucket array consistent.
            if du > dv:
                pw = int(bucket_start[du])
                w = int(order_by_deg[pw])
                if w != u:
                    pu = int(pos[u])
                    order_by_deg[pu] = w
                    order_by_deg[pw] = u
                    pos[u] = pw
                    pos[w] = pu
                bucket_start[du] += 1
                deg[u] = du - 1
    return order_by_deg, degeneracy
