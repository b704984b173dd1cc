"""Pure-Python maximal-clique kernel.

Degeneracy-ordered outer loop with Tomita pivoting inside, on arbitrary-width
integer bitsets over each outer vertex's neighborhood.  Used as the fallback
when the compiled kernel is unavailable and for visitor-driven enumeration.
"""

from __future__ import annotations

import sys
from typing import Callable, Optional

import numpy as np

from ..graph import Graph, degeneracy_ordering

Visitor = Callable[[tuple[int, ...]], None]


def count_and_visit(g: Graph,
                    visitor: Optional[Visitor] = None) -> list[int]:
    """Visit every maximal clique of ``g`` exactly once.

    Returns the clique-size histogram (index = size); the total is the
    maximal-clique count.  ``visitor``, when given, receives each clique as
    a sorted tuple of vertex ids.
    """
    n = g.n
    hist = [0] * (n + 1)
    if n == 0:
        return hist
    order, degeneracy = degeneracy_ordering(g)
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n)
    limit = degeneracy + 100
    if sys.getrecursionlimit() < limit + 200:
        sys.setrecursionlimit(limit + 200)

    for v in order:
        v = int(v)
        local = g.neighbors(v)
        k = len(local)
        loc = {int(u): i for i, u in enumerate(local)}
        rows = [0] * k
        for i, u in enumerate(local):
            mask = 0
            for w in g.neighbors(int(u)):
                j = loc.get(int(w))
                if j is not None:
                    mask |= 1 << j
            rows[i] = mask
        rv = rank[v]
        p0 = 0
        x0 = 0
        for i, u in enumerate(local):
            if rank[u] > rv:
                p0 |= 1 << i
            else:
                x0 |= 1 << i
        chain = [v] if visitor is not None else None

        def expand(P: int, X: int, depth: int) -> None:
            if P == 0:
                if X == 0:
                    hist[depth] += 1
                    if visitor is not None:
                        visitor(tuple(sorted(chain)))
                return
            cand = P | X
            best = -1
            pivot_row = 0
            while cand:
                low = cand & -cand
                cand ^= low
                row = rows[low.bit_length() - 1]
                c = (row & P).bit_count()
                if c > best:
                    best = c
                    pivot_row = row
            ext = P & ~pivot_row
            while ext:
                low = ext & -ext
                ext ^= low
                i = low.bit_length() - 1
                if visitor is not None:
                    chain.append(int(local[i]))
                expand(P & rows[i], X & rows[i], depth + 1)
                if visitor is not None:
                    chain.pop()
                P &= ~low
                X |= low

        expand(p0, x0, 1)
    return hist
