"""Tests for maximal-clique counting, enumeration, and bound helpers."""

import itertools
import math
import os
import random
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geoclique.cliques import (
    CliqueStats,
    _stats_from_hist,
    brute_force_maximal,
    enumerate_maximal,
    kernel_name,
    moon_moser_limit,
    clique_count_log_bound,
)
from geoclique.errors import ConditionUnmet, InvalidParameter, TooLarge
from geoclique.graph import Graph, from_edges


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)
             if rng.random() < p]
    return from_edges(n, edges)


def assert_same_census(a: CliqueStats, b: CliqueStats) -> None:
    assert a.M == b.M
    assert a.omega == b.omega
    assert a.histogram == b.histogram


# ---------------------------------------------------------------------------
# Fixed small graphs with counts verifiable by hand.
# ---------------------------------------------------------------------------

def test_triangle():
    stats = enumerate_maximal(from_edges(3, [(0, 1), (0, 2), (1, 2)]))
    assert stats.M == 1
    assert stats.omega == 3
    assert stats.histogram == (0, 0, 0, 1)
    assert not stats.overflowed


def test_octahedron_k222():
    # Complete tripartite K_{2,2,2}: parts {0,1},{2,3},{4,5}.  Every maximal
    # clique picks one vertex per part, so there are exactly 2^3 = 8.
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6)
             if u // 2 != v // 2]
    stats = enumerate_maximal(from_edges(6, edges))
    assert stats.M == 8
    assert stats.omega == 3


def test_k33_attains_three_to_n_thirds():
    # K_{3,3} is triangle-free, so its 9 edges are all maximal: 9 = 3^(6/3).
    edges = [(u, v) for u in range(3) for v in range(3, 6)]
    stats = enumerate_maximal(from_edges(6, edges))
    assert stats.M == 9 == moon_moser_limit(6)
    assert stats.omega == 2
    assert stats.histogram == (0, 0, 9)


def test_path_p3():
    stats = enumerate_maximal(from_edges(3, [(0, 1), (1, 2)]))
    assert stats.M == 2
    assert stats.omega == 2


def test_empty_graph_four_vertices():
    stats = enumerate_maximal(from_edges(4, []))
    assert stats.M == 4           # four singleton cliques
    assert stats.omega == 1
    assert stats.histogram == (0, 4)


def test_zero_vertex_graph():
    stats = enumerate_maximal(from_edges(0, []))
    assert stats.M == 0
    assert stats.omega == 0
    assert stats.overflowed is False


def test_complete_graph():
    edges = list(itertools.combinations(range(7), 2))
    stats = enumerate_maximal(from_edges(7, edges))
    assert stats.M == 1
    assert stats.omega == 7


def test_disconnected_components():
    # Triangle, an isolated edge, and an isolated vertex.
    g = from_edges(6, [(0, 1), (0, 2), (1, 2), (3, 4)])
    stats = enumerate_maximal(g)
    assert stats.M == 3
    assert stats.histogram == (0, 1, 1, 1)


# ---------------------------------------------------------------------------
# Oracle equivalence: the production counter against the 2^n brute force.
# ---------------------------------------------------------------------------

def test_oracle_equivalence_200_random_graphs():
    rng = random.Random(20260201)
    densities = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]
    for trial in range(200):
        n = rng.randint(0, 15)
        p = densities[trial % len(densities)]
        g = gnp(n, p, rng)
        assert_same_census(enumerate_maximal(g), brute_force_maximal(g))


def test_pure_kernel_matches_compiled():
    if kernel_name() != "cython":
        pytest.skip("compiled kernel not available")
    from geoclique.cliques import _kernel_py

    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 40)
        g = gnp(n, rng.uniform(0.05, 0.6), rng)
        fast = enumerate_maximal(g)
        hist = _kernel_py.count_and_visit(g, None)
        assert_same_census(fast, _stats_from_hist(list(hist), 0.0))


def test_brute_force_too_large():
    with pytest.raises(TooLarge):
        brute_force_maximal(from_edges(21, []))


# ---------------------------------------------------------------------------
# CliqueStats invariants.
# ---------------------------------------------------------------------------

def test_histogram_invariants_random():
    rng = random.Random(99)
    for _ in range(50):
        n = rng.randint(1, 30)
        stats = enumerate_maximal(gnp(n, rng.random(), rng))
        assert stats.M >= 1
        assert sum(stats.histogram) == stats.M
        assert stats.M <= moon_moser_limit(n)
        assert len(stats.histogram) == stats.omega + 1
        assert stats.histogram[stats.omega] > 0
        assert stats.seconds >= 0.0


def test_determinism():
    g = gnp(25, 0.4, random.Random(5))
    a, b = enumerate_maximal(g), enumerate_maximal(g)
    assert_same_census(a, b)


def test_moon_moser_limit_values():
    assert moon_moser_limit(0) == 1
    assert moon_moser_limit(1) == 3
    assert moon_moser_limit(3) == 3
    assert moon_moser_limit(6) == 9
    assert moon_moser_limit(15) == 3 ** 5
    with pytest.raises(InvalidParameter):
        moon_moser_limit(-1)


def test_saturation_flag():
    # A histogram cell beyond 2^127 - 1 is clamped and flagged, not raised.
    huge = 1 << 130
    stats = _stats_from_hist([0, 0, huge], 0.0)
    assert stats.overflowed
    assert stats.M == (1 << 127) - 1
    ok = _stats_from_hist([0, 5, 7], 0.0)
    assert not ok.overflowed and ok.M == 12


# ---------------------------------------------------------------------------
# Visitor-mode audit: every visited set is a sorted maximal clique, no
# duplicates, and the visit count matches counting mode.
# ---------------------------------------------------------------------------

def audit_visits(g: Graph) -> None:
    seen = set()

    def visitor(clique):
        assert clique == tuple(sorted(clique))
        assert clique not in seen, "duplicate maximal clique visited"
        seen.add(clique)
        members = set(clique)
        for u, v in itertools.combinations(clique, 2):
            assert g.has_edge(u, v)
        for w in range(g.n):
            if w not in members:
                assert not all(g.has_edge(w, u) for u in clique), \
                    "visited clique is extendable, hence not maximal"

    stats = enumerate_maximal(g, visitor)
    assert len(seen) == stats.M
    hist = [0] * (stats.omega + 1)
    for clique in seen:
        hist[len(clique)] += 1
    assert tuple(hist) == stats.histogram


def test_visitor_audit_random_graphs():
    rng = random.Random(4242)
    for _ in range(30):
        audit_visits(gnp(rng.randint(1, 18), rng.random(), rng))


def test_visitor_on_trivial_graphs():
    calls = []
    enumerate_maximal(from_edges(0, []), visitor=calls.append)
    assert calls == []
    enumerate_maximal(from_edges(1, []), visitor=calls.append)
    assert calls == [(0,)]


# ---------------------------------------------------------------------------
# Bound helper.
# ---------------------------------------------------------------------------

def test_clique_count_log_bound_values():
    assert clique_count_log_bound(4, 1) == pytest.approx(math.log(16))
    assert clique_count_log_bound(8, 2) == pytest.approx(math.log(256))
    assert clique_count_log_bound(100, 5) == pytest.approx(10 * math.log(20))


def test_clique_count_log_bound_errors():
    with pytest.raises(ConditionUnmet):
        clique_count_log_bound(7, 2)
    with pytest.raises(InvalidParameter):
        clique_count_log_bound(8, 0)


def test_clique_count_log_bound_holds_on_small_dense_graphs():
    # For any graph and any t with a valid 2t-vertex witness the count bound
    # ln M <= 2 t ln(n/t) must hold; exercise it with t=1 (any non-edge) on
    # graphs large enough to satisfy the n >= 4t side condition.
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(4, 14)
        g = gnp(n, rng.uniform(0.2, 0.9), rng)
        has_nonedge = any(not g.has_edge(u, v)
                          for u in range(n) for v in range(u + 1, n))
        if not has_nonedge:
            continue
        stats = enumerate_maximal(g)
        assert math.log(stats.M) <= clique_count_log_bound(n, 1) + 1e-12


# ---------------------------------------------------------------------------
# Kernel selection.
# ---------------------------------------------------------------------------

def test_forced_pure_kernel_subprocess():
    code = (
        "from geoclique.cliques import kernel_name, enumerate_maximal\n"
        "from geoclique.graph import from_edges\n"
        "assert kernel_name() == 'pure', kernel_name()\n"
        "s = enumerate_maximal(from_edges(3, [(0,1),(0,2),(1,2)]))\n"
        "assert (s.M, s.omega) == (1, 3)\n"
        "print('ok')\n"
    )
    env = dict(os.environ, GEOCLIQUE_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "ok"


# ---------------------------------------------------------------------------
# Property-based checks.
# ---------------------------------------------------------------------------

@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=0, max_value=10))
    pairs = list(itertools.combinations(range(n), 2))
    edges = [e for e in pairs if draw(st.booleans())]
    return from_edges(n, edges)


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_property_matches_brute_force(g):
    assert_same_census(enumerate_maximal(g), brute_force_maximal(g))


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_property_isolated_vertex_adds_one(g):
    # Adding an isolated vertex adds exactly one maximal clique (a singleton)
    # and never changes any existing one.
    base = enumerate_maximal(g)
    padded = Graph(indptr=np.append(g.indptr, g.indptr[-1]),
                   indices=g.indices)
    grown = enumerate_maximal(padded)
    assert grown.M == base.M + 1
    assert grown.omega == max(base.omega, 1)
