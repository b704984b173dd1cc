"""Tests for octahedral-number witnesses, bounds, and exact search."""

import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geoclique.cliques import clique_count_log_bound, enumerate_maximal
from geoclique.errors import InvalidParameter, InvalidVertex, TooLarge
from geoclique.generators import generate
from geoclique.geometry import EuclideanModel
from geoclique.graph import from_edges
from geoclique.octahedron import (
    OtWitness,
    Unknown,
    brute_force_tau,
    cheap_tau_upper,
    exact_tau,
    greedy_tau_lower,
    octahedron_graph,
    tau,
    verify_witness,
    witness_violation,
)


def gnp(n: int, p: float, rng: random.Random):
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if rng.random() < p])


def complete(n: int):
    return from_edges(n, list(itertools.combinations(range(n), 2)))


C4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


# ---------------------------------------------------------------------------
# Explicit octahedra: all three estimators are exact and tight on O_t.
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("t", [1, 2, 3, 4, 5])
def test_octahedron_round_trip(t):
    g, w = octahedron_graph(t)
    assert g.n == 2 * t
    assert verify_witness(g, w)
    assert exact_tau(g) == t
    assert cheap_tau_upper(g) == t        # 1 + (2t-2)/2, tight here
    assert greedy_tau_lower(g).t == t


def test_octahedron_graph_rejects_t_zero():
    with pytest.raises(InvalidParameter):
        octahedron_graph(0)


# ---------------------------------------------------------------------------
# Witness verification and violation reporting.
# ---------------------------------------------------------------------------

def test_c4_diagonals_are_a_witness():
    assert verify_witness(C4, OtWitness(((0, 2), (1, 3))))


def test_triangle_edge_pair_rejected():
    tri = complete(3)
    v = witness_violation(tri, OtWitness(((0, 1),)))
    assert v is not None
    assert v.reason == "pair is an edge"
    assert v.pair_index == 0


def test_duplicate_vertex_reported_first():
    g = from_edges(4, [])
    v = witness_violation(g, OtWitness(((0, 1), (0, 2))))
    assert v.reason == "duplicate vertex"
    assert (v.pair_index, v.other_index) == (1, 0)


def test_missing_cross_edge_reported():
    g = from_edges(4, [])
    v = witness_violation(g, OtWitness(((0, 1), (2, 3))))
    assert v.reason == "missing cross edge"
    assert (v.pair_index, v.other_index) == (0, 1)


def test_wrong_pairing_of_real_octahedron_rejected():
    g, w = octahedron_graph(3)
    swapped = OtWitness(((w.pairs[0][0], w.pairs[1][0]),
                         (w.pairs[0][1], w.pairs[1][1]), w.pairs[2]))
    assert not verify_witness(g, swapped)  # mixed pairs are edges


def test_invalid_vertex_raises():
    with pytest.raises(InvalidVertex):
        verify_witness(C4, OtWitness(((0, 99),)))


# ---------------------------------------------------------------------------
# Cheap upper bound.
# ---------------------------------------------------------------------------

def test_cheap_upper_fixed_values():
    assert cheap_tau_upper(complete(5)) == 0
    assert cheap_tau_upper(C4) == 2
    assert cheap_tau_upper(octahedron_graph(4)[0]) == 4
    assert cheap_tau_upper(from_edges(3, [(0, 1), (1, 2)])) == 1   # path
    assert cheap_tau_upper(from_edges(4, [])) == 1
    assert cheap_tau_upper(from_edges(0, [])) == 0
    assert cheap_tau_upper(from_edges(1, [])) == 0
    assert cheap_tau_upper(from_edges(2, [])) == 1


# ---------------------------------------------------------------------------
# Exact value.
# ---------------------------------------------------------------------------

def test_exact_fixed_values():
    assert exact_tau(complete(6)) == 0
    assert exact_tau(from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4),
                                    (4, 0)])) == 1    # 5-cycle
    k33 = from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)])
    assert exact_tau(k33) == 2
    assert exact_tau(from_edges(6, [])) == 1


def test_exact_matches_brute_force_on_100_random_graphs():
    rng = random.Random(20260301)
    for trial in range(100):
        n = rng.randint(0, 10)
        p = [0.1, 0.3, 0.5, 0.7, 0.9][trial % 5]
        g = gnp(n, p, rng)
        assert exact_tau(g) == brute_force_tau(g)


def test_node_limit_yields_unknown_with_incumbent():
    g, _ = octahedron_graph(5)
    out = exact_tau(g, node_limit=1)
    assert isinstance(out, Unknown)
    assert out.node_limit_hit
    assert 1 <= out.incumbent <= 5
    with pytest.raises(InvalidParameter):
        exact_tau(g, node_limit=0)


def test_brute_force_tau_capped():
    with pytest.raises(TooLarge):
        brute_force_tau(from_edges(11, []))


# ---------------------------------------------------------------------------
# Greedy lower bound.
# ---------------------------------------------------------------------------

def test_greedy_fixed_values():
    assert greedy_tau_lower(C4).t == 2          # must find both diagonals
    assert greedy_tau_lower(complete(4)).t == 0
    assert greedy_tau_lower(from_edges(3, [])).t == 1


def test_greedy_handles_wedgeless_nonedges():
    # Two disjoint edges: every non-edge has an empty common neighborhood,
    # so tau = 1 exactly and greedy must still produce a witness.
    g = from_edges(4, [(0, 1), (2, 3)])
    w = greedy_tau_lower(g)
    assert w.t == 1
    assert verify_witness(g, w)
    assert exact_tau(g) == 1


def test_greedy_restart_validation():
    with pytest.raises(InvalidParameter):
        greedy_tau_lower(C4, restarts=0)


def test_greedy_outputs_always_verify():
    rng = random.Random(77)
    for _ in range(40):
        g = gnp(rng.randint(0, 14), rng.random(), rng)
        w = greedy_tau_lower(g, restarts=4, seed=1)
        assert verify_witness(g, w)


def test_greedy_deterministic_for_fixed_seed():
    rng = random.Random(3)
    g = gnp(30, 0.5, rng)
    assert greedy_tau_lower(g, seed=9).pairs == greedy_tau_lower(g, seed=9).pairs


# ---------------------------------------------------------------------------
# Sandwich and count-bound consistency.
# ---------------------------------------------------------------------------

def test_sandwich_on_random_graphs():
    rng = random.Random(515)
    for _ in range(60):
        g = gnp(rng.randint(2, 13), rng.random(), rng)
        res = tau(g, exact=True)
        assert isinstance(res.exact, int)
        assert res.lower <= res.exact <= res.upper
        assert verify_witness(g, res.witness)
        assert res.witness.t == res.lower


def test_sandwich_on_generated_geometric_graph():
    g, _ = generate(EuclideanModel(500, 0.1), seed=3)
    res = tau(g, exact=True)
    assert isinstance(res.exact, int)
    assert res.lower <= res.exact <= res.upper
    assert {"lower", "upper", "exact"} <= res.timings.keys()


def test_witness_size_lower_bounds_clique_count():
    # an induced O_t forces at least 2^t maximal cliques
    rng = random.Random(2718)
    for _ in range(30):
        g = gnp(rng.randint(2, 12), rng.random(), rng)
        t = greedy_tau_lower(g, restarts=4).t
        assert 2 ** t <= enumerate_maximal(g).M


def test_exact_tau_feeds_count_bound():
    rng = random.Random(31)
    checked = 0
    for _ in range(40):
        g = gnp(rng.randint(8, 12), rng.uniform(0.3, 0.8), rng)
        t = exact_tau(g)
        if t < 1 or g.n < 4 * t:
            continue
        checked += 1
        assert math.log(enumerate_maximal(g).M) <= \
            clique_count_log_bound(g.n, t) + 1e-12
    assert checked >= 10


def test_tau_without_exact_leaves_it_none():
    res = tau(C4)
    assert res.exact is None
    assert (res.lower, res.upper) == (2, 2)
    assert "exact" not in res.timings


# ---------------------------------------------------------------------------
# Property-based checks.
# ---------------------------------------------------------------------------

@st.composite
def small_graphs(draw):
    n = draw(st.integers(min_value=0, max_value=9))
    pairs = list(itertools.combinations(range(n), 2))
    edges = [e for e in pairs if draw(st.booleans())]
    return from_edges(n, edges)


@settings(max_examples=50, deadline=None)
@given(small_graphs())
def test_property_exact_equals_brute_force(g):
    assert exact_tau(g) == brute_force_tau(g)


@settings(max_examples=50, deadline=None)
@given(small_graphs())
def test_property_bounds_bracket_exact(g):
    res = tau(g, exact=True)
    assert res.lower <= res.exact <= res.upper
