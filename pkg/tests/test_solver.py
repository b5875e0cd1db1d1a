from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from diamondkernel.errors import GuardError
from diamondkernel.family import FamilySpec
from diamondkernel.graph import Graph
from diamondkernel.phase1 import Instance
from diamondkernel.patterns import is_family_free
from diamondkernel.solver import (brute_force_editing_solution, brute_force_min_deletion,
                                  brute_force_min_editing, brute_force_vertex_deletion,
                                  solve_branching)

from conftest import complete_graph, cycle_graph, diamond_graph, editing_feasible, path_graph

DIAMOND = FamilySpec.diamond()


@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


# -- branching solver -------------------------------------------------------------

def test_branching_diamond():
    sol = solve_branching(Instance(diamond_graph(), 1, DIAMOND))
    assert sol.feasible and len(sol.delete_set) == 1
    h = diamond_graph()
    h.remove_edge(*next(iter(sol.delete_set)))
    assert is_family_free(h, DIAMOND)


def test_branching_diamond_budget_zero():
    assert not solve_branching(Instance(diamond_graph(), 0, DIAMOND)).feasible


def test_branching_k4_free_at_zero():
    sol = solve_branching(Instance(complete_graph(4), 0, DIAMOND))
    assert sol.feasible and sol.delete_set == frozenset()


def test_branching_negative_budget():
    assert not solve_branching(Instance(cycle_graph(4), -1, DIAMOND)).feasible


def test_branching_packing_bound_agrees():
    for k in range(0, 4):
        plain = solve_branching(Instance(diamond_graph(), k, DIAMOND))
        pruned = solve_branching(Instance(diamond_graph(), k, DIAMOND),
                                 use_packing_bound=True)
        assert plain.feasible == pruned.feasible


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.integers(0, 3))
def test_branching_agrees_with_oracle(g, k):
    for fam in (DIAMOND, FamilySpec.s_diamond(2), FamilySpec.diamond_kt(4)):
        minimum = brute_force_min_deletion(g, fam, 3)
        sol = solve_branching(Instance(g.copy(), k, fam))
        assert sol.feasible == (minimum is not None and minimum <= k)
        if sol.feasible:
            h = g.copy()
            for e in sol.delete_set:
                h.remove_edge(*e)
            assert is_family_free(h, fam)
            assert len(sol.delete_set) <= k


# -- deletion oracle ---------------------------------------------------------------

def test_min_deletion_examples():
    assert brute_force_min_deletion(diamond_graph(), DIAMOND, 2) == 1
    assert brute_force_min_deletion(cycle_graph(4), DIAMOND, 0) == 0
    two = Graph.from_edges(8, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3),
                               (4, 5), (4, 6), (5, 6), (5, 7), (6, 7)])
    assert brute_force_min_deletion(two, DIAMOND, 1) is None
    assert brute_force_min_deletion(two, DIAMOND, 2) == 2


def test_min_deletion_monotone_feasibility():
    g = complete_graph(5)
    results = [brute_force_min_deletion(g, DIAMOND, k) is not None for k in range(5)]
    assert results == sorted(results)


def test_guard_refuses_oversized():
    g = complete_graph(9)
    with pytest.raises(GuardError):
        brute_force_min_deletion(g, DIAMOND, 3, cap=10)


def test_guard_env_override(monkeypatch):
    monkeypatch.setenv("DIAMOND_KERNEL_ORACLE_CAP", "10")
    with pytest.raises(GuardError):
        brute_force_min_deletion(complete_graph(9), DIAMOND, 3)
    monkeypatch.setenv("DIAMOND_KERNEL_ORACLE_CAP", "10000000")
    assert brute_force_min_deletion(complete_graph(5), DIAMOND, 3) is not None


# -- editing oracle -----------------------------------------------------------------

def test_min_editing_diamond():
    # delete the middle edge or add the missing pair
    assert brute_force_min_editing(diamond_graph(), DIAMOND, 1) == 1


def test_min_editing_free_graph():
    assert brute_force_min_editing(cycle_graph(4), DIAMOND, 0) == 0


def test_editing_solution_sets():
    sol = brute_force_editing_solution(diamond_graph(), DIAMOND, 1)
    assert sol.feasible
    toggles = set(sol.delete_set) | set(sol.add_set)
    assert len(toggles) == 1
    h = diamond_graph()
    for e in sol.delete_set:
        h.remove_edge(*e)
    for e in sol.add_set:
        h.add_edge(*e)
    assert is_family_free(h, DIAMOND)


@settings(max_examples=40, deadline=None)
@given(small_graphs(6), st.integers(0, 2))
def test_editing_oracle_matches_search(g, k):
    minimum = brute_force_min_editing(g, DIAMOND, k)
    assert (minimum is not None) == editing_feasible(g, DIAMOND, k)


@settings(max_examples=40, deadline=None)
@given(small_graphs(7), st.integers(0, 3))
def test_editing_never_worse_than_deletion(g, k):
    deletion = brute_force_min_deletion(g, DIAMOND, k)
    editing = brute_force_min_editing(g, DIAMOND, k)
    if deletion is not None:
        assert editing is not None and editing <= deletion


# -- vertex deletion oracle ------------------------------------------------------------

def test_vertex_cover_examples():
    assert brute_force_vertex_deletion(Graph.from_edges(2, [(0, 1)]), "vertex-cover", 1) == 1
    assert brute_force_vertex_deletion(path_graph(4), "vertex-cover", 2) == 2
    assert brute_force_vertex_deletion(path_graph(4), "vertex-cover", 1) is None


def test_star_mode_examples():
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert brute_force_vertex_deletion(star, "star", 1, s=3) == 1
    assert brute_force_vertex_deletion(star, "star", 0, s=3) is None
    assert brute_force_vertex_deletion(star, "star", 0, s=4) == 0


def test_vertex_deletion_argument_validation():
    with pytest.raises(ValueError):
        brute_force_vertex_deletion(path_graph(2), "coloring", 1)
    with pytest.raises(ValueError):
        brute_force_vertex_deletion(path_graph(2), "star", 1)
