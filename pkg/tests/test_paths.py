import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from taxsim import Taxonomy, ancestors_of, is_ancestor, lcs, path_info, path_len, penalized_len
from taxsim.paths import PathInfo, path_infos_from, penalized_lengths_from

from oracles import enumerate_walk_costs, random_dag_edges, random_tree_edges, undirected_distance


def _ids(tax, *labels):
    return [tax.id(x) for x in labels]


def test_lcs_examples(univ):
    assert univ.label(lcs(univ, "Person", "PostDoc")) == "Person"
    assert univ.label(lcs(univ, "PostDoc", "AdministrativeStaff")) == "Employee"
    assert univ.label(lcs(univ, "Person", "Schedule")) == "Thing"
    for c in range(len(univ)):
        assert lcs(univ, c, c) == c


def test_path_len_examples(univ):
    assert path_len(univ, "PostDoc", "AdministrativeStaff") == 3
    assert path_len(univ, "Person", "PostDoc") == 3
    assert path_len(univ, "Dean", "Dean") == 0


def test_penalized_len_examples(univ):
    assert penalized_len(univ, "PostDoc", "AdministrativeStaff") == 4
    assert penalized_len(univ, "PostDoc", "Person") == 3
    assert penalized_len(univ, "VisitingProfessor", "SystemStaff") == 6
    assert penalized_len(univ, "Chair", "Chair") == 0


def test_penalized_len_matches_enumeration_on_univ(univ):
    for src in range(len(univ)):
        oracle = enumerate_walk_costs(
            [(univ.label(c), univ.label(p)) for c, p in univ.edges], univ.label(src))
        got = penalized_lengths_from(univ, src)
        assert got == [oracle[univ.label(c)] for c in range(len(univ))]


def test_path_info_examples(univ):
    person, postdoc, admin, employee = _ids(univ, "Person", "PostDoc", "AdministrativeStaff", "Employee")
    assert path_info(univ, "Person", "PostDoc") == PathInfo(
        c1=person, c2=postdoc, lcs=person, n=1, n1=1, n2=4, raw_l=3, effective_l=0, path_len=3)
    assert path_info(univ, "PostDoc", "AdministrativeStaff") == PathInfo(
        c1=postdoc, c2=admin, lcs=employee, n=2, n1=4, n2=3, raw_l=4, effective_l=4, path_len=3)
    dean = univ.id("Dean")
    assert path_info(univ, dean, dean) == PathInfo(
        c1=dean, c2=dean, lcs=dean, n=5, n1=5, n2=5, raw_l=0, effective_l=0, path_len=0)


def test_path_infos_from_agrees(univ):
    for c1 in range(len(univ)):
        assert path_infos_from(univ, c1) == [path_info(univ, c1, c2) for c2 in range(len(univ))]


def _check_pair(tax, edges, costs, c1, c2, tree):
    a = tax.labels
    info = path_info(tax, c1, c2)
    rev = path_info(tax, c2, c1)
    assert (rev.lcs, rev.n, rev.raw_l, rev.effective_l, rev.path_len) == \
        (info.lcs, info.n, info.raw_l, info.effective_l, info.path_len)
    assert (rev.n1, rev.n2) == (info.n2, info.n1)

    assert info.raw_l == costs[a[c1]][a[c2]]
    assert (info.raw_l == 0) == (c1 == c2)
    assert info.n <= min(info.n1, info.n2)
    related = is_ancestor(tax, c1, c2) or is_ancestor(tax, c2, c1)
    assert info.effective_l == (0 if related else info.raw_l)
    assert info.raw_l >= undirected_distance(edges, a[c1], a[c2])

    common = ancestors_of(tax, c1) & ancestors_of(tax, c2)
    assert info.lcs in common
    if tree:
        deepest = max(tax.depth[x] for x in common)
        assert tax.depth[info.lcs] == deepest
        assert info.path_len == info.n1 + info.n2 - 2 * info.n
        assert info.raw_l >= abs(info.n1 - info.n2)
        assert info.raw_l == info.path_len + (0 if related else 1)
    else:
        # no other common ancestor sits strictly below the chosen subsumer
        assert not any(info.lcs in ancestors_of(tax, x) for x in common if x != info.lcs)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 11), tree=st.booleans())
def test_pair_invariants(seed, n, tree):
    rng = np.random.default_rng(seed)
    edges = random_tree_edges(rng, n) if tree else random_dag_edges(rng, n)
    tax = Taxonomy.from_edges(edges)
    costs = {x: enumerate_walk_costs(edges, x) for x in tax.labels}
    for c1 in range(n):
        for c2 in range(n):
            _check_pair(tax, edges, costs, c1, c2, tree)


def test_dag_zigzag_beats_common_ancestor_route():
    # c1 and c2 only meet at the root, but a shared grandchild links them cheaply
    edges = [("a1", "r"), ("a2", "a1"), ("x", "a2"),
             ("b1", "r"), ("b2", "b1"), ("z", "b2"),
             ("y", "x"), ("y", "z"), ("c1", "x"), ("c2", "z")]
    tax = Taxonomy.from_edges(edges)
    assert path_len(tax, "c1", "c2") == 8
    # c1 up x, down y, up z, down c2: 4 edges, 3 direction changes
    assert penalized_len(tax, "c1", "c2") == 7
    assert penalized_len(tax, "c1", "c2") == enumerate_walk_costs(edges, "c1")["c2"]


def test_lcs_tie_smallest_id():
    # p and q are both parents of x and y at equal depth
    tax = Taxonomy.from_edges([("x", "p"), ("x", "q"), ("y", "p"), ("y", "q"), ("p", "r"), ("q", "r")])
    assert tax.label(lcs(tax, "x", "y")) == "p"


def test_shortcut_edge_keeps_n_bounded():
    # d hangs both directly under the root and under a deep chain
    tax = Taxonomy.from_edges([("a", "r"), ("b", "a"), ("c", "b"), ("d", "c"), ("d", "r")])
    info = path_info(tax, "d", "c")
    assert tax.label(info.lcs) == "c"
    assert info.n <= min(info.n1, info.n2)
    assert info.effective_l == 0
