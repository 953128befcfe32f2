import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgebetti.graph import (
    FormatError,
    Graph,
    canonical_form,
    complement,
    complete_graph,
    count_induced_matchings,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_graphs,
    enumerate_matchings,
    induced_subgraph,
    is_isomorphic,
    members,
    parse_edge_list,
    parse_graph6,
    path_graph,
    read_graph6_lines,
    to_edge_list,
    to_graph6,
)

from conftest import graphs


def graph6_by_hand(n, edges):
    """Straight from the format definition: chr(63+n), then the upper triangle
    column by column as a bit string, cut into 6-bit groups offset by 63."""
    bits = "".join("1" if (i, j) in edges else "0" for j in range(n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return chr(63 + n) + "".join(chr(63 + int(bits[k : k + 6], 2)) for k in range(0, len(bits), 6))


# --- graph6 -------------------------------------------------------------------


def test_k2_graph6():
    assert graph6_by_hand(2, {(0, 1)}) == "A_"
    g = parse_graph6("A_")
    assert g.n == 2 and g.edges() == [(0, 1)]
    assert to_graph6(complete_graph(2)) == "A_"


def test_small_edge_cases():
    assert parse_graph6("@") == empty_graph(1)
    assert to_graph6(empty_graph(0)) == "?"
    assert parse_graph6("?") == empty_graph(0)
    assert parse_graph6(">>graph6<<A_") == complete_graph(2)


@given(graphs(max_n=12))
def test_to_graph6_matches_hand_encoding(g):
    assert to_graph6(g) == graph6_by_hand(g.n, set(g.edges()))


def test_graph6_agrees_with_networkx():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(0, 32)
        g = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.3])
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        assert nx.to_graph6_bytes(h, header=False).decode().strip() == to_graph6(g)


def test_round_trip_random_strings():
    rng = random.Random(2024)
    for _ in range(1000):
        n = rng.randint(0, 32)
        nbits = n * (n - 1) // 2
        bits = [rng.getrandbits(1) for _ in range(nbits)] + [0] * (-nbits % 6)
        s = chr(63 + n) + "".join(
            chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
        )
        assert to_graph6(parse_graph6(s)) == s


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("\x20", 0),  # header below '?'
        ("D", 1),  # n=5 needs 2 data bytes
        ("Dhcx", 3),  # trailing garbage
        ("A`", 1),  # nonzero padding
        ("B\x7f", 1),  # data byte out of range
    ],
)
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(FormatError) as info:
        parse_graph6(text)
    assert info.value.offset == offset


def test_graph6_rejects_too_many_vertices():
    with pytest.raises(FormatError):
        parse_graph6(chr(63 + 33) + "?" * 88)


def test_read_lines_skips_comments():
    lines = [">comment", "", "A_", "Dhc"]
    assert list(read_graph6_lines(lines)) == [complete_graph(2), cycle_graph(5)]


# --- edge lists -------------------------------------------------------------------


def test_edge_list_c5():
    assert parse_edge_list("5\n0 1\n1 2\n2 3\n3 4\n4 0\n") == cycle_graph(5)


def test_edge_list_collapses_duplicates():
    assert parse_edge_list("2\n0 1\n0 1\n") == complete_graph(2)


@pytest.mark.parametrize("text", ["3\n0 3\n", "3\n1 1\n", "3\n0\n", "", "x 1"])
def test_edge_list_errors(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g


# --- structure --------------------------------------------------------------------


def test_graph_invariants_enforced():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(ValueError):
        Graph(1, (0b10,))  # bit beyond n


def test_induced_subgraph_examples():
    assert induced_subgraph(cycle_graph(5), 0b01111) == path_graph(4)
    g = cycle_graph(5)
    assert induced_subgraph(g, g.full_set) == g
    for w in itertools.combinations(range(4), 3):
        assert induced_subgraph(complete_graph(4), sum(1 << v for v in w)) == complete_graph(3)


@given(graphs(), st.integers(0, 127))
def test_induced_subgraph_edge_count(g, w):
    w &= g.full_set
    inside = sum(1 for u, v in g.edges() if w >> u & 1 and w >> v & 1)
    assert induced_subgraph(g, w).num_edges == inside


def test_complement_examples():
    assert complement(complete_graph(3)) == empty_graph(3)
    assert is_isomorphic(complement(cycle_graph(5)), cycle_graph(5))


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


# --- matchings -------------------------------------------------------------------------


def brute_matchings(g, r):
    return [c for c in itertools.combinations(g.edges(), r) if len({v for e in c for v in e}) == 2 * r]


def brute_induced_matchings(g, a):
    # a vertex set of size 2a whose induced graph is a perfect matching
    count = 0
    for verts in itertools.combinations(range(g.n), 2 * a):
        h = induced_subgraph(g, sum(1 << v for v in verts))
        if h.num_edges == a and all(h.degree(v) == 1 for v in range(h.n)):
            count += 1
    return count


def test_matching_examples():
    c5 = cycle_graph(5)
    assert len(list(enumerate_matchings(c5, 1))) == 5
    assert len(list(enumerate_matchings(c5, 2))) == len(brute_matchings(c5, 2)) == 5
    assert list(enumerate_matchings(complete_graph(2), 2)) == []


def test_induced_matching_examples():
    c5, p4 = cycle_graph(5), path_graph(4)
    two_k2 = disjoint_union(complete_graph(2), complete_graph(2))
    assert count_induced_matchings(c5, 2) == brute_induced_matchings(c5, 2) == 0
    assert count_induced_matchings(two_k2, 2) == 1
    assert count_induced_matchings(p4, 2) == brute_induced_matchings(p4, 2) == 0
    assert count_induced_matchings(p4, 1) == brute_induced_matchings(p4, 1) == 3


@given(graphs(), st.integers(1, 3))
def test_matchings_against_brute_force(g, r):
    found = list(enumerate_matchings(g, r))
    assert len(found) == len(set(found))
    assert sorted(found) == sorted(brute_matchings(g, r))
    assert count_induced_matchings(g, r) == brute_induced_matchings(g, r) <= len(found)


@given(graphs())
def test_one_matchings_are_edges(g):
    assert len(list(enumerate_matchings(g, 1))) == g.num_edges


# --- canonical form and enumeration ---------------------------------------------------------


def test_canonical_form_orbit_of_c5():
    c5 = cycle_graph(5)
    forms = {canonical_form(c5.relabel(p)) for p in itertools.permutations(range(5))}
    assert forms == {canonical_form(c5)}


def test_canonical_form_separates():
    p4 = path_graph(4)
    k3_k1 = disjoint_union(complete_graph(3), empty_graph(1))
    assert canonical_form(p4) != canonical_form(k3_k1)


@settings(max_examples=60)
@given(graphs(max_n=8), st.randoms())
def test_canonical_form_permutation_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@settings(max_examples=60)
@given(graphs(min_n=4, max_n=6), graphs(min_n=4, max_n=6))
def test_canonical_form_matches_networkx(g, h):
    def nxg(x):
        out = nx.Graph()
        out.add_nodes_from(range(x.n))
        out.add_edges_from(x.edges())
        return out

    expected = g.n == h.n and nx.is_isomorphic(nxg(g), nxg(h))
    assert (canonical_form(g) == canonical_form(h)) == expected


def test_canonical_form_size_cap():
    with pytest.raises(ValueError):
        canonical_form(empty_graph(9))


def test_enumeration_counts_match_atlas():
    atlas_counts = [0] * 7
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() <= 6:
            atlas_counts[h.number_of_nodes()] += 1
    ours = [len(list(enumerate_graphs(n))) for n in range(7)]
    assert ours == atlas_counts == [1, 1, 2, 4, 11, 34, 156]


def test_enumeration_small_brute_force():
    # n=3: classes are determined by edge count; n=4 by hand list size
    assert sorted(g.num_edges for g in enumerate_graphs(3)) == [0, 1, 2, 3]
    assert len(list(enumerate_graphs(4))) == 11
    assert list(enumerate_graphs(1)) == [empty_graph(1)]


def test_enumeration_range():
    with pytest.raises(ValueError):
        list(enumerate_graphs(7))


def test_n7_corpus_is_complete(n7_corpus_path):
    with open(n7_corpus_path) as fh:
        corpus = list(read_graph6_lines(fh))
    assert len(corpus) == 1044
    assert all(g.n == 7 for g in corpus)
    assert len({canonical_form(g) for g in corpus}) == 1044


def test_members_round_trip():
    assert members(0b101001) == [0, 3, 5]
