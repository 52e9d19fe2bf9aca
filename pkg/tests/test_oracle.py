import json
import math
from collections import Counter
from functools import lru_cache

import networkx as nx
import pytest

from sombor.degseq import NonRealizable
from sombor.extremal import alt_greedy_tree, greedy_tree
from sombor.graph import Graph, canonical_form, edge_type_multiset, path_graph, spider, star_graph
from sombor.oracle import (
    CapExceeded,
    all_tree_degree_sequences,
    all_trees,
    diameter,
    enumerate_trees,
    extremal_scan,
    graph_certificate,
    labeled_count,
    multiset_permutations,
    prufer_decode,
    round_sig,
    unicyclic_graphs,
    verify,
)
from sombor.transforms import girth


@lru_cache(maxsize=None)
def count_partitions(n, k):
    """Partitions of n into parts of size at most k."""
    if n == 0:
        return 1
    if k == 0:
        return 0
    return count_partitions(n, k - 1) + (count_partitions(n - k, k) if n >= k else 0)


def test_multiset_permutations():
    perms = list(multiset_permutations([1, 0, 0]))
    assert perms == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert len(list(multiset_permutations([0, 0, 1, 1, 2]))) == math.factorial(5) // 4


def test_prufer_decode_matches_networkx():
    for word in ([3, 3, 3, 4], [0, 1, 2], [5, 5, 0, 1]):
        n = len(word) + 2
        ours = sorted(prufer_decode(word, n).edges())
        theirs = sorted(tuple(sorted(e)) for e in nx.from_prufer_sequence(word).edges())
        assert ours == theirs


def test_enumerate_examples():
    two = list(enumerate_trees((3, 2, 2, 1, 1, 1)))
    assert {canonical_form(t) for t in two} == {canonical_form(spider(2, 2, 1)), canonical_form(spider(3, 1, 1))}
    assert len(list(enumerate_trees((5, 1, 1, 1, 1, 1)))) == 1
    assert len(list(enumerate_trees((3, 3, 1, 1, 1, 1)))) == 1
    assert labeled_count((3, 2, 2, 1, 1, 1)) == 12


@pytest.mark.parametrize("n", range(2, 11))
def test_class_counts_against_networkx(n):
    ours = Counter()
    for d in all_tree_degree_sequences(n):
        ours[tuple(d)] = len(list(enumerate_trees(d)))
    theirs = Counter(
        tuple(sorted((x for _, x in t.degree()), reverse=True)) for t in nx.nonisomorphic_trees(n)
    )
    assert ours == theirs
    assert len(all_trees(n)) == sum(theirs.values())


@pytest.mark.parametrize("n", range(1, 16))
def test_sequence_counts(n):
    seqs = list(all_tree_degree_sequences(n))
    assert len(seqs) == len(set(seqs))
    expected = 1 if n == 1 else count_partitions(n - 2, n)
    assert len(seqs) == expected
    if n == 10:
        assert len(seqs) == 22


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        list(enumerate_trees((3, 3, 2, 2, 1, 1, 1, 1), cap=10))
    with pytest.raises(NonRealizable):
        list(enumerate_trees((3, 3, 1, 1)))


def test_scan_examples():
    scan = extremal_scan((3, 2, 2, 1, 1, 1))
    assert scan.tree_count == 2
    assert scan.min_value.value == pytest.approx(2 * math.sqrt(13) + math.sqrt(10) + 2 * math.sqrt(5), abs=1e-12)
    assert scan.argmin == {canonical_form(spider(2, 2, 1))}
    assert scan.argmax == {canonical_form(spider(3, 1, 1))}
    star = extremal_scan((4, 1, 1, 1, 1))
    assert star.min_value.value == star.max_value.value == pytest.approx(4 * math.sqrt(17))
    path = extremal_scan((2, 2, 2, 1, 1))
    assert path.tree_count == 1 and path.argmin == path.argmax


def test_scan_json_is_stable():
    payload = extremal_scan((3, 2, 2, 1, 1, 1)).to_json()
    assert json.loads(json.dumps(payload)) == payload
    assert payload["argmax_count"] == 1 and payload["max"] == round_sig(payload["max"])


@pytest.mark.parametrize("n", range(2, 9))
def test_scan_matches_constructions(n):
    for d in all_tree_degree_sequences(n):
        scan = extremal_scan(d)
        assert edge_type_multiset(greedy_tree(d)) == scan.min_value.edge_types
        assert edge_type_multiset(alt_greedy_tree(d)) == scan.max_value.edge_types


def test_diameter():
    assert diameter(path_graph(7)) == 6
    assert diameter(star_graph(5)) == 2
    assert diameter(Graph(1, ((),))) == 0


@pytest.mark.parametrize("n,count", [(3, 1), (4, 2), (5, 5), (6, 13), (7, 33), (8, 89)])
def test_unicyclic_family_sizes(n, count):
    family = unicyclic_graphs(n)
    assert len(family) == count
    assert all(g.is_unicyclic() for g in family)
    assert len({graph_certificate(g) for g in family}) == count


def test_unicyclic_certificate_agrees_with_networkx():
    family = unicyclic_graphs(7)
    nxs = [nx.Graph(list(g.edges())) for g in family]
    for i in range(len(nxs)):
        for j in range(i + 1, len(nxs)):
            assert not nx.is_isomorphic(nxs[i], nxs[j])
    assert Counter(girth(g) for g in family)[7] == 1


def test_verify_report_shape():
    rep = verify("extremal", n=6)
    out = rep.to_json(meta=False)
    assert out["verdict"] == "pass" and out["instances"] == 5
    assert "elapsed_ms" not in out
    assert "elapsed_ms" in rep.to_json()
    assert json.loads(json.dumps(out)) == out


@pytest.mark.parametrize(
    "theorem,n",
    [("greedy", 8), ("max", 8), ("alter", 7), ("alter2", 7), ("diffdegree", 7), ("rooted", 7),
     ("unicyclic", 7), ("cor_star", 7), ("cor_max_degree", 7), ("cor_leaves", 7),
     ("cor_diameter", 7), ("cor_branching", 7)],
)
def test_verify_passes(theorem, n):
    assert verify(theorem, n=n).passed


def test_verify_sequence_modes():
    rep = verify("alter", seq=(3, 3, 3, 3, 2) + (1,) * 6)
    assert rep.passed and rep.notes["argmax_count"] == 3
    chain = verify("diffdegree", seq=(2, 2, 2, 2, 1, 1), seq2=(5, 1, 1, 1, 1, 1)).notes["chain"]
    values = [c["sombor"] for c in chain]
    assert values == sorted(values) and len(values) == 5
    with pytest.raises(ValueError):
        verify("nonsense", n=4)
    with pytest.raises(ValueError):
        verify("unicyclic", n=2)


def test_parallel_matches_serial():
    a = verify("alter", n=8, jobs=2).to_json(meta=False)
    b = verify("alter", n=8).to_json(meta=False)
    assert a == b


def test_leaves_equality_is_logged():
    notes = verify("cor_leaves", n=7).notes
    assert any(not v["equality_for_all"] for v in notes.values())
    assert all(v["attaining_bound"] >= 1 for v in notes.values())
