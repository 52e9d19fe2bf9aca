import itertools

import pytest
from hypothesis import given

from sombor.degseq import (
    NonRealizable,
    ReducedDegreeSequence,
    SequenceSyntaxError,
    corollary_sequence,
    expand,
    feasible_parameters,
    majorization_chain,
    majorizes,
    parse_sequence,
    reduce,
    validate,
)
from sombor.oracle import all_tree_degree_sequences

from conftest import trees


def test_validate_sorts():
    assert tuple(validate((1, 3, 1, 2, 1))) == (3, 2, 1, 1, 1)


@pytest.mark.parametrize("bad", [(3, 3, 1, 1), (2, 0), (1,), (), (2, 2, 2)])
def test_validate_rejects(bad):
    with pytest.raises(NonRealizable):
        validate(bad)


@pytest.mark.parametrize("n", range(2, 12))
def test_paths_and_degenerate_orders(n):
    assert validate([2] * (n - 2) + [1, 1]).n == n
    assert tuple(validate((0,))) == (0,)


def test_reduce_examples():
    r = reduce((3, 2, 2, 1, 1, 1))
    assert r.internal == (3, 2, 2) and r.leaves == 3
    fig = ReducedDegreeSequence((5, 4, 4, 4, 3, 3, 3, 2))
    assert fig.leaves == 14 and fig.n == 22
    assert tuple(expand(ReducedDegreeSequence(()))) == (1, 1)
    assert reduce((0,)).t == 0 and reduce((1, 1)).t == 0


@given(trees(min_n=2, max_n=16))
def test_expand_reduce_identity(t):
    d = validate(t.degree_sequence())
    assert expand(reduce(d)) == d
    assert reduce(d).internal == tuple(x for x in d if x > 1)


def test_majorizes_examples():
    assert majorizes((2, 2, 2, 2, 1, 1), (3, 2, 2, 1, 1, 1))
    assert not majorizes((3, 2, 2, 1, 1, 1), (2, 2, 2, 2, 1, 1))
    with pytest.raises(ValueError):
        majorizes((1, 1), (2, 1, 1))


@pytest.mark.parametrize("n", range(1, 9))
def test_majorization_is_partial_order(n):
    seqs = list(all_tree_degree_sequences(n))
    for a in seqs:
        assert majorizes(a, a)
    for a, b in itertools.product(seqs, repeat=2):
        if a != b and majorizes(a, b):
            assert not majorizes(b, a)
    for a, b, c in itertools.product(seqs, repeat=3):
        if majorizes(a, b) and majorizes(b, c):
            assert majorizes(a, c)


def _step_ok(a, b):
    diff = [(i, y - x) for i, (x, y) in enumerate(zip(a, b)) if x != y]
    return len(diff) == 2 and diff[0][1] == 1 and diff[1][1] == -1 and diff[0][0] < diff[1][0]


def test_chain_examples():
    chain = majorization_chain((2, 2, 2, 2, 1, 1), (3, 3, 1, 1, 1, 1))
    assert (3, 2, 2, 1, 1, 1) in chain
    assert majorization_chain((3, 2, 1, 1, 1), (3, 2, 1, 1, 1)) == [(3, 2, 1, 1, 1)]
    long = majorization_chain((2, 2, 2, 2, 1, 1), (5, 1, 1, 1, 1, 1))
    assert [tuple(c) for c in long] == [
        (2, 2, 2, 2, 1, 1),
        (3, 2, 2, 1, 1, 1),
        (3, 3, 1, 1, 1, 1),
        (4, 2, 1, 1, 1, 1),
        (5, 1, 1, 1, 1, 1),
    ]


def test_chain_rejects_incomparable():
    with pytest.raises(ValueError):
        majorization_chain((5, 1, 1, 1, 1, 1), (2, 2, 2, 2, 1, 1))


@pytest.mark.parametrize("n", range(2, 10))
def test_every_chain_is_valid(n):
    seqs = list(all_tree_degree_sequences(n))
    for a, b in itertools.product(seqs, repeat=2):
        if not majorizes(a, b):
            continue
        chain = majorization_chain(a, b)
        assert chain[0] == a and chain[-1] == b
        for x, y in zip(chain, chain[1:]):
            validate(y)
            assert _step_ok(x, y) and majorizes(x, y) and majorizes(y, b)


def test_corollary_examples():
    assert tuple(corollary_sequence("leaves", 8, 4)) == (4, 2, 2, 2, 1, 1, 1, 1)
    assert tuple(corollary_sequence("diameter", 8, 4)) == (5, 2, 2, 1, 1, 1, 1, 1)
    assert tuple(corollary_sequence("branching", 10, 2)) == (3, 3, 2, 2, 2, 2, 1, 1, 1, 1)
    assert tuple(corollary_sequence("star", 6)) == (5, 1, 1, 1, 1, 1)


def test_max_degree_sequence_solves_the_handshake():
    # Brute force: among sequences (D,...,D, x, 1,...,1) with 1 <= x <= D, exactly one is realizable.
    for n in range(3, 12):
        for delta in range(2, n):
            found = []
            for q in range(0, n):
                for x in range(1, delta + 1):
                    seq = [delta] * q + [x] + [1] * (n - q - 1)
                    if len(seq) == n and sum(seq) == 2 * (n - 1):
                        found.append(tuple(sorted(seq, reverse=True)))
            assert tuple(corollary_sequence("max_degree", n, delta)) in found
            assert len(set(found)) == 1
    assert tuple(corollary_sequence("max-degree", 8, 3)) == (3, 3, 3, 1, 1, 1, 1, 1)


@pytest.mark.parametrize(
    "kind,n,param",
    [("leaves", 8, 8), ("leaves", 8, 1), ("diameter", 8, 8), ("branching", 8, 4), ("max_degree", 5, 5)],
)
def test_corollary_infeasible(kind, n, param):
    with pytest.raises(NonRealizable):
        corollary_sequence(kind, n, param)


@pytest.mark.parametrize("kind", ["max_degree", "leaves", "diameter", "branching", "star"])
def test_corollary_outputs_validate(kind):
    for n in range(3, 14):
        for p in feasible_parameters(kind, n):
            assert corollary_sequence(kind, n, p).n == n


def test_parse_sequence_shorthand():
    assert parse_sequence("3^2,2,1^3") == [3, 3, 2, 1, 1, 1]
    assert parse_sequence("3,2,2,1,1,1") == [3, 2, 2, 1, 1, 1]
    with pytest.raises(SequenceSyntaxError):
        parse_sequence("3,a")
