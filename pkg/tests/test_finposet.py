from __future__ import annotations

import itertools

import pytest

from conftest import lub_oracle, naive_directed_subsets

from dcpolab.cli import generate_corpus
from dcpolab.errors import (
    CycleDetected,
    DuplicateElement,
    NotDirected,
    NotMonotone,
    ShapeMismatch,
    UnknownElement,
)
from dcpolab.finposet import (
    EpPair,
    FinPoset,
    MonoMap,
    closure_from_covers,
    directed_sup,
    is_directed,
    is_scott_continuous,
    mono_compose,
    scott_continuity_of_graph,
    subposet,
    upper_bounds_mask,
    validate_ep_pair,
)


def test_closure_singleton():
    p = closure_from_covers(("a",), [])
    assert p.le("a", "a")
    assert p.n == 1


def test_closure_two_chain():
    p = closure_from_covers(("a", "b"), [("a", "b")])
    assert p.le("a", "b") and not p.le("b", "a")


def test_closure_cycle_rejected():
    with pytest.raises(CycleDetected):
        closure_from_covers(("a", "b"), [("a", "b"), ("b", "a")])


def test_closure_duplicate_rejected():
    with pytest.raises(DuplicateElement):
        closure_from_covers(("a", "a"), [])


def test_closure_unknown_cover_endpoint():
    with pytest.raises(UnknownElement):
        closure_from_covers(("a",), [("a", "zzz")])


def test_transitive_closure_through_chain():
    p = closure_from_covers(("a", "b", "c"), [("a", "b"), ("b", "c")])
    assert p.le("a", "c")
    assert p.covers() == [("a", "b"), ("b", "c")]


def test_is_directed_empty_false(diamond):
    assert not is_directed(diamond, [])


def test_is_directed_chain_subsets(diamond):
    assert is_directed(diamond, ["bot", "a", "top"])
    assert is_directed(diamond, ["bot"])


def test_is_directed_antichain_false(diamond):
    assert not is_directed(diamond, ["a", "b"])


def test_is_directed_unknown_element(diamond):
    with pytest.raises(UnknownElement):
        is_directed(diamond, ["nope"])


def test_directed_sup_singleton(diamond):
    assert directed_sup(diamond, ["a"]) == "a"


def test_directed_sup_chain_in_diamond(diamond):
    assert directed_sup(diamond, ["bot", "a", "top"]) == "top"


def test_directed_sup_not_directed(diamond):
    with pytest.raises(NotDirected):
        directed_sup(diamond, ["a", "b"])


def test_directed_sup_matches_lub_oracle_on_corpus():
    # every directed subset has a greatest element equal to the brute-force lub
    for poset in generate_corpus(5, 500, 7):
        for sub in naive_directed_subsets(poset):
            assert directed_sup(poset, sub) == lub_oracle(poset, sub)


def test_directed_table_agrees_with_naive(small_corpus):
    for poset in small_corpus:
        dmasks, sups = poset.directed_table
        got = {poset.names_of(int(m)) for m in dmasks}
        assert got == set(naive_directed_subsets(poset))
        for m, s in zip(dmasks.tolist(), sups.tolist()):
            assert lub_oracle(poset, poset.names_of(m)) == poset.elements[s]


def test_upper_bounds_mask(diamond):
    mask = upper_bounds_mask(diamond, ["a", "b"])
    assert diamond.names_of(mask) == ("top",)


def test_monomap_requires_monotone(two_chain):
    with pytest.raises(NotMonotone):
        MonoMap.from_mapping(two_chain, two_chain, {"bot": "top", "top": "bot"})


def test_monomap_requires_total(two_chain):
    with pytest.raises(ShapeMismatch):
        MonoMap(two_chain, two_chain, (0,))


def test_scott_continuous_identity_and_constant(diamond):
    assert is_scott_continuous(MonoMap.identity(diamond))
    const = MonoMap.from_mapping(diamond, diamond, lambda _x: "a")
    assert is_scott_continuous(const)


def test_scott_continuity_equals_monotonicity_exhaustively(small_corpus):
    # on finite posets continuity and monotonicity coincide; check all self-maps
    def naive_monotone(poset, graph):
        return all(
            poset.leq[i, j] <= poset.leq[graph[i], graph[j]]
            for i in range(poset.n)
            for j in range(poset.n)
        )

    for poset in small_corpus[:12]:
        for graph in itertools.product(range(poset.n), repeat=poset.n):
            assert scott_continuity_of_graph(poset, poset, graph) == naive_monotone(
                poset, graph
            )


def test_validate_ep_pair_identity(diamond):
    ident = MonoMap.identity(diamond)
    assert validate_ep_pair(EpPair(embed=ident, project=ident))


def test_validate_ep_pair_point_into_chain(two_chain):
    point = closure_from_covers(("bot",), [])
    embed = MonoMap.from_mapping(point, two_chain, {"bot": "bot"})
    project = MonoMap.from_mapping(two_chain, point, {"bot": "bot", "top": "bot"})
    assert validate_ep_pair(EpPair(embed=embed, project=project))


def test_validate_ep_pair_non_injective_embed_fails(two_chain):
    point = closure_from_covers(("p",), [])
    collapse = MonoMap.from_mapping(two_chain, point, {"bot": "p", "top": "p"})
    include = MonoMap.from_mapping(point, two_chain, {"p": "bot"})
    assert not validate_ep_pair(EpPair(embed=collapse, project=include))


def test_validate_ep_pair_shape_mismatch(two_chain, diamond):
    with pytest.raises(ShapeMismatch):
        validate_ep_pair(
            EpPair(embed=MonoMap.identity(two_chain), project=MonoMap.identity(diamond))
        )


def test_mono_compose(two_chain, diamond):
    up = MonoMap.from_mapping(two_chain, diamond, {"bot": "bot", "top": "top"})
    down = MonoMap.from_mapping(diamond, two_chain, {"bot": "bot", "a": "bot", "b": "bot", "top": "top"})
    both = mono_compose(down, up)
    assert both.graph == MonoMap.identity(two_chain).graph


def test_subposet(diamond):
    sub = subposet(diamond, ["bot", "top"])
    assert sub.elements == ("bot", "top")
    assert sub.le("bot", "top")


def test_poset_immutable(diamond):
    with pytest.raises(ValueError):
        diamond.leq[0, 0] = False


def test_valid_ep_pair_embed_injective_and_order_reflecting():
    from dcpolab.cli import generate_ep_corpus

    for pair in generate_ep_corpus(77, 20, 5):
        assert validate_ep_pair(pair)
        e = pair.embed
        assert len(set(e.graph)) == len(e.graph)
        for x in e.source.elements:
            for y in e.source.elements:
                if e.target.le(e.apply(x), e.apply(y)):
                    assert e.source.le(x, y)


def test_corpus_posets_validate():
    for poset in generate_corpus(0, 50, 7):
        assert 2 <= poset.n <= 7
        assert FinPoset(poset.elements, poset.leq) == poset
    a = generate_corpus(42, 10, 6)
    b = generate_corpus(42, 10, 6)
    assert all(x == y for x, y in zip(a, b))
