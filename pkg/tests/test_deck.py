import random
from collections import Counter
from math import comb

import pytest

from reconkit.canon import are_isomorphic, certificate
from reconkit.deck import (
    Deck,
    build_deck,
    deck_equal,
    deck_from_text,
    deck_to_text,
    endvertex_deck,
    subdeck_contained,
)
from reconkit.errors import InputError
from reconkit.graph import (
    complete_graph,
    copies,
    empty_graph,
    enumerate_graphs,
    line_graph,
    path_graph,
    permute,
    union,
)

K2K1 = union([complete_graph(2), empty_graph(1)])


def test_build_deck_examples():
    d = build_deck(complete_graph(3), "vertex", 1)
    assert len(d) == 3
    assert all(are_isomorphic(c, complete_graph(2)) for c in d.cards)

    d = build_deck(path_graph(4), "vertex", 1)
    profile = Counter(d.certs)
    assert profile[certificate(path_graph(3))] == 2
    assert profile[certificate(K2K1)] == 2

    d = build_deck(complete_graph(3), "edge", 1)
    assert len(d) == 3
    assert all(are_isomorphic(c, path_graph(3)) for c in d.cards)


def test_build_deck_counts():
    for n in range(0, 6):
        for g in enumerate_graphs(n):
            for c in range(0, g.n + 1):
                assert len(build_deck(g, "vertex", c)) == comb(g.n, c)
    with pytest.raises(InputError):
        build_deck(complete_graph(3), "vertex", 4)
    with pytest.raises(InputError):
        build_deck(path_graph(3), "edge", 3)


def test_endvertex_deck():
    d = endvertex_deck(path_graph(3))
    assert len(d) == 2
    assert all(are_isomorphic(c, complete_graph(2)) for c in d.cards)
    assert len(endvertex_deck(complete_graph(3))) == 0
    d = endvertex_deck(path_graph(4))
    assert len(d) == 2
    assert all(are_isomorphic(c, path_graph(3)) for c in d.cards)


def test_deck_equal():
    d1 = Deck("vertex", [K2K1, path_graph(3)])
    d2 = Deck("vertex", [path_graph(3), K2K1])
    assert deck_equal(d1, d2)
    assert not deck_equal(
        Deck("vertex", [complete_graph(2)] * 2),
        Deck("vertex", [complete_graph(2), empty_graph(2)]),
    )
    assert not deck_equal(
        Deck("vertex", [complete_graph(2)]),
        Deck("vertex", [complete_graph(2)] * 2),
    )
    with pytest.raises(InputError):
        deck_equal(Deck("vertex", []), Deck("edge", []))


def test_deck_equal_reflexive_symmetric_isomorph_invariant():
    rng = random.Random(5)
    for g in enumerate_graphs(5)[::4]:
        d = build_deck(g, "vertex", 1)
        assert deck_equal(d, d)
        # replace each card by a random isomorph
        shuffled = []
        for card in d.cards:
            perm = list(range(card.n))
            rng.shuffle(perm)
            shuffled.append(permute(card, perm))
        rng.shuffle(shuffled)
        d2 = Deck("vertex", shuffled)
        assert deck_equal(d, d2) and deck_equal(d2, d)


def test_subdeck_contained():
    big = Deck("vertex", [complete_graph(2), complete_graph(2), empty_graph(2)])
    assert subdeck_contained(Deck("vertex", [complete_graph(2)]), big)
    assert subdeck_contained(Deck("vertex", []), big)
    two_k2 = copies(complete_graph(2), 2)
    assert not subdeck_contained(
        Deck("vertex", [complete_graph(2)] * 3),
        build_deck(two_k2, "vertex", 1),
    )
    with pytest.raises(InputError):
        subdeck_contained(Deck("edge", []), Deck("vertex", []))


def test_subdeck_transitive():
    rng = random.Random(17)
    for g in enumerate_graphs(5)[::5]:
        full = build_deck(g, "vertex", 1)
        mid_cards = rng.sample(full.cards, 3)
        small_cards = rng.sample(mid_cards, 2)
        mid = Deck("vertex", mid_cards)
        small = Deck("vertex", small_cards)
        assert subdeck_contained(small, mid)
        assert subdeck_contained(mid, full)
        assert subdeck_contained(small, full)


def test_line_graph_deck_identity_small():
    for n in range(0, 5):
        for g in enumerate_graphs(n):
            for c in (1, 2):
                if c > g.m:
                    continue
                mapped = Deck(
                    "vertex", [line_graph(x) for x in build_deck(g, "edge", c).cards]
                )
                assert deck_equal(mapped, build_deck(line_graph(g), "vertex", c))


def test_cards_sorted_by_certificate():
    d = build_deck(path_graph(4), "vertex", 1)
    assert list(d.certs) == sorted(d.certs)


def test_deck_file_roundtrip():
    d = build_deck(path_graph(4), "vertex", 1)
    text = deck_to_text(d, c=1, comments=["anything goes"])
    back, c = deck_from_text(text)
    assert c == 1
    assert back.kind == "vertex"
    assert deck_equal(back, d)
    # kind override beats metadata
    forced, _ = deck_from_text(text, kind="edge")
    assert forced.kind == "edge"


def test_deck_file_errors_name_line():
    with pytest.raises(InputError) as err:
        deck_from_text("Bw\nB$$\n", source="cards.g6")
    assert "cards.g6:2" in str(err.value)


def test_deck_file_comments_ignored():
    text = "# kind=edge c=2\n# a comment\n\nBw\n"
    d, c = deck_from_text(text)
    assert d.kind == "edge" and c == 2 and len(d) == 1


def test_uniformity_helpers():
    mixed = Deck("vertex", [complete_graph(3), complete_graph(2)])
    assert mixed.uniform_order() is None
    assert Deck("vertex", [complete_graph(3)] * 2).uniform_order() == 3
    assert Deck("edge", [path_graph(3), complete_graph(3)]).uniform_edges() is None
