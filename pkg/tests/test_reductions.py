from collections import Counter
from math import comb

import pytest

from reconkit.canon import are_isomorphic, certificate
from reconkit.deck import Deck, build_deck, deck_to_text
from reconkit.deciders import legit_vertex, subdeck_check
from reconkit.errors import InputError
from reconkit.graph import (
    Graph,
    complete_graph,
    edge_connectivity,
    empty_graph,
    enumerate_graphs,
    is_connected,
    line_graph,
    path_graph,
    union,
)
from reconkit.reductions import (
    gi_to_kedc,
    gi_to_kled,
    gi_to_klvd,
    gi_to_led,
    gi_to_lvd,
    kedc_to_kvdc,
    verify_reduction,
)

K3 = complete_graph(3)
P3 = path_graph(3)
STAR = Graph(4, [(0, 1), (0, 2), (0, 3)])


def test_gi_to_lvd_forced_multiset():
    deck = gi_to_lvd(K3, K3, 1)
    profile = Counter(deck.certs)
    assert profile[certificate(union([K3, empty_graph(1)]))] == 2
    assert profile[certificate(union([complete_graph(2), empty_graph(2)]))] == 3
    assert len(deck) == 5


def test_gi_to_lvd_decisions():
    assert legit_vertex(gi_to_lvd(K3, K3, 1), 1, "pure")
    assert not legit_vertex(gi_to_lvd(K3, P3, 1), 1, "pure")


def test_gi_to_led_card_count():
    for c in (1, 2):
        g, h = path_graph(4), path_graph(4)
        deck = gi_to_led(g, h, c)
        ell = 5
        assert len(deck) == comb(g.m + c + comb(ell, 2), c)


def test_gi_to_kedc_shape():
    g, deck = gi_to_kedc(K3, P3, 1, 2)
    assert len(deck) == 2
    assert g.n == 3 + 2
    assert subdeck_check(*gi_to_kedc(K3, K3, 1, 2), 1)
    assert not subdeck_check(g, deck, 1)


def test_gi_to_klvd_shape():
    deck = gi_to_klvd(K3, P3, 1, 2)
    ell = 3 + 2
    assert deck.uniform_order() == 2 * ell + 2 * 1 + 3
    assert len(deck) == 2


def test_gi_to_kled_edge_counts():
    deck = gi_to_kled(K3, K3, 2, 3)
    ell = 3 + 3
    want = 3 + comb(ell, 2) + comb(ell + 1, 2) - 2
    assert all(card.m == want for card in deck.cards)
    assert len(deck) == 3


def test_kedc_to_kvdc_instance():
    cards = Deck("edge", [P3])
    image_graph, image_deck = kedc_to_kvdc(K3, cards, 1)
    # P3 is an edge-card of K3, so the transferred instance answers yes
    assert subdeck_check(image_graph, image_deck, 1)
    assert image_deck.kind == "vertex"
    # hat order is 2n+2 = 8; its line graph has one vertex per hat edge
    hat_edges = K3.m + comb(4, 2) + 3 * 5
    assert image_graph.n == hat_edges


def test_kedc_to_kvdc_transfer_preserves_membership():
    report = verify_reduction("kedc_to_kvdc", 3, 1, 2)
    assert report.ok and report.checked > 0


def test_line_graph_bridge_under_high_connectivity():
    # with edge connectivity above c and connected same-order cards, edge
    # subdeck membership transfers to the line graphs verbatim
    for g in (complete_graph(4), complete_graph(5)):
        assert edge_connectivity(g) > 1
        cards_pool = [c for c in build_deck(g, "edge", 1).cards if is_connected(c)]
        non_card = Graph(g.n, list(complete_graph(g.n).edges)[: g.m - 1])
        for card in cards_pool[:2] + [non_card]:
            source = subdeck_check(g, Deck("edge", [card]), 1)
            image = subdeck_check(
                line_graph(g), Deck("vertex", [line_graph(card)]), 1
            )
            assert source == image


def test_determinism_byte_identical():
    a = deck_to_text(gi_to_kled(K3, P3, 1, 2), c=1)
    b = deck_to_text(gi_to_kled(K3, P3, 1, 2), c=1)
    assert a == b
    g1, d1 = gi_to_kedc(K3, P3, 2, 3)
    g2, d2 = gi_to_kedc(K3, P3, 2, 3)
    assert g1 == g2 and deck_to_text(d1, c=2) == deck_to_text(d2, c=2)


def test_precondition_errors():
    with pytest.raises(InputError):
        gi_to_lvd(K3, complete_graph(4), 1)  # unequal orders
    with pytest.raises(InputError):
        gi_to_lvd(complete_graph(2), complete_graph(2), 1)  # order < 3
    with pytest.raises(InputError):
        gi_to_lvd(union([K3, empty_graph(1)]), complete_graph(4), 1)  # disconnected
    with pytest.raises(InputError):
        gi_to_led(K3, K3, 3)  # needs n > max(c, 2)
    with pytest.raises(InputError):
        gi_to_klvd(K3, K3, 3, 2)  # needs n > c
    with pytest.raises(InputError):
        gi_to_kedc(K3, K3, 1, 1)  # k >= 2
    with pytest.raises(InputError):
        kedc_to_kvdc(K3, Deck("edge", [complete_graph(4)]), 1)  # order mismatch
    with pytest.raises(InputError):
        verify_reduction("gi_to_lvd", 6, 1)  # sweep cap
    with pytest.raises(InputError):
        verify_reduction("nonsense", 4, 1)


def test_small_iff_sweeps():
    for kind, k in (
        ("gi_to_lvd", None),
        ("gi_to_led", None),
        ("gi_to_kedc", 2),
        ("gi_to_klvd", 2),
        ("gi_to_kled", 2),
    ):
        report = verify_reduction(kind, 3, 1, k)
        assert report.ok, report.violations
        assert report.checked > 0


def test_klvd_capacity_cells_are_reported():
    report = verify_reduction("gi_to_klvd", 3, 2, 3)
    assert report.ok
    assert report.checked == 0
    assert report.skipped  # raw enumeration over the guard, no k=2 fallback


def test_whitney_separation_on_connected_graphs():
    for n in (4, 5):
        conn = [g for g in enumerate_graphs(n) if is_connected(g)]
        certs = [certificate(line_graph(g)) for g in conn]
        assert len(set(certs)) == len(certs)
    assert are_isomorphic(line_graph(K3), line_graph(STAR))
