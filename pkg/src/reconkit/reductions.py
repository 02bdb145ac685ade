"""Many-one reduction gadgets from isomorphism testing to deck problems.

Each constructor produces the target-problem instance for a pair of
connected graphs; verify_reduction sweeps instance families and checks
that the target decision (via the brute-force deciders) matches
are_isomorphic on the source pair.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, islice
from math import comb
from typing import Callable, Optional

from .canon import are_isomorphic, certificate
from .deck import Deck, build_deck
from .deciders import (
    VERTEX_SEARCH_BITS_CAP,
    legit_edge,
    legit_vertex,
    subdeck_check,
    two_lvd,
)
from .errors import InputError
from .graph import (
    Graph,
    complete_graph,
    copies,
    delete_edges,
    empty_graph,
    enumerate_graphs,
    graph6_encode,
    is_connected,
    join,
    line_graph,
    union,
)
from .runtime import thread_count

REDUCTION_KINDS = (
    "gi_to_lvd",
    "gi_to_led",
    "kedc_to_kvdc",
    "gi_to_kedc",
    "gi_to_klvd",
    "gi_to_kled",
)


def _require_pair(g: Graph, h: Graph, min_order: int, what: str) -> int:
    if g.n != h.n:
        raise InputError(f"{what}: orders differ ({g.n} vs {h.n})")
    if g.n < min_order:
        raise InputError(f"{what}: order must be >= {min_order}, got {g.n}")
    if not is_connected(g) or not is_connected(h):
        raise InputError(f"{what}: both graphs must be connected")
    return g.n


def _remove_one(cards: list[Graph], cert: bytes, what: str) -> list[Graph]:
    for i, card in enumerate(cards):
        if certificate(card) == cert:
            return cards[:i] + cards[i + 1:]
    raise InputError(f"{what}: expected card missing from the deck")


def gi_to_lvd(g: Graph, h: Graph, c: int) -> Deck:
    """Deck whose pure legitimacy (LVD_c) decides g ~ h: the c-deck of
    g plus c+1 isolated vertices, one "g + isolated" card swapped for the
    "h + isolated" card."""
    if c < 1:
        raise InputError(f"deletion count must be >= 1, got {c}")
    n = _require_pair(g, h, 3, "gi_to_lvd")
    big = union([g, empty_graph(c + 1)])
    cards = list(build_deck(big, "vertex", c).cards)
    cards = _remove_one(
        cards, certificate(union([g, empty_graph(1)])), "gi_to_lvd"
    )
    cards.append(union([h, empty_graph(1)]))
    deck = Deck("vertex", cards)
    assert len(deck) == comb(n + c + 1, c)
    return deck


def gi_to_led(g: Graph, h: Graph, c: int) -> Deck:
    """Deck whose pure legitimacy (LED_c) decides g ~ h, built from the
    c-edge-deck of g + c disjoint edges + a large clique."""
    if c < 1:
        raise InputError(f"deletion count must be >= 1, got {c}")
    n = _require_pair(g, h, max(c, 2) + 1, "gi_to_led")
    ell = n + 1
    big = union([g, copies(complete_graph(2), c), complete_graph(ell)])
    cards = list(build_deck(big, "edge", c).cards)
    pad = [empty_graph(2 * c), complete_graph(ell)]
    cards = _remove_one(cards, certificate(union([g] + pad)), "gi_to_led")
    cards.append(union([h] + pad))
    deck = Deck("edge", cards)
    assert len(deck) == comb(g.m + c + comb(ell, 2), c)
    return deck


def _hat(g: Graph) -> Graph:
    # join with (K_{n+1} plus one extra vertex); degrees inside the join
    # part exceed n, which pins the original vertex set in any isomorphism
    return join([g, union([complete_graph(g.n + 1), empty_graph(1)])])


def kedc_to_kvdc(g: Graph, cards: Deck, c: int) -> tuple[Graph, Deck]:
    """Transfer a k-EDC_c instance to a k-VDC_c instance by taking line
    graphs of the hat construction of every graph involved."""
    if c < 1:
        raise InputError(f"deletion count must be >= 1, got {c}")
    if cards.kind != "edge":
        raise InputError(f"kedc_to_kvdc needs edge cards, got {cards.kind!r}")
    if len(cards) == 0:
        raise InputError("kedc_to_kvdc needs at least one card")
    if cards.uniform_order() != g.n:
        raise InputError(
            f"card orders {sorted({x.n for x in cards.cards})} do not all "
            f"match the graph order {g.n}"
        )
    if g.n <= c:
        raise InputError(f"order must exceed c={c}, got {g.n}")
    hat = _hat(g)
    assert hat.n == 2 * g.n + 2
    image = Deck("vertex", [line_graph(_hat(card)) for card in cards.cards])
    return line_graph(hat), image


def gi_to_kedc(g: Graph, h: Graph, c: int, k: int) -> tuple[Graph, Deck]:
    """k-EDC_c instance deciding g ~ h: graph g + c disjoint edges, cards
    "h + 2c isolated" plus k-1 true edge-cards."""
    if c < 1:
        raise InputError(f"deletion count must be >= 1, got {c}")
    if k < 2:
        raise InputError(f"card count must be >= 2, got {k}")
    _require_pair(g, h, 3, "gi_to_kedc")
    base = union([g, copies(complete_graph(2), c)])
    if comb(base.m, c) - 1 < k - 1:
        raise InputError("gi_to_kedc: not enough cards after the removal")
    removed = certificate(union([g, empty_graph(2 * c)]))
    chosen: list[Graph] = []
    skipped = False
    for drop in combinations(base.edges, c):
        card = delete_edges(base, drop)
        if not skipped and certificate(card) == removed:
            skipped = True
            continue
        chosen.append(card)
        if len(chosen) == k - 1:
            break
    deck = Deck("edge", [union([h, empty_graph(2 * c)])] + chosen)
    assert len(deck) == k
    return base, deck


def gi_to_klvd(g: Graph, h: Graph, c: int, k: int) -> Deck:
    """k-card vertex subdeck deciding g ~ h via padded clique unions."""
    if c < 1:
        raise InputError(f"deletion count must be >= 1, got {c}")
    if k < 2:
        raise InputError(f"card count must be >= 2, got {k}")
    n = _require_pair(g, h, c + 1, "gi_to_klvd")
    ell = n + k
    g_card = union([complete_graph(ell), complete_graph(ell + 2 * c), g])
    h_card = union([complete_graph(ell + c), complete_graph(ell + c), h])
    deck = Deck("vertex", [g_card] * (k - 1) + [h_card])
    assert deck.card_order == 2 * ell + 2 * c + n
    return deck


def gi_to_kled(g: Graph, h: Graph, c: int, k: int) -> Deck:
    """k-card edge subdeck deciding g ~ h: cliques with c edges removed in
    the k-1 g-cards (K_ell side) and in the h-card (K_{ell+1} side)."""
    if c < 1:
        raise InputError(f"deletion count must be >= 1, got {c}")
    if k < 2:
        raise InputError(f"card count must be >= 2, got {k}")
    n = _require_pair(g, h, c + 1, "gi_to_kled")
    ell = n + k
    if k - 1 > comb(comb(ell, 2), c):
        raise InputError("gi_to_kled: not enough edge subsets in the clique")
    small = complete_graph(ell)
    big = complete_graph(ell + 1)
    cards = [
        union([g, delete_edges(small, drop), big])
        for drop in islice(combinations(small.edges, c), k - 1)
    ]
    pad = comb(ell, 2) + comb(ell + 1, 2) - c
    assert all(card.m == g.m + pad for card in cards)
    first_big_drop = next(iter(combinations(big.edges, c)))
    h_card = union([h, small, delete_edges(big, first_big_drop)])
    assert h_card.m == h.m + pad
    return Deck("edge", cards + [h_card])


# ---------------------------------------------------------------------------
# verification harness


@dataclass(frozen=True)
class ReductionReport:
    kind: str
    c: int
    k: Optional[int]
    n_max: int
    checked: int
    violations: tuple[str, ...] = field(default=())
    skipped: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations


def _connected_upto(n: int) -> list[Graph]:
    return [g for g in enumerate_graphs(n) if is_connected(g)]


def _min_order(kind: str, c: int) -> int:
    if kind == "gi_to_lvd":
        return 3
    if kind == "gi_to_led":
        return max(c, 2) + 1
    if kind == "gi_to_kedc":
        return 3
    return c + 1  # gi_to_klvd, gi_to_kled


def verify_reduction(
    kind: str,
    n_max: int,
    c: int,
    k: Optional[int] = None,
    threads: Optional[int] = None,
) -> ReductionReport:
    """Sweep every admissible instance family up to n_max and check that
    the target decision equals are_isomorphic; violations are reported,
    capacity-limited cells are listed as skipped."""
    if kind not in REDUCTION_KINDS:
        raise InputError(f"unknown reduction kind {kind!r}")
    if n_max > 5:
        raise InputError(f"verification sweeps are capped at n_max = 5, got {n_max}")
    if kind == "kedc_to_kvdc":
        return _verify_transfer(n_max, c, k or 2, threads)
    needs_k = kind in ("gi_to_kedc", "gi_to_klvd", "gi_to_kled")
    if needs_k and k is None:
        raise InputError(f"{kind} requires k")
    use_k = k if needs_k else None

    def decide(pair: tuple[Graph, Graph]) -> Optional[bool]:
        g, h = pair
        if kind == "gi_to_lvd":
            return legit_vertex(gi_to_lvd(g, h, c), c, "pure")
        if kind == "gi_to_led":
            return legit_edge(gi_to_led(g, h, c), c, "pure")
        if kind == "gi_to_kedc":
            graph, deck = gi_to_kedc(g, h, c, use_k)
            return subdeck_check(graph, deck, c)
        if kind == "gi_to_kled":
            return legit_edge(gi_to_kled(g, h, c, use_k), c, "sub")
        deck = gi_to_klvd(g, h, c, use_k)
        assert deck.card_order is not None
        bits = c * deck.card_order + c * (c - 1) // 2
        if bits <= VERTEX_SEARCH_BITS_CAP:
            return legit_vertex(deck, c, "sub")
        if use_k == 2:
            return two_lvd(deck.cards[0], deck.cards[1], c)
        return None  # over capacity, no polynomial oracle for k > 2

    violations: list[str] = []
    skipped: list[str] = []
    checked = 0
    for n in range(_min_order(kind, c), n_max + 1):
        conn = _connected_upto(n)
        pairs = [(g, h) for g in conn for h in conn]
        expected = [are_isomorphic(g, h) for g, h in pairs]
        results = _map_pairs(decide, pairs, threads)
        cell_skipped = False
        for (g, h), want, got in zip(pairs, expected, results):
            if got is None:
                cell_skipped = True
                continue
            checked += 1
            if got != want:
                violations.append(
                    f"n={n} g={graph6_encode(g)} h={graph6_encode(h)} "
                    f"expected={want} got={got}"
                )
        if cell_skipped:
            skipped.append(
                f"n={n} c={c} k={use_k}: preimage search over capacity"
            )
    return ReductionReport(
        kind, c, use_k, n_max, checked, tuple(violations), tuple(skipped)
    )


def _map_pairs(fn: Callable, items: list, threads: Optional[int]) -> list:
    workers = threads if threads is not None else thread_count()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _verify_transfer(
    n_max: int, c: int, k: int, threads: Optional[int]
) -> ReductionReport:
    """Membership transfer of kedc_to_kvdc: the k-EDC answer on <g, cards>
    must equal the k-VDC answer on the line-graph image, for card multisets
    drawn from true edge-cards and same-shape non-cards alike."""
    violations: list[str] = []
    checked = 0

    def check(instance: tuple[Graph, Deck]) -> Optional[str]:
        g, cards = instance
        source = subdeck_check(g, cards, c)
        graph_im, cards_im = kedc_to_kvdc(g, cards, c)
        image = subdeck_check(graph_im, cards_im, c)
        if source != image:
            return (
                f"g={graph6_encode(g)} cards="
                + ",".join(graph6_encode(x) for x in cards.cards)
                + f" source={source} image={image}"
            )
        return None

    instances = []
    for n in range(c + 1, n_max + 1):
        same_order = enumerate_graphs(n)
        for g in same_order:
            if g.m < c:
                continue
            deck = build_deck(g, "edge", c)
            pool: list[Graph] = []
            seen = set()
            for card in deck.cards:
                cert = certificate(card)
                if cert not in seen:
                    seen.add(cert)
                    pool.append(card)
            deck_certs = set(deck.certs)
            non_cards = [
                other
                for other in same_order
                if other.m == g.m - c and certificate(other) not in deck_certs
            ]
            pool.extend(non_cards[:3])
            for chosen in combinations_with_replacement(pool, k):
                instances.append((g, Deck("edge", chosen)))
    results = _map_pairs(check, instances, threads)
    for res in results:
        checked += 1
        if res is not None:
            violations.append(res)
    return ReductionReport(
        "kedc_to_kvdc", c, k, n_max, checked, tuple(violations), ()
    )
