"""Exact graph-isomorphism decisions via canonical certificates.

certificate(g) is a relabeling-invariant encoding with the defining
property certificate(g) == certificate(h) iff g and h are isomorphic.
Concretely it is the graph6 line of a canonical representative, found by
individualization-refinement search with pruning by discovered
automorphisms, assembled component by component.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .errors import CapacityError
from .graph import Graph, graph6_decode, graph6_encode

CERTIFICATE_ORDER_CAP = 64  # orders >= 64 are refused

_CACHE_LIMIT = 400_000
_CERT_CACHE: dict[tuple[int, int], bytes] = {}


def clear_certificate_cache() -> None:
    _CERT_CACHE.clear()


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# equitable refinement


def _refine(n: int, rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition to the coarsest stable one.

    Cell order is driven purely by (color, neighbor-color profile)
    signatures, so it is invariant under vertex relabeling.
    """
    while True:
        color = [0] * n
        for i, cell in enumerate(cells):
            for v in cell:
                color[v] = i
        groups: dict[tuple, list[int]] = {}
        for v in range(n):
            counts: dict[int, int] = {}
            nb = rows[v]
            while nb:
                low = nb & -nb
                c = color[low.bit_length() - 1]
                counts[c] = counts.get(c, 0) + 1
                nb ^= low
            sig = (color[v], tuple(sorted(counts.items())))
            groups.setdefault(sig, []).append(v)
        new_cells = [groups[key] for key in sorted(groups)]
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


# ---------------------------------------------------------------------------
# canonical labeling of one connected piece (works for any graph, but the
# public entry points decompose into components first)


def _relabel_code(n: int, rows: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    new_rows = [0] * n
    for v in range(n):
        acc = 0
        nb = rows[v]
        while nb:
            low = nb & -nb
            acc |= 1 << lab[low.bit_length() - 1]
            nb ^= low
        new_rows[lab[v]] = acc
    return tuple(new_rows)


class _Search:
    """Minimum-code canonical labeling by individualization-refinement.

    Equal-code leaves yield automorphisms; at each tree node, siblings in
    the same orbit under the already-discovered automorphisms that fix the
    individualized prefix pointwise are skipped.
    """

    def __init__(self, n: int, rows: Sequence[int]):
        self.n = n
        self.rows = rows
        self.best_code: Optional[tuple[int, ...]] = None
        self.best_lab: Optional[list[int]] = None
        self.best_inv: Optional[list[int]] = None
        self.gens: list[tuple[int, ...]] = []

    def run(self) -> tuple[int, ...]:
        n = self.n
        if n <= 1:
            return tuple(range(n))
        edge_count = sum(r.bit_count() for r in self.rows) // 2
        if edge_count == 0 or edge_count == n * (n - 1) // 2:
            return tuple(range(n))
        self._descend(_refine(n, self.rows, [list(range(n))]), ())
        assert self.best_lab is not None
        return tuple(self.best_lab)

    def _descend(self, cells: list[list[int]], prefix: tuple[int, ...]) -> None:
        target = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target = i
                break
        if target is None:
            self._leaf(cells)
            return
        cell = cells[target]
        explored: list[int] = []
        find = None
        gens_seen = -1
        for v in cell:
            if explored:
                if len(self.gens) != gens_seen:
                    find = self._orbit_find(prefix)
                    gens_seen = len(self.gens)
                if find is not None and any(find(v) == find(u) for u in explored):
                    continue
            child = (
                cells[:target]
                + [[v], [u for u in cell if u != v]]
                + cells[target + 1:]
            )
            self._descend(_refine(self.n, self.rows, child), prefix + (v,))
            explored.append(v)

    def _leaf(self, cells: list[list[int]]) -> None:
        n = self.n
        lab = [0] * n
        for i, cell in enumerate(cells):
            lab[cell[0]] = i
        code = _relabel_code(n, self.rows, lab)
        if self.best_code is None or code < self.best_code:
            self.best_code = code
            self.best_lab = lab
            inv = [0] * n
            for v in range(n):
                inv[lab[v]] = v
            self.best_inv = inv
        elif code == self.best_code:
            inv = self.best_inv
            perm = tuple(inv[lab[v]] for v in range(n))
            if any(perm[v] != v for v in range(n)) and perm not in self.gens:
                self.gens.append(perm)

    def _orbit_find(self, prefix: tuple[int, ...]):
        fixing = [
            g for g in self.gens if all(g[x] == x for x in prefix)
        ]
        if not fixing:
            return None
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in fixing:
            for v in range(self.n):
                a, b = find(v), find(g[v])
                if a != b:
                    parent[a] = b
        return find


# ---------------------------------------------------------------------------
# component assembly


def _components_rows(n: int, rows: Sequence[int]) -> list[list[int]]:
    seen = 0
    comps = []
    for start in range(n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(list(_iter_bits(comp)))
    return comps


def _induced_rows(rows: Sequence[int], verts: list[int]) -> list[int]:
    index = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        acc = 0
        nb = rows[v]
        while nb:
            low = nb & -nb
            u = low.bit_length() - 1
            nb ^= low
            if u in index:
                acc |= 1 << index[u]
        out.append(acc)
    return out


def _graph_from_code(n: int, code: Sequence[int]) -> Graph:
    edges = []
    for v in range(n):
        nb = code[v] >> (v + 1)
        w = v + 1
        while nb:
            if nb & 1:
                edges.append((v, w))
            nb >>= 1
            w += 1
    return Graph(n, edges)


def _labeling_rows(n: int, rows: Sequence[int]) -> tuple[int, ...]:
    """Canonical labeling (old -> new) of an arbitrary rows-graph.

    Components are canonicalized independently, then laid out in order of
    (component order, component certificate), which makes the assembled
    labeled graph an isomorphism invariant of the whole graph.
    """
    comps = _components_rows(n, rows)
    pieces = []
    for verts in comps:
        sub = _induced_rows(rows, verts)
        local = _Search(len(verts), sub).run()
        code = _relabel_code(len(verts), sub, local)
        key = graph6_encode(_graph_from_code(len(verts), code))
        pieces.append((len(verts), key, verts, local))
    pieces.sort(key=lambda p: (p[0], p[1]))
    lab = [0] * n
    offset = 0
    for nc, _key, verts, local in pieces:
        for i, v in enumerate(verts):
            lab[v] = offset + local[i]
        offset += nc
    return tuple(lab)


# ---------------------------------------------------------------------------
# public API


def certificate_rows(n: int, rows: Sequence[int]) -> bytes:
    """Certificate of the labeled graph given as adjacency bitmask rows."""
    if n >= CERTIFICATE_ORDER_CAP:
        raise CapacityError(
            f"certificates are capped below order {CERTIFICATE_ORDER_CAP}, got {n}"
        )
    mask = 0
    for v in range(n):
        mask = mask << n | rows[v]
    key = (n, mask)
    cached = _CERT_CACHE.get(key)
    if cached is not None:
        return cached
    lab = _labeling_rows(n, rows)
    code = _relabel_code(n, rows, lab)
    cert = graph6_encode(_graph_from_code(n, code)).encode("ascii")
    if len(_CERT_CACHE) >= _CACHE_LIMIT:
        _CERT_CACHE.clear()
    _CERT_CACHE[key] = cert
    return cert


def certificate(g: Graph) -> bytes:
    return certificate_rows(g.n, g.rows)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Vertex map old -> new onto the canonical representative."""
    if g.n >= CERTIFICATE_ORDER_CAP:
        raise CapacityError(
            f"certificates are capped below order {CERTIFICATE_ORDER_CAP}, got {g.n}"
        )
    return _labeling_rows(g.n, g.rows)


def canonical_form(g: Graph) -> Graph:
    """The canonical representative itself (decode of the certificate)."""
    return graph6_decode(certificate(g).decode("ascii"))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if len(_components_rows(g.n, g.rows)) != len(_components_rows(h.n, h.rows)):
        return False
    return certificate(g) == certificate(h)


def find_isomorphism(g: Graph, h: Graph) -> Optional[tuple[int, ...]]:
    """An explicit edge-preserving bijection V(g) -> V(h), or None."""
    if not are_isomorphic(g, h):
        return None
    lab_g = canonical_labeling(g)
    lab_h = canonical_labeling(h)
    inv_h = [0] * h.n
    for v in range(h.n):
        inv_h[lab_h[v]] = v
    return tuple(inv_h[lab_g[v]] for v in range(g.n))
