"""Claw-freeness and claw-contractibility, each with a checkable witness."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import CapacityError
from .graph import (
    Graph,
    contract_simplify,
    delete_vertices,
    is_connected,
    mask_connected,
)

DEFAULT_EDGE_CAP = 30


def is_claw(g: Graph) -> bool:
    return g.n == 4 and g.m == 3 and g.degree_sequence() == (3, 1, 1, 1)


def is_claw_free(g: Graph) -> tuple[bool, tuple[int, int, int, int] | None]:
    """Look for a vertex with an independent triple among its neighbours.

    The witness is ``(centre, leaf, leaf, leaf)``.
    """
    for centre in range(g.n):
        nbrs = g.neighbours(centre)
        for a, b, c in combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False, (centre, a, b, c)
    return True, None


def _spanning_forest(g: Graph, blocks: list[int]) -> int:
    """Edge mask of a BFS spanning tree inside each vertex-mask block."""
    s = 0
    for block in blocks:
        root = (block & -block).bit_length() - 1
        seen, queue = 1 << root, [root]
        while queue:
            v = queue.pop()
            for u in g.neighbours(v):
                if block >> u & 1 and not seen >> u & 1:
                    seen |= 1 << u
                    queue.append(u)
                    s |= 1 << g.edge_index(u, v)
    return s


def _quotient_is_claw(g: Graph, blocks: list[int]) -> bool:
    touching = [0, 0, 0, 0]
    for i in range(4):
        nbhd = 0
        for v in range(g.n):
            if blocks[i] >> v & 1:
                nbhd |= g.adj[v]
        for j in range(4):
            if j != i and nbhd & blocks[j]:
                touching[i] += 1
    return sorted(touching) == [1, 1, 1, 3]


def contracts_to_claw(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> tuple[bool, int | None]:
    """Whether some edge subset contracts ``g`` onto the claw.

    ``G/S`` has one vertex per component of ``(V, S)``, so it suffices to
    try every split of ``V`` into four blocks that each induce a connected
    subgraph; the witness ``S`` is a spanning forest of those blocks.
    """
    if g.m > cap:
        raise CapacityError(f"graph has {g.m} edges, above the edge cap of {cap}")
    n = g.n
    if n < 4:
        return False, None
    blocks = [0, 0, 0, 0]

    def place(v: int, used: int):
        if n - v < 4 - used:
            return None
        if v == n:
            if all(mask_connected(g, b) for b in blocks) and _quotient_is_claw(g, blocks):
                return _spanning_forest(g, blocks)
            return None
        for k in range(min(used + 1, 4)):
            blocks[k] |= 1 << v
            found = place(v + 1, max(used, k + 1))
            blocks[k] &= ~(1 << v)
            if found is not None:
                return found
        return None

    s = place(0, 0)
    return (s is not None), s


def independent_triples(g: Graph):
    for a, b, c in combinations(range(g.n), 3):
        if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
            yield a, b, c


def is_ccf_bv(g: Graph) -> tuple[bool, tuple[int, int, int] | None]:
    """Claw-contractible-free test via independent-triple deletion.

    A connected graph is claw-contractible-free exactly when deleting any
    three pairwise non-adjacent vertices disconnects it. The witness is a
    triple whose deletion leaves a connected graph. Disconnected input
    cannot contract to the claw and returns ``(True, None)`` directly.
    """
    if not is_connected(g):
        return True, None
    full = (1 << g.n) - 1
    for triple in independent_triples(g):
        rest = full & ~sum(1 << v for v in triple)
        if mask_connected(g, rest):
            return False, triple
    return True, None


@dataclass(frozen=True)
class ClawReport:
    claw_free: bool
    claw_witness: tuple[int, int, int, int] | None
    ccf: bool
    ccf_witness_kind: str | None  # "contraction" or "independent_triple"
    ccf_witness: object

    def to_json(self) -> dict:
        return {
            "claw_free": self.claw_free,
            "claw_witness": list(self.claw_witness) if self.claw_witness else None,
            "ccf": self.ccf,
            "ccf_witness_kind": self.ccf_witness_kind,
            "ccf_witness": list(self.ccf_witness) if isinstance(self.ccf_witness, tuple) else self.ccf_witness,
        }

    def validate(self, g: Graph) -> bool:
        """Re-check any witnesses against ``g``."""
        if self.claw_witness is not None:
            centre, *leaves = self.claw_witness
            if not all(g.has_edge(centre, x) for x in leaves):
                return False
            if any(g.has_edge(x, y) for x, y in combinations(leaves, 2)):
                return False
        if self.ccf_witness_kind == "contraction":
            return is_claw(contract_simplify(g, self.ccf_witness))
        if self.ccf_witness_kind == "independent_triple":
            triple = self.ccf_witness
            if any(g.has_edge(x, y) for x, y in combinations(triple, 2)):
                return False
            return is_connected(delete_vertices(g, triple))
        return True


def claw_report(g: Graph, cap: int = DEFAULT_EDGE_CAP) -> ClawReport:
    free, claw_w = is_claw_free(g)
    ccf, triple = is_ccf_bv(g)
    kind, witness = None, None
    if not ccf:
        kind, witness = "independent_triple", triple
        contracts, s = contracts_to_claw(g, cap)
        if contracts:
            kind, witness = "contraction", s
    return ClawReport(free, claw_w, ccf, kind, witness)
