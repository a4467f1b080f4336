"""Small simple graphs on vertices ``0..n-1`` with bitset adjacency.

Edges are indexed lexicographically by endpoint pair, so an edge subset is
just an ``int`` bitmask whose bit ``i`` selects ``g.edges[i]``.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import CapacityError, DomainError, Graph6Error
from .partition import Partition, make_partition

CANON_MAX_N = 10
ENUM_MAX_N = 7
GRAPH6_MAX_N = 62


class Graph:
    __slots__ = ("n", "adj", "edges", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise DomainError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.edges = tuple((u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1)
        self._index = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.edges)}
        return self._index[(min(u, v), max(u, v))]

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def neighbours(self, v: int) -> list[int]:
        a = self.adj[v]
        return [u for u in range(self.n) if a >> u & 1]

    def relabel(self, perm) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def edge_subset_valid(g: Graph, s: int) -> bool:
    return s >= 0 and s >> g.m == 0


def edges_of(g: Graph, s: int) -> list[tuple[int, int]]:
    return [e for i, e in enumerate(g.edges) if s >> i & 1]


def subset_from_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> int:
    s = 0
    for u, v in edges:
        s |= 1 << g.edge_index(u, v)
    return s


# -- generators --------------------------------------------------------------

def make_claw() -> Graph:
    return make_complete_bipartite(1, 3)


def make_path(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"path needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"cycle needs n >= 1, got {n}")
    if n <= 2:
        return make_complete(n)
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def make_complete_bipartite(a: int, b: int) -> Graph:
    """Parts ``0..a-1`` and ``a..a+b-1``; for K_{1,3} vertex 0 is the centre."""
    if a < 1 or b < 1:
        raise DomainError(f"complete bipartite needs a, b >= 1, got {a}, {b}")
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def _saltire_edges(a: int, b: int) -> list[tuple[int, int]]:
    # v_1..v_{a+b} become 0..a+b-1
    n = a + b
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(n - 1, 0), (0, a), (1, a + 1)]
    return edges


def make_saltire(a: int, b: int) -> Graph:
    if a < 2 or b < 2:
        raise DomainError(f"saltire needs a, b >= 2, got {a}, {b}")
    return Graph(a + b, _saltire_edges(a, b))


def make_augmented_saltire(a: int, b: int) -> Graph:
    if a < 2 or b < 3:
        raise DomainError(f"augmented saltire needs a >= 2, b >= 3, got {a}, {b}")
    return Graph(a + b, _saltire_edges(a, b) + [(0, a + 1)])


def make_triangular_tower(a: int, b: int, c: int) -> Graph:
    if min(a, b, c) < 2:
        raise DomainError(f"triangular tower needs a, b, c >= 2, got {a}, {b}, {c}")
    edges = []
    for start, length in ((0, a), (a, b), (a + b, c)):
        edges += [(start + i, start + i + 1) for i in range(length - 1)]
    top = (0, a, a + b)
    bottom = (a - 1, a + b - 1, a + b + c - 1)
    for x, y, z in (top, bottom):
        edges += [(x, y), (y, z), (z, x)]
    return Graph(a + b + c, edges)


def make_ak33() -> Graph:
    """K_{3,3} plus one chord inside a part."""
    cycle = [(i, (i + 1) % 6) for i in range(6)]
    chords = [(1, 4), (2, 5), (2, 4), (0, 3)]
    return Graph(6, cycle + chords)


def empty_graph(n: int) -> Graph:
    return Graph(n)


# -- structural operations ---------------------------------------------------

def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, list(g.edges) + [(u + shift, v + shift) for u, v in h.edges])


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def components(g: Graph, s: int | None = None) -> list[list[int]]:
    """Vertex classes of the spanning subgraph ``(V, S)``; all edges when ``s`` is None."""
    parent = list(range(g.n))
    for i, (u, v) in enumerate(g.edges):
        if s is None or s >> i & 1:
            ru, rv = _find(parent, u), _find(parent, v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(_find(parent, v), []).append(v)
    return list(groups.values())


def component_partition(g: Graph, s: int) -> Partition:
    if not edge_subset_valid(g, s):
        raise DomainError(f"edge subset {s:#x} invalid for a graph with {g.m} edges")
    return make_partition(len(c) for c in components(g, s))


def contract_simplify(g: Graph, s: int) -> Graph:
    """Quotient by the components of ``(V, S)``; loops dropped, parallel edges merged."""
    if not edge_subset_valid(g, s):
        raise DomainError(f"edge subset {s:#x} invalid for a graph with {g.m} edges")
    blocks = components(g, s)
    block_of = [0] * g.n
    for k, block in enumerate(sorted(blocks)):
        for v in block:
            block_of[v] = k
    quotient = {
        (min(block_of[u], block_of[v]), max(block_of[u], block_of[v]))
        for u, v in g.edges
        if block_of[u] != block_of[v]
    }
    return Graph(len(blocks), quotient)


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    gone = set(vs)
    if any(not 0 <= v < g.n for v in gone):
        raise DomainError(f"vertices {sorted(gone)} not all in 0..{g.n - 1}")
    keep = [v for v in range(g.n) if v not in gone]
    new = {v: k for k, v in enumerate(keep)}
    return Graph(len(keep), ((new[u], new[v]) for u, v in g.edges if u in new and v in new))


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    vs = set(vs)
    return delete_vertices(g, [v for v in range(g.n) if v not in vs])


def is_connected(g: Graph) -> bool:
    return mask_connected(g, (1 << g.n) - 1)


def mask_connected(g: Graph, mask: int) -> bool:
    """Whether the subgraph induced on the vertex bitmask ``mask`` is connected (empty counts)."""
    if mask == 0:
        return True
    start = mask & -mask
    seen, frontier = start, start
    while frontier:
        v = frontier.bit_length() - 1
        frontier &= ~(1 << v)
        new = g.adj[v] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


# -- canonical form ----------------------------------------------------------

def _refine(g: Graph) -> list[list[int]]:
    """Equitable-ish ordered cell partition by iterated neighbour colour counts."""
    colour = [0] * g.n
    ncolours = 1 if g.n else 0
    while True:
        sig = [
            (colour[v], tuple(sorted(colour[u] for u in g.neighbours(v))))
            for v in range(g.n)
        ]
        keys = sorted(set(sig))
        rank = {k: i for i, k in enumerate(keys)}
        colour = [rank[s] for s in sig]
        if len(keys) == ncolours:
            break
        ncolours = len(keys)
    cells: list[list[int]] = [[] for _ in range(ncolours)]
    for v in range(g.n):
        cells[colour[v]].append(v)
    return cells


def canonical_order(g: Graph) -> list[int]:
    """A vertex sequence whose induced labelling minimises the column-wise adjacency string.

    The search only reorders vertices inside the cells of an
    isomorphism-invariant colour refinement, and prunes any prefix whose
    columns already exceed the best string found.
    """
    if g.n > CANON_MAX_N:
        raise CapacityError(f"canonical_form supports n <= {CANON_MAX_N}, got {g.n}")
    cells = _refine(g)
    cell_of_slot = [k for k, cell in enumerate(cells) for _ in cell]
    best: list[int] | None = None
    best_order: list[int] = []
    order: list[int] = []
    cols: list[int] = []

    def dfs(k: int, used: int) -> None:
        nonlocal best, best_order
        if k == g.n:
            best, best_order = list(cols), list(order)
            return
        for v in cells[cell_of_slot[k]]:
            if used >> v & 1:
                continue
            # bit for (order[0], v) is the most significant
            c = 0
            for u in order:
                c = (c << 1) | (g.adj[v] >> u & 1)
            # reaching here means cols <= best[:k]; only equality can be beaten by c
            if best is not None and cols == best[:k] and c > best[k]:
                continue
            cols.append(c)
            order.append(v)
            dfs(k + 1, used | 1 << v)
            order.pop()
            cols.pop()

    dfs(0, 0)
    return best_order


def canonical_form(g: Graph) -> bytes:
    """Canonical graph6 bytes: equal iff the graphs are isomorphic."""
    order = canonical_order(g)
    pos = {v: k for k, v in enumerate(order)}
    return to_graph6(g.relabel([pos[v] for v in range(g.n)])).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


# -- enumeration -------------------------------------------------------------

def _all_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of graphs on ``n`` vertices."""
    if n == 0:
        return [Graph(0)]
    found: dict[bytes, Graph] = {}
    for base in _all_graphs(n - 1):
        for nbrs in range(1 << (n - 1)):
            extra = [(u, n - 1) for u in range(n - 1) if nbrs >> u & 1]
            g = Graph(n, list(base.edges) + extra)
            key = canonical_form(g)
            if key not in found:
                found[key] = from_graph6(key.decode("ascii"))
    return [found[k] for k in sorted(found)]


def enumerate_connected(n: int) -> Iterator[Graph]:
    """Each connected graph on ``n`` vertices up to isomorphism, in canonical labelling.

    Yields in ascending order of canonical graph6, so the stream is
    reproducible.
    """
    if n < 1:
        raise DomainError(f"enumerate_connected needs n >= 1, got {n}")
    if n > ENUM_MAX_N:
        raise CapacityError(
            f"built-in enumeration stops at n={ENUM_MAX_N}; supply a graph6 corpus for n={n}"
        )
    for g in _all_graphs(n):
        if is_connected(g):
            yield g


# -- graph6 ------------------------------------------------------------------

GRAPH6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise CapacityError(f"graph6 writer supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [g.adj[j] >> i & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def from_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 record", 0)
    data = text.encode("ascii", errors="replace")
    for off, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} outside 63..126", off)
    n = data[0] - 63
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"multi-byte size form (n > {GRAPH6_MAX_N}) is not supported", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 < need:
        raise Graph6Error(f"truncated payload: need {need} bytes, have {len(data) - 1}", len(data))
    if len(data) - 1 > need:
        raise Graph6Error(f"trailing bytes after {need}-byte payload", 1 + need)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[1 + k // 6] - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """(1-based line number, record) for every non-blank, non-header line."""
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if not text:
            continue
        if text == GRAPH6_HEADER:
            continue
        if text.startswith(GRAPH6_HEADER):
            text = text[len(GRAPH6_HEADER):]
        yield lineno, text
