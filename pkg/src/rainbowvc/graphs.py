"""Small undirected graphs stored as per-vertex bitsets.

Vertices are labeled 0..n-1 and each adjacency row is a Python int used as
a bitset, which caps the order at 64 but keeps traversal loops branch-light.
The module also provides a bit-exact graph6 codec (single-byte header
variant, n <= 62) and an exact canonical form for n <= 8 obtained by
minimizing the upper-triangle bit string over all vertex relabelings.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

MAX_VERTICES = 64
GRAPH6_MAX_VERTICES = 62
CANONICAL_MAX_VERTICES = 8


class Graph6Error(ValueError):
    """Malformed or unsupported graph6 text."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph; ``adj[i]`` is the neighbor bitset of i."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        n = self.n
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        if len(self.adj) != n:
            raise ValueError("adjacency row count does not match vertex count")
        full = (1 << n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {i} has a neighbor outside 0..{n - 1}")
            if (row >> i) & 1:
                raise ValueError(f"loop at vertex {i}")
        for i, row in enumerate(self.adj):
            for j in iter_bits(row):
                if not (self.adj[j] >> i) & 1:
                    raise ValueError(f"asymmetric edge ({i}, {j})")

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.adj[i] >> j) & 1)

    def degree(self, i: int) -> int:
        return bin(self.adj[i]).count("1")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={edge_list(self)})"


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Lexicographically minimal upper-triangle bit string over all relabelings.

    The order is part of the value so that forms of different orders never
    compare equal (an empty triangle packs to identical bytes for small n).
    """

    n: int
    bytes: bytes


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x``, lowest first."""
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from unordered vertex pairs; duplicate pairs collapse."""
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
    rows = [0] * n
    for a, b in edges:
        if a == b:
            raise ValueError(f"loop edge ({a}, {b}) not allowed")
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    return Graph(n, tuple(rows))


def edge_list(g: Graph) -> list[tuple[int, int]]:
    """Edges as sorted (i, j) pairs with i < j."""
    return [(i, j) for i in range(g.n) for j in iter_bits(g.adj[i]) if j > i]


def edge_count(g: Graph) -> int:
    return sum(bin(row).count("1") for row in g.adj) // 2


def is_complete(g: Graph) -> bool:
    full = (1 << g.n) - 1
    return all(row == full ^ (1 << i) for i, row in enumerate(g.adj))


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(g.adj)))


def add_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """Return g plus one new vertex (id n) adjacent to exactly ``neighbors``."""
    n = g.n
    if n + 1 > MAX_VERTICES:
        raise ValueError(f"cannot exceed {MAX_VERTICES} vertices")
    nb = 0
    for v in neighbors:
        if not 0 <= v < n:
            raise ValueError(f"neighbor {v} outside 0..{n - 1}")
        nb |= 1 << v
    rows = [row | (1 << n) if (nb >> i) & 1 else row for i, row in enumerate(g.adj)]
    rows.append(nb)
    return Graph(n + 1, tuple(rows))


def is_connected(g: Graph) -> bool:
    """True iff every vertex is reachable from vertex 0; K1 is connected."""
    full = (1 << g.n) - 1
    adj = g.adj
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Shortest-path distances from ``source``; -1 for unreachable vertices."""
    if not 0 <= source < g.n:
        raise ValueError(f"vertex {source} outside 0..{g.n - 1}")
    adj = g.adj
    dist = [-1] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = d
    return dist


def diameter(g: Graph) -> int:
    """Largest shortest-path distance over all pairs; rejects disconnected input."""
    if not is_connected(g):
        raise ValueError("diameter is undefined for disconnected graphs")
    return max(max(bfs_distances(g, s)) for s in range(g.n))


# --- upper-triangle bit packing -------------------------------------------
#
# Pair p runs over the upper triangle in column order (0,1), (0,2), (1,2),
# (0,3), ..., the same order graph6 uses.  Bit p of the packed mask sits at
# position m-1-p (first pair is the most significant bit), so ascending
# integer order on masks equals lexicographic order on the bit strings and,
# for fixed n, on graph6 strings.

@lru_cache(maxsize=None)
def _pair_table(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


@lru_cache(maxsize=None)
def _bit_pairs(n: int) -> tuple[tuple[int, int], ...]:
    pairs = _pair_table(n)
    m = len(pairs)
    out: list[tuple[int, int]] = [(0, 0)] * m
    for p, ij in enumerate(pairs):
        out[m - 1 - p] = ij
    return tuple(out)


def triangle_mask(g: Graph) -> int:
    """Pack the upper triangle of the adjacency matrix into one int."""
    pairs = _pair_table(g.n)
    m = len(pairs)
    adj = g.adj
    mask = 0
    for p, (i, j) in enumerate(pairs):
        if (adj[i] >> j) & 1:
            mask |= 1 << (m - 1 - p)
    return mask


def _mask_rows(n: int, mask: int) -> list[int]:
    rows = [0] * n
    bp = _bit_pairs(n)
    while mask:
        b = mask & -mask
        i, j = bp[b.bit_length() - 1]
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        mask ^= b
    return rows


def from_triangle_mask(n: int, mask: int) -> Graph:
    """Inverse of :func:`triangle_mask`."""
    m = n * (n - 1) // 2
    if mask >> m:
        raise ValueError("mask has bits beyond the upper triangle")
    return Graph(n, tuple(_mask_rows(n, mask)))


# --- graph6 codec ----------------------------------------------------------

def to_graph6(g: Graph) -> str:
    """Encode with a single-byte size header; requires n <= 62."""
    n = g.n
    if n > GRAPH6_MAX_VERTICES:
        raise Graph6Error(f"unsupported size: n={n} exceeds {GRAPH6_MAX_VERTICES}")
    m = n * (n - 1) // 2
    total = ((m + 5) // 6) * 6
    shifted = triangle_mask(g) << (total - m)
    out = [chr(63 + n)]
    for shift in range(total - 6, -1, -6):
        out.append(chr(63 + ((shifted >> shift) & 63)))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (single-byte header variant only)."""
    line = text.rstrip("\r\n")
    if not line:
        raise Graph6Error("empty graph6 string")
    h = ord(line[0])
    if h == 126:
        raise Graph6Error("unsupported size: multi-byte graph6 headers are not accepted")
    if not 63 <= h <= 125:
        raise Graph6Error(f"bad header character {line[0]!r}")
    n = h - 63
    if n == 0:
        raise Graph6Error("order-0 graphs are not supported")
    m = n * (n - 1) // 2
    want = (m + 5) // 6
    data = line[1:]
    if len(data) != want:
        raise Graph6Error(f"expected {want} data characters for n={n}, got {len(data)}")
    mask = 0
    for ch in data:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise Graph6Error(f"bad character {ch!r}")
        mask = (mask << 6) | v
    pad = want * 6 - m
    if pad and mask & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    return from_triangle_mask(n, mask >> pad)


# --- canonical form ---------------------------------------------------------

def _min_columns(g: Graph) -> list[int]:
    # Branch-and-bound over partial relabelings.  Positions are filled left to
    # right; the triangle column of position j is fully determined by the
    # vertices already placed, so any branch whose column exceeds the best
    # known value at that level can be cut.  On the live path cols[i] always
    # equals best[i] for i < j (a strictly smaller column overwrites best and
    # clears the deeper levels), which keeps the pruning sound.
    n, adj = g.n, g.adj
    if n == 1:
        return []
    order = sorted(range(n), key=lambda v: (bin(adj[v]).count("1"), v))
    inf = 1 << n
    best = [inf] * n
    chosen = [0] * n

    def place(j: int, used: int) -> None:
        if j == n:
            return
        for u in order:
            bu = 1 << u
            if used & bu:
                continue
            au = adj[u]
            col = 0
            for i in range(j):
                col = (col << 1) | ((au >> chosen[i]) & 1)
            if col > best[j]:
                continue
            if col < best[j]:
                best[j] = col
                for t in range(j + 1, n):
                    best[t] = inf
            chosen[j] = u
            place(j + 1, used | bu)

    place(0, 0)
    return best[1:]


def _columns_to_mask(cols: list[int]) -> int:
    mask = 0
    for j, col in enumerate(cols, start=1):
        mask = (mask << j) | col
    return mask


def canonical_form(g: Graph) -> CanonicalForm:
    """Exact canonical form by minimization over all n! relabelings (n <= 8)."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise ValueError(
            f"canonical_form is only guaranteed for n <= {CANONICAL_MAX_VERTICES}, got {g.n}"
        )
    m = g.n * (g.n - 1) // 2
    mask = _columns_to_mask(_min_columns(g))
    nbytes = (m + 7) // 8
    return CanonicalForm(g.n, (mask << (nbytes * 8 - m)).to_bytes(nbytes, "big"))


def canonical_representative(g: Graph) -> Graph:
    """The relabeling of g whose triangle bit string is the canonical form."""
    if g.n > CANONICAL_MAX_VERTICES:
        raise ValueError(
            f"canonical_form is only guaranteed for n <= {CANONICAL_MAX_VERTICES}, got {g.n}"
        )
    return from_triangle_mask(g.n, _columns_to_mask(_min_columns(g)))


def relabel(g: Graph, perm: Iterable[int]) -> Graph:
    """Apply a vertex permutation: edge (i, j) becomes (perm[i], perm[j])."""
    p = list(perm)
    if sorted(p) != list(range(g.n)):
        raise ValueError("perm is not a permutation of the vertex set")
    return from_edges(g.n, [(p[i], p[j]) for i, j in edge_list(g)])
