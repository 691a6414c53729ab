"""Exact rainbow vertex-connectivity checking and solving.

A vertex-colored graph is rainbow vertex-connected when every pair of
distinct vertices is joined by a path whose internal vertices all carry
distinct colors; endpoint colors never matter.  rvc(g) is the least number
of colors achieving this, 0 exactly for complete graphs, and it always
satisfies diam(g) - 1 <= rvc(g) <= n - 2 for connected non-complete g.

Two independent path checkers are provided.  The fast one searches the
state space (current vertex, set of colors used by internal vertices so
far); since internal colors are pairwise distinct along any accepted walk,
the internal vertices are automatically distinct, so every accepted state
sequence corresponds to a simple path.  The oracle enumerates all simple
paths outright and exists purely to cross-examine the fast checker.

The solver enumerates candidate colorings as restricted growth strings
(vertex 0 fixed to color 0, each later vertex at most one above the
running maximum, capped at k colors), which quotients out the k! color
renamings.  Candidates are tested whole; rainbow connectivity is not
monotone under extending partial colorings, so there is nothing sound to
prune inside a candidate beyond checking the far-apart pairs first.
"""

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .graphs import Graph, bfs_distances, diameter, is_complete, is_connected, iter_bits


class TheoremViolationError(RuntimeError):
    """A bound that provably holds failed; indicates a solver defect."""


REASON_COMPLETE = "complete-graph"
REASON_DIAMETER = "diameter-minus-one"
REASON_EXHAUSTED = "exhausted-k"


@dataclass(frozen=True)
class VertexColoring:
    """Total assignment of colors 0..k-1 to vertices (0-based internally).

    k = 0 carries an empty color sequence; it can only ever satisfy the
    checker on complete graphs, where no path needs an internal vertex.
    """

    k: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("color count must be nonnegative")
        if self.k == 0:
            if self.colors:
                raise ValueError("an empty palette cannot color any vertex")
        elif any(not 0 <= c < self.k for c in self.colors):
            raise ValueError(f"colors must lie in 0..{self.k - 1}")


@dataclass(frozen=True)
class RvcResult:
    """Exact rvc value with a witness coloring and the optimality argument.

    ``lower_bound_reason`` is one of ``complete-graph`` (value 0),
    ``diameter-minus-one`` (value met the diameter bound, nothing below it
    was tried), or ``exhausted-k`` (every k in ``exhausted`` was searched
    and failed before the value succeeded).
    """

    value: int
    witness: VertexColoring
    lower_bound_reason: str
    exhausted: tuple[int, ...] = ()


def _check_endpoints(g: Graph, s: int, t: int) -> None:
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError(f"endpoints ({s}, {t}) outside 0..{g.n - 1}")
    if s == t:
        raise ValueError("endpoints must be distinct")


def _check_coloring(g: Graph, coloring: VertexColoring) -> None:
    if coloring.k > 0 and len(coloring.colors) != g.n:
        raise ValueError(
            f"coloring has {len(coloring.colors)} entries for {g.n} vertices"
        )


def _path_exists(adj: Sequence[int], colors: Sequence[int], s: int, t: int) -> bool:
    # States are (vertex, used-color bitmask) pairs packed into one int; the
    # vertex fits in 6 bits because n <= 64.  At most n * 2^k states exist.
    if (adj[s] >> t) & 1:
        return True
    excl = ~((1 << s) | (1 << t))
    stack: list[tuple[int, int]] = []
    seen: set[int] = set()
    for v in iter_bits(adj[s] & excl):
        used = 1 << colors[v]
        key = (used << 6) | v
        seen.add(key)
        stack.append((v, used))
    while stack:
        v, used = stack.pop()
        if (adj[v] >> t) & 1:
            return True
        for w in iter_bits(adj[v] & excl):
            cb = 1 << colors[w]
            if used & cb:
                continue
            key = ((used | cb) << 6) | w
            if key not in seen:
                seen.add(key)
                stack.append((w, used | cb))
    return False


def exists_rainbow_path(g: Graph, coloring: VertexColoring, s: int, t: int) -> bool:
    """True iff some s-t path has pairwise distinct internal colors.

    Adjacent endpoints always qualify; unreachable pairs never do.
    """
    _check_endpoints(g, s, t)
    _check_coloring(g, coloring)
    if (g.adj[s] >> t) & 1:
        return True
    if coloring.k == 0:
        return False
    return _path_exists(g.adj, coloring.colors, s, t)


def exists_rainbow_path_oracle(g: Graph, coloring: VertexColoring, s: int, t: int) -> bool:
    """Same contract as :func:`exists_rainbow_path` by brute enumeration.

    Walks every simple s-t path and tests its internal colors directly;
    intended for small n as an independent cross-check.
    """
    _check_endpoints(g, s, t)
    _check_coloring(g, coloring)
    adj = g.adj
    colors = coloring.colors
    k = coloring.k
    inner: list[int] = []

    def search(v: int, visited: int) -> bool:
        for w in iter_bits(adj[v]):
            if visited & (1 << w):
                continue
            if w == t:
                if not inner:
                    return True
                if k > 0:
                    cs = [colors[u] for u in inner]
                    if len(set(cs)) == len(cs):
                        return True
            else:
                inner.append(w)
                if search(w, visited | (1 << w)):
                    return True
                inner.pop()
        return False

    return search(s, 1 << s)


def _pairs_by_distance(g: Graph) -> list[tuple[int, int]]:
    # Distant pairs are the hardest to connect, so test them first.
    keyed = []
    for s in range(g.n):
        dist = bfs_distances(g, s)
        for t in range(s + 1, g.n):
            keyed.append((-dist[t], s, t))
    keyed.sort()
    return [(s, t) for _, s, t in keyed]


def _rainbow_for_colors(
    adj: Sequence[int], colors: Sequence[int], pairs: Sequence[tuple[int, int]]
) -> bool:
    for s, t in pairs:
        if not _path_exists(adj, colors, s, t):
            return False
    return True


def is_rainbow_vertex_connected(g: Graph, coloring: VertexColoring) -> bool:
    """True iff g is connected and every vertex pair has a rainbow path."""
    _check_coloring(g, coloring)
    if not is_connected(g):
        return False
    if g.n == 1:
        return True
    if coloring.k == 0:
        return is_complete(g)
    return _rainbow_for_colors(g.adj, coloring.colors, _pairs_by_distance(g))


def find_failing_pair(g: Graph, coloring: VertexColoring) -> Optional[tuple[int, int]]:
    """Lexicographically first pair with no rainbow path, or None."""
    _check_coloring(g, coloring)
    for s in range(g.n):
        for t in range(s + 1, g.n):
            if not exists_rainbow_path(g, coloring, s, t):
                return (s, t)
    return None


def rgs_colorings(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All colorings of n vertices with at most k colors, up to color renaming.

    Restricted growth order: vertex 0 gets color 0 and vertex i may use at
    most one color beyond the maximum used so far.  Yields in lexicographic
    order, which fixes the deterministic tie-break for witnesses.
    """
    if n < 1 or k < 1:
        return
    buf = [0] * n

    def grow(i: int, mx: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(buf)
            return
        top = min(mx + 1, k - 1)
        for c in range(top + 1):
            buf[i] = c
            yield from grow(i + 1, mx if c <= mx else c)

    yield from grow(1, 0)


def find_rainbow_coloring(g: Graph, k: int) -> Optional[VertexColoring]:
    """First coloring with at most k colors passing the checker, or None."""
    if not 0 <= k <= g.n:
        raise ValueError(f"color count must be in 0..{g.n}, got {k}")
    if not is_connected(g):
        raise ValueError("rainbow coloring search requires a connected graph")
    if k == 0:
        return VertexColoring(0, ()) if is_complete(g) else None
    adj = g.adj
    pairs = _pairs_by_distance(g)
    for colors in rgs_colorings(g.n, k):
        if _rainbow_for_colors(adj, colors, pairs):
            return VertexColoring(k, colors)
    return None


def rvc_exact(g: Graph) -> RvcResult:
    """Smallest k admitting a rainbow k-vertex-coloring, with witness.

    Searches k upward from the lower bound (0 for complete graphs, else
    diameter - 1).  A connected non-complete graph always succeeds by
    k = n - 2; running past that bound raises TheoremViolationError.
    """
    if not is_connected(g):
        raise ValueError("rvc is undefined for disconnected graphs")
    if is_complete(g):
        return RvcResult(0, VertexColoring(0, ()), REASON_COMPLETE)
    lo = max(1, diameter(g) - 1)
    tried: list[int] = []
    for k in range(lo, g.n - 1):
        witness = find_rainbow_coloring(g, k)
        if witness is not None:
            reason = REASON_DIAMETER if k == lo else REASON_EXHAUSTED
            return RvcResult(k, witness, reason, tuple(tried))
        tried.append(k)
    raise TheoremViolationError(
        f"no rainbow coloring with at most n-2 = {g.n - 2} colors on a "
        "connected non-complete graph"
    )
