"""Standard graph families, extremal complement pairs, and the extension check.

The two named pair constructions witness sharpness of the complement-sum
bounds 2 <= rvc(G) + rvc(G-bar) <= n - 1 for n >= 5: a path paired with its
complement attains the top, and ``diameter_two_graph`` yields a graph whose
complement also has diameter 2, so both sides cost a single color.
"""

from dataclasses import dataclass
from typing import Iterable

from .graphs import Graph, add_vertex, complement, diameter, from_edges, is_connected
from .rainbow import TheoremViolationError, rvc_exact


def path_graph(n: int) -> Graph:
    """Path 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """Center 0 joined to every other vertex."""
    if n < 1:
        raise ValueError("star needs n >= 1")
    return from_edges(n, [(0, i) for i in range(1, n)])


@dataclass(frozen=True)
class NgPair:
    """A graph with its complement and the exact rvc values of both sides."""

    g: Graph
    gbar: Graph
    n: int
    rvc_g: int
    rvc_gbar: int
    sum: int


def complement_pair(g: Graph) -> NgPair:
    """Solve both sides exactly; requires g and its complement connected."""
    gbar = complement(g)
    a = rvc_exact(g).value
    b = rvc_exact(gbar).value
    if g.n >= 5 and not 2 <= a + b <= g.n - 1:
        raise TheoremViolationError(
            f"complement pair on {g.n} vertices has rvc sum {a + b} outside "
            f"[2, {g.n - 1}]"
        )
    return NgPair(g, gbar, g.n, a, b, a + b)


def path_complement_pair(n: int) -> NgPair:
    """P_n with its complement: the sum lands exactly on n - 1.

    Needs n >= 5; the complement of P4 is P4 again and the pair sums to 4,
    above the n - 1 ceiling that holds from order 5 on.
    """
    if n < 5:
        raise ValueError("path complement pair needs n >= 5")
    pair = complement_pair(path_graph(n))
    if pair.rvc_g != n - 2 or pair.rvc_gbar != 1:
        raise TheoremViolationError(
            f"path pair on {n} vertices solved to ({pair.rvc_g}, {pair.rvc_gbar}), "
            f"expected ({n - 2}, 1)"
        )
    return pair


def diameter_two_graph(n: int) -> Graph:
    """A graph of order n >= 5 with diam(g) = diam(complement(g)) = 2.

    For n = 2k+1 take a hub v joined to spokes v_1..v_k, a clique on
    u_1..u_k, and a matching v_i u_i.  For n = 2k the last spoke shares its
    clique partner: v joined to v_1..v_k, clique on u_1..u_(k-1), matching
    v_i u_i for i < k plus the edge v_k u_(k-1).  Vertex ids: v = 0,
    v_i = i, u_j = k + j.
    """
    if n < 5:
        raise ValueError("diameter-two construction needs n >= 5")
    k = n // 2
    edges = [(0, i) for i in range(1, k + 1)]
    if n % 2:
        edges += [(i, k + i) for i in range(1, k + 1)]
        clique = range(k + 1, 2 * k + 1)
    else:
        edges += [(i, k + i) for i in range(1, k)]
        edges.append((k, n - 1))
        clique = range(k + 1, n)
    edges += [(a, b) for a in clique for b in clique if a < b]
    g = from_edges(n, edges)
    gbar = complement(g)
    if diameter(g) != 2 or diameter(gbar) != 2:
        raise TheoremViolationError(
            f"diameter-two construction on {n} vertices has diameters "
            f"({diameter(g)}, {diameter(gbar)})"
        )
    return g


def lower_bound_pair(n: int) -> NgPair:
    """Complement pair built on :func:`diameter_two_graph`; the sum is 2."""
    pair = complement_pair(diameter_two_graph(n))
    if pair.sum != 2:
        raise TheoremViolationError(
            f"diameter-two pair on {n} vertices has rvc sum {pair.sum}, expected 2"
        )
    return pair


@dataclass(frozen=True)
class ExtensionReport:
    """Outcome of attaching one vertex to q neighbors of a solved graph.

    With k = rvc of the base graph, q >= n - k forces the extended graph to
    stay within k colors; without the premise it stays within k + 1.
    ``violation`` marks a premise-true/conclusion-false outcome, which must
    never occur.
    """

    base_order: int
    rvc_base: int
    q: int
    premise_holds: bool
    rvc_extended: int
    conclusion_holds: bool
    within_plus_one: bool
    violation: bool


def verify_extension_bound(g: Graph, neighbors: Iterable[int]) -> ExtensionReport:
    """Solve g and g plus one vertex on ``neighbors``, and compare."""
    ns = sorted(set(neighbors))
    if not ns:
        raise ValueError("neighbor set must be nonempty")
    if not is_connected(g):
        raise ValueError("extension check requires a connected base graph")
    k = rvc_exact(g).value
    extended = add_vertex(g, ns)
    k2 = rvc_exact(extended).value
    q = len(ns)
    premise = q >= g.n - k
    conclusion = k2 <= k
    return ExtensionReport(
        base_order=g.n,
        rvc_base=k,
        q=q,
        premise_holds=premise,
        rvc_extended=k2,
        conclusion_holds=conclusion,
        within_plus_one=k2 <= k + 1,
        violation=premise and not conclusion,
    )
