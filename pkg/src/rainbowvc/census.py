"""Exhaustive small-graph census of rvc(G) + rvc(G-bar).

Built-in enumeration walks every edge subset of K_n (n <= 7), keeps the
graphs whose complement is also connected, and optionally deduplicates by
isomorphism: masks are visited in ascending order of the packed triangle
bit string, so the first unvisited qualifying mask is the lexicographic
minimum of its orbit, i.e. exactly the canonical representative; its whole
orbit is then marked visited.  Larger orders come in as graph6 lines from
an external generator.

Per-graph work is pure, so a census can be sharded across worker
processes; records are sorted by graph6 string afterwards, which makes the
output byte-identical for any worker count.  rvc values are memoized per
canonical form so a graph and its complement, which show up as each
other's complements in two records, are solved once each.
"""

import multiprocessing
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Iterator, Optional

from .graphs import (
    CANONICAL_MAX_VERTICES,
    Graph,
    Graph6Error,
    _mask_rows,
    _pair_table,
    canonical_form,
    complement,
    diameter,
    is_connected,
    parse_graph6,
    to_graph6,
    triangle_mask,
)
from .rainbow import rvc_exact

BUILTIN_MAX_VERTICES = 7


class IngestError(ValueError):
    """A graph6 line failed to parse in strict mode."""


@dataclass(frozen=True)
class CensusRecord:
    graph6: str
    n: int
    rvc_g: int
    rvc_gbar: int
    sum: int
    diam_g: int
    diam_gbar: int
    bounds_ok: bool


@dataclass(frozen=True)
class CensusSummary:
    n: int
    total_pairs: int
    min_sum: Optional[int]
    max_sum: Optional[int]
    min_witnesses: tuple[str, ...]
    max_witnesses: tuple[str, ...]
    violations: tuple[str, ...]


CSV_HEADER = "graph6,n,rvc_g,rvc_gbar,sum,diam_g,diam_gbar,bounds_ok"


# --- enumeration -------------------------------------------------------------

def _rows_connected(rows: list[int], full: int) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= rows[b.bit_length() - 1]
            f ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen == full


@lru_cache(maxsize=None)
def _perm_bit_maps(n: int) -> tuple[tuple[int, ...], ...]:
    # maps[perm][bit position] = the bit (as a mask) that position moves to
    pairs = _pair_table(n)
    m = len(pairs)
    pos = {}
    for p, (i, j) in enumerate(pairs):
        pos[(i, j)] = m - 1 - p
        pos[(j, i)] = m - 1 - p
    maps = []
    for perm in permutations(range(n)):
        dest = [0] * m
        for p, (i, j) in enumerate(pairs):
            dest[m - 1 - p] = 1 << pos[(perm[i], perm[j])]
        maps.append(tuple(dest))
    return tuple(maps)


def _enumerate_masks(n: int, keep: Callable[[list[int]], bool], dedup: bool) -> Iterator[Graph]:
    m = n * (n - 1) // 2
    full = (1 << n) - 1
    visited = bytearray(1 << m) if dedup else None
    pmaps = _perm_bit_maps(n) if dedup else ()
    for mask in range(1 << m):
        if visited is not None and visited[mask]:
            continue
        rows = _mask_rows(n, mask)
        if not keep(rows):
            continue
        if visited is not None:
            for pm in pmaps:
                mm = mask
                acc = 0
                while mm:
                    b = mm & -mm
                    acc |= pm[b.bit_length() - 1]
                    mm ^= b
                visited[acc] = 1
        yield Graph(n, tuple(rows))


def enumerate_graphs(n: int, dedup: bool = True) -> Iterator[Graph]:
    """All order-n graphs with G and complement(G) both connected.

    With dedup on, one representative per isomorphism class (the canonical
    labeling) in ascending canonical order; otherwise every labeled graph,
    ascending by triangle bit string.  Built-in range is 2 <= n <= 7.
    """
    if not 2 <= n <= BUILTIN_MAX_VERTICES:
        raise ValueError(
            f"built-in enumeration covers 2..{BUILTIN_MAX_VERTICES}; "
            "ingest graph6 lines for larger orders"
        )
    full = (1 << n) - 1

    def keep(rows: list[int]) -> bool:
        if not _rows_connected(rows, full):
            return False
        crows = [full & ~r & ~(1 << i) for i, r in enumerate(rows)]
        return _rows_connected(crows, full)

    return _enumerate_masks(n, keep, dedup)


def enumerate_connected_graphs(n: int, dedup: bool = True) -> Iterator[Graph]:
    """All connected order-n graphs, complement unconstrained (1 <= n <= 7)."""
    if not 1 <= n <= BUILTIN_MAX_VERTICES:
        raise ValueError(f"built-in enumeration covers 1..{BUILTIN_MAX_VERTICES}")
    full = (1 << n) - 1
    return _enumerate_masks(n, lambda rows: _rows_connected(rows, full), dedup)


def ingest_graph6(
    lines: Iterable[str],
    strict: bool = True,
    errors: Optional[list[tuple[int, str]]] = None,
) -> Iterator[Graph]:
    """Parse graph6 lines, keeping graphs whose complement is also connected.

    Blank lines are skipped.  A malformed line raises IngestError with its
    line number in strict mode; otherwise it is recorded in ``errors`` (if
    given) and skipped.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            if strict:
                raise IngestError(f"line {lineno}: {exc}") from exc
            if errors is not None:
                errors.append((lineno, str(exc)))
            continue
        if is_connected(g) and is_connected(complement(g)):
            yield g


# --- per-record computation ---------------------------------------------------

_RVC_MEMO: dict[object, int] = {}


def _memo_key(g: Graph) -> object:
    if g.n <= CANONICAL_MAX_VERTICES:
        return canonical_form(g)
    return (g.n, triangle_mask(g))


def _rvc_value(g: Graph) -> int:
    key = _memo_key(g)
    value = _RVC_MEMO.get(key)
    if value is None:
        value = rvc_exact(g).value
        _RVC_MEMO[key] = value
    return value


def _compute_record(line: str) -> CensusRecord:
    g = parse_graph6(line)
    gbar = complement(g)
    a = _rvc_value(g)
    b = _rvc_value(gbar)
    total = a + b
    return CensusRecord(
        graph6=line,
        n=g.n,
        rvc_g=a,
        rvc_gbar=b,
        sum=total,
        diam_g=diameter(g),
        diam_gbar=diameter(gbar),
        bounds_ok=2 <= total <= g.n - 1,
    )


def census_run(
    source: Iterable[Graph], n: int, workers: int = 1
) -> tuple[list[CensusRecord], CensusSummary]:
    """Compute one record per graph and aggregate the bound check.

    Every graph in the stream must have order n with both sides connected.
    Records come back sorted by graph6 string regardless of stream order or
    worker count.
    """
    lines: list[str] = []
    for g in source:
        if g.n != n:
            raise ValueError(f"stream mixes orders: expected {n}, got {g.n}")
        if not is_connected(g) or not is_connected(complement(g)):
            raise ValueError(
                f"stream graph {to_graph6(g)} fails the both-sides-connected precondition"
            )
        lines.append(to_graph6(g))
    if workers > 1 and len(lines) > 1:
        chunk = max(1, len(lines) // (workers * 8))
        with multiprocessing.Pool(processes=workers) as pool:
            records = pool.map(_compute_record, lines, chunksize=chunk)
    else:
        records = [_compute_record(line) for line in lines]
    records.sort(key=lambda r: r.graph6)
    return records, _summarize(records, n)


def _summarize(records: list[CensusRecord], n: int) -> CensusSummary:
    if not records:
        return CensusSummary(n, 0, None, None, (), (), ())
    sums = [r.sum for r in records]
    lo, hi = min(sums), max(sums)
    return CensusSummary(
        n=n,
        total_pairs=len(records),
        min_sum=lo,
        max_sum=hi,
        min_witnesses=tuple(sorted({r.graph6 for r in records if r.sum == lo})),
        max_witnesses=tuple(sorted({r.graph6 for r in records if r.sum == hi})),
        violations=tuple(sorted({r.graph6 for r in records if not r.bounds_ok})),
    )


# --- output ---------------------------------------------------------------

def records_to_csv(records: Iterable[CensusRecord]) -> str:
    lines = [CSV_HEADER]
    for r in records:
        flag = "true" if r.bounds_ok else "false"
        lines.append(
            f"{r.graph6},{r.n},{r.rvc_g},{r.rvc_gbar},{r.sum},{r.diam_g},{r.diam_gbar},{flag}"
        )
    return "\n".join(lines) + "\n"


def summary_to_dict(summary: CensusSummary) -> dict:
    return {
        "n": summary.n,
        "total_pairs": summary.total_pairs,
        "min_sum": summary.min_sum,
        "max_sum": summary.max_sum,
        "min_witnesses": list(summary.min_witnesses),
        "max_witnesses": list(summary.max_witnesses),
        "violations": list(summary.violations),
    }
