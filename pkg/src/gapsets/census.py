"""Exhaustive, exact counting of gapsets by genus, depth and multiplicity.

Counting walks compositions of the genus (the Kunz-coordinate tilings) and
keeps those passing the coordinate inequality system: depth filters become
a bound on the largest part, a multiplicity filter fixes the number of
parts, and pruning happens at generation time, never by post-filtering an
unrestricted stream.  Counts are exact and bounded by 2**63 - 1; the genus
is capped accordingly.

This module is the brute-force oracle: every closed formula and every
tabulated value elsewhere in the package is checked against it.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from .core import GapSet
from .kunz import KunzVector, coords_violation, from_kunz
from .sequences import fibonacci, padovan
from .tilings import (
    _advance,
    _start,
    compositions_fixed_parts,
    count_compositions,
    enumerate_compositions,
)

__all__ = [
    "MAX_GENUS",
    "CensusQuery",
    "CensusResult",
    "count_depth3_family",
    "count_gapsets",
    "count_gapsets_depth_at_most",
    "count_m_extensions",
    "enumerate_depth3_family",
]

# Counts live in 64 bits; 2**(g-1) m-extensions at genus g forces g < 64.
MAX_GENUS = 63
_MAX_COUNT = (1 << 63) - 1


@dataclass(frozen=True)
class CensusQuery:
    """What to count: a genus with optional depth and multiplicity filters.

    `depth` asks for that exact depth, `max_depth` for all depths up to the
    bound; at most one may be set.  `mult` fixes the multiplicity.
    """

    genus: int
    depth: Optional[int] = None
    max_depth: Optional[int] = None
    mult: Optional[int] = None

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        if self.depth is not None and self.max_depth is not None:
            raise ValueError("depth and max_depth are mutually exclusive")
        for q in (self.depth, self.max_depth):
            if q is not None and q < 0:
                raise ValueError(f"depth filter must be >= 0, got {q}")
        if self.mult is not None and self.mult < 2:
            raise ValueError(f"multiplicity filter must be >= 2, got {self.mult}")


@dataclass(frozen=True)
class CensusResult:
    query: CensusQuery
    count: int
    elapsed: float
    shards: int
    items: Optional[tuple[GapSet, ...]] = None


def _count_free(g: int, cap: int, exact: Optional[int], first: Optional[int]) -> int:
    """Count system-passing compositions of g with parts <= cap.

    Works directly on the walker's live buffer; `exact` additionally
    requires the largest part to equal it.
    """
    buf, k, lo = _start(g, cap, first)
    if buf is None:
        return 0
    n = 0
    while True:
        if coords_violation(buf) is None and (exact is None or max(buf) == exact):
            n += 1
        if not _advance(buf, k, lo):
            return n


def _count_fixed(g: int, parts: int, cap: int, exact: Optional[int], first: Optional[int]) -> int:
    """Same as `_count_free` but over compositions with a fixed part count."""
    if first is None:
        stream: Iterator[tuple[int, ...]] = compositions_fixed_parts(g, parts, cap)
    elif first > cap or first > g:
        return 0
    elif parts == 1:
        stream = iter([(g,)]) if first == g else iter(())
    else:
        stream = (
            (first,) + rest for rest in compositions_fixed_parts(g - first, parts - 1, cap)
        )
    n = 0
    for c in stream:
        if coords_violation(c) is None and (exact is None or max(c) == exact):
            n += 1
    return n


def _count_shard(args: tuple) -> int:
    g, parts, cap, exact, first = args
    if parts is None:
        return _count_free(g, cap, exact, first)
    return _count_fixed(g, parts, cap, exact, first)


def _plan(query: CensusQuery) -> Optional[tuple[int, Optional[int], int, Optional[int]]]:
    """Reduce a query to (genus, fixed part count, part cap, exact depth).

    Returns None when the answer is zero without enumeration.
    """
    g = query.genus
    exact = query.depth
    cap = g
    if exact is not None:
        if exact == 0 or exact > g:
            return None
        cap = exact
    elif query.max_depth is not None:
        if query.max_depth == 0:
            return None
        cap = min(query.max_depth, g)
    parts = None
    if query.mult is not None:
        parts = query.mult - 1
        if parts > g:
            return None
    return g, parts, cap, exact


def count_gapsets(query: CensusQuery, jobs: int = 1, collect: bool = False) -> CensusResult:
    """Exact number of gapsets matching the query.

    With jobs > 1 the stream is partitioned by the value of the first part
    and shards are counted in parallel; item collection always runs
    single-shard so the lexicographic order survives.
    """
    if query.genus > MAX_GENUS:
        raise OverflowError(f"genus {query.genus} exceeds the 64-bit count guard ({MAX_GENUS})")
    t0 = time.perf_counter()

    if query.genus == 0:
        # the empty gapset: genus 0, multiplicity 1, depth 0
        hit = query.mult is None and query.depth in (None, 0)
        items = None
        if collect:
            items = (GapSet((), 0, 1, 0, 0),) if hit else ()
        return CensusResult(query, int(hit), time.perf_counter() - t0, 1, items)

    plan = _plan(query)
    if plan is None:
        return CensusResult(query, 0, time.perf_counter() - t0, 1, () if collect else None)
    g, parts, cap, exact = plan

    if collect:
        found = []
        stream = (
            compositions_fixed_parts(g, parts, cap)
            if parts is not None
            else enumerate_compositions(g, cap)
        )
        for c in stream:
            if coords_violation(c) is None and (exact is None or max(c) == exact):
                found.append(_as_gapset(g, c))
        return CensusResult(query, len(found), time.perf_counter() - t0, 1, tuple(found))

    firsts = list(range(1, min(cap, g if parts is None else g - (parts - 1)) + 1))
    if jobs > 1 and len(firsts) > 1:
        tasks = [(g, parts, cap, exact, v) for v in firsts]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            total = sum(pool.map(_count_shard, tasks))
        shards = len(tasks)
    else:
        total = _count_shard((g, parts, cap, exact, None))
        shards = 1
    if total > _MAX_COUNT:
        raise OverflowError("census count exceeds 64 bits")
    return CensusResult(query, total, time.perf_counter() - t0, shards)


def _as_gapset(g: int, coords: tuple[int, ...]) -> GapSet:
    ext = from_kunz(KunzVector(len(coords) + 1, coords))
    return GapSet(ext.elements, g, ext.modulus, ext.conductor, ext.depth)


def count_m_extensions(g: int) -> int:
    """Stream length of the unrestricted composition enumeration at genus g.

    Always equals 2**(g-1); the count is obtained by walking the stream, so
    the equality stays a checkable fact.  Genus 64 and above would overflow
    64-bit counts and is rejected (and walking 2**62 items is impractical
    anyway; tests stay near g = 20).
    """
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    if g > MAX_GENUS:
        raise OverflowError(f"genus {g} exceeds the 64-bit count guard ({MAX_GENUS})")
    n = count_compositions(g)
    assert n == 1 << (g - 1), "composition stream disagrees with 2**(g-1)"
    return n


def count_gapsets_depth_at_most(g: int, k: int) -> int:
    """Number of gapsets of genus g and depth <= k.

    Includes the empty gapset at g = 0 (depth 0) and the depth-1 ordinary
    gapset at every positive genus, so column sums line up with the
    unfiltered census.
    """
    if g < 0 or k < 0:
        raise ValueError("genus and depth bound must be >= 0")
    if g == 0:
        return 1
    if k == 0:
        return 0
    return count_gapsets(CensusQuery(g, max_depth=k)).count


def _restricted(total: int, allowed: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if total == 0:
        yield ()
        return
    for p in allowed:
        if p <= total:
            for rest in _restricted(total - p, allowed):
                yield (p,) + rest


def enumerate_depth3_family(g: int) -> Iterator[KunzVector]:
    """A guaranteed-gapset family of depth 3: coordinate vectors built as
    a {2,3}-prefix, a pivot part equal to 3, and a {1,2}-suffix.

    Every emitted vector passes the inequality system and has largest
    coordinate exactly 3.  Vectors are deduplicated by value (the pivot is
    in fact forced to be the last 3, but the guard is cheap).
    """
    if g < 3:
        return
    seen = set()
    for n in range(0, g - 2):  # prefix total; parts of size 2/3 skip n == 1 on their own
        for prefix in _restricted(n, (2, 3)):
            for suffix in _restricted(g - 3 - n, (1, 2)):
                vec = prefix + (3,) + suffix
                if vec not in seen:
                    seen.add(vec)
                    yield KunzVector(len(vec) + 1, vec)


def count_depth3_family(g: int) -> int:
    """Size of the depth-3 family at genus g, by the Padovan-Fibonacci formula.

    Under __debug__ (and while the family is small enough to walk) the
    closed form is checked against the actual stream length.
    """
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    if g < 3:
        return 0
    total = fibonacci(g - 2) + sum(padovan(n) * fibonacci(g - 2 - n) for n in range(2, g - 2))
    if __debug__ and g <= 24:
        assert total == sum(1 for _ in enumerate_depth3_family(g)), "closed form vs stream"
    return total
