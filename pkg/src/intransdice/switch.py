"""Rewriting partitions by relabelling blocks and by simple switches.

A simple switch at ``k`` exchanges the ground elements ``k`` and ``k + 1``
between the blocks holding them. If the blocks differ, the only margin that
moves is between those two blocks: the block that receives ``k + 1`` gains 2.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from . import partition as part
from . import tournament as tour
from .errors import ConstructionError, InputError
from .partition import RegularPartition

__all__ = [
    "SwitchRecord",
    "relabel_blocks",
    "permute_ground",
    "apply_simple_switch",
    "apply_switches",
    "replay",
    "stratify",
    "switch_path",
    "format_switch_log",
    "parse_switch_log",
    "stratified_models",
]


@dataclass(frozen=True)
class SwitchRecord:
    """One simple switch.

    ``p1`` held ``k`` before (and ``k + 1`` after), ``p2`` held ``k + 1``
    before. ``delta`` is the change of ``Q[p1][p2]``: 2, or 0 when
    ``p1 == p2`` and nothing moved.
    """

    k: int
    p1: int
    p2: int
    delta: int

    @property
    def same_block(self) -> bool:
        return self.p1 == self.p2

    def to_line(self) -> str:
        return f"switch {self.k} {self.p1} {self.p2} {self.delta}"


def relabel_blocks(P: RegularPartition, perm: Sequence[int]) -> RegularPartition:
    """``A^pi``: block ``pi(i)`` of the result is block ``i`` of ``P``."""
    p = tour._check_perm(perm, P.n)
    out = [None] * P.n
    for i, b in enumerate(P.blocks, start=1):
        out[p[i - 1] - 1] = b
    return RegularPartition(out)


def permute_ground(P: RegularPartition, perm: Sequence[int]) -> RegularPartition:
    """Image of every block under a permutation of ``1..Nn``."""
    p = tour._check_perm(perm, P.size)
    return RegularPartition([p[a - 1] for a in b] for b in P.blocks)


def apply_simple_switch(P: RegularPartition, k: int) -> tuple[RegularPartition, SwitchRecord]:
    if not 1 <= k < P.size:
        raise InputError(f"switch position {k} outside 1..{P.size - 1}")
    own = P.owner()
    p1, p2 = own[k], own[k + 1]
    if p1 == p2:
        return P, SwitchRecord(k, p1, p2, 0)
    blocks = [list(b) for b in P.blocks]
    blocks[p1 - 1] = [k + 1 if a == k else a for a in blocks[p1 - 1]]
    blocks[p2 - 1] = [k if a == k + 1 else a for a in blocks[p2 - 1]]
    return RegularPartition(blocks), SwitchRecord(k, p1, p2, 2)


def apply_switches(P: RegularPartition, ks: Iterable[int]) -> tuple[RegularPartition, list[SwitchRecord]]:
    records = []
    for k in ks:
        P, rec = apply_simple_switch(P, k)
        records.append(rec)
    return P, records


def replay(P: RegularPartition, records: Iterable[SwitchRecord]) -> RegularPartition:
    """Re-apply logged switches, checking each against its record."""
    for rec in records:
        P, got = apply_simple_switch(P, rec.k)
        if got != rec:
            raise InputError(f"log record {rec.to_line()!r} does not match partition (got {got.to_line()!r})")
    return P


def _bubble_down(own: list[int], blocks: list[list[int]], start: int, stop: int,
                 records: list[SwitchRecord]) -> None:
    """Move the element at ``start`` down to ``stop`` by switches, each lowering a margin >= 3 by 2.

    Works in place on the owner array and the (ascending) block lists; swapping
    the adjacent values ``k`` and ``k + 1`` keeps every block sorted.
    """
    for k in range(start - 1, stop - 1, -1):
        lower, upper = own[k], own[k + 1]
        q = part._q_sorted(blocks[upper - 1], blocks[lower - 1])
        if q < 3:
            raise ConstructionError(
                f"switch at {k} would lower Q({upper},{lower}) = {q} below 1"
            )
        lo, hi = blocks[lower - 1], blocks[upper - 1]
        lo[lo.index(k)] = k + 1
        hi[hi.index(k + 1)] = k
        own[k], own[k + 1] = upper, lower
        records.append(SwitchRecord(k, lower, upper, 2))


def stratify(P: RegularPartition) -> tuple[RegularPartition, list[SwitchRecord]]:
    """Stratified partition with the same induced digraph, reached by simple switches.

    First the block maxima are pushed to ``2n+1..3n``, then the middle
    elements to ``n+1..2n``. Each switch exchanges a lower-level element
    sitting just above a higher-level element of another block, which can
    only lower a margin that was at least 3.
    """
    if P.N != 3:
        raise InputError("stratify needs N = 3")
    n = P.n
    own = P.owner()
    blocks = [list(b) for b in P.blocks]
    records: list[SwitchRecord] = []
    for level, top in ((2, 3 * n), (1, 2 * n)):
        floor = top - n + 1
        while True:
            tier = {b[level] for b in blocks}
            m = min(tier)
            if m >= floor:
                break
            # smallest element above m that is not in this tier
            k1 = m
            while k1 in tier:
                k1 += 1
            if k1 > top:
                raise ConstructionError(f"no lower-level element in [{m}, {top}]")
            _bubble_down(own, blocks, k1, m, records)
    out = RegularPartition(blocks)
    if not part.is_stratified(out):
        raise ConstructionError("stratify finished with a non-stratified partition")
    return out, records


def switch_path(P: RegularPartition, target: RegularPartition) -> list[SwitchRecord]:
    """Simple switches turning ``P`` into ``target`` (same ``n`` and ``N``).

    Bubble-sort style: for each ground position in turn, the nearest element
    above it that has the wanted block label is moved down.
    """
    if (P.n, P.N) != (target.n, target.N):
        raise InputError("partitions differ in shape")
    want = target.owner()
    records = []
    cur = P
    size = P.size
    for pos in range(1, size + 1):
        own = cur.owner()
        if own[pos] == want[pos]:
            continue
        q = next(q for q in range(pos + 1, size + 1) if own[q] == want[pos])
        for k in range(q - 1, pos - 1, -1):
            cur, rec = apply_simple_switch(cur, k)
            records.append(rec)
    if cur != target:
        raise ConstructionError("switch path does not reach target")
    return records


def format_switch_log(records: Iterable[SwitchRecord]) -> str:
    return "".join(rec.to_line() + "\n" for rec in records)


def parse_switch_log(text: str) -> list[SwitchRecord]:
    records = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 5 or parts[0] != "switch":
            raise InputError(f"bad switch log line {raw!r}")
        try:
            k, p1, p2, delta = (int(x) for x in parts[1:])
        except ValueError as exc:
            raise InputError(f"bad switch log line {raw!r}") from exc
        if delta not in (0, 2) or (delta == 0) != (p1 == p2):
            raise InputError(f"inconsistent switch record {raw!r}")
        records.append(SwitchRecord(k, p1, p2, delta))
    return records


def _tournament_key(P: RegularPartition) -> tuple[int, ...] | None:
    Q = part.q_matrix(P)
    n = P.n
    key = []
    for i in range(n):
        for j in range(i + 1, n):
            if Q[i][j] == 0:
                return None
            key.append(1 if Q[i][j] > 0 else 0)
    return tuple(key)


def stratified_models(seeds: Iterable[RegularPartition], limit: int | None = None):
    """Explore stratified partitions reachable by level-preserving switches.

    A switch at ``k`` with ``k`` and ``k + 1`` in the same level keeps a
    stratified partition stratified, and such switches generate every
    permutation within each level, so from any stratified seed this visits
    all stratified ``n`` partitions of ``[3n]`` (up to block order).

    Returns ``{canonical tournament key: partition}`` with one witness per
    isomorphism class of induced tournament.
    """
    seeds = list(seeds)
    if not seeds:
        return {}
    n = seeds[0].n
    level_moves = [k for k in range(1, 3 * n) if k % n != 0]
    canon_cache: dict[tuple[int, ...], tuple[int, ...]] = {}
    found: dict[tuple[int, ...], RegularPartition] = {}

    def norm(P: RegularPartition) -> tuple:
        return tuple(sorted(P.blocks))

    seen = set()
    queue = deque()
    for s in seeds:
        if s.n != n or not part.is_stratified(s):
            raise InputError("seeds must be stratified partitions of one common size")
        if norm(s) not in seen:
            seen.add(norm(s))
            queue.append(s)
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    while queue:
        P = queue.popleft()
        key = _tournament_key(P)
        if key is not None:
            canon = canon_cache.get(key)
            if canon is None:
                R = tour.Tournament(n, [(i, j) if b else (j, i) for (i, j), b in zip(pairs, key)])
                canon = canon_cache[key] = tour.canonical_form(R)
            found.setdefault(canon, P)
            if limit is not None and len(found) >= limit:
                break
        for k in level_moves:
            nxt, rec = apply_simple_switch(P, k)
            if rec.same_block:
                continue
            h = norm(nxt)
            if h not in seen:
                seen.add(h)
                queue.append(nxt)
    return found
