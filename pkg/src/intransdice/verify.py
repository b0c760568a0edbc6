"""Brute-force oracle and verification reports.

Nothing here reuses the merge counter in :mod:`intransdice.partition`; every
margin is recomputed by comparing all ``|A| * |B|`` pairs.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import asdict, dataclass, field

import numpy as np

from .errors import InputError
from .tournament import Digraph

__all__ = ["oracle_q", "oracle_q_matrix", "check_blocks", "VerificationReport", "verify_model"]

# ground sets above this size make the quadratic oracle slow
LARGE_GROUND_SET = 200_000


def oracle_q(A, B) -> int:
    """``#{a > b} - #{b > a}`` over all pairs, by exhaustive comparison."""
    a = np.asarray(list(A), dtype=np.int64)
    b = np.asarray(list(B), dtype=np.int64)
    if a.size == 0 or b.size == 0:
        raise InputError("oracle_q needs nonempty sets")
    cmp = a[:, None] - b[None, :]
    if np.any(cmp == 0):
        raise InputError("oracle_q needs disjoint sets")
    return int(np.count_nonzero(cmp > 0)) - int(np.count_nonzero(cmp < 0))


def oracle_q_matrix(blocks) -> list[list[int]]:
    """All pairwise margins of equal-size disjoint blocks, by exhaustive comparison."""
    n = len(blocks)
    N = len(blocks[0])
    if n * N * N > 4_000_000:
        Q = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                q = oracle_q(blocks[i], blocks[j])
                Q[i][j], Q[j][i] = q, -q
        return Q
    arr = np.asarray(blocks, dtype=np.int64)
    rows = []
    for i in range(n):
        # sign of every comparison of block i's elements against every element of every block
        s = np.sign(arr[i][:, None, None] - arr[None, :, :])
        rows.append(s.sum(axis=(0, 2)))
    return np.array(rows, dtype=np.int64).tolist()


def check_blocks(blocks) -> str | None:
    """First violation of the regular-partition invariants, or ``None``."""
    blocks = [list(b) for b in blocks]
    if not blocks:
        return "no blocks"
    N = len(blocks[0])
    if N == 0:
        return "block 1 is empty"
    seen: dict[int, int] = {}
    for i, b in enumerate(blocks, start=1):
        if len(b) != N:
            return f"block {i} has size {len(b)}, expected {N}"
        for x in b:
            if x in seen:
                return f"element {x} in blocks {seen[x]} and {i}"
            seen[x] = i
    total = N * len(blocks)
    for x in range(1, total + 1):
        if x not in seen:
            return f"element {x} missing from ground set 1..{total}"
    extra = sorted(x for x in seen if not 1 <= x <= total)
    if extra:
        return f"element {extra[0]} outside ground set 1..{total}"
    return None


@dataclass
class VerificationReport:
    valid: bool
    violation: str | None
    n: int
    N: int
    q: list[list[int]] = field(default_factory=list)
    edges: list[tuple[int, int]] = field(default_factory=list)
    ties: list[tuple[int, int]] = field(default_factory=list)
    target: list[tuple[int, int]] | None = None
    match: bool = False
    mismatches: list[tuple[int, int]] = field(default_factory=list)
    proper: bool = False
    stratified: bool | None = None

    def to_dict(self) -> dict:
        d = asdict(self)
        for key in ("edges", "ties", "mismatches", "target"):
            if d[key] is not None:
                d[key] = [list(e) for e in d[key]]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"partition: n={self.n} N={self.N} valid={'yes' if self.valid else 'no'}"]
        if self.violation:
            lines.append(f"violation: {self.violation}")
            return "\n".join(lines) + "\n"
        lines.append("margins Q (row beats column when positive):")
        width = max(len(str(x)) for row in self.q for x in row) if self.q else 1
        for row in self.q:
            lines.append("  " + " ".join(str(x).rjust(width) for x in row))
        lines.append("induced edges: " + " ".join(f"{i}->{j}" for i, j in self.edges))
        if self.ties:
            lines.append("ties: " + " ".join(f"{i}~{j}" for i, j in self.ties))
        lines.append(f"proper: {'yes' if self.proper else 'no'}")
        if self.stratified is not None:
            lines.append(f"stratified: {'yes' if self.stratified else 'no'}")
        if self.target is not None:
            lines.append(f"match: {'yes' if self.match else 'NO'}")
            if self.mismatches:
                lines.append("missing target edges: " + " ".join(f"{i}->{j}" for i, j in self.mismatches))
        return "\n".join(lines) + "\n"


def _stratified(blocks) -> bool:
    n = len(blocks)
    for s in range(3):
        if sorted(sorted(b)[s] for b in blocks) != list(range(n * s + 1, n * s + n + 1)):
            return False
    return True


def verify_model(P, R: Digraph | None = None) -> VerificationReport:
    """Recompute the induced relation of ``P`` from scratch and compare with ``R``.

    ``P`` is a :class:`~intransdice.partition.RegularPartition` or any
    sequence of blocks. ``match`` is true iff the induced digraph equals ``R``
    exactly; ``mismatches`` lists target edges ``(i, j)`` not reproduced.
    """
    blocks = [sorted(b) for b in getattr(P, "blocks", P)]
    n = len(blocks)
    N = len(blocks[0]) if blocks else 0
    if R is not None and R.n != n:
        raise InputError(f"partition has {n} blocks but tournament has {R.n} vertices")
    violation = check_blocks(blocks)
    target = R.edges() if R is not None else None
    if violation:
        return VerificationReport(False, violation, n, N, target=target)
    if N * n > LARGE_GROUND_SET:
        warnings.warn(f"oracle on ground set of {N * n} elements is slow", stacklevel=2)
    Q = oracle_q_matrix(blocks)
    edges = [(i + 1, j + 1) for i in range(n) for j in range(n) if Q[i][j] > 0]
    ties = [(i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if Q[i][j] == 0]
    proper = len({sum(b) for b in blocks}) == 1
    stratified = _stratified(blocks) if N == 3 else None
    report = VerificationReport(True, None, n, N, Q, edges, ties, target, False, [], proper, stratified)
    if R is not None:
        got = set(edges)
        report.mismatches = [e for e in target if e not in got]
        report.match = not report.mismatches and len(got) == len(target)
        if not report.match and not report.mismatches:
            # induced relation has extra edges the target lacks
            report.mismatches = sorted(got - set(target))
    return report
