"""Explicit partitions modelling a given tournament.

The main entry point is :func:`construct_model`, which builds an ``n``
partition of ``[3^(n-2) n]`` for any tournament on ``1..n`` by inserting
vertices one at a time. Every public builder checks its output with the
brute-force oracle in :mod:`intransdice.verify` before returning.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from . import partition as part
from . import tournament as tour
from .errors import ConstructionError, InputError, PreconditionError
from .partition import RegularPartition
from .tournament import Tournament
from .verify import oracle_q, verify_model

__all__ = [
    "INSERTION_GADGET",
    "EXTENSION_GADGET",
    "ConstructionPlan",
    "trivial_partition",
    "insertion_family",
    "insert_vertex",
    "construct_model",
    "construct_model_with_N",
    "extension_family",
    "extend_two",
    "group_game_partition",
]

# B1, B2 share the element 2; B3 is disjoint from both.
INSERTION_GADGET = {
    "B1": (2, 4, 6),
    "B2": (2, 3, 8),
    "B3": (1, 5, 7),
}

# B1, B2 share B0 = {10}.
EXTENSION_GADGET = {
    "B0": (10,),
    "B1": (2, 7, 10),
    "B2": (4, 5, 10),
    "B3": (3, 8, 9),
    "B4": (1, 6, 11),
}


def _check_gadgets() -> None:
    g = INSERTION_GADGET
    assert oracle_q(g["B2"], g["B3"]) == 1 and oracle_q(g["B3"], g["B1"]) == 1
    e = EXTENSION_GADGET
    for hi, lo in [("B2", "B3"), ("B3", "B4"), ("B4", "B2"), ("B3", "B1"), ("B1", "B4")]:
        assert oracle_q(e[hi], e[lo]) == 1, (hi, lo)
    assert oracle_q(e["B1"][:2], e["B2"][:2]) == 0
    assert oracle_q(e["B0"], e["B1"][:2]) == 2 and oracle_q(e["B0"], e["B2"][:2]) == 2


_check_gadgets()


@dataclass(frozen=True)
class ConstructionPlan:
    """How :func:`construct_model` proceeds.

    ``order`` is the vertex insertion order (default ascending). With
    ``strong_decomposition`` each strong component is modelled separately and
    the pieces are stacked by domination product.
    """

    order: tuple[int, ...] | None = None
    strong_decomposition: bool = False


def _self_check(P: RegularPartition, R: Tournament, what: str) -> RegularPartition:
    report = verify_model(P, R)
    if not report.match:
        raise ConstructionError(f"{what}: output fails verification, mismatches {report.mismatches}")
    return P


def trivial_partition(N: int) -> RegularPartition:
    """The single block ``{1..N}``."""
    if N < 1:
        raise InputError("N must be >= 1")
    return RegularPartition([range(1, N + 1)])


def insertion_family(A: RegularPartition, J: Iterable[int]) -> list[list[int]]:
    """The unpacked sets ``C_1..C_{n+1}`` for inserting a vertex that beats exactly ``J``.

    Requires ``J`` and its complement both nonempty. ``C_i`` is
    ``B1 x| A_i`` for ``i`` in ``J``, ``B2 x| A_i`` otherwise, and the new
    set is ``B3 x| [N]``, all with ``M = Nn``.
    """
    Jset = set(J)
    n, N = A.n, A.N
    if not Jset or len(Jset) == n:
        raise PreconditionError("J and its complement must both be nonempty")
    M = A.size
    g = INSERTION_GADGET
    family = [
        part.lex_product_sets(g["B1"] if i in Jset else g["B2"], A.block(i), M)
        for i in range(1, n + 1)
    ]
    family.append(part.lex_product_sets(g["B3"], range(1, N + 1), M))
    return family


def _insert(A: RegularPartition, Jset: set[int]) -> RegularPartition:
    n, N = A.n, A.N
    if len(Jset) == n:
        return part.replicate(part.domination_product(trivial_partition(N), A), 3)
    if not Jset:
        dominated = part.domination_product(A, trivial_partition(N))
        # move the bottom block to the end so the new vertex is n + 1
        rotated = RegularPartition(list(dominated.blocks[1:]) + [dominated.blocks[0]])
        return part.replicate(rotated, 3)
    return part.pack(insertion_family(A, Jset))


def insert_vertex(A: RegularPartition, J: Iterable[int]) -> RegularPartition:
    """Add block ``n+1`` beating exactly the blocks in ``J``.

    Returns an ``n+1`` partition of ``[3N(n+1)]`` whose restriction to
    ``1..n`` induces the same tournament as ``A``.
    """
    Jset = set(J)
    if any(not 1 <= j <= A.n for j in Jset):
        raise InputError(f"J must be a subset of 1..{A.n}")
    R = part.induced_tournament(A)
    D = _insert(A, Jset)
    return _self_check(D, _with_new_vertex(R, Jset), "insert_vertex")


def _with_new_vertex(R: Tournament, J: set[int]) -> Tournament:
    n = R.n
    edges = list(R.edge_set())
    edges += [(n + 1, j) if j in J else (j, n + 1) for j in range(1, n + 1)]
    return Tournament(n + 1, edges)


def _model_by_insertion(R: Tournament, order: Sequence[int]) -> RegularPartition:
    """Model ``R`` inserting vertices in ``order``; blocks come back in vertex order."""
    n = R.n
    if n == 1:
        return trivial_partition(1)
    v = list(order)
    P = RegularPartition([[2], [1]] if R.beats(v[0], v[1]) else [[1], [2]])
    for k in range(2, n):
        J = {a + 1 for a in range(k) if R.beats(v[k], v[a])}
        P = _insert(P, J)
    # position a holds vertex v[a]
    blocks = [None] * n
    for a, b in enumerate(P.blocks):
        blocks[v[a] - 1] = b
    return RegularPartition(blocks)


def _model_by_components(R: Tournament) -> RegularPartition:
    comps = tour.condensation(R)
    models = []
    for comp in comps:
        verts = sorted(comp)
        models.append((verts, _model_by_insertion(tour.restrict(R, verts), range(1, len(verts) + 1))))
    N = math.lcm(*(m.N for _, m in models))
    # dominated component at the bottom, dominant one on top
    layout: list[int] = []
    P = None
    for verts, m in reversed(models):
        m = part.replicate(m, N // m.N)
        P = m if P is None else part.domination_product(m, P)
        layout += verts
    blocks = [None] * R.n
    for pos, vertex in enumerate(layout):
        blocks[vertex - 1] = P.blocks[pos]
    return RegularPartition(blocks)


def construct_model(R: Tournament, plan: ConstructionPlan | None = None) -> RegularPartition:
    """An ``n`` partition whose induced tournament is exactly ``R``.

    Without strong decomposition the result is a partition of
    ``[3^(n-2) n]`` for ``n >= 2``.
    """
    plan = plan or ConstructionPlan()
    order = tuple(plan.order) if plan.order is not None else tuple(R.vertices())
    if sorted(order) != list(R.vertices()):
        raise InputError(f"insertion order must be a permutation of 1..{R.n}")
    if plan.strong_decomposition:
        P = _model_by_components(R)
    else:
        P = _model_by_insertion(R, order)
    return _self_check(P, R, "construct_model")


def construct_model_with_N(R: Tournament, N_target: int, plan: ConstructionPlan | None = None) -> RegularPartition:
    """Model ``R`` with block size exactly ``N_target``.

    Admissible targets: odd ``N >= 3^(n-2)`` or even ``N >= 2 * 3^(n-2)``.
    """
    n = R.n
    if n == 1:
        if N_target < 1:
            raise InputError("N_target must be >= 1")
        return trivial_partition(N_target)
    bound = 3 ** (n - 2)
    if N_target % 2 == 1 and N_target < bound:
        raise InputError(f"odd N_target must be >= {bound} for n = {n}")
    if N_target % 2 == 0 and N_target < 2 * bound:
        raise InputError(f"even N_target must be >= {2 * bound} for n = {n}")
    P = construct_model(R, plan)
    if N_target % 2 == 0:
        P = part.replicate(P, 2)
    while P.N < N_target:
        P = part.pad(P)
    if P.N != N_target:
        raise ConstructionError(f"reached N = {P.N}, wanted {N_target}")
    return _self_check(P, R, "construct_model_with_N")


def extension_family(A: RegularPartition, J: Iterable[int]) -> list[list[int]]:
    """Unpacked sets ``C_1..C_n, U, V`` for the two-vertex extension via ``J``."""
    Jset = set(J)
    n, N = A.n, A.N
    if not Jset or len(Jset) == n:
        raise PreconditionError("J and its complement must both be nonempty")
    M = A.size
    g = EXTENSION_GADGET
    family = [
        part.lex_product_sets(g["B2"] if i in Jset else g["B1"], A.block(i), M)
        for i in range(1, n + 1)
    ]
    family.append(part.lex_product_sets(g["B3"], range(1, N + 1), M))
    family.append(part.lex_product_sets(g["B4"], range(1, N + 1), M))
    return family


def extend_two(A: RegularPartition, J: Iterable[int]) -> RegularPartition:
    """Add ``u = n+1`` and ``v = n+2`` realizing ``extend(R[A], J)``.

    Result is an ``n+2`` partition of ``[3N(n+2)]``.
    """
    Jset = set(J)
    if any(not 1 <= j <= A.n for j in Jset):
        raise InputError(f"J must be a subset of 1..{A.n}")
    R = part.induced_tournament(A)
    D = part.pack(extension_family(A, Jset))
    return _self_check(D, tour.extend(R, Jset), "extend_two")


def group_game_partition(n: int) -> RegularPartition:
    """Proper stratified ``2n+1`` partition of ``[3(2n+1)]`` modelling the group game with subset ``1..n``.

    Block ``p + 1`` holds residue ``p``. Every winning margin is 1.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    blocks = [[2 * n + 1, 3 * n + 2, 4 * n + 3]]
    blocks += [[2 * n + 1 - j, 3 * n + 2 - j, 4 * n + 3 + 2 * j] for j in range(1, n + 1)]
    blocks += [[n + 1 - j, 4 * n + 3 - j, 4 * n + 2 + 2 * j] for j in range(1, n + 1)]
    P = RegularPartition(blocks)
    R = tour.group_game(tour.GameSubset(2 * n + 1, range(1, n + 1)))
    return _self_check(P, R, "group_game_partition")
