"""Regular partitions of ``[Nn]`` and their dominance margins.

A :class:`RegularPartition` is ``n`` blocks of ``N`` integers covering
``1..N*n``. Block ``i`` is vertex ``i`` of the induced digraph, so block
order is significant and never re-sorted; each block is stored ascending.

The margin ``Q(A, B) = 2 * #{(a, b) : a > b} - |A| |B|`` is positive exactly
when a random element of ``A`` is more likely to exceed one of ``B`` than not.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import InputError, PreconditionError
from .tournament import Digraph, Tournament

__all__ = [
    "RegularPartition",
    "q_value",
    "q_matrix",
    "induced_digraph",
    "induced_tournament",
    "reflect",
    "replicate",
    "pad",
    "domination_product",
    "lex_product_sets",
    "lex_product",
    "pack",
    "is_proper",
    "is_stratified",
    "block_sums",
    "to_dice",
    "win_probability",
    "parse_partition",
    "format_partition",
    "read_partition",
    "write_partition",
    "format_dice",
]


class RegularPartition:
    __slots__ = ("_blocks", "_N")

    def __init__(self, blocks: Iterable[Iterable[int]]):
        bl = tuple(tuple(sorted(int(x) for x in b)) for b in blocks)
        if not bl:
            raise InputError("a partition needs at least one block")
        N = len(bl[0])
        if N == 0:
            raise InputError("blocks must be nonempty")
        for i, b in enumerate(bl, start=1):
            if len(b) != N:
                raise InputError(f"block {i} has size {len(b)}, expected {N}")
            if len(set(b)) != N:
                raise InputError(f"block {i} repeats an element")
        flat = sorted(x for b in bl for x in b)
        if flat != list(range(1, N * len(bl) + 1)):
            raise InputError(f"blocks are not a partition of 1..{N * len(bl)}")
        self._blocks = bl
        self._N = N

    @property
    def n(self) -> int:
        """Number of blocks."""
        return len(self._blocks)

    @property
    def N(self) -> int:
        """Block size."""
        return self._N

    @property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return self._blocks

    @property
    def size(self) -> int:
        return self._N * len(self._blocks)

    def block(self, i: int) -> tuple[int, ...]:
        """Block ``i`` (1-based)."""
        return self._blocks[i - 1]

    def owner(self) -> list[int]:
        """``owner()[a]`` is the block holding ground element ``a`` (index 0 unused)."""
        own = [0] * (self.size + 1)
        for i, b in enumerate(self._blocks, start=1):
            for a in b:
                own[a] = i
        return own

    def __len__(self) -> int:
        return len(self._blocks)

    def __iter__(self):
        return iter(self._blocks)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RegularPartition):
            return NotImplemented
        return self._blocks == other._blocks

    def __hash__(self) -> int:
        return hash(self._blocks)

    def __repr__(self) -> str:
        return f"RegularPartition({[list(b) for b in self._blocks]})"


def _count_greater(A: Sequence[int], B: Sequence[int]) -> int:
    """``#{(a, b) : a > b}`` for ascending ``A``, ``B`` by a single merge pass."""
    count = 0
    k = 0
    nb = len(B)
    for a in A:
        while k < nb and B[k] < a:
            k += 1
        count += k
    return count


def q_value(A: Iterable[int], B: Iterable[int]) -> int:
    """Dominance margin ``Q(A, B)`` of two disjoint nonempty integer sets."""
    As = sorted(A)
    Bs = sorted(B)
    if not As or not Bs:
        raise InputError("q_value needs nonempty sets")
    if not set(As).isdisjoint(Bs):
        raise InputError("q_value needs disjoint sets")
    return 2 * _count_greater(As, Bs) - len(As) * len(Bs)


def _q_sorted(A: Sequence[int], B: Sequence[int]) -> int:
    return 2 * _count_greater(A, B) - len(A) * len(B)


def q_matrix(P: RegularPartition) -> list[list[int]]:
    """``Q[i][j]`` for blocks ``i+1, j+1`` (0-based list of lists)."""
    n = P.n
    Q = [[0] * n for _ in range(n)]
    bl = P.blocks
    for i in range(n):
        for j in range(i + 1, n):
            q = _q_sorted(bl[i], bl[j])
            Q[i][j] = q
            Q[j][i] = -q
    return Q


def induced_digraph(P: RegularPartition) -> Digraph:
    """Edge ``(i, j)`` iff ``Q(A_i, A_j) > 0``; ties (only possible for even ``N``) give no edge."""
    Q = q_matrix(P)
    n = P.n
    return Digraph(n, ((i + 1, j + 1) for i in range(n) for j in range(n) if Q[i][j] > 0))


def induced_tournament(P: RegularPartition) -> Tournament:
    """Checked conversion of the induced digraph; raises if any pair ties."""
    d = induced_digraph(P)
    if not d.is_tournament():
        raise PreconditionError("induced relation has ties; not a tournament")
    return Tournament.from_digraph(d)


def reflect(P: RegularPartition) -> RegularPartition:
    """``a -> Nn - a + 1`` in every block; negates every margin."""
    top = P.size + 1
    return RegularPartition([top - a for a in b] for b in P.blocks)


def replicate(P: RegularPartition, M: int) -> RegularPartition:
    """``M`` stacked copies of the ground set; multiplies every margin by ``M``."""
    if M < 1:
        raise InputError("replication factor must be >= 1")
    s = P.size
    return RegularPartition([s * q + a for q in range(M) for a in b] for b in P.blocks)


def pad(P: RegularPartition) -> RegularPartition:
    """Grow block size by 2 without changing any margin.

    Block ``i`` gains ``{Nn + i, Nn + 2n - i + 1}``; these pairs are nested,
    so they tie with each other, and they sit above everything else.
    """
    s, n = P.size, P.n
    return RegularPartition(
        list(b) + [s + i, s + 2 * n - i + 1] for i, b in enumerate(P.blocks, start=1)
    )


def domination_product(B: RegularPartition, A: RegularPartition) -> RegularPartition:
    """``B |> A``: ``A``'s blocks first, then ``B``'s shifted above them by ``Nn``."""
    if A.N != B.N:
        raise InputError(f"block sizes differ ({B.N} vs {A.N})")
    s = A.size
    return RegularPartition(list(A.blocks) + [[s + x for x in b] for b in B.blocks])


def lex_product_sets(B: Iterable[int], A: Iterable[int], M: int) -> list[int]:
    """``B x| A = {M(b - 1) + a}`` for ``A`` inside ``1..M``; ascending."""
    As = sorted(set(A))
    if As and (As[0] < 1 or As[-1] > M):
        raise InputError(f"A must lie in 1..{M}")
    return sorted(M * (b - 1) + a for b in set(B) for a in As)


def lex_product(B: RegularPartition, A: RegularPartition) -> RegularPartition:
    """``B x| A``: block ``n(i-1) + j`` is ``B_i x| A_j`` with ``M = Nn``."""
    M = A.size
    return RegularPartition(
        lex_product_sets(bi, aj, M) for bi in B.blocks for aj in A.blocks
    )


def pack(family: Sequence[Iterable[int]]) -> RegularPartition:
    """Order-preserving renumbering of disjoint equal-size sets onto ``1..Kk``.

    Every pairwise margin is unchanged.
    """
    sets = [sorted(set(c)) for c in family]
    if not sets:
        raise InputError("empty family")
    K = len(sets[0])
    if any(len(c) != K for c in sets):
        raise InputError("family sets must have equal sizes")
    tagged = sorted((x, p) for p, c in enumerate(sets) for x in c)
    out: list[list[int]] = [[] for _ in sets]
    prev = None
    for rank, (x, p) in enumerate(tagged, start=1):
        if x == prev:
            raise InputError(f"element {x} lies in two family sets")
        prev = x
        out[p].append(rank)
    return RegularPartition(out)


def block_sums(P: RegularPartition) -> list[int]:
    return [sum(b) for b in P.blocks]


def is_proper(P: RegularPartition) -> bool:
    """All block sums equal ``N(Nn + 1)/2``."""
    target = P.N * (P.size + 1)
    return all(2 * s == target for s in block_sums(P))


def is_stratified(P: RegularPartition) -> bool:
    """For ``N = 3``: smallest elements are ``1..n``, middles ``n+1..2n``, largest ``2n+1..3n``."""
    if P.N != 3:
        raise InputError("stratification is defined only for N = 3")
    n = P.n
    for s in range(3):
        if sorted(b[s] for b in P.blocks) != list(range(n * s + 1, n * s + n + 1)):
            return False
    return True


def to_dice(P: RegularPartition, repeat: int | None = None) -> list[list[int]]:
    """Die ``i`` has each element of block ``i`` repeated ``repeat`` times.

    The default ``repeat = n`` gives ``Nn``-sided dice with faces in ``1..Nn``,
    which are proper dice exactly when ``P`` is proper. Any repeat count
    gives the same win probabilities.
    """
    r = P.n if repeat is None else repeat
    if r < 1:
        raise InputError("repeat must be >= 1")
    return [[a for a in b for _ in range(r)] for b in P.blocks]


def win_probability(P: RegularPartition, i: int, j: int):
    """Exact ``P(die i > die j)`` as a :class:`fractions.Fraction`."""
    from fractions import Fraction

    q = _q_sorted(P.block(i), P.block(j))
    return Fraction(1, 2) + Fraction(q, 2 * P.N * P.N)


# text format

def parse_partition(text: str) -> RegularPartition:
    """Parse ``partition <n> <N>`` then ``n`` lines ``<i>: a1 a2 ... aN``."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputError("empty partition file")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "partition":
        raise InputError(f"bad header {lines[0]!r}; expected 'partition <n> <N>'")
    try:
        n, N = int(head[1]), int(head[2])
        body = lines[1:]
        if len(body) != n:
            raise InputError(f"header says {n} blocks, found {len(body)}")
        blocks = []
        for k, line in enumerate(body, start=1):
            label, sep, rest = line.partition(":")
            if not sep or int(label) != k:
                raise InputError(f"block line {k} should start with '{k}:'")
            vals = [int(x) for x in rest.split()]
            if len(vals) != N:
                raise InputError(f"block {k} has {len(vals)} elements, header says {N}")
            if vals != sorted(vals):
                raise InputError(f"block {k} is not ascending")
            blocks.append(vals)
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from exc
    return RegularPartition(blocks)


def format_partition(P: RegularPartition) -> str:
    lines = [f"partition {P.n} {P.N}"]
    lines += [f"{i}: " + " ".join(map(str, b)) for i, b in enumerate(P.blocks, start=1)]
    return "\n".join(lines) + "\n"


def format_dice(P: RegularPartition, repeat: int | None = None) -> str:
    return "\n".join(" ".join(map(str, d)) for d in to_dice(P, repeat)) + "\n"


def read_partition(path) -> RegularPartition:
    with open(path) as fh:
        return parse_partition(fh.read())


def write_partition(P: RegularPartition, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_partition(P))
