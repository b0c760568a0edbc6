"""Digraphs and tournaments on the vertex set ``1..n``.

Values are immutable. A permutation of ``1..n`` is passed as a sequence
``perm`` with ``perm[i - 1]`` the image of vertex ``i``.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from collections.abc import Iterable, Iterator, Sequence

from .errors import InputError, PreconditionError

__all__ = [
    "Digraph",
    "Tournament",
    "GameSubset",
    "transitive",
    "cycle",
    "restrict",
    "relabel",
    "domination_product",
    "is_strong",
    "condensation",
    "hamiltonian_cycle",
    "group_game",
    "extend",
    "lex_product",
    "is_game",
    "isomorphic",
    "canonical_form",
    "all_tournaments",
    "random_tournament",
    "parse_tournament",
    "format_tournament",
    "read_tournament",
    "write_tournament",
]


class Digraph:
    """An irreflexive antisymmetric relation on ``1..n``."""

    __slots__ = ("_n", "_out", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not isinstance(n, int) or n < 1:
            raise InputError(f"vertex count must be a positive integer, got {n!r}")
        out: list[set[int]] = [set() for _ in range(n + 1)]
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise InputError(f"edge ({i}, {j}) has a vertex outside 1..{n}")
            if i == j:
                raise InputError(f"loop at vertex {i}")
            if i in out[j]:
                raise InputError(f"both ({i}, {j}) and ({j}, {i}) present")
            out[i].add(j)
        self._n = n
        self._out = tuple(frozenset(s) for s in out)
        self._edges = frozenset((i, j) for i in range(1, n + 1) for j in self._out[i])

    @property
    def n(self) -> int:
        return self._n

    def __len__(self) -> int:
        return self._n

    def vertices(self) -> range:
        return range(1, self._n + 1)

    def beats(self, i: int, j: int) -> bool:
        return j in self._out[i]

    def out(self, i: int) -> frozenset[int]:
        """Output set: the vertices beaten by ``i``."""
        return self._out[i]

    def into(self, i: int) -> frozenset[int]:
        """Input set: the vertices beating ``i``."""
        return frozenset(j for j in self.vertices() if i in self._out[j])

    def score(self, i: int) -> int:
        return len(self._out[i])

    def scores(self) -> list[int]:
        return [len(self._out[i]) for i in self.vertices()]

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return self._edges

    def inverse(self) -> Digraph:
        return type(self)(self._n, ((j, i) for i, j in self._edges))

    def is_tournament(self) -> bool:
        return len(self._edges) == self._n * (self._n - 1) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._n}, {self.edges()})"


class Tournament(Digraph):
    """A complete digraph: exactly one of ``(i, j)``, ``(j, i)`` for each pair."""

    __slots__ = ()

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        super().__init__(n, edges)
        if not self.is_tournament():
            for i, j in itertools.combinations(self.vertices(), 2):
                if not (self.beats(i, j) or self.beats(j, i)):
                    raise InputError(f"pair {{{i}, {j}}} has no edge; not a tournament")

    @classmethod
    def from_digraph(cls, d: Digraph) -> Tournament:
        return cls(d.n, d.edge_set())

    @classmethod
    def from_beats(cls, n: int, beats) -> Tournament:
        """Build from a predicate ``beats(i, j)`` evaluated on pairs ``i < j``."""
        edges = []
        for i, j in itertools.combinations(range(1, n + 1), 2):
            edges.append((i, j) if beats(i, j) else (j, i))
        return cls(n, edges)


class GameSubset:
    """A subset ``A`` of ``Z_m``, ``m = 2n + 1``, with ``A`` and ``-A`` disjoint and ``|A| = n``."""

    __slots__ = ("modulus", "members")

    def __init__(self, modulus: int, members: Iterable[int]):
        if modulus < 3 or modulus % 2 == 0:
            raise InputError(f"modulus must be odd and >= 3, got {modulus}")
        mem = frozenset(int(a) for a in members)
        if any(not 1 <= a < modulus for a in mem):
            raise InputError(f"members must be residues in 1..{modulus - 1}")
        neg = {(-a) % modulus for a in mem}
        if mem & neg:
            raise InputError(f"{sorted(mem)} meets its own negative mod {modulus}")
        if len(mem) != (modulus - 1) // 2:
            raise InputError(f"game subset mod {modulus} needs {(modulus - 1) // 2} members")
        self.modulus = modulus
        self.members = mem

    @property
    def n(self) -> int:
        return (self.modulus - 1) // 2

    def __repr__(self) -> str:
        return f"GameSubset({self.modulus}, {sorted(self.members)})"


def transitive(n: int) -> Tournament:
    """The order tournament: ``i`` beats ``j`` iff ``i < j``."""
    return Tournament.from_beats(n, lambda i, j: True)


def cycle(n: int = 3) -> Tournament:
    """Tournament containing the cycle 1 -> 2 -> ... -> n -> 1; other pairs ordered by index.

    For ``n = 3`` this is the 3-cycle.
    """
    if n < 3:
        raise InputError("a cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    present = {frozenset(e) for e in edges}
    for i, j in itertools.combinations(range(1, n + 1), 2):
        if frozenset((i, j)) not in present:
            edges.append((i, j))
    return Tournament(n, edges)


def _check_perm(perm: Sequence[int], n: int) -> tuple[int, ...]:
    p = tuple(int(x) for x in perm)
    if len(p) != n or sorted(p) != list(range(1, n + 1)):
        raise InputError(f"not a permutation of 1..{n}: {list(perm)}")
    return p


def _inverse_perm(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p, start=1):
        inv[x - 1] = i
    return tuple(inv)


def _same_kind(R: Digraph, n: int, edges) -> Digraph:
    return Tournament(n, edges) if isinstance(R, Tournament) else Digraph(n, edges)


def restrict(R: Digraph, J: Iterable[int]) -> Digraph:
    """Restriction to ``J``, relabelled ``1..|J|`` in ascending order of ``J``."""
    verts = sorted(set(J))
    if not verts:
        raise InputError("restriction to an empty vertex set")
    if verts[0] < 1 or verts[-1] > R.n:
        raise InputError(f"restriction set {verts} not inside 1..{R.n}")
    pos = {v: k for k, v in enumerate(verts, start=1)}
    edges = [(pos[i], pos[j]) for i, j in R.edge_set() if i in pos and j in pos]
    return _same_kind(R, len(verts), edges)


def relabel(R: Digraph, perm: Sequence[int]) -> Digraph:
    """``pi R``: edge ``(pi(i), pi(j))`` for every edge ``(i, j)``."""
    p = _check_perm(perm, R.n)
    return _same_kind(R, R.n, ((p[i - 1], p[j - 1]) for i, j in R.edge_set()))


def domination_product(S_prime: Tournament, S: Tournament) -> Tournament:
    """``S' |> S``: every vertex of ``S'`` beats every vertex of ``S``.

    ``S`` keeps vertices ``1..n``; ``S'`` is shifted to ``n+1..n+m``, the same
    index layout as the partition domination product.
    """
    n, m = S.n, S_prime.n
    edges = list(S.edge_set())
    edges += [(n + i, n + j) for i, j in S_prime.edge_set()]
    edges += [(n + p, q) for p in range(1, m + 1) for q in range(1, n + 1)]
    return Tournament(n + m, edges)


def _reach(R: Digraph, start: int, forward: bool = True) -> set[int]:
    seen = {start}
    todo = [start]
    while todo:
        v = todo.pop()
        nxt = R.out(v) if forward else R.into(v)
        for w in nxt:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def is_strong(R: Tournament) -> tuple[bool, frozenset[int] | None]:
    """Return ``(True, None)`` if strong, else ``(False, J)`` with ``J`` a proper invariant subset.

    The witness is the last strong component, which is the smallest invariant
    subset of a tournament.
    """
    if R.n == 1:
        return True, None
    if len(_reach(R, 1, True)) == R.n and len(_reach(R, 1, False)) == R.n:
        return True, None
    return False, frozenset(condensation(R)[-1])


def condensation(R: Tournament) -> list[frozenset[int]]:
    """Strong components, each beating all later ones.

    Sorting by score puts any dominating set first, so the cut points are the
    prefixes whose score total equals ``C(k,2) + k(n-k)``.
    """
    n = R.n
    order = sorted(R.vertices(), key=lambda v: (-R.score(v), v))
    comps = []
    start = 0
    total = 0
    for k, v in enumerate(order, start=1):
        total += R.score(v)
        if total == k * (k - 1) // 2 + k * (n - k):
            comps.append(frozenset(order[start:k]))
            start = k
    return comps


def _find_cycle(R: Tournament) -> list[int]:
    """Any cycle of a strong tournament on >= 3 vertices, shortened to a 3-cycle."""
    # path from 1 back to one of its in-neighbours
    w0 = min(R.into(1))
    parent = {1: None}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        if v == w0:
            break
        for w in sorted(R.out(v)):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    path = []
    v = w0
    while v is not None:
        path.append(v)
        v = parent[v]
    cyc = path[::-1]
    while len(cyc) > 3:
        a, b, c = cyc[0], cyc[1], cyc[2]
        if R.beats(c, a):
            return [a, b, c]
        cyc.pop(1)
    return cyc


def hamiltonian_cycle(R: Tournament) -> list[int]:
    """A Hamiltonian cycle of a strong tournament with ``n >= 3``, built by insertion.

    Vertices with both an in- and an out-neighbour on the current cycle are
    inserted at the first feasible gap. When none remain, every outside vertex
    either beats the whole cycle or loses to it, and strongness gives an edge
    ``e -> d`` from a loser to a winner; both go in after the first cycle vertex.
    """
    if R.n < 3:
        raise PreconditionError("hamiltonian_cycle needs n >= 3")
    if not is_strong(R)[0]:
        raise PreconditionError("tournament is not strong")
    cyc = _find_cycle(R)
    rest = set(R.vertices()) - set(cyc)
    while rest:
        inserted = False
        for v in sorted(rest):
            m = len(cyc)
            for k in range(m):
                if R.beats(cyc[k], v) and R.beats(v, cyc[(k + 1) % m]):
                    cyc.insert(k + 1, v)
                    rest.discard(v)
                    inserted = True
                    break
        if inserted:
            continue
        c0 = cyc[0]
        losers = [v for v in rest if R.beats(c0, v)]
        winners = [v for v in rest if R.beats(v, c0)]
        e, d = next((e, d) for e in sorted(losers) for d in sorted(winners) if R.beats(e, d))
        cyc[1:1] = [e, d]
        rest -= {e, d}
    return cyc


def group_game(subset: GameSubset) -> Tournament:
    """Tournament on ``Z_{2n+1}``: ``i -> j`` iff ``j - i`` is in the subset.

    Vertex ``v`` stands for residue ``v - 1``.
    """
    m = subset.modulus
    A = subset.members
    edges = [(i + 1, j + 1) for i in range(m) for j in range(m) if (j - i) % m in A]
    return Tournament(m, edges)


def extend(R: Tournament, J: Iterable[int]) -> Tournament:
    """The extension ``R+`` via ``J`` and ``u -> v`` with ``u = n+1``, ``v = n+2``.

    ``u`` beats ``v`` and the complement of ``J``; ``v`` beats ``J``.
    """
    n = R.n
    Jset = set(J)
    if any(not 1 <= j <= n for j in Jset):
        raise InputError(f"J must be a subset of 1..{n}")
    u, v = n + 1, n + 2
    edges = list(R.edge_set()) + [(u, v)]
    for i in range(1, n + 1):
        if i in Jset:
            edges += [(v, i), (i, u)]
        else:
            edges += [(u, i), (i, v)]
    return Tournament(n + 2, edges)


def lex_product(R: Tournament, S: Tournament) -> Tournament:
    """``R x| S`` on ``|R|*|S|`` vertices, pair ``(i, j)`` stored at ``(i-1)*|S| + j``."""
    m = S.n

    def idx(i: int, j: int) -> int:
        return (i - 1) * m + j

    edges = []
    for i1, i2 in R.edge_set():
        edges += [(idx(i1, j1), idx(i2, j2)) for j1 in S.vertices() for j2 in S.vertices()]
    for i in R.vertices():
        edges += [(idx(i, j1), idx(i, j2)) for j1, j2 in S.edge_set()]
    return Tournament(R.n * m, edges)


def is_game(R: Tournament) -> bool:
    """True iff every out-degree equals ``(n - 1) / 2``."""
    if R.n % 2 == 0:
        return False
    k = (R.n - 1) // 2
    return all(R.score(v) == k for v in R.vertices())


def isomorphic(R: Digraph, S: Digraph) -> tuple[int, ...] | None:
    """A permutation ``pi`` with ``relabel(R, pi) == S``, or ``None``.

    Plain permutation search, pruned by score; only meant for ``n <= 9``.
    """
    if R.n != S.n or len(R.edge_set()) != len(S.edge_set()):
        return None
    if sorted(R.scores()) != sorted(S.scores()):
        return None
    n = R.n
    target = S.edge_set()
    # candidates for the image of each vertex: same score in S
    cand = [[w for w in S.vertices() if S.score(w) == R.score(v)] for v in R.vertices()]
    perm = [0] * n
    used = [False] * (n + 1)

    def search(v: int) -> bool:
        if v > n:
            return True
        for w in cand[v - 1]:
            if used[w]:
                continue
            ok = True
            for u in range(1, v):
                pu = perm[u - 1]
                if R.beats(u, v) != ((pu, w) in target) or R.beats(v, u) != ((w, pu) in target):
                    ok = False
                    break
            if not ok:
                continue
            perm[v - 1] = w
            used[w] = True
            if search(v + 1):
                return True
            used[w] = False
        return False

    return tuple(perm) if search(1) else None


def canonical_form(R: Tournament) -> tuple[int, ...]:
    """Isomorphism-invariant key: the lexicographically least adjacency word over all relabellings.

    Factorial cost; intended for ``n <= 7``.
    """
    n = R.n
    pairs = list(itertools.combinations(range(n), 2))
    best = None
    for p in itertools.permutations(range(1, n + 1)):
        # p[k] is the original vertex placed at position k + 1
        word = tuple(1 if R.beats(p[a], p[b]) else 0 for a, b in pairs)
        if best is None or word < best:
            best = word
    return best


def all_tournaments(n: int) -> Iterator[Tournament]:
    """Every labelled tournament on ``1..n`` (``2^(n(n-1)/2)`` of them)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        edges = [(i, j) if mask >> k & 1 else (j, i) for k, (i, j) in enumerate(pairs)]
        yield Tournament(n, edges)


def random_tournament(n: int, rng: random.Random | None = None) -> Tournament:
    rng = rng or random.Random()
    return Tournament.from_beats(n, lambda i, j: rng.random() < 0.5)


# text format

def parse_tournament(text: str) -> Tournament:
    """Parse ``tournament <n>`` followed by one ``<i> <j>`` line per edge (``i`` beats ``j``)."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise InputError("empty tournament file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "tournament":
        raise InputError(f"bad header {lines[0]!r}; expected 'tournament <n>'")
    try:
        n = int(head[1])
        edges = []
        for line in lines[1:]:
            parts = line.split()
            if len(parts) != 2:
                raise InputError(f"bad edge line {line!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(str(exc)) from exc
    if len(edges) != len(set(edges)):
        raise InputError("duplicate edge")
    return Tournament(n, edges)


def format_tournament(R: Tournament) -> str:
    lines = [f"tournament {R.n}"]
    lines += [f"{i} {j}" for i, j in R.edges()]
    return "\n".join(lines) + "\n"


def read_tournament(path) -> Tournament:
    with open(path) as fh:
        return parse_tournament(fh.read())


def write_tournament(R: Tournament, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_tournament(R))
