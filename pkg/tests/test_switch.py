import random

import numpy as np
import pytest
from hypothesis import given

from intransdice import partition as P
from intransdice import switch as S
from intransdice import tournament as T
from intransdice.errors import InputError
from intransdice.partition import RegularPartition
from intransdice.verify import oracle_q_matrix

from conftest import partitions, random_partition

THREE_DICE = RegularPartition([[3, 5, 7], [2, 4, 9], [1, 6, 8]])
TYPE2 = RegularPartition([[7, 9, 17], [6, 12, 15], [5, 8, 20], [4, 11, 18],
                          [3, 14, 16], [2, 10, 21], [1, 13, 19]])


def test_relabel_blocks():
    assert S.relabel_blocks(THREE_DICE, (1, 2, 3)) == THREE_DICE
    swapped = S.relabel_blocks(THREE_DICE, (1, 3, 2))
    assert swapped == RegularPartition([[3, 5, 7], [1, 6, 8], [2, 4, 9]])
    R = P.induced_tournament(swapped)
    assert R == T.relabel(T.cycle(3), (1, 3, 2))
    assert T.isomorphic(R, T.cycle(3)) is not None
    with pytest.raises(InputError):
        S.relabel_blocks(THREE_DICE, (1, 1, 2))


def test_relabel_blocks_permutes_q_matrix():
    rng = random.Random(21)
    A = random_partition(5, 3, rng)
    pi = [2, 5, 1, 3, 4]
    B = S.relabel_blocks(A, pi)
    QA, QB = P.q_matrix(A), P.q_matrix(B)
    for i in range(5):
        for j in range(5):
            assert QB[pi[i] - 1][pi[j] - 1] == QA[i][j]
    assert P.induced_digraph(B) == T.relabel(P.induced_digraph(A), pi)


def test_permute_ground():
    assert S.permute_ground(THREE_DICE, range(1, 10)) == THREE_DICE
    rev = list(range(9, 0, -1))
    assert S.permute_ground(THREE_DICE, rev) == P.reflect(THREE_DICE)
    rng = random.Random(2)
    pi = list(range(1, 10))
    rng.shuffle(pi)
    assert isinstance(S.permute_ground(THREE_DICE, pi), RegularPartition)
    with pytest.raises(InputError):
        S.permute_ground(THREE_DICE, [1] * 9)


def test_simple_switch_on_type_two_game():
    R0 = P.induced_tournament(TYPE2)
    A1, rec1 = S.apply_simple_switch(TYPE2, 1)
    assert rec1 == S.SwitchRecord(1, 7, 6, 2)
    R1 = P.induced_tournament(A1)
    assert R0.beats(6, 7) and R1.beats(7, 6)
    assert R1.edge_set() - R0.edge_set() == {(7, 6)}
    A2, _ = S.apply_simple_switch(A1, 10)
    R2 = P.induced_tournament(A2)
    assert R2.edge_set() - R1.edge_set() == {(6, 4)}
    A3, _ = S.apply_simple_switch(A2, 18)
    R3 = P.induced_tournament(A3)
    assert R3.edge_set() - R2.edge_set() == {(4, 7)}
    assert R0.edge_set() - R3.edge_set() == {(4, 6), (6, 7), (7, 4)}


def test_switch_same_block_is_identity():
    A = RegularPartition([[1, 2, 9], [3, 4, 8], [5, 6, 7]])
    B, rec = S.apply_simple_switch(A, 1)
    assert B == A and rec.same_block and rec.delta == 0
    with pytest.raises(InputError):
        S.apply_simple_switch(A, 9)
    with pytest.raises(InputError):
        S.apply_simple_switch(A, 0)


def test_switch_delta_matches_oracle():
    rng = random.Random(22)
    for _ in range(1000):
        n, N = rng.randint(2, 6), rng.randint(1, 5)
        A = random_partition(n, N, rng)
        k = rng.randint(1, A.size - 1)
        B, rec = S.apply_simple_switch(A, k)
        QA, QB = np.array(oracle_q_matrix(A.blocks)), np.array(oracle_q_matrix(B.blocks))
        diff = QB - QA
        if rec.same_block:
            assert B == A and not diff.any()
            continue
        p1, p2 = rec.p1 - 1, rec.p2 - 1
        assert diff[p1][p2] == 2 and diff[p2][p1] == -2
        diff[p1][p2] = diff[p2][p1] = 0
        assert not diff.any()


@given(partitions(max_n=5, max_N=4))
def test_switch_is_involution(A):
    if A.size < 2:
        return
    for k in range(1, A.size):
        B, _ = S.apply_simple_switch(A, k)
        C, _ = S.apply_simple_switch(B, k)
        assert C == A


@given(partitions(max_n=6, N=3))
def test_odd_N_switch_never_ties(A):
    for k in range(1, A.size):
        B, _ = S.apply_simple_switch(A, k)
        assert P.induced_digraph(B).is_tournament()


def test_stratify_examples():
    G = RegularPartition([[5, 8, 11], [4, 7, 13], [3, 6, 15], [2, 10, 12], [1, 9, 14]])
    assert S.stratify(G) == (G, [])
    A = RegularPartition([[1, 2, 9], [3, 4, 8], [5, 6, 7]])
    B, recs = S.stratify(A)
    assert P.is_stratified(B) and recs
    assert P.induced_digraph(B) == P.induced_digraph(A)
    with pytest.raises(InputError):
        S.stratify(RegularPartition([[1, 4], [2, 3]]))


def test_stratify_random():
    rng = random.Random(23)
    for _ in range(200):
        A = random_partition(rng.randint(1, 12), 3, rng)
        B, recs = S.stratify(A)
        assert P.is_stratified(B)
        assert P.induced_digraph(B) == P.induced_digraph(A)
        assert S.replay(A, recs) == B
        assert all(not r.same_block for r in recs)


def test_switch_path():
    assert S.switch_path(THREE_DICE, THREE_DICE) == []
    recs = S.switch_path(RegularPartition([[2], [1]]), RegularPartition([[1], [2]]))
    assert [r.k for r in recs] == [1]
    rng = random.Random(24)
    for _ in range(100):
        n, N = rng.randint(1, 5), rng.randint(1, 5)
        A, B = random_partition(n, N, rng), random_partition(n, N, rng)
        recs = S.switch_path(A, B)
        assert S.replay(A, recs) == B
    with pytest.raises(InputError):
        S.switch_path(THREE_DICE, RegularPartition([[2], [1]]))


def test_switch_log_round_trip():
    _, recs = S.apply_switches(TYPE2, [1, 10, 18, 5])
    text = S.format_switch_log(recs)
    assert text.splitlines()[0] == "switch 1 7 6 2"
    assert S.parse_switch_log(text) == recs
    assert S.replay(TYPE2, recs) == S.apply_switches(TYPE2, [1, 10, 18, 5])[0]


@pytest.mark.parametrize("line", ["switch 1 2", "swap 1 2 3 2", "switch 1 2 3 1", "switch 1 2 2 2", "switch a 1 2 2"])
def test_switch_log_rejects(line):
    with pytest.raises(InputError):
        S.parse_switch_log(line)


def test_replay_detects_wrong_log():
    _, recs = S.apply_switches(TYPE2, [1])
    with pytest.raises(InputError):
        S.replay(THREE_DICE, recs)


def test_stratified_models_small():
    found = S.stratified_models([THREE_DICE])
    assert len(found) == 2  # the 3-cycle and the order
    with pytest.raises(InputError):
        S.stratified_models([RegularPartition([[1, 2, 9], [3, 4, 8], [5, 6, 7]])])
