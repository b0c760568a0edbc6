import pytest

from intransdice import catalog
from intransdice import partition as P
from intransdice import tournament as T
from intransdice.errors import InputError
from intransdice.verify import verify_model


@pytest.mark.parametrize("name", catalog.NAMES)
def test_entry_verifies(name):
    A, R = catalog.partition(name), catalog.tournament(name)
    r = verify_model(A, R)
    assert r.match
    winning = {r.q[i - 1][j - 1] for i, j in r.edges}
    assert winning == ({2} if name == "rpsls" else {1})


@pytest.mark.parametrize("name", [n for n in catalog.NAMES if n not in ("three-dice", "rpsls")])
def test_size_three_entries_are_proper_and_stratified(name):
    A = catalog.partition(name)
    assert A.N == 3 and P.is_proper(A) and P.is_stratified(A)


def test_tournament_files_are_the_group_games():
    g5 = T.group_game(T.GameSubset(5, [1, 2]))
    assert catalog.tournament("game5") == g5
    assert catalog.tournament("game5-alt") == g5
    assert catalog.tournament("game7-type1") == T.group_game(T.GameSubset(7, [1, 2, 3]))
    assert catalog.tournament("game7-type2") == T.group_game(T.GameSubset(7, [1, 2, 4]))
    assert catalog.tournament("three-dice") == T.cycle(3)


def test_type_three_is_a_new_game():
    R = catalog.tournament("game7-type3")
    assert T.is_game(R)
    for A in ([1, 2, 3], [1, 2, 4]):
        assert T.isomorphic(R, T.group_game(T.GameSubset(7, A))) is None


def test_unknown_name():
    with pytest.raises(InputError):
        catalog.partition("no-such-example")
    assert [e[0] for e in catalog.entries()] == list(catalog.NAMES)
