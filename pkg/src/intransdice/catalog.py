"""Named example partitions shipped as data files, each with its documented tournament."""

from __future__ import annotations

from importlib import resources

from .errors import InputError
from .partition import RegularPartition, parse_partition
from .tournament import Tournament, parse_tournament

NAMES = ("three-dice", "rpsls", "game5", "game5-alt", "game7-type1", "game7-type2", "game7-type3")

DESCRIPTIONS = {
    "three-dice": "three intransitive dice modelling the 3-cycle",
    "rpsls": "Rock-Paper-Scissors-Lizard-Spock with 6-element blocks",
    "game5": "proper stratified model of the size-5 game",
    "game5-alt": "another proper stratified model of the size-5 game",
    "game7-type1": "Type I size-7 game (group game, subset {1,2,3})",
    "game7-type2": "Type II size-7 game (group game, subset {1,2,4})",
    "game7-type3": "Type III size-7 game: the Type II game after switches 1, 10, 18",
}


def _read(filename: str) -> str:
    return resources.files("intransdice").joinpath("data", filename).read_text()


def _check(name: str) -> None:
    if name not in NAMES:
        raise InputError(f"unknown example {name!r}; choose from {', '.join(NAMES)}")


def partition(name: str) -> RegularPartition:
    _check(name)
    return parse_partition(_read(f"{name}.partition"))


def tournament(name: str) -> Tournament:
    """The tournament the example is documented to model."""
    _check(name)
    return parse_tournament(_read(f"{name}.tournament"))


def entries() -> list[tuple[str, RegularPartition, Tournament]]:
    return [(name, partition(name), tournament(name)) for name in NAMES]
