"""Intransitive dice from tournaments.

Given any tournament on ``1..n``, build ``n`` disjoint blocks of ``N``
integers covering ``1..Nn`` such that block ``i`` beats block ``j`` (a random
element of one is more likely to be the larger) exactly when ``i -> j``.
"""

from .construct import (
    ConstructionPlan,
    construct_model,
    construct_model_with_N,
    extend_two,
    group_game_partition,
    insert_vertex,
    trivial_partition,
)
from .errors import ConstructionError, InputError, PreconditionError
from .partition import RegularPartition, induced_digraph, induced_tournament, q_matrix, q_value
from .tournament import Digraph, GameSubset, Tournament
from .verify import VerificationReport, oracle_q, verify_model

__version__ = "0.1.0"
