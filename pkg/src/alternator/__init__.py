"""Finding the alternator coin with a balance scale."""

from .jacobsthal import (
    InitialState,
    classic_fake_capacity,
    count_admissible_strings,
    enumerate_admissible_strings,
    jacobsthal,
    jacobsthal_split,
    min_weighings_bound,
    trivial_bounds,
)
from .model import (
    AlternatorState,
    Hypothesis,
    KnowledgeState,
    Outcome,
    Weighing,
    World,
    initial_knowledge,
    solved_coin,
    update_knowledge,
    weigh,
)
from .search import ClassCounts, Move, extract_optimal_tree, optimal_weighings
from .strategy import Internal, Leaf, StrategyTree, Unreachable, build_strategy, depth, run_strategy
from .verifier import VerificationReport, verify, verify_against_bound

__version__ = "0.1.0"
