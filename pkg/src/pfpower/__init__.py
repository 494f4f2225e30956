"""Power indices for weighted majority games in characteristic and partition function form."""

from .enumeration import (
    bell_numbers,
    enumerate_embedded_coalitions,
    enumerate_partitions,
    is_ec_subset,
    is_proper_ec_subset,
)
from .errors import (
    AntichainViolationError,
    CapacityError,
    ConfigurationError,
    DegenerateGameError,
    FormMismatchError,
    MalformedInputError,
    NotMergeableError,
    PfpowerError,
    ValidationError,
)
from .games import (
    MWCSet,
    basis_game_eval,
    game_from_antichain,
    is_decisive,
    is_mergeable,
    is_monotone,
    is_winning_characteristic,
    is_winning_embedded,
    minimal_winning_coalitions,
    minimal_winning_embedded_coalitions,
    participation_counts,
    tied_partitions,
    unanimity_game_eval,
    union_game,
)
from .indices import (
    IndexVector,
    check_weighted_symmetry,
    cm,
    dp,
    dp_merge_check,
    hcm,
    hcm_alternative,
    null_players,
    pg,
    pg_merge_check,
    round_half_up,
    symmetric_pairs_characteristic,
    symmetric_pairs_partition,
)
from .model import (
    Characteristic,
    EmbeddedCoalition,
    GameSpec,
    Partition,
    PartitionForm,
    Player,
    PlayerTable,
    TieRule,
    block_votes,
    block_weight,
    ec_from_names,
)

__version__ = "0.1.0"
