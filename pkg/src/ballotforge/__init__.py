"""ballotforge: voting procedures, disappointment detectors, and seeded experiments.

The engine evaluates eleven voting procedures over strict preference
profiles, detects social disappointment and social frustration, searches
small profiles exhaustively for axiom counterexamples, and runs seeded
Monte-Carlo sweeps over random electorates.
"""

from .core import (
    Profile,
    ProfileError,
    bottom_counts,
    first_place_counts,
    restrict,
    tally_pairwise,
)
from .criteria import (
    CRITERION_NAMES,
    TABLE3,
    BudgetExceededError,
    Counterexample,
    Table3Cell,
    check_axiom,
    condorcet_loser,
    replay,
    sd_occurred,
    sf_occurred,
    strict_sd_occurred,
    verify_table3,
)
from .experiments import (
    DEFAULT_MASTER_SEED,
    EXPERIMENT_RULES,
    GENERATOR_NAME,
    ExperimentConfig,
    ExperimentRecord,
    manipulation_config,
    paradox_profile,
    random_profile,
    record_seed,
    run_manipulation_experiment,
    run_sd_experiment,
    sd_config,
    write_metadata,
    write_records_csv,
    write_summary_csv,
)
from .manipulation import (
    SCENARIO_NAMES,
    SCENARIOS,
    Scenario,
    affected,
    apply_scenario,
    poll_ranking,
)
from .rules import (
    RULE_NAMES,
    ConfigError,
    RuleConfig,
    borda,
    borda_scores,
    condorcet,
    coombs,
    copeland,
    copeland_defeats,
    dictatorship,
    evaluate,
    hare,
    lu,
    lur,
    plurality,
    seq_pairs,
    ucc,
)
from .textio import ParseError, format_profile, label, parse_profile

__version__ = "0.1.0"

__all__ = [
    "Profile",
    "ProfileError",
    "tally_pairwise",
    "first_place_counts",
    "bottom_counts",
    "restrict",
    "RULE_NAMES",
    "RuleConfig",
    "ConfigError",
    "evaluate",
    "plurality",
    "borda",
    "borda_scores",
    "condorcet",
    "copeland",
    "copeland_defeats",
    "hare",
    "coombs",
    "seq_pairs",
    "dictatorship",
    "lu",
    "lur",
    "ucc",
    "CRITERION_NAMES",
    "TABLE3",
    "BudgetExceededError",
    "Counterexample",
    "Table3Cell",
    "check_axiom",
    "replay",
    "verify_table3",
    "condorcet_loser",
    "sd_occurred",
    "strict_sd_occurred",
    "sf_occurred",
    "SCENARIO_NAMES",
    "SCENARIOS",
    "Scenario",
    "poll_ranking",
    "apply_scenario",
    "affected",
    "GENERATOR_NAME",
    "DEFAULT_MASTER_SEED",
    "EXPERIMENT_RULES",
    "ExperimentConfig",
    "ExperimentRecord",
    "sd_config",
    "manipulation_config",
    "random_profile",
    "paradox_profile",
    "record_seed",
    "run_sd_experiment",
    "run_manipulation_experiment",
    "write_records_csv",
    "write_summary_csv",
    "write_metadata",
    "ParseError",
    "parse_profile",
    "format_profile",
    "label",
]
