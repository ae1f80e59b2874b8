"""Failure tolerance of interdependent hardware-software networks.

Build layer graphs, couple them, attack the integrated network and score
the damage with the robustness coefficient.
"""
from .attack import AttackTrace, Strategy, attack_sequence, replay_trace
from .centrality import betweenness_centrality, centrality, closeness_centrality, degree_centrality
from .coupling import CouplingSpec, MotifKind, Placement, motif_coupling, random_coupling
from .errors import DSMParseError, InputError
from .experiment import ExperimentConfig, ResultTable, load_config, results_csv, run_experiment, write_results
from .generators import (
    ModularSpec,
    ScaleFreeSpec,
    generate_hierarchical_modular,
    generate_modular,
    generate_pw_standin,
    generate_scale_free,
    prune_isolated,
)
from .graph import (
    Graph,
    LayeredGraph,
    compose_interdependent,
    from_edge_list,
    largest_component_size,
    remove_node,
)
from .io import read_dsm, read_edge_list, write_edge_list
from .robustness import RobustnessResult, mean_robustness, robustness_coefficient, trapezium_area

__version__ = "0.1.0"
