"""k-degree anonymization of undirected graphs."""

import json as _json
import os as _os

_bundled = _os.path.join(_os.path.dirname(__file__), "data")
if "EAGA_DATA_DIR" not in _os.environ and _os.path.isdir(_bundled):
    _os.environ["EAGA_DATA_DIR"] = _bundled

from . import _core
from ._core import (  # noqa: E402
    ContractViolation,
    ConvergenceError,
    Error,
    Graph,
    InfeasibleError,
    ParseError,
    ReconstructionError,
    ValidationError,
    align_labels,
    anonymize,
    apply_edge_rotations,
    betweenness,
    candidate_sets,
    closeness,
    dataset_available,
    degree_centrality,
    degree_histogram,
    degree_sequence,
    distance,
    edge_intersection,
    evolve,
    fitness,
    get_k,
    grouped_dispersion,
    is_graphical,
    load_dataset,
    mutate,
    parse_edge_list,
    parse_gml,
    read_graph,
    rms_difference,
    run_experiment,
    shortest_path_lengths,
    to_edge_list,
    vertex_refinement,
)


def summary_stats(graph):
    return _json.loads(_core.summary_stats(graph))


def risk_report(graph, level=1):
    return _json.loads(_core.risk_report(graph, level))


def evaluate(original, anonymized):
    return _json.loads(_core.evaluate(original, anonymized))
