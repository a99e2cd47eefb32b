"""Spectral bipartiteness measures versus odd girth.

Thin wrapper over the C++ core: graph generators, graph6 I/O, spectra,
extremal bounds per odd girth, and certificate builders. Certificates and
analysis records come back as plain dicts decoded from the core's JSON.
"""

import json as _json

from ._core import (  # noqa: F401
    Graph,
    __version__,
    adjacency_spectrum,
    connected_components,
    cycle_lower_bound,
    d2_oracle,
    find_x0,
    gamma_table,
    generate_cayley_f2,
    generate_complete,
    generate_cycle,
    generate_folded_cube,
    generate_hypercube,
    girth7_upper_bound,
    heavy_vertex,
    is_bipartite,
    is_independent_set,
    lambert_upper_bound,
    lambert_w,
    odd_girth,
    parse_graph6,
    perron_vector,
    root_bound,
    round_down_4,
    round_up_4,
    signless_laplacian_spectrum,
    upper_bound_for_odd_girth,
    write_graph6,
)
from . import _core as _c

__all__ = [name for name in dir() if not name.startswith("_")] + [
    "analyze",
    "girth7_certificate",
    "independent_set_weight_check",
    "interlacing_check",
]


def analyze(g, graph_id="graph", max_n=4096):
    """Full spectral record for one graph, as a dict."""
    return _json.loads(_c.analyze_json(g, graph_id, max_n))


def girth7_certificate(g):
    """Distance-partition certificate for a graph of odd girth >= 7."""
    return _json.loads(_c.girth7_certificate_json(g))


def independent_set_weight_check(g, s):
    """Perron-weight bounds for an independent set, as a dict."""
    return _json.loads(_c.independent_set_weight_json(g, list(s)))


def interlacing_check(g, classes):
    """Interlacing certificate for a vertex partition, as a dict."""
    return _json.loads(_c.interlacing_json(g, [list(c) for c in classes]))
