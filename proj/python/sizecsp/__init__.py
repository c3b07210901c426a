"""Size- and cardinality-constrained CSP toolkit (Python bindings)."""

from ._core import (  # noqa: F401
    GuardError,
    Graph,
    HardLanguageError,
    Instance,
    Language,
    ParseError,
    analyze,
    brute_force,
    cc0_normalize,
    classify_ccsp,
    classify_ocsp,
    clique_to_mimp,
    core,
    encode_graph_problem,
    find_counterexample,
    is_closed,
    is_weakly_separable,
    ocsp_to_ccsp,
    parse_graph,
    parse_instance,
    parse_language,
    produces,
    solve_ccsp,
    solve_ocsp,
    value_type,
    z_constant,
)


def load_language(path):
    with open(path) as f:
        return parse_language(f.read())


def load_instance(path, language):
    with open(path) as f:
        return parse_instance(f.read(), language)


def analysis_dict(language):
    """analyze() output as a dict."""
    out = {}
    for line in analyze(language).splitlines():
        key, _, value = line.partition(": ")
        out[key] = value
    return out
