"""Exact dimer coverings of line graphs and vertex-edge graphs of cubic graphs."""

__version__ = "0.1.0"

from .errors import CapacityError, ClaimViolation, DimerlabError, GraphError, PreconditionError
from .graph import Edge, Graph, Role, bridges, components, degree
from .poly import Polynomial, poly_mul, poly_pow
from .transforms import (
    K4Block,
    ReductionTrace,
    k4_decomposition,
    line_graph,
    middle_graph,
    reduce_to_base,
    remove_pendant,
    smooth_degree_two,
)
from .matching import (
    StructuredFamily,
    audit_bijection,
    count_pm,
    enumerate_pm,
    structured_pm_families,
    weighted_pm_sum,
)
from .formulas import (
    PredictionResult,
    pm_kagome_formula,
    pm_kagome_weighted,
    pm_line_formula,
    pm_middle_cubic_even,
    pm_middle_cubic_minus_edge,
    pm_silicate_count,
    pm_silicate_weighted,
    predict_pm_middle,
)
from .lattices import (
    LatticeSpec,
    honeycomb_torus,
    kagome_torus,
    named_cubic,
    random_cubic,
    random_subcubic,
    silicate_torus,
)
