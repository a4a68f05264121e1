"""Exact coloring of signed graphs with symmetric color sets."""

__version__ = "0.1.0"

from .colors import (
    SelfInverse,
    Signed,
    SymColoring,
    SymSet,
    canonicalize,
    color_class_partition,
    is_proper,
    switch_coloring,
)
from .constructions import signed_circuit, signed_complete, signed_expansion, turan_witness
from .dp import build_cover, coloring_to_transversal, independent_transversal, transversal_to_coloring
from .graph import (
    BalanceCertificate,
    SignedGraph,
    are_equivalent,
    circuit_sign,
    frustration_index,
    is_antibalanced,
    is_balanced,
    switch_at,
)
from .solver import (
    BudgetExhausted,
    ChromaticResult,
    SolverBudget,
    chi_mod,
    chi_pm,
    chromatic_number,
    connectivity_order,
    enumerate_colorings,
    find_critical_subgraph,
    greedy_symset_coloring,
    symset_chromatic,
    symset_t_chromatic,
)
from .spectrum import switching_classes, symset_spectrum, t_spectrum
