"""Geometrically-local stabilizer and subsystem codes on lattices: exact
distance, linear distance and energy-barrier analysis with certified
lemma-level transforms."""

from .barrier import barrier_exact
from .codes import CodeSpec, parse_code, serialize_code
from .config import Budgets
from .geometry import Lattice, Region, boundary_shell, strip_partition
from .groups import (
    GroupBasis,
    LogicalBasis,
    center,
    centralizer,
    contained_subgroup,
    get_structure,
    logical_basis,
    restrict_group,
    span_basis,
)
from .metrics import (
    BarrierResult,
    DistanceResult,
    LinearDistanceResult,
    WalkTrace,
    barrier_walk_bound,
    distance_bruteforce,
    distance_dp,
    energy_cost,
    linear_distance,
)
from .pauli import PauliOp
from .transforms import (
    CleanResult,
    MinimalBlockResult,
    RestrictionAuditResult,
    SweepResult,
    clean_stabilizer,
    clean_subsystem,
    compress_qubits,
    minimal_block_search,
    restriction_audit,
    strip_sweep,
)
from .zoo import (
    make_bacon_shor_2d,
    make_generalized_toric,
    make_heisenberg_gauge,
    make_repetition_1d,
    make_steane_chain,
    make_surface_2d,
    make_toric_2d,
)

__version__ = "0.1.0"

__all__ = [
    "Budgets",
    "BarrierResult",
    "CleanResult",
    "CodeSpec",
    "DistanceResult",
    "GroupBasis",
    "Lattice",
    "LinearDistanceResult",
    "LogicalBasis",
    "MinimalBlockResult",
    "PauliOp",
    "Region",
    "RestrictionAuditResult",
    "SweepResult",
    "WalkTrace",
    "barrier_exact",
    "barrier_walk_bound",
    "boundary_shell",
    "center",
    "centralizer",
    "clean_stabilizer",
    "clean_subsystem",
    "compress_qubits",
    "contained_subgroup",
    "distance_bruteforce",
    "distance_dp",
    "energy_cost",
    "get_structure",
    "linear_distance",
    "logical_basis",
    "make_bacon_shor_2d",
    "make_generalized_toric",
    "make_heisenberg_gauge",
    "make_repetition_1d",
    "make_steane_chain",
    "make_surface_2d",
    "make_toric_2d",
    "minimal_block_search",
    "parse_code",
    "restrict_group",
    "restriction_audit",
    "serialize_code",
    "span_basis",
    "strip_partition",
    "strip_sweep",
    "__version__",
]
