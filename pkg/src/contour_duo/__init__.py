"""contour-duo: exact dynamics of two ring-bound particle clusters coupled
through two shared crossing nodes.

The package simulates the synchronous unit-speed motion with node blocking,
extracts limit cycles with exact rational velocities, predicts the regime
(free movement / cluster motion / collapse) in closed form, and verifies the
predictions exhaustively over parameter and state space.
"""

from .dynamics import (
    CycleInfo,
    EmpiricalMode,
    ModeKind,
    Trajectory,
    average_velocities,
    classify_empirical,
    find_limit_cycle,
    is_deadlock,
    simulate,
)
from .model import (
    ClusterId,
    InadmissibleStateError,
    NodeId,
    State,
    StepOutcome,
    SystemParams,
    at_node,
    canonical_state,
    covered_cells,
    enumerate_admissible,
    is_admissible,
    is_blocked,
    occupies_node,
    step,
)
from .theory import (
    ModePrediction,
    PredictedRegime,
    SpectrumGrid,
    collapse_possible,
    free_movement_possible,
    lemma2_states,
    predict,
    spectrum_grid,
)
from .verify import (
    DiscrepancyKind,
    GoldenTrace,
    InstanceReport,
    SweepReport,
    check_golden,
    deadlock_census,
    golden_traces,
    sweep,
    verify_instance,
)

__version__ = "0.1.0"

__all__ = [
    "ClusterId",
    "CycleInfo",
    "DiscrepancyKind",
    "EmpiricalMode",
    "GoldenTrace",
    "InadmissibleStateError",
    "InstanceReport",
    "ModeKind",
    "ModePrediction",
    "NodeId",
    "PredictedRegime",
    "SpectrumGrid",
    "State",
    "StepOutcome",
    "SweepReport",
    "SystemParams",
    "Trajectory",
    "at_node",
    "average_velocities",
    "canonical_state",
    "check_golden",
    "classify_empirical",
    "collapse_possible",
    "covered_cells",
    "deadlock_census",
    "enumerate_admissible",
    "find_limit_cycle",
    "free_movement_possible",
    "golden_traces",
    "is_admissible",
    "is_blocked",
    "is_deadlock",
    "lemma2_states",
    "occupies_node",
    "predict",
    "simulate",
    "spectrum_grid",
    "step",
    "sweep",
    "verify_instance",
]
