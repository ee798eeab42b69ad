"""Exhaustive comparison of simulated limit cycles against the closed-form
predictions, plus fixed-point census and replayable reference traces.

Every disagreement gets exactly one label, assigned in precedence order:

  crossed-deadlock   the orbit ends in a mutually blocking fixed point
                     (each cluster at one node, straddled by the other)
                     outside the predicted collapse region
  mode-mismatch      observed regime class differs from the predicted one
  period-mismatch    regime matches but the cycle period differs
  velocity-mismatch  regime and period match but a velocity differs

Sweeps are exhaustive over parameter ranges and (optionally) over all
admissible initial states; rows are emitted in lexicographic order and the
result is independent of the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from . import kernels
from .dynamics import EmpiricalMode, ModeKind, classify_empirical, find_limit_cycle, simulate
from .model import (
    ClusterId,
    State,
    SystemParams,
    at_node,
    canonical_state,
    is_admissible,
    occupies_node,
    step,
)
from .theory import ModePrediction, PredictedRegime, lemma2_states, predict

THREADS_ENV_VAR = "CONTOUR_DUO_THREADS"


class DiscrepancyKind(str, Enum):
    CROSSED_DEADLOCK = "crossed-deadlock"
    MODE_MISMATCH = "mode-mismatch"
    PERIOD_MISMATCH = "period-mismatch"
    VELOCITY_MISMATCH = "velocity-mismatch"


@dataclass(frozen=True, slots=True)
class InstanceReport:
    """Comparison record for one (params, initial state) instance."""

    params: SystemParams
    x0: State
    transient: int
    period: int
    moves1: int
    moves2: int
    v1: Fraction
    v2: Fraction
    empirical: EmpiricalMode
    predicted: ModePrediction
    agree: bool
    discrepancy: DiscrepancyKind | None


@dataclass(frozen=True)
class RegionStats:
    instances: int
    agreements: int


@dataclass(frozen=True)
class SweepReport:
    """Aggregated exhaustive comparison over a parameter range."""

    n_min: int
    n_max: int
    policy: str
    rows: tuple[InstanceReport, ...]
    instances: int
    agreements: int
    discrepancies: dict[str, int]
    regions: dict[str, RegionStats]
    intermediate_cycles: int
    intermediate_cycles_with_listed_state: int
    velocity_asymmetries: int


@dataclass(frozen=True)
class GoldenTrace:
    """A replayable reference orbit: checkpoints (t, expected state) from x0.

    ``expect_match`` is False for fixtures that document a known divergence
    between the closed-form derivation and the step rules; those pin the
    currently simulated states instead via ``divergence_at``.
    """

    trace_id: str
    params: SystemParams
    x0: State
    checkpoints: tuple[tuple[int, State], ...]
    expect_match: bool = True
    divergence_at: tuple[int, State] | None = None


def _is_crossed_deadlock(params: SystemParams, state: State) -> bool:
    """Fixed-point geometry: the clusters stand at distinct nodes and each
    straddles the node the other stands at."""
    n1 = at_node(params, state, ClusterId.C1)
    n2 = at_node(params, state, ClusterId.C2)
    if n1 is None or n2 is None or n1 == n2:
        return False
    return occupies_node(params, state, ClusterId.C2, n1) and occupies_node(
        params, state, ClusterId.C1, n2
    )


def _compare(
    params: SystemParams,
    predicted: ModePrediction,
    empirical: EmpiricalMode,
    fixed_point: State | None,
) -> tuple[bool, DiscrepancyKind | None]:
    """Agreement flag and (when disagreeing) the single discrepancy label.

    ``fixed_point`` is the absorbing state when the empirical mode is
    collapse, used for the crossed-deadlock geometry check.
    """
    expected_kind = {
        PredictedRegime.FREE: ModeKind.FREE,
        PredictedRegime.CLUSTER: ModeKind.INTERMEDIATE,
        PredictedRegime.COLLAPSE: ModeKind.COLLAPSE,
    }[predicted.regime]

    if empirical.kind == expected_kind:
        if predicted.regime != PredictedRegime.CLUSTER:
            # free and collapse predictions pin the velocities by definition
            return True, None
        if empirical.period != predicted.period:
            return False, DiscrepancyKind.PERIOD_MISMATCH
        if empirical.v1 != predicted.v or empirical.v2 != predicted.v:
            return False, DiscrepancyKind.VELOCITY_MISMATCH
        return True, None

    if (
        empirical.kind is ModeKind.COLLAPSE
        and predicted.regime != PredictedRegime.COLLAPSE
        and fixed_point is not None
        and _is_crossed_deadlock(params, fixed_point)
    ):
        return False, DiscrepancyKind.CROSSED_DEADLOCK
    return False, DiscrepancyKind.MODE_MISMATCH


def verify_instance(params: SystemParams, x0) -> InstanceReport:
    """Run one instance to its limit cycle and compare against prediction."""
    cycle = find_limit_cycle(params, x0)
    empirical = classify_empirical(cycle)
    predicted = predict(params)
    fixed_point = cycle.cycle_states[0] if empirical.kind is ModeKind.COLLAPSE else None
    agree, kind = _compare(params, predicted, empirical, fixed_point)
    x1, x2 = x0
    return InstanceReport(
        params=params,
        x0=State(x1, x2),
        transient=cycle.transient_len,
        period=cycle.period,
        moves1=cycle.moves1,
        moves2=cycle.moves2,
        v1=cycle.v1,
        v2=cycle.v2,
        empirical=empirical,
        predicted=predicted,
        agree=agree,
        discrepancy=kind,
    )


def deadlock_census(params: SystemParams) -> list[State]:
    """All admissible states where neither cluster can move (fixed points),
    by direct enumeration of the state space."""
    out = []
    for x1 in range(params.n):
        for x2 in range(params.n):
            state = State(x1, x2)
            if not is_admissible(params, state):
                continue
            outcome = step(params, state)
            if not outcome.moved1 and not outcome.moved2:
                out.append(state)
    return out


def iter_param_space(n_min: int, n_max: int):
    """All valid (n, d, l1, l2) in lexicographic order."""
    for n in range(n_min, n_max + 1):
        for d in range(1, n // 2 + 1):
            for l1 in range(1, n):
                for l2 in range(1, n):
                    yield SystemParams(n, d, l1, l2)


@dataclass
class _ParamsResult:
    rows: list[InstanceReport]
    intermediate_cycles: int = 0
    intermediate_cycles_with_listed_state: int = 0


def _scan_params(params: SystemParams, policy: str, backend) -> _ParamsResult:
    """Kernel-backed scan of one parameter point: limit-cycle data for the
    selected initial states plus per-cycle bookkeeping."""
    n = params.n
    succ, moved1, moved2 = backend.build_tables(n, params.d, params.l1, params.l2)
    transient, period, a1, a2, rep = backend.scan_all(n, succ, moved1, moved2)
    predicted = predict(params)

    if policy == "canonical":
        starts = [canonical_state(params)]
    else:
        starts = [
            State(x1, x2)
            for x1 in range(n)
            for x2 in range(n)
            if succ[x1 * n + x2] >= 0
        ]

    rows: list[InstanceReport] = []
    intermediate_reps: set[int] = set()
    for x0 in starts:
        s = x0.x1 * n + x0.x2
        t_period = int(period[s])
        m1, m2 = int(a1[s]), int(a2[s])
        v1 = Fraction(m1, t_period)
        v2 = Fraction(m2, t_period)
        if m1 == t_period and m2 == t_period:
            kind = ModeKind.FREE
        elif m1 == 0 and m2 == 0:
            kind = ModeKind.COLLAPSE
        else:
            kind = ModeKind.INTERMEDIATE
            intermediate_reps.add(int(rep[s]))
        empirical = EmpiricalMode(kind=kind, period=t_period, v1=v1, v2=v2)
        fixed_point = (
            State(int(rep[s]) // n, int(rep[s]) % n) if kind is ModeKind.COLLAPSE else None
        )
        agree, dkind = _compare(params, predicted, empirical, fixed_point)
        rows.append(
            InstanceReport(
                params=params,
                x0=x0,
                transient=int(transient[s]),
                period=t_period,
                moves1=m1,
                moves2=m2,
                v1=v1,
                v2=v2,
                empirical=empirical,
                predicted=predicted,
                agree=agree,
                discrepancy=dkind,
            )
        )

    result = _ParamsResult(rows=rows)
    if intermediate_reps:
        listed = {
            s.x1 * n + s.x2
            for s in lemma2_states(params)
            if succ[s.x1 * n + s.x2] >= 0
        }
        # a listed state lies on a cycle iff its transient is zero
        listed_reps = {int(rep[s]) for s in listed if int(transient[s]) == 0}
        result.intermediate_cycles = len(intermediate_reps)
        result.intermediate_cycles_with_listed_state = len(
            intermediate_reps & listed_reps
        )
    return result


def _worker_count() -> int:
    raw = os.environ.get(THREADS_ENV_VAR, "").strip()
    if raw:
        count = int(raw)
        if count < 1:
            raise ValueError(f"{THREADS_ENV_VAR} must be >= 1, got {count}")
        return count
    return os.cpu_count() or 1


def sweep(
    n_min: int,
    n_max: int,
    initial_state_policy: str = "all_admissible",
    backend: str | None = None,
) -> SweepReport:
    """Exhaustive comparison over every valid (n, d, l1, l2) in the range.

    ``initial_state_policy`` is ``all_admissible`` (every admissible start;
    also accepted as ``all``) or ``canonical``.  Parameter points are scanned
    in parallel; rows and totals are deterministic regardless of the worker
    count because collection follows submission order.
    """
    if not (2 <= n_min <= n_max):
        raise ValueError(f"invalid range: need 2 <= n_min <= n_max, got [{n_min}, {n_max}]")
    policy = {"all": "all_admissible", "all_admissible": "all_admissible", "canonical": "canonical"}.get(
        initial_state_policy
    )
    if policy is None:
        raise ValueError(f"unknown initial-state policy {initial_state_policy!r}")

    mod = kernels.get_backend(backend)
    param_list = list(iter_param_space(n_min, n_max))

    rows: list[InstanceReport] = []
    agreements = 0
    discrepancies = {kind.value: 0 for kind in DiscrepancyKind}
    region_counts = {regime.value: [0, 0] for regime in PredictedRegime}
    intermediate_cycles = 0
    intermediate_hit = 0
    velocity_asymmetries = 0

    with ThreadPoolExecutor(max_workers=_worker_count()) as pool:
        for result in pool.map(lambda p: _scan_params(p, policy, mod), param_list):
            intermediate_cycles += result.intermediate_cycles
            intermediate_hit += result.intermediate_cycles_with_listed_state
            for row in result.rows:
                rows.append(row)
                bucket = region_counts[row.predicted.regime.value]
                bucket[0] += 1
                if row.agree:
                    agreements += 1
                    bucket[1] += 1
                else:
                    discrepancies[row.discrepancy.value] += 1
                if row.v1 != row.v2:
                    velocity_asymmetries += 1

    return SweepReport(
        n_min=n_min,
        n_max=n_max,
        policy=policy,
        rows=tuple(rows),
        instances=len(rows),
        agreements=agreements,
        discrepancies=discrepancies,
        regions={
            name: RegionStats(instances=c[0], agreements=c[1])
            for name, c in region_counts.items()
        },
        intermediate_cycles=intermediate_cycles,
        intermediate_cycles_with_listed_state=intermediate_hit,
        velocity_asymmetries=velocity_asymmetries,
    )


def check_golden(trace: GoldenTrace) -> bool:
    """Simulate the trace and compare every checkpoint state exactly."""
    horizon = max(t for t, _ in trace.checkpoints)
    run = simulate(trace.params, trace.x0, horizon)
    return all(run.states[t] == expected for t, expected in trace.checkpoints)


def golden_traces() -> list[GoldenTrace]:
    """Reference orbits pinning the step semantics.

    The free-regime traces enter the period-n cycle immediately (the start
    states lie on it), so checkpoints advance both clusters one cell per
    tick.  The collapse-approach traces end in the crossed fixed point.  The
    single ``expect_match=False`` trace carries the closed-form cluster-regime
    checkpoints, which the step rules are known not to reproduce: the first
    cluster pauses one extra tick at the ring seam, stretching the period to
    l1+l2+1.  Its ``divergence_at`` pins the state actually reached.
    """

    def t(trace_id, n, d, l1, l2, x0, checkpoints, expect_match=True, divergence_at=None):
        params = SystemParams(n, d, l1, l2)
        cps = ((0, State(*x0)),) + tuple((tt, State(*s)) for tt, s in checkpoints)
        return GoldenTrace(
            trace_id=trace_id,
            params=params,
            x0=State(*x0),
            checkpoints=cps,
            expect_match=expect_match,
            divergence_at=(divergence_at[0], State(*divergence_at[1])) if divergence_at else None,
        )

    return [
        t("free-both-short", 10, 4, 2, 3, (2, 0), [(2, (4, 2)), (4, (6, 4)), (8, (0, 8)), (10, (2, 0))]),
        t("free-both-short-offset", 10, 4, 2, 3, (0, 3), [(1, (1, 4)), (4, (4, 7)), (7, (7, 0)), (10, (0, 3))]),
        t("free-mid-second", 10, 3, 2, 5, (2, 0), [(1, (3, 1)), (3, (5, 3)), (8, (0, 8)), (10, (2, 0))]),
        t("free-mid-second-offset", 10, 3, 2, 5, (0, 5), [(3, (3, 8)), (5, (5, 0)), (8, (8, 3)), (10, (0, 5))]),
        t("free-long-second", 10, 4, 3, 6, (3, 0), [(1, (4, 1)), (4, (7, 4)), (7, (0, 7)), (10, (3, 0))]),
        t("free-long-second-offset", 10, 4, 3, 6, (0, 6), [(4, (4, 0)), (8, (8, 4)), (10, (0, 6))]),
        t("free-long-first", 10, 3, 4, 5, (4, 0), [(3, (7, 3)), (6, (0, 6)), (9, (3, 9)), (10, (4, 0))]),
        t("free-long-first-offset", 10, 3, 4, 5, (0, 5), [(3, (3, 8)), (5, (5, 0)), (10, (0, 5))]),
        t("collapse-approach", 6, 3, 4, 4, (4, 0), [(1, (5, 1)), (2, (5, 2)), (4, (5, 2))]),
        t("collapse-approach-offset", 6, 3, 4, 4, (0, 4), [(1, (1, 5)), (2, (2, 5)), (4, (2, 5))]),
        t(
            "cluster-regime-divergence",
            7, 2, 2, 6, (2, 0),
            [(2, (4, 2)), (5, (0, 5)), (6, (0, 6)), (7, (1, 0)), (8, (2, 0))],
            expect_match=False,
            divergence_at=(5, (6, 5)),
        ),
    ]
