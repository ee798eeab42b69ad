"""Trajectories, limit cycles, exact average velocities and empirical regime
classification.

The state space is finite (at most n*n states), so every orbit is eventually
periodic and the long-run velocity of a cluster is exactly (moves per cycle) /
(cycle period), held as a ``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .model import (
    State,
    StepOutcome,
    SystemParams,
    _require_admissible,
    step,
)


@dataclass(frozen=True)
class Trajectory:
    """A simulated orbit: states[t] for t = 0..steps, per-step move flags and
    cumulative move counts h1[t], h2[t] (h_i[0] = 0)."""

    params: SystemParams
    states: tuple[State, ...]
    moved: tuple[tuple[bool, bool], ...]
    h1: tuple[int, ...]
    h2: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.states)


@dataclass(frozen=True)
class CycleInfo:
    """First repeated orbit segment: transient length, period, the cycle's
    states in visit order, per-period move counts and exact velocities."""

    transient_len: int
    period: int
    cycle_states: tuple[State, ...]
    moves1: int
    moves2: int
    v1: Fraction
    v2: Fraction


class ModeKind(str, Enum):
    FREE = "free"
    COLLAPSE = "collapse"
    INTERMEDIATE = "intermediate"


@dataclass(frozen=True)
class EmpiricalMode:
    """Observed regime of a limit cycle.

    free: both clusters move at every cycle step (v1 = v2 = 1).
    collapse: a mutually blocked fixed point (v1 = v2 = 0).
    intermediate: anything else; period and exact velocities attached.
    """

    kind: ModeKind
    period: int
    v1: Fraction
    v2: Fraction


def simulate(params: SystemParams, x0, steps: int) -> Trajectory:
    """Run ``steps`` synchronous ticks from admissible x0."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    state = _require_admissible(params, x0)
    states = [state]
    moved: list[tuple[bool, bool]] = []
    h1 = [0]
    h2 = [0]
    for _ in range(steps):
        out: StepOutcome = step(params, states[-1])
        states.append(out.next)
        moved.append((out.moved1, out.moved2))
        h1.append(h1[-1] + out.moved1)
        h2.append(h2[-1] + out.moved2)
    return Trajectory(params, tuple(states), tuple(moved), tuple(h1), tuple(h2))


def find_limit_cycle(params: SystemParams, x0) -> CycleInfo:
    """Walk until the first state repetition and return the cycle data.

    First-visit times are kept for every state, so the transient length is
    exact; the walk is bounded by the number of admissible states (pigeonhole,
    at most n*n).
    """
    state = _require_admissible(params, x0)
    first_visit = {state: 0}
    states = [state]
    moved: list[tuple[bool, bool]] = []
    while True:
        out = step(params, states[-1])
        moved.append((out.moved1, out.moved2))
        nxt = out.next
        if nxt in first_visit:
            transient = first_visit[nxt]
            period = len(states) - transient
            a1 = sum(m1 for m1, _ in moved[transient:])
            a2 = sum(m2 for _, m2 in moved[transient:])
            return CycleInfo(
                transient_len=transient,
                period=period,
                cycle_states=tuple(states[transient:]),
                moves1=a1,
                moves2=a2,
                v1=Fraction(a1, period),
                v2=Fraction(a2, period),
            )
        first_visit[nxt] = len(states)
        states.append(nxt)


def average_velocities(cycle: CycleInfo) -> tuple[Fraction, Fraction]:
    """Exact per-cluster velocity over one period: moves_i / period."""
    return Fraction(cycle.moves1, cycle.period), Fraction(cycle.moves2, cycle.period)


def is_deadlock(params: SystemParams, state) -> bool:
    """True when both clusters are blocked, i.e. the state is a fixed point."""
    out = step(params, state)
    return not out.moved1 and not out.moved2


def classify_empirical(cycle: CycleInfo) -> EmpiricalMode:
    """Map a cycle to its regime: free iff every cluster moves on every cycle
    step (moves_i = period for both), collapse iff no cluster ever moves."""
    if cycle.moves1 == cycle.period and cycle.moves2 == cycle.period:
        kind = ModeKind.FREE
    elif cycle.moves1 == 0 and cycle.moves2 == 0:
        kind = ModeKind.COLLAPSE
    else:
        kind = ModeKind.INTERMEDIATE
    return EmpiricalMode(kind=kind, period=cycle.period, v1=cycle.v1, v2=cycle.v2)
