"""Core model: two rings of n cells sharing two crossing nodes, one rigid
cluster of particles per ring, synchronous unit-speed motion with node
blocking.

Node 1 sits between cells n-1 and 0, node 2 between cells d-1 and d (same
cell labels on both rings).  A cluster standing at a node's entry cell may
not cross while the other cluster's body straddles that node; if both
clusters stand at the same node, cluster 1 crosses first.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import NamedTuple, Optional


class ClusterId(IntEnum):
    """The two clusters; C1 wins same-node ties."""

    C1 = 1
    C2 = 2

    @property
    def other(self) -> "ClusterId":
        return ClusterId.C2 if self is ClusterId.C1 else ClusterId.C1


class NodeId(Enum):
    """Shared crossing points of the two rings."""

    NODE1 = 1
    NODE2 = 2

    def entry_cell(self, params: "SystemParams") -> int:
        """Cell a cluster stands in when it is 'at' this node."""
        return params.n - 1 if self is NodeId.NODE1 else params.d - 1

    def exit_cell(self, params: "SystemParams") -> int:
        """Cell just past the node: (entry + 1) mod n."""
        return 0 if self is NodeId.NODE1 else params.d


@dataclass(frozen=True)
class SystemParams:
    """Ring size n, second-node offset d, cluster lengths l1 and l2.

    Constraints: n >= 2, 1 <= d with 2*d <= n, and 1 <= l_i <= n-1.
    """

    n: int
    d: int
    l1: int
    l2: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"ring size must be >= 2, got n={self.n}")
        if not (1 <= self.d and 2 * self.d <= self.n):
            raise ValueError(f"node offset requires 1 <= d <= n/2, got d={self.d}, n={self.n}")
        for name, l in (("l1", self.l1), ("l2", self.l2)):
            if not (1 <= l <= self.n - 1):
                raise ValueError(f"cluster length requires 1 <= {name} <= n-1, got {l}")

    def length(self, cluster: ClusterId) -> int:
        return self.l1 if cluster is ClusterId.C1 else self.l2


class State(NamedTuple):
    """Leading-particle cells of the two clusters."""

    x1: int
    x2: int


class StepOutcome(NamedTuple):
    next: State
    moved1: bool
    moved2: bool


class InadmissibleStateError(ValueError):
    """Raised when a state has some node straddled by both clusters."""


def _as_state(params: SystemParams, state) -> State:
    x1, x2 = state
    if not (0 <= x1 < params.n and 0 <= x2 < params.n):
        raise ValueError(f"state {(x1, x2)} out of range for n={params.n}")
    return State(x1, x2)


def covered_cells(params: SystemParams, cluster: ClusterId, state) -> set[int]:
    """Cells held by the cluster: its leading cell and the l-1 cells behind it."""
    x1, x2 = _as_state(params, state)
    front = x1 if cluster is ClusterId.C1 else x2
    return {(front - k) % params.n for k in range(params.length(cluster))}


def _covers(params: SystemParams, cluster: ClusterId, state: State, cell: int) -> bool:
    front = state.x1 if cluster is ClusterId.C1 else state.x2
    return (front - cell) % params.n < params.length(cluster)


def at_node(params: SystemParams, state, cluster: ClusterId) -> Optional[NodeId]:
    """Node whose entry cell the cluster's leading particle sits in, if any."""
    state = _as_state(params, state)
    front = state.x1 if cluster is ClusterId.C1 else state.x2
    if front == params.n - 1:
        return NodeId.NODE1
    if front == params.d - 1:
        return NodeId.NODE2
    return None


def occupies_node(params: SystemParams, state, cluster: ClusterId, node: NodeId) -> bool:
    """True when the node lies strictly between two particles of the cluster,
    i.e. the cluster covers both boundary cells of the node."""
    state = _as_state(params, state)
    return _covers(params, cluster, state, node.entry_cell(params)) and _covers(
        params, cluster, state, node.exit_cell(params)
    )


def is_admissible(params: SystemParams, state) -> bool:
    """No node may be straddled by both clusters at once."""
    state = _as_state(params, state)
    for node in NodeId:
        if occupies_node(params, state, ClusterId.C1, node) and occupies_node(
            params, state, ClusterId.C2, node
        ):
            return False
    return True


def _require_admissible(params: SystemParams, state) -> State:
    state = _as_state(params, state)
    if not is_admissible(params, state):
        raise InadmissibleStateError(
            f"state {tuple(state)} is inadmissible for params {params}"
        )
    return state


def is_blocked(params: SystemParams, state, cluster: ClusterId) -> bool:
    """Whether the cluster is delayed this step.

    A cluster at a node is delayed when the other cluster straddles that node,
    or when both clusters stand at the same node and it is cluster 2.  Both
    conditions read the current snapshot only.
    """
    state = _require_admissible(params, state)
    node = at_node(params, state, cluster)
    if node is None:
        return False
    if occupies_node(params, state, cluster.other, node):
        return True
    return cluster is ClusterId.C2 and at_node(params, state, cluster.other) == node


def step(params: SystemParams, state) -> StepOutcome:
    """One synchronous tick: every non-delayed cluster advances one cell."""
    state = _require_admissible(params, state)
    b1 = is_blocked(params, state, ClusterId.C1)
    b2 = is_blocked(params, state, ClusterId.C2)
    nxt = State(
        state.x1 if b1 else (state.x1 + 1) % params.n,
        state.x2 if b2 else (state.x2 + 1) % params.n,
    )
    return StepOutcome(nxt, not b1, not b2)


def canonical_state(params: SystemParams) -> State:
    """Deterministic admissible start: each leading particle on a node entry
    cell ((n-1, d-1)).  Admissible for every valid params because a cluster
    whose front sits on a node's entry cell never straddles that node."""
    return State(params.n - 1, params.d - 1)


def enumerate_admissible(params: SystemParams) -> list[State]:
    """All admissible states in lexicographic (x1, x2) order."""
    return [
        State(x1, x2)
        for x1 in range(params.n)
        for x2 in range(params.n)
        if is_admissible(params, State(x1, x2))
    ]
