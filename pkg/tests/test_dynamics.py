from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracle
from contour_duo.dynamics import (
    CycleInfo,
    ModeKind,
    average_velocities,
    classify_empirical,
    find_limit_cycle,
    is_deadlock,
    simulate,
)
from contour_duo.model import (
    InadmissibleStateError,
    State,
    SystemParams,
    enumerate_admissible,
    step,
)


@st.composite
def instance(draw, n_max=10):
    n = draw(st.integers(2, n_max))
    d = draw(st.integers(1, n // 2))
    l1 = draw(st.integers(1, n - 1))
    l2 = draw(st.integers(1, n - 1))
    params = SystemParams(n, d, l1, l2)
    x0 = draw(st.sampled_from(enumerate_admissible(params)))
    return params, x0


class TestSimulate:
    def test_tie_stepping_trace(self):
        run = simulate(SystemParams(4, 2, 1, 1), (3, 3), 5)
        assert [tuple(s) for s in run.states] == [
            (3, 3), (0, 3), (1, 0), (2, 1), (3, 2), (0, 3),
        ]
        assert run.h1[-1] == 5
        assert run.h2[-1] == 4

    def test_runs_into_fixed_point(self):
        run = simulate(SystemParams(4, 2, 3, 3), (0, 2), 3)
        assert [tuple(s) for s in run.states] == [(0, 2), (1, 3), (1, 3), (1, 3)]

    def test_free_flow_laps_back(self):
        run = simulate(SystemParams(10, 4, 2, 3), (2, 0), 10)
        assert run.states[10] == (2, 0)
        assert (run.h1[10], run.h2[10]) == (10, 10)

    def test_rejects_inadmissible_start(self):
        with pytest.raises(InadmissibleStateError):
            simulate(SystemParams(10, 3, 2, 2), (0, 0), 1)

    def test_rejects_negative_steps(self):
        with pytest.raises(ValueError):
            simulate(SystemParams(10, 3, 2, 2), (9, 2), -1)

    @given(instance(), st.integers(0, 40))
    def test_matches_oracle_and_counts(self, inst, steps):
        params, x0 = inst
        run = simulate(params, x0, steps)
        expected = oracle.trajectory(
            params.n, params.d, params.l1, params.l2, x0.x1, x0.x2, steps
        )
        assert [tuple(s) for s in run.states] == expected
        assert len(run.moved) == steps
        for t in range(1, steps + 1):
            assert run.h1[t] - run.h1[t - 1] == int(run.moved[t - 1][0])
            assert run.h2[t] - run.h2[t - 1] == int(run.moved[t - 1][1])


class TestFindLimitCycle:
    def test_free_cycle(self):
        c = find_limit_cycle(SystemParams(4, 2, 1, 1), (3, 3))
        assert (c.transient_len, c.period) == (1, 4)
        assert (c.v1, c.v2) == (Fraction(1), Fraction(1))

    def test_fixed_point(self):
        c = find_limit_cycle(SystemParams(4, 2, 3, 3), (0, 2))
        assert (c.transient_len, c.period) == (1, 1)
        assert (c.v1, c.v2) == (Fraction(0), Fraction(0))
        assert c.cycle_states == (State(1, 3),)

    def test_stretched_cluster_cycle(self):
        # one extra seam pause: period l1+l2+1, one lap per period
        c = find_limit_cycle(SystemParams(7, 2, 2, 6), (2, 0))
        assert (c.transient_len, c.period) == (1, 9)
        assert (c.moves1, c.moves2) == (7, 7)
        assert (c.v1, c.v2) == (Fraction(7, 9), Fraction(7, 9))

    def test_rejects_inadmissible(self):
        with pytest.raises(InadmissibleStateError):
            find_limit_cycle(SystemParams(10, 3, 2, 2), (0, 0))

    @given(instance())
    def test_matches_oracle(self, inst):
        params, x0 = inst
        tr, period, a1, a2, cyc = oracle.limit_cycle(
            params.n, params.d, params.l1, params.l2, x0.x1, x0.x2
        )
        c = find_limit_cycle(params, x0)
        assert (c.transient_len, c.period, c.moves1, c.moves2) == (tr, period, a1, a2)
        assert [tuple(s) for s in c.cycle_states] == cyc

    @given(instance())
    def test_cycle_closes_and_repeats(self, inst):
        params, x0 = inst
        c = find_limit_cycle(params, x0)
        # walking period steps from any cycle state returns to it
        state = c.cycle_states[0]
        seen = []
        for _ in range(c.period):
            seen.append(state)
            state = step(params, state).next
        assert state == c.cycle_states[0]
        assert seen == list(c.cycle_states)

    @given(instance())
    def test_transient_period_consistency(self, inst):
        params, x0 = inst
        c = find_limit_cycle(params, x0)
        run = simulate(params, x0, c.transient_len + 2 * c.period)
        for k in range(c.period):
            assert run.states[c.transient_len + k] == run.states[c.transient_len + k + c.period]
        if c.transient_len > 0:
            # the last pre-cycle state must not lie on the cycle
            assert run.states[c.transient_len - 1] not in c.cycle_states

    @given(instance())
    def test_velocity_bounds_and_lap_quantization(self, inst):
        params, x0 = inst
        c = find_limit_cycle(params, x0)
        assert 0 <= c.v1 <= 1 and 0 <= c.v2 <= 1
        assert c.moves1 % params.n == 0
        assert c.moves2 % params.n == 0

    def test_free_cycles_have_period_n_exhaustive(self):
        for n, d, l1, l2 in oracle.param_space(2, 7):
            params = SystemParams(n, d, l1, l2)
            for x0 in enumerate_admissible(params):
                c = find_limit_cycle(params, x0)
                if c.moves1 == c.period and c.moves2 == c.period:
                    assert c.period == n


class TestAverageVelocities:
    @pytest.mark.parametrize(
        "a1,a2,period,expected",
        [
            (10, 10, 11, (Fraction(10, 11), Fraction(10, 11))),
            (0, 0, 1, (Fraction(0), Fraction(0))),
            (4, 4, 4, (Fraction(1), Fraction(1))),
        ],
    )
    def test_examples(self, a1, a2, period, expected):
        cycle = CycleInfo(
            transient_len=0,
            period=period,
            cycle_states=(State(0, 0),) * period,
            moves1=a1,
            moves2=a2,
            v1=Fraction(a1, period),
            v2=Fraction(a2, period),
        )
        assert average_velocities(cycle) == expected

    def test_lowest_terms(self):
        v = Fraction(5, 10)
        assert (v.numerator, v.denominator) == (1, 2)


class TestIsDeadlock:
    def test_mutual_block(self):
        assert is_deadlock(SystemParams(4, 2, 3, 3), (1, 3))
        assert is_deadlock(SystemParams(10, 3, 4, 8), (2, 9))

    def test_single_particles_never_deadlock(self):
        params = SystemParams(4, 2, 1, 1)
        for x0 in enumerate_admissible(params):
            assert not is_deadlock(params, x0)

    def test_deadlock_absorbs(self):
        c = find_limit_cycle(SystemParams(10, 3, 4, 8), (2, 9))
        assert (c.transient_len, c.period) == (0, 1)


class TestClassify:
    def test_free(self):
        c = find_limit_cycle(SystemParams(4, 2, 1, 1), (3, 3))
        mode = classify_empirical(c)
        assert mode.kind is ModeKind.FREE
        assert mode.v1 == mode.v2 == 1

    def test_collapse(self):
        c = find_limit_cycle(SystemParams(4, 2, 3, 3), (0, 2))
        mode = classify_empirical(c)
        assert mode.kind is ModeKind.COLLAPSE
        assert mode.v1 == mode.v2 == 0

    def test_intermediate(self):
        c = find_limit_cycle(SystemParams(7, 2, 2, 6), (2, 0))
        mode = classify_empirical(c)
        assert mode.kind is ModeKind.INTERMEDIATE
        assert mode.period == 9
        assert mode.v1 == mode.v2 == Fraction(7, 9)

    @given(instance())
    def test_kind_velocity_correspondence(self, inst):
        params, x0 = inst
        c = find_limit_cycle(params, x0)
        mode = classify_empirical(c)
        if mode.kind is ModeKind.FREE:
            assert c.v1 == c.v2 == 1
        elif mode.kind is ModeKind.COLLAPSE:
            assert c.v1 == c.v2 == 0
        else:
            assert 0 < max(c.v1, c.v2) < 1 or c.v1 != c.v2
