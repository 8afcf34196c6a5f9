import json

import pytest

from greenseq.core import Quiver
from greenseq.fixtures import (
    A2,
    A2_PLUS_POINT,
    A3,
    CYCLIC_DOUBLE,
    DOUBLE_MIDDLE_A4,
    DOUBLE_TRIANGLE,
    POINT,
    TWO_POINTS,
    kronecker,
)
from greenseq.mgs import (
    IncompleteEnumeration,
    NotGreen,
    NotMaximal,
    apply_sequence,
    blocked_by_multiple_arrow,
    count_mgs,
    enumerate_mgs,
    is_green_sequence,
    mgs_equivalent,
    replay,
    shuffle_count,
    trace_is_valid_mgs,
)
from greenseq.reduction import me_free_version
from oracles import ice_mgs, interleavings


class TestApplySequence:
    def test_a2(self):
        t = apply_sequence(A2, (1, 2))
        assert t.terminal_perm == (1, 2)
        assert t.mutated_cvectors == ((1, 0), (0, 1))
        assert len(t.states) == 3

    def test_a2_red_step(self):
        with pytest.raises(NotGreen) as exc:
            apply_sequence(A2, (1, 1))
        assert exc.value.step == 2

    def test_not_maximal(self):
        with pytest.raises(NotMaximal):
            apply_sequence(A2, (2, 1))

    def test_cyclic_double(self):
        t = apply_sequence(CYCLIC_DOUBLE, (2, 1, 3, 1, 2))
        assert t.mutated_cvectors == ((0, 1, 0), (1, 1, 0), (1, 1, 1), (0, 0, 1), (1, 0, 0))
        assert t.terminal_perm == (3, 1, 2)
        assert trace_is_valid_mgs(t)

    def test_empty(self):
        with pytest.raises(ValueError):
            apply_sequence(A2, ())


# (quiver, cap, expected sequences) -- frozen from tests/oracles.ice_mgs
ENUMERATIONS = [
    (A2, 10, [(1, 2), (2, 1, 2)]),
    (POINT, 1, [(1,)]),
    (TWO_POINTS, 4, [(1, 2), (2, 1)]),
    (kronecker(2), 10, [(1, 2)]),
    (kronecker(3), 10, [(1, 2)]),
    (DOUBLE_TRIANGLE, 20, [(1, 2, 3), (1, 3, 2, 3), (2, 1, 2, 3)]),
    (
        A3,
        10,
        [
            (1, 2, 3), (1, 3, 2, 3), (2, 1, 2, 3), (2, 1, 3, 2), (2, 3, 1, 3, 2),
            (3, 1, 2, 3), (3, 2, 1, 2, 3), (3, 2, 1, 3, 2, 3), (3, 2, 3, 1, 2, 3),
        ],
    ),
]


@pytest.mark.parametrize("q, cap, expected", ENUMERATIONS)
def test_enumerate_frozen(q, cap, expected):
    res = enumerate_mgs(q, cap)
    assert res.exhaustive
    assert res.sequences() == expected


@pytest.mark.parametrize(
    "q, depth",
    [(A2, 8), (kronecker(2), 10), (DOUBLE_TRIANGLE, 10), (DOUBLE_MIDDLE_A4, 9), (A2_PLUS_POINT, 7), (CYCLIC_DOUBLE, 10)],
)
def test_enumerate_matches_ice_oracle(q, depth):
    expected, _ = ice_mgs(q, depth)
    res = enumerate_mgs(q, 24)
    got = sorted((t.vertex_seq, t.mutated_cvectors) for t in res.traces if t.length <= depth)
    assert got == expected


def test_cap_truncation_reported():
    res = enumerate_mgs(A3, 4)
    assert not res.exhaustive
    assert all(t.length <= 4 for t in res.traces)
    assert res.cap == 4


def test_unpruned_kronecker_never_exhausts():
    res = enumerate_mgs(kronecker(2), 12, prune=False)
    assert not res.exhaustive
    assert res.sequences() == [(1, 2)]


def test_pruning_rule():
    s = replay(kronecker(2), ()).states[0]
    assert blocked_by_multiple_arrow(s, 2)
    assert not blocked_by_multiple_arrow(s, 1)


def test_cyclic_double_not_exhaustive_at_cap():
    # an infinite green branch survives pruning here
    res = enumerate_mgs(CYCLIC_DOUBLE, 24)
    assert not res.exhaustive
    assert res.count == 5


@pytest.mark.parametrize("q", [A2, DOUBLE_TRIANGLE, DOUBLE_MIDDLE_A4])
def test_traces_valid_and_prefix_closed(q):
    for t in enumerate_mgs(q, 20).traces:
        assert trace_is_valid_mgs(t)
        assert all(x >= 0 for c in t.mutated_cvectors for x in c)
        for m in range(1, t.length + 1):
            assert is_green_sequence(q, t.vertex_seq[:m])


def test_counts():
    assert count_mgs(kronecker(2), 10) == (1, True)
    assert count_mgs(A2, 10) == (2, True)
    assert count_mgs(TWO_POINTS, 10) == (2, True)


def test_workers_give_identical_output():
    serial = enumerate_mgs(DOUBLE_MIDDLE_A4, 20)
    parallel = enumerate_mgs(DOUBLE_MIDDLE_A4, 20, workers=3)
    assert serial.to_json() == parallel.to_json()


def test_json_schema():
    d = json.loads(enumerate_mgs(A2, 10).to_json())
    assert d["count"] == 2 and d["exhaustive"] is True and d["cap"] == 10
    assert d["traces"][0] == {
        "quiver": {"vertices": 2, "arrows": [[1, 2, 1]]},
        "vertex_seq": [1, 2],
        "c_vectors": [[1, 0], [0, 1]],
        "terminal_perm": [1, 2],
        "length": 2,
    }


class TestEquivalence:
    def test_self(self):
        t = apply_sequence(A2, (1, 2))
        assert mgs_equivalent(t, t)

    def test_a2_pair(self):
        assert not mgs_equivalent(apply_sequence(A2, (1, 2)), apply_sequence(A2, (2, 1, 2)))

    def test_cyclic_vs_me_free_version(self):
        seq = (2, 1, 3, 1, 2)
        t = apply_sequence(CYCLIC_DOUBLE, seq)
        other = replay(me_free_version(CYCLIC_DOUBLE), seq)
        assert not mgs_equivalent(t, other)
        assert t.mutated_cvectors[:2] == other.mutated_cvectors[:2]
        assert t.mutated_cvectors[2] == (1, 1, 1) and other.mutated_cvectors[2] == (0, 0, 1)

    def test_across_quivers(self):
        # DOUBLE_TRIANGLE and A3 share these two MGSs, c-vectors included
        for seq in [(1, 2, 3), (2, 1, 2, 3)]:
            assert mgs_equivalent(apply_sequence(DOUBLE_TRIANGLE, seq), apply_sequence(A3, seq))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            mgs_equivalent(apply_sequence(A2, (1, 2)), apply_sequence(POINT, (1,)))


class TestShuffle:
    def test_a2_plus_point(self):
        parts = [enumerate_mgs(A2, 10), enumerate_mgs(POINT, 10)]
        assert shuffle_count(parts) == 7
        # independent count: interleave the actual sequences
        merged = set()
        for a in parts[0].sequences():
            for b in parts[1].sequences():
                merged.update(interleavings(a, tuple(x + 2 for x in b)))
        assert len(merged) == 7
        assert enumerate_mgs(A2_PLUS_POINT, 10).count == 7

    def test_one_component(self):
        r = enumerate_mgs(A3, 10)
        assert shuffle_count([r]) == r.count

    def test_two_points(self):
        assert shuffle_count([enumerate_mgs(POINT, 2)] * 2) == 2

    def test_requires_exhaustive(self):
        with pytest.raises(IncompleteEnumeration):
            shuffle_count([enumerate_mgs(A3, 3)])


def test_terminal_perm_none_for_partial_replay():
    assert replay(A2, (1,)).terminal_perm is None


def test_disconnected_corpus_shuffle_law():
    from greenseq.core import disjoint_union, full_subquiver

    for parts in [(A2, A2), (kronecker(2), POINT), (DOUBLE_TRIANGLE, POINT), (A3, Quiver.from_arrows(2, [(2, 1, 1)]))]:
        q = disjoint_union(*parts)
        direct = enumerate_mgs(q, 20)
        assert direct.exhaustive
        offsets, blocks = 0, []
        for p in parts:
            blocks.append(range(offsets + 1, offsets + p.n + 1))
            offsets += p.n
        comps = [enumerate_mgs(full_subquiver(q, b), 20) for b in blocks]
        assert direct.count == shuffle_count(comps)
