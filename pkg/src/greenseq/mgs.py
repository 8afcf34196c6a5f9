"""Green sequences: replay, validation and exhaustive enumeration."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial
from typing import Sequence

from .core import (
    ExtendedState,
    Quiver,
    column,
    framed_seed,
    green_vertices,
    is_sign_coherent,
    mutate,
)


class GreenSequenceError(ValueError):
    pass


class NotGreen(GreenSequenceError):
    """Step ``step`` (1-based) mutates a red vertex."""

    def __init__(self, step: int, vertex: int):
        super().__init__(f"step {step} mutates red vertex {vertex}")
        self.step = step
        self.vertex = vertex


class NotMaximal(GreenSequenceError):
    def __init__(self, green: frozenset[int]):
        super().__init__(f"green vertices remain at the end: {sorted(green)}")
        self.green = green


class IncompleteEnumeration(ValueError):
    """An operation needed an exhaustive enumeration and got a truncated one."""


@dataclass(frozen=True)
class MGSTrace:
    """A replayed mutation sequence with every intermediate state.

    Traces returned by :func:`apply_sequence` and :func:`enumerate_mgs` are
    maximal green sequences; :func:`replay` builds one for any sequence,
    in which case ``terminal_perm`` is ``None`` unless the last C-matrix is
    a negated permutation matrix.
    """

    quiver: Quiver
    vertex_seq: tuple[int, ...]
    states: tuple[ExtendedState, ...]
    mutated_cvectors: tuple[tuple[int, ...], ...]
    terminal_perm: tuple[int, ...] | None

    @property
    def length(self) -> int:
        return len(self.vertex_seq)

    @property
    def cmatrices(self):
        return tuple(s.c for s in self.states)

    def to_dict(self) -> dict:
        return {
            "quiver": self.quiver.to_dict(),
            "vertex_seq": list(self.vertex_seq),
            "c_vectors": [list(c) for c in self.mutated_cvectors],
            "terminal_perm": None if self.terminal_perm is None else list(self.terminal_perm),
            "length": self.length,
        }


@dataclass(frozen=True)
class EnumerationResult:
    traces: tuple[MGSTrace, ...]
    exhaustive: bool
    cap: int
    nodes_explored: int
    pruned: int = 0

    @property
    def count(self) -> int:
        return len(self.traces)

    def sequences(self) -> list[tuple[int, ...]]:
        return [t.vertex_seq for t in self.traces]

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "exhaustive": self.exhaustive,
            "cap": self.cap,
            "nodes_explored": self.nodes_explored,
            "pruned": self.pruned,
            "traces": [t.to_dict() for t in self.traces],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def negated_permutation(c) -> tuple[int, ...] | None:
    """If ``c == -P`` for a permutation matrix P, return p with column j = -e_{p[j]}."""
    n = len(c)
    perm = []
    for j in range(n):
        col = column(c, j)
        if sorted(col) != [-1] + [0] * (n - 1):
            return None
        perm.append(col.index(-1) + 1)
    return tuple(perm) if len(set(perm)) == n else None


def replay(q: Quiver, seq: Sequence[int]) -> MGSTrace:
    """Mutate the framed seed along ``seq`` with no greenness checks."""
    states = [framed_seed(q)]
    cvecs = []
    for k in seq:
        s = states[-1]
        cvecs.append(s.cvector(k))
        states.append(mutate(s, k))
    return MGSTrace(q, tuple(seq), tuple(states), tuple(cvecs), negated_permutation(states[-1].c))


def apply_sequence(q: Quiver, seq: Sequence[int]) -> MGSTrace:
    """Replay ``seq`` and insist it is a maximal green sequence.

    Raises :class:`NotGreen` at the first red step and :class:`NotMaximal`
    if green vertices survive the last step.
    """
    if not seq:
        raise ValueError("sequence must be nonempty")
    trace = replay(q, seq)
    for t, k in enumerate(seq):
        if k not in green_vertices(trace.states[t]):
            raise NotGreen(t + 1, k)
    left = green_vertices(trace.states[-1])
    if left:
        raise NotMaximal(left)
    return trace


def is_green_sequence(q: Quiver, seq: Sequence[int]) -> bool:
    s = framed_seed(q)
    for k in seq:
        if k not in green_vertices(s):
            return False
        s = mutate(s, k)
    return True


def blocked_by_multiple_arrow(s: ExtendedState, k: int) -> bool:
    """True when at least two arrows currently point into ``k`` from one vertex.

    Mutating such a vertex never extends to a maximal green sequence, so the
    search drops the branch.
    """
    row = s.b[k - 1]
    return any(x <= -2 for x in row)


# A search node: (state, vertex sequence so far, mutated c-vectors so far, states so far)
_Node = tuple


@dataclass
class _Search:
    cap: int
    prune: bool
    nodes: int = 0
    pruned: int = 0
    truncated: bool = False
    found: list = field(default_factory=list)

    def children(self, node: _Node) -> list[_Node] | None:
        """Expand one node; returns None for a leaf (recorded or truncated)."""
        state, seq, cvecs, states = node
        self.nodes += 1
        green = green_vertices(state)
        if not green:
            self.found.append(node)
            return None
        if len(seq) >= self.cap:
            self.truncated = True
            return None
        kids = []
        for k in sorted(green):
            if self.prune and blocked_by_multiple_arrow(state, k):
                self.pruned += 1
                continue
            nxt = mutate(state, k)
            kids.append((nxt, seq + (k,), cvecs + (state.cvector(k),), states + (nxt,)))
        return kids

    def run(self, node: _Node) -> None:
        stack = [node]
        while stack:
            kids = self.children(stack.pop())
            if kids:
                stack.extend(reversed(kids))


def _run_subtree(args):
    node, cap, prune = args
    search = _Search(cap, prune)
    search.run(node)
    return search.found, search.nodes, search.pruned, search.truncated


def enumerate_mgs(q: Quiver, cap: int, prune: bool = True, workers: int = 1) -> EnumerationResult:
    """Depth-first enumeration of every maximal green sequence of length <= cap.

    Branches on green vertices in ascending order.  With ``prune`` a green
    vertex that is the target of a multiple arrow is never mutated (see
    :func:`blocked_by_multiple_arrow`).  If any branch reaches ``cap`` with
    green vertices left the result is marked non-exhaustive.  ``workers > 1``
    farms subtrees out to processes; the output is identical either way.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    seed = framed_seed(q)
    root = (seed, (), (), (seed,))
    search = _Search(cap, prune)
    if workers <= 1:
        search.run(root)
    else:
        # breadth-first frontier, then one job per frontier node
        frontier = [root]
        while frontier and len(frontier) < 4 * workers:
            nxt = []
            for node in frontier:
                nxt.extend(search.children(node) or [])
            if not nxt:
                frontier = []
                break
            frontier = nxt
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for found, nodes, pruned, truncated in pool.map(
                _run_subtree, [(node, cap, prune) for node in frontier]
            ):
                search.found.extend(found)
                search.nodes += nodes
                search.pruned += pruned
                search.truncated |= truncated
    traces = [
        MGSTrace(q, seq, states, cvecs, negated_permutation(state.c))
        for state, seq, cvecs, states in search.found
    ]
    traces.sort(key=lambda t: t.vertex_seq)
    return EnumerationResult(tuple(traces), not search.truncated, cap, search.nodes, search.pruned)


def count_mgs(q: Quiver, cap: int, prune: bool = True, workers: int = 1) -> tuple[int, bool]:
    res = enumerate_mgs(q, cap, prune=prune, workers=workers)
    return res.count, res.exhaustive


def _permutation_equivalent(c1, c2) -> bool:
    n = len(c1)
    if n != len(c2):
        return False
    for p in permutations(range(n)):
        if all(c1[p[i]][p[j]] == c2[i][j] for i in range(n) for j in range(n)):
            return True
    return False


def mgs_equivalent(t1: MGSTrace, t2: MGSTrace) -> bool:
    """Same mutated c-vector sequence and initial C-matrices equal up to relabelling."""
    if t1.quiver.n != t2.quiver.n:
        raise ValueError("traces are over quivers of different sizes")
    if t1.mutated_cvectors != t2.mutated_cvectors:
        return False
    return _permutation_equivalent(t1.states[0].c, t2.states[0].c)


def shuffle_count(component_results: Sequence[EnumerationResult]) -> int:
    """Predicted MGS count of a disjoint union from its components' MGSs.

    Each choice of one MGS per component contributes the number of
    order-preserving interleavings, ``(sum l_i)! / prod l_i!``.
    """
    for r in component_results:
        if not r.exhaustive:
            raise IncompleteEnumeration("every component enumeration must be exhaustive")
    total = 0
    for combo in product(*[[t.length for t in r.traces] for r in component_results]):
        ways = factorial(sum(combo))
        for length in combo:
            ways //= factorial(length)
        total += ways
    return total


def trace_is_valid_mgs(t: MGSTrace) -> bool:
    """Check the MGS invariants on a trace: green steps, all-red end, C = -P."""
    for s in t.states:
        if not all(is_sign_coherent(v) for v in s.cvectors()):
            return False
    for step, k in enumerate(t.vertex_seq):
        if t.mutated_cvectors[step] != t.states[step].cvector(k):
            return False
        if any(x < 0 for x in t.mutated_cvectors[step]):
            return False
    return not green_vertices(t.states[-1]) and negated_permutation(t.states[-1].c) is not None
