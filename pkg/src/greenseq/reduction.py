"""Multiple-edge reductions and Q-ME-free bookkeeping for c-vectors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Quiver
from .mgs import MGSTrace


@dataclass(frozen=True, order=True)
class MultiEdge:
    source: int
    target: int
    multiplicity: int


def multiple_edges(q: Quiver) -> list[MultiEdge]:
    return [MultiEdge(a, b, m) for a, b, m in q.arrows() if m >= 2]


def is_me_free(q: Quiver) -> bool:
    return not multiple_edges(q)


def me_free_version(q: Quiver) -> Quiver:
    """Delete every arrow of multiplicity >= 2, keep the rest."""
    return Quiver(q.n, tuple(tuple(m if m == 1 else 0 for m in row) for row in q.mult))


def skeleton(q: Quiver) -> Quiver:
    """Collapse every multiple arrow to a single one, orientation kept."""
    return Quiver(q.n, tuple(tuple(min(m, 1) for m in row) for row in q.mult))


def is_me_equivalent(q1: Quiver, q2: Quiver) -> bool:
    if q1.n != q2.n:
        raise ValueError("ME-equivalence compares quivers on the same vertex set")
    return me_free_version(q1) == me_free_version(q2) and skeleton(q1) == skeleton(q2)


def support(v: Sequence[int]) -> frozenset[int]:
    return frozenset(i + 1 for i, x in enumerate(v) if x)


def is_q_me_free_cvector(c: Sequence[int], edges: Sequence[MultiEdge]) -> bool:
    """No multiple edge has both endpoints in the support of ``c``."""
    supp = support(c)
    return not any(e.source in supp and e.target in supp for e in edges)


def is_q_me_free_trace(t: MGSTrace, edges: Sequence[MultiEdge]) -> bool:
    """Every column of every C-matrix in the trace, mutated or not, is Q-ME-free."""
    if not edges:
        return True
    return all(
        is_q_me_free_cvector(c, edges) for s in t.states for c in s.cvectors()
    )
