"""Quivers, extended exchange matrices and mutation.

Vertices are labelled 1..n at every public entry point (mutation indices,
vertex sets, arrow lists); matrices are plain nested tuples indexed from 0.
All integers are Python ints, so entries never overflow.

Sign convention for the C block: the framed seed has ``c = +I`` and a
vertex is green exactly when its c-vector is nonnegative.  An entry
``c[r][j]`` counts arrows ``j -> r'`` minus arrows ``r' -> j`` in the ice
quiver, i.e. it is the negative of the frozen row of the full skew-symmetric
matrix.  Mutation of the C block is therefore the usual matrix rule applied
to ``-c`` and negated back; see :func:`mutate`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Matrix = tuple  # tuple[tuple[int, ...], ...]


class QuiverError(ValueError):
    """Invalid quiver data (bad file line, loop, 2-cycle, bad index)."""


class SignCoherenceError(RuntimeError):
    """A c-vector lost sign coherence.  Only an engine bug can cause this."""


def _freeze(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def zeros(n: int) -> Matrix:
    return tuple((0,) * n for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def column(m: Matrix, j: int) -> tuple[int, ...]:
    return tuple(row[j] for row in m)


def determinant(m: Matrix) -> int:
    """Exact integer determinant (fraction-free Bareiss elimination)."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class Quiver:
    """Cluster quiver: ``mult[i][j]`` arrows from vertex i+1 to vertex j+1."""

    n: int
    mult: Matrix

    def __post_init__(self):
        mult = _freeze(self.mult)
        object.__setattr__(self, "mult", mult)
        if self.n < 1:
            raise QuiverError(f"vertex count must be positive, got {self.n}")
        if len(mult) != self.n or any(len(row) != self.n for row in mult):
            raise QuiverError(f"multiplicity matrix must be {self.n}x{self.n}")
        for i in range(self.n):
            if mult[i][i] != 0:
                raise QuiverError(f"loop at vertex {i + 1}")
            for j in range(self.n):
                if mult[i][j] < 0:
                    raise QuiverError("negative arrow multiplicity")
                if mult[i][j] and mult[j][i]:
                    raise QuiverError(f"2-cycle between {i + 1} and {j + 1}")

    @classmethod
    def from_arrows(cls, n: int, arrows: Iterable[tuple[int, int, int]]) -> "Quiver":
        """Build from ``(source, target, multiplicity)`` triples, 1-based.

        Repeated pairs add up; a 2-cycle or loop raises :class:`QuiverError`.
        """
        mult = [[0] * n for _ in range(n)]
        for a, b, m in arrows:
            if not (1 <= a <= n and 1 <= b <= n):
                raise QuiverError(f"arrow {a}->{b} out of range 1..{n}")
            if m < 1:
                raise QuiverError(f"multiplicity must be >= 1, got {m}")
            mult[a - 1][b - 1] += m
        return cls(n, _freeze(mult))

    @classmethod
    def from_exchange_matrix(cls, b: Matrix) -> "Quiver":
        n = len(b)
        return cls(n, tuple(tuple(max(b[i][j], 0) for j in range(n)) for i in range(n)))

    def arrows(self) -> list[tuple[int, int, int]]:
        return [
            (i + 1, j + 1, self.mult[i][j])
            for i in range(self.n)
            for j in range(self.n)
            if self.mult[i][j]
        ]

    def to_dict(self) -> dict:
        return {"vertices": self.n, "arrows": [list(a) for a in self.arrows()]}


@dataclass(frozen=True)
class ExtendedState:
    """Principal block ``b`` stacked over the C-matrix ``c`` (both n x n)."""

    n: int
    b: Matrix
    c: Matrix

    def cvector(self, j: int) -> tuple[int, ...]:
        """c-vector of vertex ``j`` (1-based)."""
        return column(self.c, j - 1)

    def cvectors(self) -> list[tuple[int, ...]]:
        return [column(self.c, j) for j in range(self.n)]

    def extended(self) -> Matrix:
        """The 2n x n extended exchange matrix."""
        return self.b + self.c


_VERTICES = re.compile(r"^vertices\s*:\s*(\S+)\s*$")
_ARROW = re.compile(r"^arrow\s*:\s*(.*)$")


def parse_quiver(text: str) -> Quiver:
    """Parse the line-oriented quiver format.

    ``#`` lines and blank lines are ignored; exactly one ``vertices: n``
    line; any number of ``arrow: from to multiplicity`` lines.  Arrow lines
    may precede the vertices line.
    """
    n = None
    arrows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if m := _VERTICES.match(line):
            if n is not None:
                raise QuiverError(f"line {lineno}: duplicate vertices line")
            try:
                n = int(m.group(1))
            except ValueError:
                raise QuiverError(f"line {lineno}: bad vertex count {m.group(1)!r}") from None
            continue
        if m := _ARROW.match(line):
            fields = m.group(1).split()
            try:
                a, b, mult = (int(x) for x in fields)
            except ValueError:
                raise QuiverError(f"line {lineno}: expected 'arrow: <from> <to> <mult>'") from None
            arrows.append((lineno, a, b, mult))
            continue
        raise QuiverError(f"line {lineno}: cannot parse {line!r}")
    if n is None:
        raise QuiverError("missing 'vertices:' line")
    if n < 1:
        raise QuiverError(f"vertex count must be positive, got {n}")
    for lineno, a, b, mult in arrows:
        if not (1 <= a <= n and 1 <= b <= n):
            raise QuiverError(f"line {lineno}: vertex index out of range 1..{n}")
        if a == b:
            raise QuiverError(f"line {lineno}: loop at vertex {a}")
        if mult < 1:
            raise QuiverError(f"line {lineno}: multiplicity must be >= 1")
    return Quiver.from_arrows(n, [(a, b, m) for _, a, b, m in arrows])


def format_quiver(q: Quiver, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"vertices: {q.n}")
    lines += [f"arrow: {a} {b} {m}" for a, b, m in q.arrows()]
    return "\n".join(lines) + "\n"


def exchange_matrix(q: Quiver) -> Matrix:
    n = q.n
    return tuple(tuple(q.mult[i][j] - q.mult[j][i] for j in range(n)) for i in range(n))


def framed_seed(q: Quiver) -> ExtendedState:
    return ExtendedState(q.n, exchange_matrix(q), identity(q.n))


def _check_index(n: int, k: int) -> None:
    if not (1 <= k <= n):
        raise IndexError(f"vertex {k} out of range 1..{n}")


def mutate_b(b: Matrix, k: int) -> Matrix:
    """Matrix mutation of a square exchange matrix at ``k`` (0-based)."""
    n = len(b)
    bk = b[k]
    out = []
    for i in range(n):
        row = b[i]
        bik = row[k]
        if i == k:
            out.append(tuple(-x for x in row))
            continue
        new = list(row)
        new[k] = -bik
        if bik:
            for j in range(n):
                if j != k and bik * bk[j] > 0:
                    new[j] = row[j] + bik * abs(bk[j])
        out.append(tuple(new))
    return tuple(out)


def mutate_c(c: Matrix, b: Matrix, k: int) -> Matrix:
    """Mutate the C block at ``k`` (0-based) against the *unmutated* ``b``.

    Same rule as for ``b`` but on the negated frozen rows, which amounts to
    adding ``c[r][k] * |b[k][j]|`` when ``c[r][k] * b[k][j] < 0``.
    """
    n = len(b)
    bk = b[k]
    out = []
    for row in c:
        crk = row[k]
        new = list(row)
        new[k] = -crk
        if crk:
            for j in range(n):
                if j != k and crk * bk[j] < 0:
                    new[j] = row[j] + crk * abs(bk[j])
        out.append(tuple(new))
    return tuple(out)


def mutate(s: ExtendedState, k: int) -> ExtendedState:
    """Mutate the extended state at vertex ``k`` (1-based); ``s`` is untouched."""
    _check_index(s.n, k)
    return ExtendedState(s.n, mutate_b(s.b, k - 1), mutate_c(s.c, s.b, k - 1))


def mutate_sequence(s: ExtendedState, seq: Sequence[int]) -> ExtendedState:
    for k in seq:
        s = mutate(s, k)
    return s


def mutate_quiver(q: Quiver, k: int) -> Quiver:
    """Quiver mutation by composing through k, reversing, cancelling 2-cycles.

    Works on arrow counts only and shares no code with :func:`mutate_b`.
    """
    _check_index(q.n, k)
    n, k0 = q.n, k - 1
    arrows = [list(row) for row in q.mult]
    # (1) compose i -> k -> j
    for i in range(n):
        for j in range(n):
            if i != k0 and j != k0 and i != j:
                arrows[i][j] += q.mult[i][k0] * q.mult[k0][j]
    # (2) reverse arrows at k
    for i in range(n):
        arrows[i][k0], arrows[k0][i] = q.mult[k0][i], q.mult[i][k0]
    # (3) cancel 2-cycles
    for i in range(n):
        for j in range(i + 1, n):
            common = min(arrows[i][j], arrows[j][i])
            arrows[i][j] -= common
            arrows[j][i] -= common
    return Quiver(n, _freeze(arrows))


def framed_quiver(q: Quiver) -> Quiver:
    """Ice quiver on 2n vertices: Q plus an arrow ``i -> n+i`` for each i."""
    n = q.n
    mult = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        mult[i][:n] = q.mult[i]
        mult[i][n + i] = 1
    return Quiver(2 * n, _freeze(mult))


def state_from_ice_quiver(ice: Quiver, n: int) -> ExtendedState:
    """Read (b, c) off a mutated framed ice quiver; frozen-frozen arrows are ignored."""
    m = ice.mult
    b = tuple(tuple(m[i][j] - m[j][i] for j in range(n)) for i in range(n))
    c = tuple(tuple(m[j][n + r] - m[n + r][j] for j in range(n)) for r in range(n))
    return ExtendedState(n, b, c)


def is_sign_coherent(v: Sequence[int]) -> bool:
    return any(v) and (all(x >= 0 for x in v) or all(x <= 0 for x in v))


def green_vertices(s: ExtendedState) -> frozenset[int]:
    """Vertices (1-based) whose c-vector is nonnegative.

    Raises :class:`SignCoherenceError` if any column is zero or mixed.
    """
    green = []
    for j in range(s.n):
        col = column(s.c, j)
        if not is_sign_coherent(col):
            raise SignCoherenceError(f"c-vector of vertex {j + 1} is not sign-coherent: {col}")
        if all(x >= 0 for x in col):
            green.append(j + 1)
    return frozenset(green)


def euler_matrix(q: Quiver) -> Matrix:
    n = q.n
    return tuple(tuple(int(i == j) - q.mult[i][j] for j in range(n)) for i in range(n))


def euler_form(q: Quiver, v: Sequence[int], w: Sequence[int]) -> int:
    """``v^T (I - A) w`` for the arrow-multiplicity matrix A."""
    if len(v) != q.n or len(w) != q.n:
        raise ValueError(f"vectors must have length {q.n}")
    e = euler_matrix(q)
    return sum(v[i] * e[i][j] * w[j] for i in range(q.n) for j in range(q.n) if v[i] and w[j])


def is_acyclic(q: Quiver) -> bool:
    """Kahn topological sort on the underlying simple digraph."""
    n = q.n
    indeg = [sum(1 for i in range(n) if q.mult[i][j]) for j in range(n)]
    ready = [j for j in range(n) if indeg[j] == 0]
    seen = 0
    while ready:
        i = ready.pop()
        seen += 1
        for j in range(n):
            if q.mult[i][j]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
    return seen == n


def full_subquiver(q: Quiver, vertices: Iterable[int]) -> Quiver:
    """Full subquiver on the given 1-based vertices, relabelled in ascending order."""
    vs = sorted(set(vertices))
    for v in vs:
        _check_index(q.n, v)
    return Quiver(len(vs), tuple(tuple(q.mult[a - 1][b - 1] for b in vs) for a in vs))


def disjoint_union(*quivers: Quiver) -> Quiver:
    n = sum(q.n for q in quivers)
    mult = [[0] * n for _ in range(n)]
    off = 0
    for q in quivers:
        for i in range(q.n):
            mult[off + i][off : off + q.n] = q.mult[i]
        off += q.n
    return Quiver(n, _freeze(mult))
