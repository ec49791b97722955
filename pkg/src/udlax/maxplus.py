"""Exact max-plus scalar and matrix arithmetic.

Scalars are :class:`fractions.Fraction` values or the bottom element
:data:`NEG_INF`.  ``NEG_INF`` orders below every rational and absorbs
addition, so the built-in ``max`` and ``+`` already implement the semiring
operations on mixed inputs.

Matrices carry an ``offset`` so that row/column 0 can stand for an arbitrary
external integer index (windows such as ``[-N-1, N+1]``).  Vectors are plain
tuples addressed by position; position ``p`` corresponds to the external index
``offset + p`` of the matrix they are used with.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union


class _NegInf:
    """The bottom element of the max-plus semiring."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __reduce__(self):
        return (_NegInf, ())

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("max-plus bottom")

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("bottom - bottom is undefined")
        return self

    def __rsub__(self, other):
        raise ArithmeticError("finite - bottom is +infinity, outside the semiring")

    def __neg__(self):
        raise ArithmeticError("-bottom is +infinity, outside the semiring")


NEG_INF = _NegInf()

Scalar = Union[Fraction, _NegInf]
Vector = tuple


class PositiveCycleError(ValueError):
    """The matrix has a cycle of positive weight, so its Kleene star diverges."""


class AcyclicError(ValueError):
    """The associated digraph has no cycle, so no cycle mean exists."""


class EigenvalueError(ValueError):
    """The operation needs a matrix whose maximum cycle mean is zero."""


def scalar(x) -> Scalar:
    """Coerce ``x`` to a semiring element.

    Accepts ints, Fractions, rational strings such as ``"3/5"``, and ``None``
    or ``NEG_INF`` for bottom.  Floats are refused to keep results exact.
    """
    if type(x) is Fraction:
        return x
    if x is None or x is NEG_INF:
        return NEG_INF
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean value {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a max-plus scalar")


def is_finite(x: Scalar) -> bool:
    return x is not NEG_INF


def oplus(a: Scalar, b: Scalar) -> Scalar:
    return max(a, b)


def otimes(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def format_scalar(x: Scalar):
    """JSON form of a scalar: reduced ``"p/q"`` string, or ``None`` for bottom."""
    return None if x is NEG_INF else str(x)


def vector(values: Iterable) -> Vector:
    return tuple(scalar(v) for v in values)


@dataclass(frozen=True)
class MaxPlusMatrix:
    """Dense square matrix over the max-plus semiring."""

    entries: tuple
    offset: int = 0

    def __post_init__(self):
        rows = tuple(tuple(scalar(x) for x in row) for row in self.entries)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, n: int, offset: int = 0) -> "MaxPlusMatrix":
        return cls(
            tuple(tuple(Fraction(0) if i == j else NEG_INF for j in range(n)) for i in range(n)),
            offset,
        )

    @classmethod
    def bottom(cls, n: int, offset: int = 0) -> "MaxPlusMatrix":
        return cls(tuple((NEG_INF,) * n for _ in range(n)), offset)

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def indices(self) -> range:
        """External indices covered by the matrix."""
        return range(self.offset, self.offset + self.n)

    def pos(self, i: int) -> int:
        p = i - self.offset
        if not 0 <= p < self.n:
            raise IndexError(f"index {i} outside [{self.offset}, {self.offset + self.n - 1}]")
        return p

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[self.pos(i)][self.pos(j)]

    def column(self, j: int) -> Vector:
        p = self.pos(j)
        return tuple(row[p] for row in self.entries)

    def shifted(self, c: Scalar) -> "MaxPlusMatrix":
        """Every finite entry plus ``c`` (``c`` may be negative)."""
        return MaxPlusMatrix(tuple(tuple(x + c for x in row) for row in self.entries), self.offset)

    def to_json(self) -> dict:
        return {
            "offset": self.offset,
            "entries": [[format_scalar(x) for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, data) -> "MaxPlusMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(tuple(scalar(x) for x in row) for row in data["entries"]), int(data["offset"]))


def mat_mul(A: MaxPlusMatrix, B: MaxPlusMatrix) -> MaxPlusMatrix:
    if A.n != B.n or A.offset != B.offset:
        raise ValueError("matrices must share dimension and index offset")
    cols = [B.column(j) for j in B.indices]
    return MaxPlusMatrix(
        tuple(tuple(max(a + b for a, b in zip(row, col)) for col in cols) for row in A.entries),
        A.offset,
    )


def mat_oplus(A: MaxPlusMatrix, B: MaxPlusMatrix) -> MaxPlusMatrix:
    if A.n != B.n or A.offset != B.offset:
        raise ValueError("matrices must share dimension and index offset")
    return MaxPlusMatrix(
        tuple(tuple(max(a, b) for a, b in zip(ra, rb)) for ra, rb in zip(A.entries, B.entries)),
        A.offset,
    )


def mat_vec(A: MaxPlusMatrix, v: Sequence[Scalar]) -> Vector:
    if len(v) != A.n:
        raise ValueError(f"vector of length {len(v)} does not match dimension {A.n}")
    # bottom entries never win, so skip them
    return tuple(
        max((a + x for a, x in zip(row, v) if a is not NEG_INF), default=NEG_INF) for row in A.entries
    )


def _scaled(A: MaxPlusMatrix, *extra: Fraction) -> tuple:
    """Entries times a common denominator ``L`` as ints, ``None`` for bottom."""
    L = 1
    for row in A.entries:
        for x in row:
            if x is not NEG_INF:
                L = math.lcm(L, x.denominator)
    for x in extra:
        L = math.lcm(L, x.denominator)
    rows = [[None if x is NEG_INF else x.numerator * (L // x.denominator) for x in row] for row in A.entries]
    return rows, L


def _karp(W: list):
    """Karp's formula on integer weights; ``None`` when there is no cycle."""
    n = len(W)
    cols = [[(u, W[u][v]) for u in range(n) if W[u][v] is not None] for v in range(n)]
    # D[m][v]: heaviest walk with exactly m edges ending at v (any start)
    D = [[0] * n]
    for _ in range(n):
        prev = D[-1]
        cur = []
        for v in range(n):
            best = None
            for u, w in cols[v]:
                p = prev[u]
                if p is not None and (best is None or p + w > best):
                    best = p + w
            cur.append(best)
        D.append(cur)
    # means kept as (num, den) with den > 0, compared by cross-multiplication
    best = None
    for v in range(n):
        dn = D[n][v]
        if dn is None:
            continue
        worst = None
        for m in range(n):
            if D[m][v] is None:
                continue
            num, den = dn - D[m][v], n - m
            if worst is None or num * worst[1] < worst[0] * den:
                worst = (num, den)
        if best is None or worst[0] * best[1] > best[0] * worst[1]:
            best = worst
    return None if best is None else Fraction(*best)


def max_cycle_mean(A: MaxPlusMatrix) -> Scalar:
    """Maximum cycle mean by Karp's algorithm; ``NEG_INF`` for an acyclic digraph.

    Walks may start at every node (a zero-weight super source), so the formula
    holds without strong connectivity.
    """
    if A.n == 0:
        return NEG_INF
    W, L = _scaled(A)
    lam = _karp(W)
    return NEG_INF if lam is None else lam / L


def _closure(W: list) -> list:
    """Floyd-Warshall closure of ``I (+) W`` on integer weights (``None`` = bottom)."""
    n = len(W)
    S = [list(row) for row in W]
    for i in range(n):
        if S[i][i] is None or S[i][i] < 0:
            S[i][i] = 0
    for k in range(n):
        Sk = S[k]
        succ = [(j, w) for j, w in enumerate(Sk) if w is not None]
        for i in range(n):
            sik = S[i][k]
            if sik is None:
                continue
            Si = S[i]
            for j, w in succ:
                t = sik + w
                cur = Si[j]
                if cur is None or t > cur:
                    Si[j] = t
    return S


def _unscale(S: list, L: int) -> tuple:
    return tuple(tuple(NEG_INF if x is None else Fraction(x, L) for x in row) for row in S)


def _star_ints(A: MaxPlusMatrix) -> tuple:
    W, L = _scaled(A)
    S = _closure(W)
    if any(S[i][i] > 0 for i in range(A.n)):
        raise PositiveCycleError("matrix has a positive cycle, Kleene star diverges")
    return S, L


def kleene_star(A: MaxPlusMatrix) -> MaxPlusMatrix:
    """``I (+) A (+) A^2 (+) ...``; raises :class:`PositiveCycleError` if it diverges."""
    S, L = _star_ints(A)
    return MaxPlusMatrix(_unscale(S, L), A.offset)


def star_column(A: MaxPlusMatrix, j: int) -> Vector:
    """Column ``j`` (external index) of ``A*``: heaviest paths into ``j``.

    Bellman-Ford on the integer weights.  Raises :class:`PositiveCycleError`
    if a positive cycle can reach ``j``.
    """
    W, L = _scaled(A)
    n, p = A.n, A.pos(j)
    arcs = [(i, t, w) for i, row in enumerate(W) for t, w in enumerate(row) if w is not None]
    dist = [None] * n
    dist[p] = 0
    for _ in range(n + 1):
        changed = False
        for i, t, w in arcs:
            if dist[t] is not None:
                c = w + dist[t]
                if dist[i] is None or c > dist[i]:
                    dist[i] = c
                    changed = True
        if not changed:
            break
    else:
        raise PositiveCycleError("positive cycle reaches the column, Kleene star diverges")
    return tuple(NEG_INF if d is None else Fraction(d, L) for d in dist)


@dataclass(frozen=True)
class CriticalGraph:
    lam: Scalar
    nodes: frozenset
    edges: frozenset
    components: tuple  # of frozensets, ordered by smallest index


def critical_graph(A: MaxPlusMatrix) -> CriticalGraph:
    """Nodes and edges lying on cycles of maximum mean, split into components."""
    lam = max_cycle_mean(A)
    if lam is NEG_INF:
        raise AcyclicError("digraph has no cycle")
    W, L = _scaled(A, lam)
    shift = lam.numerator * (L // lam.denominator)
    B = [[None if w is None else w - shift for w in row] for row in W]
    S = _closure(B)
    n, off = A.n, A.offset
    edges = set()
    for i in range(n):
        for j in range(n):
            b = B[i][j]
            # edge (i, j) closes into a zero-weight cycle via the best path j -> i
            if b is not None and S[j][i] is not None and b + S[j][i] == 0:
                edges.add((i + off, j + off))
    nodes = {i for e in edges for i in e}

    # every critical edge lies on a critical cycle, so weak and strong
    # connectivity coincide on the critical graph
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict = {}
    for v in nodes:
        groups.setdefault(find(v), set()).add(v)
    components = tuple(frozenset(g) for g in sorted(groups.values(), key=min))
    return CriticalGraph(lam, frozenset(nodes), frozenset(edges), components)


def is_eigenvector(A: MaxPlusMatrix, v: Sequence[Scalar], lam: Scalar = Fraction(0)) -> bool:
    if all(x is NEG_INF for x in v):
        raise ValueError("eigenvector must have a finite entry")
    return mat_vec(A, v) == tuple(lam + x for x in v)


@dataclass(frozen=True)
class SaturationGraph:
    nodes: frozenset
    edges: frozenset


def saturation_graph(A: MaxPlusMatrix, v: Sequence[Scalar], lam: Scalar = Fraction(0)) -> SaturationGraph:
    """Edges ``(i, j)`` attaining the maximum in row ``i`` of ``A (x) v``."""
    if not is_eigenvector(A, v, lam):
        raise ValueError("vector is not an eigenvector for the given eigenvalue")
    off = A.offset
    edges = set()
    for i, row in enumerate(A.entries):
        if v[i] is NEG_INF:
            continue
        target = lam + v[i]
        for j, a in enumerate(row):
            if a is not NEG_INF and v[j] is not NEG_INF and a + v[j] == target:
                edges.add((i + off, j + off))
    nodes = frozenset(i + off for i, x in enumerate(v) if x is not NEG_INF)
    return SaturationGraph(nodes, frozenset(edges))


def _require_zero_lambda(A: MaxPlusMatrix) -> None:
    lam = max_cycle_mean(A)
    if lam != 0:
        raise EigenvalueError(f"maximum cycle mean is {lam}, expected 0")


def fundamental_indices(A: MaxPlusMatrix) -> list:
    """One representative (the smallest index) per critical component."""
    _require_zero_lambda(A)
    return [min(c) for c in critical_graph(A).components]


def eigenspace_basis(A: MaxPlusMatrix) -> list:
    """Fundamental eigenvectors: one critical column of ``A*`` per critical component."""
    indices = fundamental_indices(A)
    star = kleene_star(A)
    basis = [star.column(i) for i in indices]
    for col in basis:
        assert is_eigenvector(A, col), "critical column failed the eigen-equation"
    return basis


def residuation_coeffs(A_star: MaxPlusMatrix, v: Sequence[Scalar], basis_indices: Iterable[int]) -> list:
    """Greatest ``alpha`` with ``(+)_i alpha_i (x) A*[:, i] <= v``."""
    alphas = []
    for i in basis_indices:
        col = A_star.column(i)
        alpha = None  # +infinity until some finite constraint appears
        for vj, sji in zip(v, col):
            if sji is NEG_INF:
                continue
            if vj is NEG_INF:
                alpha = NEG_INF
                break
            d = vj - sji
            alpha = d if alpha is None else min(alpha, d)
        alphas.append(NEG_INF if alpha is None else alpha)
    return alphas


def combine(columns: Sequence[Sequence[Scalar]], coeffs: Sequence[Scalar]) -> Vector:
    """Max-linear combination ``(+)_i coeffs[i] (x) columns[i]``."""
    if not columns:
        raise ValueError("need at least one column")
    return tuple(
        max(c + col[p] for c, col in zip(coeffs, columns)) for p in range(len(columns[0]))
    )


def in_eigenspace(A: MaxPlusMatrix, v: Sequence[Scalar]) -> bool:
    indices = fundamental_indices(A)
    star = kleene_star(A)
    alphas = residuation_coeffs(star, v, indices)
    return combine([star.column(i) for i in indices], alphas) == tuple(v)
