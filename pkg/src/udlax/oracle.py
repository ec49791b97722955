"""Brute-force reference computations for cross-checking :mod:`udlax.maxplus`.

Everything here is exponential and deliberately shares no helpers with the
production algorithms: path and cycle weights are found by explicit
depth-first enumeration instead of dynamic programming.  Use on n <= 8.
"""

from __future__ import annotations

from fractions import Fraction

from .maxplus import NEG_INF, MaxPlusMatrix, PositiveCycleError

MAX_DIM = 8


def _check_dim(A: MaxPlusMatrix) -> None:
    if A.n > MAX_DIM:
        raise ValueError(f"oracle limited to dimension {MAX_DIM}, got {A.n}")


def _arcs(A: MaxPlusMatrix) -> dict:
    out = {}
    for i in range(A.n):
        out[i] = [(j, A.entries[i][j]) for j in range(A.n) if A.entries[i][j] is not NEG_INF]
    return out


def simple_cycles(nodes, arcs):
    """Yield every elementary cycle once, as a tuple starting at its smallest node.

    ``arcs`` maps a node to an iterable of successors.  Nodes must be orderable.
    """
    nodes = sorted(nodes)
    for start in nodes:
        stack = [(start, iter(sorted(arcs.get(start, ()))))]
        path = [start]
        on_path = {start}
        while stack:
            node, succ = stack[-1]
            advanced = False
            for nxt in succ:
                if nxt == start:
                    yield tuple(path)
                elif nxt > start and nxt not in on_path:
                    path.append(nxt)
                    on_path.add(nxt)
                    stack.append((nxt, iter(sorted(arcs.get(nxt, ())))))
                    advanced = True
                    break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())


def cycle_weights(A: MaxPlusMatrix):
    """Yield ``(cycle, total_weight)`` for each elementary cycle, in external indices."""
    _check_dim(A)
    arcs = {i: [j for j, _ in succ] for i, succ in _arcs(A).items()}
    for cyc in simple_cycles(range(A.n), arcs):
        total = Fraction(0)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            total = total + A.entries[a][b]
        yield tuple(c + A.offset for c in cyc), total


def brute_mcm(A: MaxPlusMatrix):
    best = NEG_INF
    for cyc, total in cycle_weights(A):
        mean = total / len(cyc)
        if best is NEG_INF or mean > best:
            best = mean
    return best


def brute_star(A: MaxPlusMatrix) -> MaxPlusMatrix:
    """Greatest path weights by enumerating every elementary path.

    With no positive cycle, walks of length <= n-1 never beat the elementary
    paths they contain, so this equals the truncated series.
    """
    _check_dim(A)
    lam = brute_mcm(A)
    if lam is not NEG_INF and lam > 0:
        raise PositiveCycleError("positive cycle: star diverges")
    n = A.n
    arcs = _arcs(A)
    rows = []
    for src in range(n):
        best = [NEG_INF] * n
        best[src] = Fraction(0)

        def walk(node, weight, seen):
            for nxt, w in arcs[node]:
                if nxt in seen:
                    continue
                total = weight + w
                if best[nxt] is NEG_INF or total > best[nxt]:
                    best[nxt] = total
                walk(nxt, total, seen | {nxt})

        walk(src, Fraction(0), frozenset([src]))
        rows.append(tuple(best))
    return MaxPlusMatrix(tuple(rows), A.offset)


def brute_eigencheck(A: MaxPlusMatrix, v) -> bool:
    """True iff ``A (x) v == v``, evaluated with an explicit double loop."""
    n = A.n
    if len(v) != n:
        return False
    for i in range(n):
        acc = NEG_INF
        for j in range(n):
            a = A.entries[i][j]
            if a is NEG_INF or v[j] is NEG_INF:
                continue
            term = a + v[j]
            if acc is NEG_INF or term > acc:
                acc = term
        if acc != v[i]:
            return False
    return True
