"""The multispecies TASEP on a ring and the operators built from queues.

Matrices use the row convention: ``P[u][v]`` is the probability of moving
from state ``u`` to state ``v``, and an operator ``A`` sending basis vector
``e_u`` to ``sum_v c_v e_v`` has row ``u`` equal to ``c``.  With this
convention the composite "first ``A``, then ``B``" is the product ``A * B``.

States of type ``m`` are listed in lexicographic order.  A subset ``S`` of
``[n-1]`` encodes the type whose partial sums are ``[n-1]`` minus ``S``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .core import (
    TypeVector,
    Word,
    compositions,
    merge_classes,
    partial_sums,
    queue_apply,
    word_type,
    words_of_type,
)
from .poly import Poly

Matrix = List[List[Fraction]]
IntMatrix = List[List[int]]
PolyMatrix = Dict[int, Dict[int, Poly]]  # sparse: row -> col -> entry


# ---------------------------------------------------------------------------
# Types and state spaces
# ---------------------------------------------------------------------------

def type_of_subset(s: Iterable[int], n: int) -> TypeVector:
    """``m_S``: the composition of ``n`` whose partial sums below ``n`` avoid ``S``."""
    s = set(s)
    if any(not 1 <= i <= n - 1 for i in s):
        raise ValueError(f"{sorted(s)} is not a subset of [1..{n - 1}]")
    cuts = [i for i in range(1, n) if i not in s] + [n]
    out, prev = [], 0
    for c in cuts:
        out.append(c - prev)
        prev = c
    return tuple(out)


def subset_of_type(m: Sequence[int]) -> Tuple[int, ...]:
    n = sum(m)
    p = set(partial_sums(m)[:-1])
    return tuple(i for i in range(1, n) if i not in p)


@dataclass(frozen=True)
class StateSpace:
    m: TypeVector
    states: Tuple[Word, ...]

    @classmethod
    def of_type(cls, m: Sequence[int]) -> "StateSpace":
        m = tuple(m)
        if not m or any(a <= 0 for a in m):
            raise ValueError(f"type {m} must be packed")
        return cls(m, tuple(words_of_type(m)))

    @property
    def n(self) -> int:
        return sum(self.m)

    def index(self) -> Dict[Word, int]:
        return {w: k for k, w in enumerate(self.states)}

    def __len__(self) -> int:
        return len(self.states)


# ---------------------------------------------------------------------------
# Transition matrix and stationary distribution
# ---------------------------------------------------------------------------

def tasep_moves(u: Sequence[int]) -> List[Word]:
    """The ``n`` equally likely outcomes of one step from ``u``."""
    n = len(u)
    out = []
    for i in range(n):
        j = (i + 1) % n
        if u[i] > u[j]:
            w = list(u)
            w[i], w[j] = w[j], w[i]
            out.append(tuple(w))
        else:
            out.append(tuple(u))
    return out


def transition_matrix(m: Sequence[int]) -> Matrix:
    space = StateSpace.of_type(m)
    idx = space.index()
    n = space.n
    size = len(space)
    p = [[Fraction(0)] * size for _ in range(size)]
    step = Fraction(1, n)
    for a, u in enumerate(space.states):
        for v in tasep_moves(u):
            p[a][idx[v]] += step
    return p


def _bareiss_solve(a: IntMatrix, b: Sequence[int]) -> List[Fraction]:
    """Solve ``a x = b`` for a nonsingular integer matrix by fraction-free elimination."""
    size = len(a)
    m = [list(row) + [b[k]] for k, row in enumerate(a)]
    prev = 1
    for k in range(size):
        pivot = next((r for r in range(k, size) if m[r][k] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
        for r in range(k + 1, size):
            for c in range(k + 1, size + 1):
                m[r][c] = (m[r][c] * m[k][k] - m[r][k] * m[k][c]) // prev
            m[r][k] = 0
        prev = m[k][k]
    x = [Fraction(0)] * size
    for r in range(size - 1, -1, -1):
        acc = Fraction(m[r][size])
        for c in range(r + 1, size):
            acc -= m[r][c] * x[c]
        x[r] = acc / m[r][r]
    return x


def stationary_vector(p: Matrix) -> List[Fraction]:
    """The unique probability vector ``pi`` with ``pi P = pi`` for an irreducible chain."""
    size = len(p)
    common = 1
    for row in p:
        for x in row:
            common = common * x.denominator // gcd(common, x.denominator)
    # rows of (P - I)^T scaled to integers, the last one replaced by sum(pi) = 1
    a = [[int((p[c][r] - (1 if r == c else 0)) * common) for c in range(size)] for r in range(size)]
    a[-1] = [1] * size
    b = [0] * (size - 1) + [1]
    return _bareiss_solve(a, b)


def stationary_distribution(m: Sequence[int]) -> Dict[Word, Fraction]:
    space = StateSpace.of_type(m)
    pi = stationary_vector(transition_matrix(m))
    return dict(zip(space.states, pi))


def normalize(weights: Mapping[Word, int]) -> Dict[Word, Fraction]:
    total = sum(weights.values())
    return {w: Fraction(c, total) for w, c in weights.items()}


# ---------------------------------------------------------------------------
# Merge and queue operators
# ---------------------------------------------------------------------------

def _class_at_partial_sum(m: Sequence[int], i: int) -> int | None:
    for t, p in enumerate(partial_sums(m), start=1):
        if p == i:
            return t
    return None


def phi_operator(i: int, m: Sequence[int]) -> Tuple[IntMatrix, TypeVector]:
    """``Phi_i``: ``e_u -> e_{merge at i}(u)``; ``i`` must be a partial sum below ``n``.

    Returns the matrix and the target type.
    """
    m = tuple(m)
    n = sum(m)
    t = _class_at_partial_sum(m, i)
    if t is None or i >= n:
        raise ValueError(f"{i} is not a partial sum of {m} below {n}")
    src = StateSpace.of_type(m)
    tgt_type = tuple(m[: t - 1]) + (m[t - 1] + m[t],) + tuple(m[t + 1:])
    tgt = StateSpace.of_type(tgt_type)
    idx = tgt.index()
    out = [[0] * len(tgt) for _ in range(len(src))]
    for a, u in enumerate(src.states):
        out[a][idx[merge_classes(u, t)]] = 1
    return out, tgt_type


def _psi_target_type(m: Sequence[int], i: int) -> TypeVector:
    m = tuple(m)
    n = sum(m)
    if not 1 <= i <= n - 1 or _class_at_partial_sum(m, i) is not None:
        raise ValueError(f"{i}-queues do not refine type {m}: {i} must lie strictly inside a class")
    s = set(subset_of_type(m))
    return type_of_subset(s - {i}, n)


def _queue_images(u: Word, i: int) -> Iterable[Tuple[Tuple[int, ...], Word]]:
    n = len(u)
    for q in combinations(range(1, n + 1), i):
        yield q, queue_apply(q, u)


def psi_operator(i: int, m: Sequence[int]) -> Tuple[IntMatrix, TypeVector]:
    """``Psi_i``: ``e_u -> sum over i-queues q of e_{q(u)}``; ``i`` must lie in ``S``."""
    tgt_type = _psi_target_type(m, i)
    src = StateSpace.of_type(m)
    tgt = StateSpace.of_type(tgt_type)
    idx = tgt.index()
    out = [[0] * len(tgt) for _ in range(len(src))]
    for a, u in enumerate(src.states):
        for _, v in _queue_images(u, i):
            out[a][idx[v]] += 1
    return out, tgt_type


def psi_tilde_operator(i: int, m: Sequence[int]) -> Tuple[PolyMatrix, TypeVector]:
    """``Psi~_i``: ``e_u -> sum over i-queues q of wt(q) e_{q(u)}`` (sparse)."""
    tgt_type = _psi_target_type(m, i)
    src = StateSpace.of_type(m)
    tgt = StateSpace.of_type(tgt_type)
    idx = tgt.index()
    n = src.n
    out: PolyMatrix = {}
    for a, u in enumerate(src.states):
        row = out.setdefault(a, {})
        for q, v in _queue_images(u, i):
            c = idx[v]
            w = Poly.from_sites(n, q)
            row[c] = row[c] + w if c in row else w
    return out, tgt_type


# ---------------------------------------------------------------------------
# Matrix helpers
# ---------------------------------------------------------------------------

def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    """Dense product; works for ``int`` and ``Fraction`` entries."""
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * cols
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for c in range(cols):
                    if bk[c]:
                        acc[c] += x * bk[c]
        out.append(acc)
    return out


def poly_matmul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    out: PolyMatrix = {}
    for r, row in a.items():
        acc: Dict[int, Poly] = {}
        for k, x in row.items():
            for c, y in b.get(k, {}).items():
                acc[c] = acc[c] + x * y if c in acc else x * y
        out[r] = {c: v for c, v in acc.items() if not v.is_zero()}
    return out


def poly_matrix_equal(a: PolyMatrix, b: PolyMatrix) -> bool:
    def clean(m: PolyMatrix) -> Dict[Tuple[int, int], Poly]:
        return {(r, c): v for r, row in m.items() for c, v in row.items() if not v.is_zero()}

    return clean(a) == clean(b)


def poly_matrix_at_ones(a: PolyMatrix, rows: int, cols: int) -> IntMatrix:
    out = [[0] * cols for _ in range(rows)]
    for r, row in a.items():
        for c, v in row.items():
            out[r][c] = v.at_ones()
    return out


def matrix_to_json(a: Sequence[Sequence]) -> List[List[str]]:
    """Exact entries as ``"p/q"`` strings."""
    return [[f"{Fraction(x).numerator}/{Fraction(x).denominator}" for x in row] for row in a]


# ---------------------------------------------------------------------------
# Identities
# ---------------------------------------------------------------------------

def check_phi_intertwining(i: int, m: Sequence[int]) -> bool:
    """``P_S Phi_i = Phi_i P_{S+i}`` in the row convention."""
    phi, tgt = phi_operator(i, m)
    return matmul(transition_matrix(m), phi) == matmul(phi, transition_matrix(tgt))


def check_psi_intertwining(i: int, m: Sequence[int]) -> bool:
    """``P_S Psi_i = Psi_i P_{S-i}`` in the row convention."""
    psi, tgt = psi_operator(i, m)
    return matmul(transition_matrix(m), psi) == matmul(psi, transition_matrix(tgt))


def check_psi_tilde_commute(i: int, j: int, m: Sequence[int]) -> bool:
    """``Psi~_i Psi~_j = Psi~_j Psi~_i`` on ``V_S`` for ``i, j`` in ``S``."""
    a1, t1 = psi_tilde_operator(i, m)
    a2, _ = psi_tilde_operator(j, t1)
    b1, t2 = psi_tilde_operator(j, m)
    b2, _ = psi_tilde_operator(i, t2)
    return poly_matrix_equal(poly_matmul(a1, a2), poly_matmul(b1, b2))


def all_packed_types(n: int) -> List[TypeVector]:
    return list(compositions(n))


# ---------------------------------------------------------------------------
# The queue chain
# ---------------------------------------------------------------------------

def _merge_class(m: Sequence[int], i: int) -> int:
    n = sum(m)
    if not 1 <= i <= n:
        raise ValueError(f"queue size {i} outside [1..{n}]")
    return next(t for t, p in enumerate(partial_sums(m), start=1) if p >= i)


def queue_chain_step(u: Sequence[int], i: int, rng: random.Random) -> Word:
    """Apply a uniformly random ``i``-queue, then merge back to the type of ``u``."""
    u = tuple(u)
    n = len(u)
    t = _merge_class(word_type(u), i)
    q = sorted(rng.sample(range(1, n + 1), i))
    return merge_classes(queue_apply(q, u), t)


def queue_chain_matrix(m: Sequence[int], i: int) -> Matrix:
    """Exact transition matrix of the queue chain."""
    space = StateSpace.of_type(m)
    idx = space.index()
    n = space.n
    t = _merge_class(m, i)
    qs = list(combinations(range(1, n + 1), i))
    step = Fraction(1, len(qs))
    p = [[Fraction(0)] * len(space) for _ in range(len(space))]
    for a, u in enumerate(space.states):
        for q in qs:
            p[a][idx[merge_classes(queue_apply(q, u), t)]] += step
    return p


def sample_queue_chain(m: Sequence[int], i: int, steps: int, seed: int,
                       start: Sequence[int] | None = None) -> Dict[Word, int]:
    """Visit counts of the queue chain over ``steps`` steps from ``start``."""
    rng = random.Random(seed)
    space = StateSpace.of_type(m)
    u = tuple(start) if start is not None else space.states[0]
    counts = {w: 0 for w in space.states}
    for _ in range(steps):
        u = queue_chain_step(u, i, rng)
        counts[u] += 1
    return counts
