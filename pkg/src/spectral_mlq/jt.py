"""Lattice paths, pseudo-partition tableaux and determinant formulas.

Variables here are *not* cyclic: ``x_1, ..., x_n`` are distinct and every
index that occurs must lie in ``[n]``.  An east-step at height ``y`` has
weight ``x_y``; north-steps have weight 1.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence, Tuple

from .core import Word, merge_many, word_type
from .mlq import MLQ, block_decomposition, spectral_weights
from .poly import Poly, complete_hom, e_range, h_range, poly_det_n

Vertex = Tuple[int, int]
Path = Tuple[Vertex, ...]
Tableau = Tuple[Tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# Lattice paths and LGV
# ---------------------------------------------------------------------------

def path_sum(a: Vertex, b: Vertex, n: int) -> Poly:
    """Total weight of the paths from ``a`` to ``b``: ``h_{c-a}(x_b, ..., x_d)``."""
    (x0, y0), (x1, y1) = a, b
    if x1 < x0 or y1 < y0:
        return Poly.zero(n)
    if x1 > x0 and (y0 < 1 or y1 > n):
        raise ValueError(f"east-steps between heights {y0} and {y1} leave [1..{n}]")
    return complete_hom(x1 - x0, range(y0, y1 + 1), n)


def enumerate_paths(a: Vertex, b: Vertex) -> Iterator[Path]:
    """Every east/north path from ``a`` to ``b`` as a vertex sequence."""
    (x0, y0), (x1, y1) = a, b
    if x1 < x0 or y1 < y0:
        return
    east, north = x1 - x0, y1 - y0
    for steps in combinations(range(east + north), east):
        es = set(steps)
        x, y = x0, y0
        path = [(x, y)]
        for t in range(east + north):
            if t in es:
                x += 1
            else:
                y += 1
            path.append((x, y))
        yield tuple(path)


def path_weight(path: Path, n: int) -> Poly:
    e = [0] * n
    for (xa, ya), (xb, _) in zip(path, path[1:]):
        if xb == xa + 1:
            if not 1 <= ya <= n:
                raise ValueError(f"east-step at height {ya} outside [1..{n}]")
            e[ya - 1] += 1
    return Poly.monomial(n, e)


def enumerate_nilps(starts: Sequence[Vertex], ends: Sequence[Vertex]) -> Iterator[Tuple[Path, ...]]:
    """Every tuple of pairwise vertex-disjoint paths ``starts[i] -> ends[i]``."""
    if len(starts) != len(ends):
        raise ValueError("start and end tuples differ in length")
    k = len(starts)
    options = [list(enumerate_paths(starts[i], ends[i])) for i in range(k)]
    chosen: list[Path] = []
    used: set[Vertex] = set()

    def rec(i: int) -> Iterator[Tuple[Path, ...]]:
        if i == k:
            yield tuple(chosen)
            return
        for p in options[i]:
            if used.isdisjoint(p):
                chosen.append(p)
                used.update(p)
                yield from rec(i + 1)
                used.difference_update(p)
                chosen.pop()

    yield from rec(0)


def nilp_sum(starts: Sequence[Vertex], ends: Sequence[Vertex], n: int) -> Poly:
    total = Poly.zero(n)
    for nilp in enumerate_nilps(starts, ends):
        w = Poly.one(n)
        for p in nilp:
            w = w * path_weight(p, n)
        total = total + w
    return total


def is_admissible(starts: Sequence[Vertex], ends: Sequence[Vertex]) -> bool:
    """x-coordinates weakly decrease and y-coordinates weakly increase along both tuples."""
    def ok(vs: Sequence[Vertex]) -> bool:
        return all(a[0] >= b[0] and a[1] <= b[1] for a, b in zip(vs, vs[1:]))

    return len(starts) == len(ends) and ok(starts) and ok(ends)


def lgv_determinant(starts: Sequence[Vertex], ends: Sequence[Vertex], n: int) -> Poly:
    """``det(path_sum(A_i, B_j))``; equals ``nilp_sum`` on admissible tuples."""
    if not is_admissible(starts, ends):
        warnings.warn("vertex tuples are not admissible; the determinant may differ from the NILP sum",
                      stacklevel=2)
    matrix = [[path_sum(a, b, n) for b in ends] for a in starts]
    return poly_det_n(matrix, n)


# ---------------------------------------------------------------------------
# Pseudo-partitions and tableaux
# ---------------------------------------------------------------------------

def is_pseudo_partition(lam: Sequence[int]) -> bool:
    """Positive parts with ``lam_i + 1 >= lam_{i+1}``."""
    return all(a > 0 for a in lam) and all(a + 1 >= b for a, b in zip(lam, lam[1:]))


def _cell_above(lam: Sequence[int], i: int, j: int) -> int | None:
    """Nearest row above row ``i`` that has a cell in column ``j`` (0-based)."""
    for r in range(i - 1, -1, -1):
        if lam[r] > j:
            return r
    return None


def shape(t: Tableau) -> Tuple[int, ...]:
    return tuple(len(row) for row in t)


def surface(t: Tableau) -> Tuple[int, ...]:
    return tuple(row[-1] for row in t)


def tableau_weight(t: Tableau, n: int) -> Poly:
    return Poly.from_sites(n, (x for row in t for x in row))


def is_semistandard(t: Tableau) -> bool:
    """Rows weakly increase; each column strictly increases downwards, across gaps."""
    lam = shape(t)
    for i, row in enumerate(t):
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        for j, x in enumerate(row):
            r = _cell_above(lam, i, j)
            if r is not None and t[r][j] >= x:
                return False
    return True


def enumerate_sst(lam: Sequence[int], s: Sequence[int]) -> Iterator[Tableau]:
    """Semistandard tableaux of shape ``lam`` with surface ``s``."""
    lam = tuple(lam)
    s = tuple(s)
    if not is_pseudo_partition(lam):
        raise ValueError(f"{lam} is not a pseudo-partition")
    if len(s) != len(lam):
        raise ValueError("surface length differs from the number of rows")
    if any(a >= b for a, b in zip(s, s[1:])) or (s and s[0] < 1):
        raise ValueError(f"surface {s} must be strictly increasing positive integers")
    rows: list[list[int]] = []

    def fill(i: int, j: int) -> Iterator[Tableau]:
        if i == len(lam):
            yield tuple(tuple(r) for r in rows)
            return
        if j == lam[i]:
            yield from fill(i + 1, 0)
            return
        if j == 0:
            rows.append([])
        r = _cell_above(lam, i, j)
        lo = rows[i][-1] if j > 0 else 1
        if r is not None:
            lo = max(lo, rows[r][j] + 1)
        last = j == lam[i] - 1
        candidates = [s[i]] if last else range(lo, s[i] + 1)
        for x in candidates:
            if x < lo:
                continue
            rows[i].append(x)
            yield from fill(i, j + 1)
            rows[i].pop()
        if j == 0:
            rows.pop()

    yield from fill(0, 0)


def sst_sum(lam: Sequence[int], s: Sequence[int], n: int) -> Poly:
    total = Poly.zero(n)
    for t in enumerate_sst(lam, s):
        total = total + tableau_weight(t, n)
    return total


def sst_determinant(lam: Sequence[int], s: Sequence[int], n: int) -> Poly:
    """``(prod_i x_{s_i}) det(h_{lam_j - j + i - 1}(x_1, ..., x_{s_j}))``."""
    k = len(lam)
    matrix = [[h_range(lam[j] - (j + 1) + (i + 1) - 1, s[j], n) for j in range(k)] for i in range(k)]
    return Poly.from_sites(n, s) * poly_det_n(matrix, n)


def pseudo_partition_of_type(m: Sequence[int]) -> Tuple[int, ...]:
    """``(1^{m_{l-1}}, 2^{m_{l-2}}, ..., (l-1)^{m_1})`` for ``m = (m_1, ..., m_l)``."""
    ell = len(m)
    out: list[int] = []
    for length in range(1, ell):
        out.extend([length] * m[ell - 1 - length])
    return tuple(out)


def tableau_of_mlq(q: MLQ) -> Tableau:
    """Lay the blocks ``q_i^{(j)}`` out as the rows of a tableau of shape ``lam^m``.

    Rows come in groups ``j = l-1, l-2, ..., 1`` from the top; group ``j`` has
    ``m_j`` rows and its ``r``-th row lists the ``r``-th smallest elements of
    ``q_j^{(j)}, q_{j+1}^{(j)}, ..., q_{l-1}^{(j)}``.
    """
    blocks = block_decomposition(q)
    m = q.ordinary_type()
    depth = q.depth
    rows: list[Tuple[int, ...]] = []
    for j in range(depth, 0, -1):
        for r in range(m[j - 1]):
            rows.append(tuple(blocks[i - 1][j - 1][r] for i in range(j, depth + 1)))
    return tuple(rows)


def mlq_of_tableau(t: Tableau, m: Sequence[int]) -> MLQ:
    """Inverse of ``tableau_of_mlq`` for tableaux of shape ``lam^m``."""
    m = tuple(m)
    depth = len(m) - 1
    if shape(t) != pseudo_partition_of_type(m):
        raise ValueError(f"tableau shape {shape(t)} is not {pseudo_partition_of_type(m)}")
    queues: list[set[int]] = [set() for _ in range(depth)]
    row = 0
    for j in range(depth, 0, -1):
        for _ in range(m[j - 1]):
            for c, x in enumerate(t[row]):
                queues[j - 1 + c].add(x)
            row += 1
    return MLQ(sum(m), tuple(tuple(sorted(qs)) for qs in queues))


# ---------------------------------------------------------------------------
# Weakly decreasing words and the determinant formula
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SurfaceSpec:
    """Sites ``b_1 < ... < b_r`` carrying a weakly decreasing ``v`` covering ``[l-1]``."""

    sites: Tuple[int, ...]
    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sites", tuple(self.sites))
        object.__setattr__(self, "values", tuple(self.values))
        b, v = self.sites, self.values
        if len(b) != len(v) or not b:
            raise ValueError("sites and values must be nonempty and of equal length")
        if any(x >= y for x, y in zip(b, b[1:])) or b[0] < 1:
            raise ValueError(f"sites {b} must be strictly increasing positive integers")
        if any(x < y for x, y in zip(v, v[1:])):
            raise ValueError(f"values {v} must be weakly decreasing")
        if set(v) != set(range(1, max(v) + 1)):
            raise ValueError(f"values {v} must cover 1..{max(v)}")

    @property
    def ell(self) -> int:
        return max(self.values) + 1

    @property
    def gamma(self) -> Tuple[int, ...]:
        return tuple(self.ell - x for x in self.values)

    def check(self, n: int) -> None:
        if self.sites[-1] > n:
            raise ValueError(f"site {self.sites[-1]} outside [1..{n}]")


def place_letters(sites: Sequence[int], values: Sequence[int], ell: int, n: int) -> Word:
    """The word with ``values[j]`` at ``sites[j]`` and ``ell`` everywhere else."""
    w = [ell] * n
    for b, x in zip(sites, values):
        w[b - 1] = x
    return tuple(w)


def u_of_v(spec: SurfaceSpec, n: int) -> Word:
    spec.check(n)
    return place_letters(spec.sites, spec.values, spec.ell, n)


def word_type_with_top(u: Sequence[int], ell: int) -> Tuple[int, ...]:
    """Type of ``u`` over the alphabet ``[ell]``, keeping an empty top class."""
    m = list(word_type(u))
    m += [0] * (ell - len(m))
    return tuple(m)


def jt_spectral_weight(spec: SurfaceSpec, n: int) -> Poly:
    """``(prod_b x_b) det(h_{gamma_j + i - j - 1}(x_1, ..., x_{b_j}))``."""
    spec.check(n)
    r = len(spec.sites)
    g = spec.gamma
    matrix = [[h_range(g[j] + i - j - 1, spec.sites[j], n) for j in range(r)] for i in range(r)]
    return Poly.from_sites(n, spec.sites) * poly_det_n(matrix, n)


def spectral_weight_of_spec(spec: SurfaceSpec, n: int) -> Poly:
    """``<u(v)>`` from MLQs of type ``(m_1, ..., m_l)``, counting ``m_l = 0`` when ``B = [n]``."""
    u = u_of_v(spec, n)
    m = word_type_with_top(u, spec.ell)
    return spectral_weights(m, words=[u])[u]


def all_surface_specs(n: int) -> Iterator[SurfaceSpec]:
    """Every valid ``(B, v)`` with ``B`` inside ``[n]``."""
    for r in range(1, n + 1):
        for sites in combinations(range(1, n + 1), r):
            # weakly decreasing v covering [k]: choose which of the r-1 gaps are descents
            for descents in range(0, 1 << (r - 1)):
                v = [0] * r
                k = 1 + bin(descents).count("1")
                cur = k
                for j in range(r):
                    if j > 0 and descents >> (j - 1) & 1:
                        cur -= 1
                    v[j] = cur
                yield SurfaceSpec(sites, tuple(v))


# ---------------------------------------------------------------------------
# Lacunar sets
# ---------------------------------------------------------------------------

def is_lacunar(s: Sequence[int]) -> bool:
    ss = set(s)
    return all(i + 1 not in ss for i in ss)


def sigma_s_permutation(r: int, s: Sequence[int]) -> Tuple[int, ...]:
    """One-line ``r, r-1, ..., 1`` with each pair ``(i, i+1)``, ``i`` in ``s``, put in increasing order."""
    if not is_lacunar(s):
        raise ValueError(f"{tuple(s)} is not lacunar")
    if any(not 1 <= i <= r - 1 for i in s):
        raise ValueError(f"{tuple(s)} is not a subset of [1..{r - 1}]")
    perm = list(range(r, 0, -1))
    for i in s:
        a, b = perm.index(i + 1), perm.index(i)
        perm[a], perm[b] = i, i + 1
    return tuple(perm)


def sigma_s_word(sites: Sequence[int], s: Sequence[int], n: int) -> Word:
    """``sigma_s`` as a word: its one-line notation placed on ``sites``, ``r + 1`` elsewhere."""
    r = len(sites)
    return place_letters(sites, sigma_s_permutation(r, s), r + 1, n)


def merged_w0_word(sites: Sequence[int], t: Sequence[int], n: int) -> Word:
    """``w_0`` (as a word) merged at every class in ``t``."""
    return merge_many(sigma_s_word(sites, (), n), t)


def _check_lacunar(r: int, t: Sequence[int]) -> None:
    if not is_lacunar(t) or any(not 1 <= i <= r - 1 for i in t):
        raise ValueError(f"{tuple(t)} is not a lacunar subset of [1..{r - 1}]")


def psi_gamma(r: int, t: Sequence[int]) -> Tuple[int, ...]:
    """``gamma_j = j - #{x in t : x > r - j}``."""
    return tuple(j - sum(1 for x in t if x > r - j) for j in range(1, r + 1))


def psi_t(sites: Sequence[int], t: Sequence[int], n: int) -> Poly:
    """``psi(T)`` by the product-determinant formula."""
    sites = tuple(sites)
    r = len(sites)
    _check_lacunar(r, t)
    g = psi_gamma(r, t)
    matrix = [[h_range(g[j] + i - j - 1, sites[j], n) for j in range(r)] for i in range(r)]
    out = Poly.from_sites(n, sites) * poly_det_n(matrix, n)
    for x in t:
        out = out * e_range(x, n)
    return out


def _swt(u: Word, ell: int) -> Poly:
    return spectral_weights(word_type_with_top(u, ell), words=[u])[u]


def psi_t_via_merge(sites: Sequence[int], t: Sequence[int], n: int) -> Poly:
    """``(prod_{x in T} e_x) <merged_w0_word>``."""
    r = len(sites)
    _check_lacunar(r, t)
    out = _swt(merged_w0_word(sites, t, n), r + 1 - len(t))
    for x in t:
        out = out * e_range(x, n)
    return out


def psi_t_by_definition(sites: Sequence[int], t: Sequence[int], n: int) -> Poly:
    """``sum_{S subset T} <sigma_S>``."""
    r = len(sites)
    _check_lacunar(r, t)
    t = tuple(sorted(t))
    words = [sigma_s_word(sites, sub, n) for k in range(len(t) + 1) for sub in combinations(t, k)]
    weights = spectral_weights(word_type_with_top(words[0], r + 1), words=words)
    total = Poly.zero(n)
    for w in words:
        total = total + weights[w]
    return total


def swt_sigma_s(sites: Sequence[int], s: Sequence[int], n: int) -> Poly:
    """``<sigma_S> = sum_{T subset S} (-1)^{|S|-|T|} psi(T)``."""
    r = len(sites)
    _check_lacunar(r, s)
    s = tuple(sorted(s))
    total = Poly.zero(n)
    for k in range(len(s) + 1):
        for sub in combinations(s, k):
            term = psi_t(sites, sub, n)
            total = total + (term if (len(s) - k) % 2 == 0 else -term)
    return total
