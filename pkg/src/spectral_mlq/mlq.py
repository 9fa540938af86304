"""Multiline queues: application, weights, spectral weights, blocks, labels.

An MLQ is a tuple of queues ``(q_1, ..., q_{l-1})`` acting on words by
composition, ``q(u) = q_{l-1}( ... q_1(u) ... )``.  A ``sigma``-twisted MLQ of
type ``m`` has ``|q_i| = p_{sigma(i)}(m)``; the ordinary case is ``sigma = id``.
Its weight is the monomial ``prod_i prod_{j in q_i} x_j``, and the spectral
weight of a packed word ``u`` sums these monomials over all twisted MLQs of
the type of ``u`` that send ``1^n`` to ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .core import (
    Queue,
    TypeVector,
    Word,
    _apply,
    canonical_order,
    format_word,
    is_packed_type,
    make_queue,
    partial_sums,
    queue_apply,
    word_type,
    words_of_type,
)
from .poly import Poly

Permutation = Tuple[int, ...]


@dataclass(frozen=True)
class MLQ:
    """A tuple of queues on ``[n]`` with an optional twist permutation."""

    n: int
    queues: Tuple[Queue, ...]
    twist: Permutation = field(default=())

    def __post_init__(self) -> None:
        qs = tuple(make_queue(q, self.n) for q in self.queues)
        object.__setattr__(self, "queues", qs)
        twist = tuple(self.twist) if self.twist else tuple(range(1, len(qs) + 1))
        if sorted(twist) != list(range(1, len(qs) + 1)):
            raise ValueError(f"twist {twist} is not a permutation of [1..{len(qs)}]")
        object.__setattr__(self, "twist", twist)

    @property
    def depth(self) -> int:
        return len(self.queues)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(q) for q in self.queues)

    def is_ordinary(self) -> bool:
        return self.twist == tuple(range(1, self.depth + 1))

    def ordinary_type(self) -> TypeVector:
        """Type ``(m_1, ..., m_l)`` read off from the queue sizes of an ordinary MLQ."""
        sizes = (0,) + self.sizes + (self.n,)
        return tuple(sizes[i + 1] - sizes[i] for i in range(len(sizes) - 1))

    def has_type(self, m: Sequence[int]) -> bool:
        if len(m) != self.depth + 1 or sum(m) != self.n:
            return False
        p = partial_sums(m)
        return all(len(q) == p[s - 1] for q, s in zip(self.queues, self.twist))

    def to_json_obj(self) -> dict:
        return {"n": self.n, "queues": [list(q) for q in self.queues], "twist": list(self.twist)}

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "MLQ":
        return cls(int(obj["n"]), tuple(tuple(q) for q in obj["queues"]), tuple(obj.get("twist") or ()))


def parse_mlq(text: str, n: int) -> MLQ:
    """Parse ``"3;1,3,4"`` (queues separated by semicolons) into an MLQ."""
    parts = text.split(";") if text.strip() else []
    return MLQ(n, tuple(make_queue([int(t) for t in p.split(",") if t.strip()], n) for p in parts))


def format_mlq(q: MLQ) -> str:
    return ";".join(",".join(map(str, qi)) for qi in q.queues)


# ---------------------------------------------------------------------------
# Application and weight
# ---------------------------------------------------------------------------

def mlq_apply(q: MLQ, u: Sequence[int] | None = None) -> Word:
    """Apply ``q_1`` first, then ``q_2``, and so on; ``u`` defaults to ``1^n``."""
    w: Word = tuple(u) if u is not None else (1,) * q.n
    if len(w) != q.n:
        raise ValueError(f"word length {len(w)} does not match n={q.n}")
    for qi in q.queues:
        w = queue_apply(qi, w)
    return w


def mlq_weight(q: MLQ) -> Poly:
    return Poly.from_sites(q.n, (j for qi in q.queues for j in qi))


def twist_sizes(m: Sequence[int], sigma: Sequence[int] | None = None) -> Tuple[int, ...]:
    """Queue sizes ``p_{sigma(1)}, ..., p_{sigma(l-1)}`` for type ``m``."""
    p = partial_sums(m)
    depth = len(m) - 1
    if sigma is None or len(sigma) == 0:
        sigma = tuple(range(1, depth + 1))
    if sorted(sigma) != list(range(1, depth + 1)):
        raise ValueError(f"{tuple(sigma)} is not a permutation of [1..{depth}]")
    return tuple(p[s - 1] for s in sigma)


@lru_cache(maxsize=None)
def _queues_of_size(n: int, r: int) -> Tuple[Tuple[Queue, Tuple[bool, ...], int], ...]:
    """All ``r``-queues in increasing bitmask order, with membership flags and packed weight."""
    out = []
    for combo in combinations(range(n), r):
        mask = sum(1 << i for i in combo)
        flags = tuple(bool(mask >> i & 1) for i in range(n))
        out.append((mask, tuple(i + 1 for i in combo), flags, _pack_sites(combo)))
    out.sort()
    return tuple((sites, flags, packed) for _, sites, flags, packed in out)


def _check_type(m: Sequence[int]) -> Tuple[int, ...]:
    m = tuple(int(a) for a in m)
    if not m or any(a < 0 for a in m):
        raise ValueError(f"invalid type {m}")
    if not all(a > 0 for a in m[:-1]):
        raise ValueError(f"type {m} must be packed below its last class")
    return m


def enumerate_mlqs(m: Sequence[int], sigma: Sequence[int] | None = None) -> Iterator[MLQ]:
    """Every ``sigma``-twisted MLQ of type ``m``, each exactly once.

    Queues at each level run through all subsets of the right size in
    increasing bitmask order (site ``j`` is bit ``j - 1``); levels vary
    lexicographically with the last level fastest.
    """
    m = _check_type(m)
    n = sum(m)
    sizes = twist_sizes(m, sigma)
    twist = tuple(sigma) if sigma else tuple(range(1, len(sizes) + 1))
    choices = [[sites for sites, _, _ in _queues_of_size(n, r)] for r in sizes]
    for queues in product(*choices):
        yield MLQ(n, queues, twist)


def count_mlqs(m: Sequence[int]) -> int:
    """Number of MLQs of type ``m`` (the same for every twist)."""
    from math import comb

    m = _check_type(m)
    n = sum(m)
    total = 1
    for p in partial_sums(m)[:-1]:
        total *= comb(n, p)
    return total


# ---------------------------------------------------------------------------
# Spectral weights
# ---------------------------------------------------------------------------

# Inside the transfer kernel a monomial is a single integer whose base-2^_BITS
# digits are the exponents.  Multiplying monomials is then integer addition.
_BITS = 8


def _pack_sites(sites0: Iterable[int]) -> int:
    return sum(1 << (_BITS * i) for i in sites0)


def _unpack(key: int, n: int) -> Tuple[int, ...]:
    mask = (1 << _BITS) - 1
    return tuple((key >> (_BITS * i)) & mask for i in range(n))


def _to_poly(packed: Mapping[int, int], n: int) -> Poly:
    return Poly(n, {_unpack(k, n): c for k, c in packed.items()})


def _transfer(sizes: Sequence[int], n: int, targets: set | None = None) -> Dict[Word, Dict[int, int]]:
    """Sum of weights of all queue sequences with the given sizes, grouped by ``q(1^n)``.

    Words reached after each level are kept with the packed polynomial of
    all partial MLQs reaching them, so each level costs (#words) x (#queues)
    queue applications instead of enumerating every MLQ separately.  With
    ``targets`` the last level only keeps the listed words.
    """
    if len(sizes) >= (1 << _BITS):
        raise ValueError("too many queues for the packed exponent encoding")
    state: Dict[Word, Dict[int, int]] = {(1,) * n: {0: 1}}
    for level, r in enumerate(sizes):
        last = level == len(sizes) - 1
        queues = _queues_of_size(n, r)
        new: Dict[Word, Dict[int, int]] = {}
        for w, poly in state.items():
            order = canonical_order(w)
            for _, flags, mono in queues:
                v = _apply(flags, r, w, order)
                if last and targets is not None and v not in targets:
                    continue
                acc = new.get(v)
                if acc is None:
                    acc = new[v] = {}
                for k, c in poly.items():
                    k2 = k + mono
                    acc[k2] = acc.get(k2, 0) + c
        state = new
    return state


def spectral_weights(m: Sequence[int], sigma: Sequence[int] | None = None,
                     words: Iterable[Sequence[int]] | None = None) -> Dict[Word, Poly]:
    """Spectral weights of all words of type ``m`` (or just ``words``) in one pass."""
    m = _check_type(m)
    n = sum(m)
    targets = {tuple(w) for w in words} if words is not None else None
    state = _transfer(twist_sizes(m, sigma), n, targets)
    wanted = targets if targets is not None else set(words_of_type(m))
    return {w: _to_poly(state.get(w, {}), n) for w in sorted(wanted)}


def spectral_weight(u: Sequence[int], sigma: Sequence[int] | None = None) -> Poly:
    """``<u>_sigma`` for a packed word ``u``."""
    u = tuple(u)
    m = word_type(u)
    if not is_packed_type(m):
        raise ValueError(f"word {format_word(u)} is not packed")
    return spectral_weights(m, sigma, [u])[u]


def spectral_weight_bruteforce(u: Sequence[int], sigma: Sequence[int] | None = None) -> Poly:
    """``<u>_sigma`` by walking ``enumerate_mlqs`` one MLQ at a time."""
    u = tuple(u)
    m = word_type(u)
    if not is_packed_type(m):
        raise ValueError(f"word {format_word(u)} is not packed")
    n = len(u)
    acc: Dict[Tuple[int, ...], int] = {}
    for q in enumerate_mlqs(m, sigma):
        if mlq_apply(q) == u:
            e = [0] * n
            for qi in q.queues:
                for j in qi:
                    e[j - 1] += 1
            key = tuple(e)
            acc[key] = acc.get(key, 0) + 1
    return Poly(n, acc)


def witness_mlq(u: Sequence[int]) -> MLQ:
    """The ordinary MLQ with ``q_k = {i : u_i <= k}``; it sends ``1^n`` to ``u``."""
    u = tuple(u)
    ell = max(u)
    return MLQ(len(u), tuple(tuple(i + 1 for i, a in enumerate(u) if a <= k) for k in range(1, ell)))


# ---------------------------------------------------------------------------
# Blocks and interlacing
# ---------------------------------------------------------------------------

def block_decomposition(q: MLQ) -> Tuple[Tuple[Queue, ...], ...]:
    """``blocks[i-1][j-1]`` is ``q_i^{(j)}``, sorted increasingly.

    ``q_i`` is cut in decreasing order into blocks of sizes ``m_1, ..., m_i``,
    so ``q_i^{(1)}`` holds its largest ``m_1`` sites.
    """
    if not q.is_ordinary():
        raise ValueError("block decomposition is defined for ordinary MLQs only")
    m = q.ordinary_type()
    if any(a <= 0 for a in m[:-1]):
        raise ValueError(f"queue sizes {q.sizes} must strictly increase")
    out = []
    for i, qi in enumerate(q.queues, start=1):
        desc = sorted(qi, reverse=True)
        blocks, start = [], 0
        for j in range(i):
            blocks.append(tuple(sorted(desc[start:start + m[j]])))
            start += m[j]
        out.append(tuple(blocks))
    return tuple(out)


def dominates(a: Iterable[int], b: Iterable[int]) -> bool:
    """``A >= B`` in the Gale sense: equal sizes and ``a_k >= b_k`` after sorting both."""
    sa, sb = sorted(a), sorted(b)
    return len(sa) == len(sb) and all(x >= y for x, y in zip(sa, sb))


def dominates_by_matching(a: Iterable[int], b: Iterable[int]) -> bool:
    """``A >= B`` via a bijection ``phi: B -> A`` with ``phi(b) >= b`` (greedy matching)."""
    sa, sb = sorted(a), sorted(b)
    if len(sa) != len(sb):
        return False
    pool = list(sa)
    for y in sorted(sb, reverse=True):
        # Match the largest remaining b with the largest available a; if
        # even that fails no bijection exists.
        x = pool.pop()
        if x < y:
            return False
    return True


def strictly_above(a: Iterable[int], b: Iterable[int]) -> bool:
    """``A >> B``: every element of ``A`` exceeds every element of ``B``."""
    sa, sb = list(a), list(b)
    if not sa or not sb:
        return True
    return min(sa) > max(sb)


def is_interlacing(q: MLQ) -> bool:
    """``q_i^{(j)} >= q_{i-1}^{(j)} >> q_i^{(j+1)}`` for all ``2 <= i`` and ``j < i``."""
    blocks = block_decomposition(q)
    for i in range(2, q.depth + 1):
        cur, prev = blocks[i - 1], blocks[i - 2]
        for j in range(1, i):
            if not dominates_by_matching(cur[j - 1], prev[j - 1]):
                return False
            if not strictly_above(prev[j - 1], cur[j]):
                return False
    return True


def weakly_decreasing_up_to(u: Sequence[int], t: int) -> bool:
    """Dropping every letter larger than ``t`` leaves a weakly decreasing word."""
    kept = [a for a in u if a <= t]
    return all(x >= y for x, y in zip(kept, kept[1:]))


# ---------------------------------------------------------------------------
# Canonical labeling
# ---------------------------------------------------------------------------

Labeling = Tuple[Dict[int, int], ...]


def canonical_labeling(q: MLQ) -> Labeling:
    """``f_k(j)`` for ``j`` in ``q_k``: the ``j``-th letter of ``q_k(... q_1(1^n) ...)``."""
    out = []
    w: Word = (1,) * q.n
    for qk in q.queues:
        w = queue_apply(qk, w)
        out.append({j: w[j - 1] for j in qk})
    return tuple(out)


def canonical_labeling_recursive(q: MLQ) -> Labeling:
    """The same labels via bully paths.

    Sites of ``q_k`` are processed by increasing (label, site); each claims
    the first unclaimed site of ``q_{k+1}`` weakly to its right (cyclically)
    and hands its label on.  Unclaimed sites of ``q_{k+1}`` get ``k + 1``.
    """
    if not q.is_ordinary():
        raise ValueError("canonical labeling is defined for ordinary MLQs")
    n = q.n
    out: list[Dict[int, int]] = []
    prev: Dict[int, int] = {}
    for k, qk in enumerate(q.queues):
        target = set(qk)
        if len(prev) > len(target):
            raise ValueError("queue sizes must weakly increase")
        labels: Dict[int, int] = {}
        for site, label in sorted(prev.items(), key=lambda kv: (kv[1], kv[0])):
            j = site
            while j not in target or j in labels:
                j = j % n + 1
            labels[j] = label
        for j in qk:
            labels.setdefault(j, k + 1)
        out.append(dict(sorted(labels.items())))
        prev = labels
    return tuple(out)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _cells(values: Sequence[str | None], width: int) -> str:
    parts = []
    for v in values:
        if v is None:
            parts.append("[" + " " * width + "]")
        else:
            parts.append("(" + v.rjust(width) + ")")
    return " ".join(parts)


def render_graveyard(q: MLQ) -> str:
    """One row per queue: ``(v)`` for a site of ``q_i`` labeled ``v``, ``[ ]`` otherwise."""
    if q.depth == 0:
        return ""
    labels = canonical_labeling(q)
    width = max((len(str(v)) for f in labels for v in f.values()), default=1)
    rows = []
    for f in labels:
        rows.append(_cells([str(f[j]) if j in f else None for j in range(1, q.n + 1)], width))
    return "\n".join(rows)


def render_queue_diagram(q: Iterable[int], u: Sequence[int]) -> str:
    """The input word above the queue row, whose circles carry the letters of ``q(u)``."""
    q = make_queue(q, len(u))
    v = queue_apply(q, u)
    width = max(len(str(a)) for a in tuple(u) + v)
    top = " ".join(" " + str(a).rjust(width) + " " for a in u)
    qs = set(q)
    bottom = _cells([str(v[j - 1]) if j in qs else None for j in range(1, len(u) + 1)], width)
    return top + "\n" + bottom
