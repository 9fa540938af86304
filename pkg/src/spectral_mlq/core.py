"""Words on a cyclic lattice, their types, and the action of queues.

Conventions used throughout the package:

* A word is a tuple of positive integers ``(u_1, ..., u_n)``.  Sites are
  1-based externally and wrap around, so site ``n + k`` is site ``k``.
* A queue is a sorted tuple of distinct sites in ``[n]``.
* A type is the multiplicity vector ``m = (m_1, m_2, ...)`` with trailing
  zeros trimmed; ``p_i`` denotes the partial sum ``m_1 + ... + m_i``.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, Sequence, Tuple

Word = Tuple[int, ...]
Queue = Tuple[int, ...]
TypeVector = Tuple[int, ...]


class IllDefinedMerge(ValueError):
    """Raised when ``merge_at`` is asked to keep a count that is not a partial sum."""


# ---------------------------------------------------------------------------
# Parsing and formatting
# ---------------------------------------------------------------------------

def parse_word(text: str) -> Word:
    """Parse ``"346613321"`` or ``"3,4,10,1"`` into a word."""
    text = text.strip()
    if not text:
        raise ValueError("empty word")
    if "," in text:
        letters = tuple(int(tok) for tok in text.split(","))
    else:
        if not text.isdigit():
            raise ValueError(f"not a word: {text!r}")
        letters = tuple(int(ch) for ch in text)
    if any(a < 1 for a in letters):
        raise ValueError(f"letters must be positive: {text!r}")
    return letters


def format_word(u: Sequence[int]) -> str:
    """Digit string when every letter is at most 9, comma separated otherwise."""
    if all(a <= 9 for a in u):
        return "".join(str(a) for a in u)
    return ",".join(str(a) for a in u)


def parse_queue(text: str, n: int | None = None) -> Queue:
    """Parse ``"1,4,8,9"`` into a queue.  An empty string is the empty queue."""
    text = text.strip()
    if not text:
        return ()
    sites = [int(tok) for tok in text.split(",") if tok.strip()]
    return make_queue(sites, n)


def format_queue(q: Iterable[int]) -> str:
    return ",".join(str(j) for j in sorted(q))


def make_queue(sites: Iterable[int], n: int | None = None) -> Queue:
    """Normalize a collection of sites into a sorted queue, validating against ``n``."""
    q = tuple(sorted(sites))
    if len(set(q)) != len(q):
        raise ValueError(f"duplicate sites in queue {q}")
    if n is not None and any(j < 1 or j > n for j in q):
        raise ValueError(f"queue {q} is not a subset of [1..{n}]")
    return q


# ---------------------------------------------------------------------------
# Types
# ---------------------------------------------------------------------------

def word_type(u: Sequence[int]) -> TypeVector:
    """Multiplicities of the letters 1, 2, ... in ``u`` (trailing zeros trimmed)."""
    if not u:
        return ()
    m = [0] * max(u)
    for a in u:
        m[a - 1] += 1
    return tuple(m)


def partial_sum(m: Sequence[int], i: int) -> int:
    """``p_i(m) = m_1 + ... + m_i``; indices past the end keep the full sum."""
    if i < 0:
        raise ValueError("partial sums are indexed from 0")
    return sum(m[:i])


def partial_sums(m: Sequence[int]) -> Tuple[int, ...]:
    """``(p_1, ..., p_l)`` for a type with ``l`` entries."""
    out, acc = [], 0
    for mi in m:
        acc += mi
        out.append(acc)
    return tuple(out)


def is_packed_type(m: Sequence[int]) -> bool:
    return all(mi > 0 for mi in m)


def is_packed(u: Sequence[int]) -> bool:
    """Every class between 1 and the largest letter occurs."""
    return is_packed_type(word_type(u))


def num_classes(u: Sequence[int]) -> int:
    return max(u) if u else 0


def queue_type_change(m: Sequence[int], r: int) -> TypeVector:
    """Type of ``q(u)`` for an ``r``-queue ``q`` and ``u`` of type ``m``.

    With ``p_{t-1} <= r <= p_t`` the class ``t`` splits into a lower part of
    size ``r - p_{t-1}`` and an upper part of size ``p_t - r``; every higher
    class moves up by one.  The result keeps interior zeros and trims trailing
    zeros like ``word_type``.
    """
    n = sum(m)
    if not 0 <= r <= n:
        raise ValueError(f"queue size {r} out of range for n={n}")
    p = partial_sums(m)
    t = next(k for k in range(len(m)) if p[k] >= r)  # 0-based class index
    lower = r - (p[t] - m[t])
    out = list(m[:t]) + [lower, p[t] - r] + list(m[t + 1:])
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def words_of_type(m: Sequence[int]) -> list[Word]:
    """All words of type ``m`` in lexicographic order."""
    counts = list(m)
    n = sum(counts)
    out: list[Word] = []
    prefix: list[int] = []

    def rec() -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for a, c in enumerate(counts):
            if c:
                counts[a] -= 1
                prefix.append(a + 1)
                rec()
                prefix.pop()
                counts[a] += 1

    rec()
    return out


def compositions(n: int) -> Iterator[TypeVector]:
    """All compositions of ``n`` (the packed types of words of length ``n``)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def packed_words(n: int) -> Iterator[Word]:
    for m in compositions(n):
        yield from words_of_type(m)


# ---------------------------------------------------------------------------
# Queue action
# ---------------------------------------------------------------------------

def canonical_order(u: Sequence[int]) -> list[int]:
    """0-based sites sorted by (letter, site)."""
    return sorted(range(len(u)), key=lambda i: (u[i], i))


def admissible_orders(u: Sequence[int]) -> Iterator[list[int]]:
    """Every ordering of the sites that lists letters weakly increasing."""
    by_letter: dict[int, list[int]] = {}
    for i, a in enumerate(u):
        by_letter.setdefault(a, []).append(i)
    groups = [by_letter[a] for a in sorted(by_letter)]

    def rec(k: int) -> Iterator[list[int]]:
        if k == len(groups):
            yield []
            return
        for perm in permutations(groups[k]):
            for tail in rec(k + 1):
                yield list(perm) + tail

    yield from rec(0)


def _apply(inq: Sequence[bool], size: int, u: Sequence[int], order: Sequence[int]) -> Word:
    n = len(u)
    v = [0] * n
    # Phase I: the largest n - |q| letters move to the first free site
    # outside q weakly to their left, and are promoted by one class.
    for idx in range(n - 1, size - 1, -1):
        i = order[idx]
        j = i
        while v[j] or inq[j]:
            j = (j - 1) % n
        v[j] = u[i] + 1
    # Phase II: the smallest |q| letters move to the first free site in q
    # weakly to their right, keeping their class.
    for idx in range(size):
        i = order[idx]
        j = i
        while v[j] or not inq[j]:
            j = (j + 1) % n
        v[j] = u[i]
    return tuple(v)


def queue_apply(q: Iterable[int], u: Sequence[int], order: Sequence[int] | None = None) -> Word:
    """Apply the queue ``q`` (1-based sites) to the word ``u``.

    ``order`` optionally supplies the 0-based sorting permutation; by default
    ties between equal letters are broken by increasing site.
    """
    n = len(u)
    inq = [False] * n
    size = 0
    for j in q:
        if not 1 <= j <= n:
            raise ValueError(f"site {j} outside [1..{n}]")
        if inq[j - 1]:
            raise ValueError(f"duplicate site {j}")
        inq[j - 1] = True
        size += 1
    if order is None:
        order = canonical_order(u)
    return _apply(inq, size, u, order)


# ---------------------------------------------------------------------------
# Merges
# ---------------------------------------------------------------------------

def merge_classes(u: Sequence[int], i: int) -> Word:
    """``v_i``: replace every letter ``j > i`` by ``j - 1``."""
    if i < 1:
        raise ValueError("merge index must be at least 1")
    return tuple(a - 1 if a > i else a for a in u)


def merge_many(u: Sequence[int], classes: Iterable[int]) -> Word:
    """Merge at every class in ``classes``, all indices referring to ``u``.

    Merges are applied from the largest index down so that earlier merges do
    not shift the classes named by later ones.
    """
    for i in sorted(set(classes), reverse=True):
        u = merge_classes(u, i)
    return tuple(u)


def merge_type(m: Sequence[int], i: int) -> TypeVector:
    """Type of ``merge_classes(u, i)`` when ``u`` has type ``m``."""
    if i < 1:
        raise ValueError("merge index must be at least 1")
    m = list(m)
    if i < len(m):
        m[i - 1] += m[i]
        del m[i]
    return tuple(m)


def merge_at(u: Sequence[int], k: int) -> Word:
    """Decrement every letter except the ``k`` smallest ones.

    ``k`` must be one of the partial sums ``p_j`` (``j >= 1``) of the type of
    ``u``; then the result equals ``merge_classes(u, j)``.
    """
    p = partial_sums(word_type(u))
    for j, pj in enumerate(p, start=1):
        if pj == k:
            return merge_classes(u, j)
    raise IllDefinedMerge(f"{k} is not a partial sum of type {word_type(u)}")


# ---------------------------------------------------------------------------
# Contragredient duality
# ---------------------------------------------------------------------------

def contragredient_word(u: Sequence[int], ell: int) -> Word:
    """``u*_i = ell + 1 - u_{n+1-i}``."""
    if any(a > ell or a < 1 for a in u):
        raise ValueError(f"letters of {tuple(u)} must lie in [1..{ell}]")
    return tuple(ell + 1 - a for a in reversed(u))


def contragredient_queue(q: Iterable[int], n: int) -> Queue:
    """``i`` is in ``q*`` exactly when ``n + 1 - i`` is not in ``q``."""
    qs = set(make_queue(q, n))
    return tuple(i for i in range(1, n + 1) if n + 1 - i not in qs)


# ---------------------------------------------------------------------------
# Cyclic shift
# ---------------------------------------------------------------------------

def rotate_word(u: Sequence[int], k: int = 1) -> Word:
    """``zeta^k``: rotate left by ``k`` positions."""
    n = len(u)
    k %= n
    return tuple(u[k:]) + tuple(u[:k])


def rotate_queue(q: Iterable[int], n: int, k: int = 1) -> Queue:
    """Shift every site down by ``k`` modulo ``n`` (site 0 is site n)."""
    return tuple(sorted((j - 1 - k) % n + 1 for j in q))
