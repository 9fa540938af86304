"""Dual configurations and the symmetric-group action on tuples of queues.

A configuration is a pair of queues ``(q_1, q_2)``.  Reading sites
``1..n`` we write ``(`` for sites only in ``q_1``, ``)`` for sites only in
``q_2`` and ``()`` for sites in both, then match parentheses around the
circle.  Sites owning an unmatched parenthesis are *unbalanced*; the dual
configuration moves each of them to the other queue.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from .core import Queue, Word, format_queue, make_queue, partial_sums, rotate_queue, rotate_word, word_type
from .mlq import MLQ
from .poly import Poly

EMPTY = "∘"  # the placeholder letter in word encodings


class IllDefinedLowerSet(ValueError):
    """Raised when ``lower_set`` is asked for a count that is not a partial sum."""


@dataclass(frozen=True)
class Configuration:
    n: int
    q1: Queue
    q2: Queue

    def __post_init__(self) -> None:
        object.__setattr__(self, "q1", make_queue(self.q1, self.n))
        object.__setattr__(self, "q2", make_queue(self.q2, self.n))

    def weight(self) -> Poly:
        return Poly.from_sites(self.n, self.q1 + self.q2)

    def apply(self, u: Sequence[int]) -> Word:
        from .core import queue_apply

        return queue_apply(self.q2, queue_apply(self.q1, u))


@dataclass(frozen=True)
class ParenthesisRecord:
    """Parentheses in reading order, their matching, and the unmatched ones.

    ``symbols[k] = (char, site)``.  ``pairs`` lists ``(open, close)`` index
    pairs into ``symbols``; ``unmatched`` lists the remaining indices.
    """

    n: int
    symbols: Tuple[Tuple[str, int], ...]
    pairs: Tuple[Tuple[int, int], ...]
    unmatched: Tuple[int, ...]

    @property
    def unbalanced_sites(self) -> Tuple[int, ...]:
        return tuple(sorted({self.symbols[k][1] for k in self.unmatched}))

    def trace(self) -> str:
        """Symbols with their sites; matched pairs share a tag, unmatched ones are starred."""
        tag = {}
        for idx, (a, b) in enumerate(sorted(self.pairs)):
            tag[a] = tag[b] = str(idx + 1)
        parts = []
        for k, (ch, site) in enumerate(self.symbols):
            parts.append(f"{ch}{site}" + (f"#{tag[k]}" if k in tag else "*"))
        return " ".join(parts)


def _motzkin_match(steps: Sequence[int]) -> Tuple[list[Tuple[int, int]], list[int]]:
    """Cyclic matching of a +1/-1 step sequence via path heights.

    An up-step at position ``a`` is matched with the first later step
    (cyclically, less than one period away) where the height returns to the
    level the up-step started from.  Everything else is unmatched.
    """
    L = len(steps)
    if L == 0:
        return [], []
    height = [0]
    for t in range(2 * L):
        height.append(height[-1] + steps[t % L])
    pairs = []
    matched = [False] * L
    for a in range(L):
        if steps[a] != 1:
            continue
        base = height[a]
        for b in range(a + 1, a + L):
            if height[b + 1] == base:
                pairs.append((a, b % L))
                matched[a] = matched[b % L] = True
                break
            if height[b + 1] < base:
                break
    return pairs, [k for k in range(L) if not matched[k]]


def sp_record(c: Configuration) -> ParenthesisRecord:
    """The parenthesis record of ``(q_1, q_2)``."""
    s1, s2 = set(c.q1), set(c.q2)
    symbols: list[Tuple[str, int]] = []
    reduced: list[int] = []  # indices of symbols that take part in the matching
    self_pairs: list[Tuple[int, int]] = []
    for j in range(1, c.n + 1):
        if j in s1 and j in s2:
            symbols.append(("(", j))
            symbols.append((")", j))
            self_pairs.append((len(symbols) - 2, len(symbols) - 1))
        elif j in s1:
            reduced.append(len(symbols))
            symbols.append(("(", j))
        elif j in s2:
            reduced.append(len(symbols))
            symbols.append((")", j))
    steps = [1 if symbols[k][0] == "(" else -1 for k in reduced]
    rpairs, runmatched = _motzkin_match(steps)
    pairs = self_pairs + [(reduced[a], reduced[b]) for a, b in rpairs]
    return ParenthesisRecord(
        c.n, tuple(symbols), tuple(sorted(pairs)), tuple(sorted(reduced[k] for k in runmatched))
    )


@lru_cache(maxsize=1 << 18)
def _dual_masks(n: int, m1: int, m2: int) -> Tuple[int, int]:
    q1 = tuple(j + 1 for j in range(n) if m1 >> j & 1)
    q2 = tuple(j + 1 for j in range(n) if m2 >> j & 1)
    rec = sp_record(Configuration(n, q1, q2))
    flip = 0
    for j in rec.unbalanced_sites:
        flip |= 1 << (j - 1)
    return m1 ^ flip, m2 ^ flip


def _mask(q: Iterable[int]) -> int:
    return sum(1 << (j - 1) for j in q)


def _sites(mask: int, n: int) -> Queue:
    return tuple(j + 1 for j in range(n) if mask >> j & 1)


def dual_configuration(c: Configuration) -> Configuration:
    """Toggle every unbalanced site between the two queues."""
    d1, d2 = _dual_masks(c.n, _mask(c.q1), _mask(c.q2))
    return Configuration(c.n, _sites(d1, c.n), _sites(d2, c.n))


def dual_pair(n: int, q1: Iterable[int], q2: Iterable[int]) -> Tuple[Queue, Queue]:
    d = dual_configuration(Configuration(n, tuple(q1), tuple(q2)))
    return d.q1, d.q2


# ---------------------------------------------------------------------------
# Symmetric-group action on MLQs
# ---------------------------------------------------------------------------

def s_action(i: int, q: MLQ) -> MLQ:
    """Replace ``(q_i, q_{i+1})`` by its dual configuration; the twist follows."""
    k = q.depth
    if not 1 <= i <= k - 1:
        raise ValueError(f"generator index {i} outside [1..{k - 1}]")
    a, b = dual_pair(q.n, q.queues[i - 1], q.queues[i])
    queues = q.queues[: i - 1] + (a, b) + q.queues[i + 1:]
    twist = list(q.twist)
    twist[i - 1], twist[i] = twist[i], twist[i - 1]
    return MLQ(q.n, queues, tuple(twist))


def apply_perm(word: Sequence[int], q: MLQ) -> MLQ:
    """Apply ``s_{w_1} s_{w_2} ... s_{w_r}`` (rightmost generator acts first)."""
    for i in reversed(list(word)):
        q = s_action(i, q)
    return q


def cyclic_shift_mlq(q: MLQ, k: int = 1) -> MLQ:
    """Shift every queue by ``k`` sites (site ``j`` goes to ``j - k``)."""
    return MLQ(q.n, tuple(rotate_queue(qi, q.n, k) for qi in q.queues), q.twist)


def cyclic_shift(x: MLQ | Sequence[int], k: int = 1) -> MLQ | Word:
    """``zeta^k`` on an MLQ (sites move down) or a word (letters rotate left)."""
    if isinstance(x, MLQ):
        return cyclic_shift_mlq(x, k)
    return rotate_word(x, k)


# ---------------------------------------------------------------------------
# Word encoding and the straight-line operator sigma_i
# ---------------------------------------------------------------------------

def word_encoding(q: MLQ) -> Tuple[str, ...]:
    """Read the ``k x n`` matrix (entry ``i`` if ``j`` in ``q_i``) column by column."""
    rows = [set(qi) for qi in q.queues]
    out = []
    for j in range(1, q.n + 1):
        for i, r in enumerate(rows, start=1):
            out.append(str(i) if j in r else EMPTY)
    return tuple(out)


def word_decoding(word: Sequence[str], n: int, k: int) -> MLQ:
    """Inverse of ``word_encoding`` that only looks at which letters each column holds.

    Column ``j`` is the block of ``k`` consecutive letters; ``j`` is put in
    ``q_i`` whenever the letter ``i`` appears in that block, whatever its
    row.  This is the reading needed after ``sigma_i_word`` changes a letter in
    place.
    """
    if len(word) != n * k:
        raise ValueError("word length does not match n * k")
    queues: list[list[int]] = [[] for _ in range(k)]
    for j in range(n):
        for letter in word[j * k:(j + 1) * k]:
            if letter != EMPTY:
                queues[int(letter) - 1].append(j + 1)
    return MLQ(n, tuple(tuple(sorted(set(qs))) for qs in queues))


def sigma_i_word(i: int, word: Sequence[str]) -> Tuple[str, ...]:
    """Straight-line operator ``sigma_i`` on words over ``{EMPTY, 1, ..., k}``.

    Letters ``i`` open and ``i + 1`` close; other letters are frozen.  After
    matching (a stack scan), the unmatched letters read ``)^a (^b`` and are
    rewritten in place as ``)^b (^a``.
    """
    opener, closer = str(i), str(i + 1)
    stack: list[int] = []
    matched = set()
    for pos, letter in enumerate(word):
        if letter == opener:
            stack.append(pos)
        elif letter == closer and stack:
            matched.add(stack.pop())
            matched.add(pos)
    free = [pos for pos, letter in enumerate(word) if letter in (opener, closer) and pos not in matched]
    a = sum(1 for pos in free if word[pos] == closer)
    b = len(free) - a
    out = list(word)
    for idx, pos in enumerate(free):
        out[pos] = closer if idx < b else opener
    return tuple(out)


def format_encoding(word: Sequence[str]) -> str:
    return "".join(word)


def oracle_agrees(i: int, q: MLQ) -> bool:
    """Compare ``s_action(i, q)`` with the straight-line operator on the encoding.

    When ``|q_i| != |q_{i+1}|`` the MLQ is first rotated so that an
    unbalanced site of ``(q_i, q_{i+1})`` sits at site 1; then no matched
    pair wraps around the end and straight-line matching agrees with the
    cyclic one.  The result is rotated back before comparing queues.
    """
    rec = sp_record(Configuration(q.n, q.queues[i - 1], q.queues[i]))
    shift = rec.unbalanced_sites[0] - 1 if rec.unbalanced_sites else 0
    rotated = cyclic_shift_mlq(q, shift)
    image = word_decoding(sigma_i_word(i, word_encoding(rotated)), q.n, q.depth)
    return cyclic_shift_mlq(image, -shift).queues == s_action(i, q).queues


# ---------------------------------------------------------------------------
# Lower sets
# ---------------------------------------------------------------------------

def lower_set(w: Sequence[int], k: int) -> Queue:
    """Sites of the ``k`` smallest letters; ``k`` must be a partial sum (or 0)."""
    if k != 0 and k not in partial_sums(word_type(w)):
        raise IllDefinedLowerSet(f"{k} is not a partial sum of type {word_type(w)}")
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    return tuple(sorted(i + 1 for i in order[:k]))


def describe_dual(c: Configuration) -> str:
    d = dual_configuration(c)
    rec = sp_record(c)
    return (
        f"q1' = {{{format_queue(d.q1)}}}\n"
        f"q2' = {{{format_queue(d.q2)}}}\n"
        f"unbalanced = {{{format_queue(rec.unbalanced_sites)}}}"
    )
