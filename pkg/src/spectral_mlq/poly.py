"""Exact sparse polynomials with integer coefficients in ``x_1, ..., x_n``.

A polynomial maps exponent vectors (tuples of length ``n``) to nonzero
Python integers, so coefficients never overflow.  Terms are always reported
in exponent-lexicographic descending order, which fixes the JSON and text
serializations.

Example (n = 3)::

    x1^2*x3 - 4  ->  {(2, 0, 1): 1, (0, 0, 0): -4}
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]


class Poly:
    """Immutable sparse polynomial over the integers in ``n`` variables."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponent, int] | None = None):
        if n < 0:
            raise ValueError("number of variables must be nonnegative")
        self.n = n
        clean: Dict[Exponent, int] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not have length {n}")
                if c:
                    clean[tuple(e)] = int(c)
        self._terms = clean
        self._hash: int | None = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n)

    @classmethod
    def const(cls, n: int, c: int) -> "Poly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def one(cls, n: int) -> "Poly":
        return cls.const(n, 1)

    @classmethod
    def var(cls, n: int, i: int) -> "Poly":
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside [1..{n}]")
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, n: int, exponents: Sequence[int], c: int = 1) -> "Poly":
        return cls(n, {tuple(exponents): c})

    @classmethod
    def from_sites(cls, n: int, sites: Iterable[int]) -> "Poly":
        """The monomial ``prod x_j`` over ``sites``; indices are read modulo ``n``."""
        e = [0] * n
        for j in sites:
            e[(j - 1) % n] += 1
        return cls(n, {tuple(e): 1})

    # -- basic access -----------------------------------------------------

    def terms(self) -> list[tuple[Exponent, int]]:
        """Terms in canonical (exponent-lex descending) order."""
        return sorted(self._terms.items(), reverse=True)

    def as_dict(self) -> Dict[Exponent, int]:
        return dict(self._terms)

    def coefficient(self, exponents: Sequence[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self.terms())

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} vs {other.n} variables")

    def _coerce(self, other: object) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, int):
            return Poly.const(self.n, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: object) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> "Poly":
        return (-self) + other

    def __mul__(self, other: object) -> "Poly":
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.n, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> "Poly":
        return Poly(self.n, {e: c * v for e, v in self._terms.items()})

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = Poly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Poly.const(self.n, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # -- transformations --------------------------------------------------

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        """Exact evaluation at ``(x_1, ..., x_n) = point``."""
        if len(point) != self.n:
            raise ValueError(f"need {self.n} values, got {len(point)}")
        total: Scalar = 0
        for e, c in self._terms.items():
            term: Scalar = c
            for xi, ei in zip(point, e):
                if ei:
                    term *= xi ** ei
            total += term
        return total

    def at_ones(self) -> int:
        """Value at ``x_1 = ... = x_n = 1`` (the sum of the coefficients)."""
        return sum(self._terms.values())

    def permute_variables(self, perm: Sequence[int]) -> "Poly":
        """Exponent vector ``e`` becomes ``(e_{perm(1)}, ..., e_{perm(n)})`` (1-based perm)."""
        return Poly(self.n, {tuple(e[p - 1] for p in perm): c for e, c in self._terms.items()})

    def rotate_variables(self, k: int = 1) -> "Poly":
        """Rotate every exponent vector left by ``k`` (``x_j`` becomes ``x_{j-k}``)."""
        n = self.n
        perm = [(i + k) % n + 1 for i in range(n)]
        return self.permute_variables(perm)

    def embed(self, n: int) -> "Poly":
        """Same polynomial viewed in ``n >= self.n`` variables."""
        if n < self.n:
            if any(any(e[n:]) for e in self._terms):
                raise ValueError("polynomial uses variables beyond the new ambient")
            return Poly(n, {e[:n]: c for e, c in self._terms.items()})
        pad = (0,) * (n - self.n)
        return Poly(n, {e + pad: c for e, c in self._terms.items()})

    # -- serialization ----------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"n": self.n, "terms": [{"c": c, "e": list(e)} for e, c in self.terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "Poly":
        n = int(obj["n"])
        out: Dict[Exponent, int] = {}
        for t in obj["terms"]:
            e = tuple(int(a) for a in t["e"])
            out[e] = out.get(e, 0) + int(t["c"])
        return cls(n, out)

    @classmethod
    def from_json(cls, text: str) -> "Poly":
        return cls.from_json_obj(json.loads(text))

    def to_text(self) -> str:
        """Render as ``+ c*x1^a1*x3^a3 ...`` in canonical order; ``0`` if empty."""
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.terms():
            sign = "+" if c > 0 else "-"
            mono = "*".join(
                f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(e) if a
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(f"{sign} {body}")
        return " ".join(parts)

    _TERM_RE = re.compile(r"([+-])\s*([^+-]+)")

    @classmethod
    def parse_text(cls, n: int, text: str) -> "Poly":
        """Inverse of ``to_text`` (also accepts a missing leading sign)."""
        text = text.strip()
        if text == "0":
            return cls.zero(n)
        if text[0] not in "+-":
            text = "+ " + text
        out: Dict[Exponent, int] = {}
        consumed = 0
        for match in cls._TERM_RE.finditer(text):
            if text[consumed:match.start()].strip():
                raise ValueError(f"cannot parse polynomial near {text[consumed:]!r}")
            consumed = match.end()
            sign = -1 if match.group(1) == "-" else 1
            coeff = 1
            e = [0] * n
            for factor in match.group(2).strip().split("*"):
                factor = factor.strip()
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                fm = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
                if not fm:
                    raise ValueError(f"bad factor {factor!r}")
                idx = int(fm.group(1))
                if not 1 <= idx <= n:
                    raise ValueError(f"variable x{idx} outside [1..{n}]")
                e[idx - 1] += int(fm.group(2) or 1)
            key = tuple(e)
            out[key] = out.get(key, 0) + sign * coeff
        if text[consumed:].strip():
            raise ValueError(f"trailing text {text[consumed:]!r}")
        return cls(n, out)

    def __repr__(self) -> str:
        return f"Poly({self.n}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()


# ---------------------------------------------------------------------------
# Symmetric polynomial generators
# ---------------------------------------------------------------------------

def elementary_sym(k: int, variables: Sequence[int], n: int) -> Poly:
    """``e_k`` in the listed variables (1-based indices), inside ``n`` variables."""
    if k < 0 or k > len(variables):
        return Poly.zero(n)
    out: Dict[Exponent, int] = {}
    for combo in combinations(variables, k):
        e = [0] * n
        for i in combo:
            e[i - 1] += 1
        key = tuple(e)
        out[key] = out.get(key, 0) + 1
    return Poly(n, out)


def complete_hom(k: int, variables: Sequence[int], n: int) -> Poly:
    """``h_k`` in the listed variables; ``h_0 = 1`` even for an empty list."""
    if k < 0:
        return Poly.zero(n)
    out: Dict[Exponent, int] = {}
    for combo in combinations_with_replacement(variables, k):
        e = [0] * n
        for i in combo:
            e[i - 1] += 1
        key = tuple(e)
        out[key] = out.get(key, 0) + 1
    return Poly(n, out)


def e_range(k: int, n: int) -> Poly:
    """``e_k(x_1, ..., x_n)``."""
    return elementary_sym(k, range(1, n + 1), n)


def h_range(k: int, upto: int, n: int) -> Poly:
    """``h_k(x_1, ..., x_upto)`` inside ``n`` variables."""
    return complete_hom(k, range(1, upto + 1), n)


# ---------------------------------------------------------------------------
# Determinants
# ---------------------------------------------------------------------------

def poly_det(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Exact determinant by Laplace expansion memoized on column subsets."""
    k = len(matrix)
    if any(len(row) != k for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if k == 0:
        raise ValueError("determinant of an empty matrix needs an ambient; use poly_det_n")
    n = matrix[0][0].n
    return poly_det_n(matrix, n)


def poly_det_n(matrix: Sequence[Sequence[Poly]], n: int) -> Poly:
    """Like ``poly_det`` but with an explicit ambient (the empty matrix gives 1)."""
    k = len(matrix)
    if any(len(row) != k for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    memo: Dict[int, Poly] = {}

    def minor(mask: int) -> Poly:
        # Rows r..k-1 against the columns in ``mask``; r = k - popcount(mask).
        if mask == 0:
            return Poly.one(n)
        if mask in memo:
            return memo[mask]
        r = k - bin(mask).count("1")
        total = Poly.zero(n)
        sign = 1
        for c in range(k):
            if mask >> c & 1:
                entry = matrix[r][c]
                if not entry.is_zero():
                    sub = minor(mask & ~(1 << c))
                    if not sub.is_zero():
                        total = total + entry * sub * sign
                sign = -sign
        memo[mask] = total
        return total

    return minor((1 << k) - 1)
