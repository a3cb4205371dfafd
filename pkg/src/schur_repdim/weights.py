"""Integer combinatorics of the weight lattice ``X(n) = Z^n`` for GL_n.

Weights are immutable integer vectors.  Dominant weights are weakly
decreasing; polynomial dominant weights (all entries non-negative) are
partitions with at most ``n`` parts.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import accumulate, permutations
from math import factorial, prod
from typing import Iterable, Iterator


class Weight(tuple):
    """An element of ``Z^n``.

    Arithmetic is entrywise: ``a + b`` and ``a - b`` add vectors, ``k * a``
    scales.  This deliberately replaces tuple concatenation.
    """

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(e) for e in entries)
        if not entries:
            raise ValueError("a weight needs rank n >= 1")
        return super().__new__(cls, entries)

    @property
    def rank(self) -> int:
        return len(self)

    def _check(self, other) -> "Weight":
        other = other if isinstance(other, Weight) else Weight(other)
        if len(other) != len(self):
            raise ValueError(f"rank mismatch: {len(self)} vs {len(other)}")
        return other

    def __add__(self, other) -> "Weight":
        other = self._check(other)
        return Weight(a + b for a, b in zip(self, other))

    __radd__ = __add__

    def __sub__(self, other) -> "Weight":
        other = self._check(other)
        return Weight(a - b for a, b in zip(self, other))

    def __rsub__(self, other) -> "Weight":
        return self._check(other) - self

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self)

    def __mul__(self, k: int) -> "Weight":
        if not isinstance(k, int):
            return NotImplemented
        return Weight(k * a for a in self)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return "(" + ",".join(str(a) for a in self) + ")"

    __str__ = __repr__

    def is_dominant(self) -> bool:
        return all(a >= b for a, b in zip(self, self[1:]))

    def is_polynomial(self) -> bool:
        return all(a >= 0 for a in self)

    def is_partition(self) -> bool:
        return self.is_dominant() and self[-1] >= 0

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data) -> "Weight":
        return cls(data)

    @classmethod
    def parse(cls, text: str) -> "Weight":
        """Parse the literal form ``"(a,b,...)"``."""
        body = text.strip()
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        try:
            return cls(int(part) for part in body.split(",") if part.strip())
        except ValueError as exc:
            raise ValueError(f"bad weight literal {text!r}") from exc


def as_weight(a) -> Weight:
    return a if isinstance(a, Weight) else Weight(a)


def require_dominant(a, *, polynomial: bool = False) -> Weight:
    a = as_weight(a)
    if not a.is_dominant():
        raise ValueError(f"{a} is not dominant")
    if polynomial and not a.is_polynomial():
        raise ValueError(f"{a} is not polynomial")
    return a


def special_weight(kind: str, n: int, i: int | None = None) -> Weight:
    """``delta = (n-1,...,1,0)``, ``omega = (1,...,1)`` or ``epsilon_i``.

    ``i`` is 1-based and only used for ``kind="epsilon"``.
    """
    if n < 1:
        raise ValueError("rank must be >= 1")
    if kind == "delta":
        return Weight(range(n - 1, -1, -1))
    if kind == "omega":
        return Weight([1] * n)
    if kind == "epsilon":
        if i is None or not 1 <= i <= n:
            raise IndexError(f"epsilon index {i} out of range 1..{n}")
        return Weight(1 if j == i else 0 for j in range(1, n + 1))
    raise ValueError(f"unknown special weight {kind!r}")


def delta(n: int) -> Weight:
    return special_weight("delta", n)


def omega(n: int) -> Weight:
    return special_weight("omega", n)


def epsilon(i: int, n: int) -> Weight:
    return special_weight("epsilon", n, i)


def zero(n: int) -> Weight:
    return Weight([0] * n)


def degree(a) -> int:
    return sum(a)


def breadth(a) -> int:
    return require_dominant(a)[0]


def w0_apply(a) -> Weight:
    return Weight(reversed(as_weight(a)))


def dominance_leq(a, b) -> bool:
    """True iff ``a <= b``: partial sums of ``a`` bounded by those of ``b``
    and equal totals."""
    a, b = as_weight(a), as_weight(b)
    b = a._check(b)
    sa, sb = list(accumulate(a)), list(accumulate(b))
    return sa[-1] == sb[-1] and all(x <= y for x, y in zip(sa, sb))


def dominant_rep(a) -> Weight:
    """The unique dominant weight in the Weyl orbit of ``a``."""
    return Weight(sorted(a, reverse=True))


def orbit_size(a) -> int:
    a = as_weight(a)
    return factorial(len(a)) // prod(factorial(c) for c in Counter(a).values())


def iter_orbit(a) -> Iterator[Weight]:
    """Distinct permutations of ``a`` in decreasing lexicographic order."""
    items = sorted(as_weight(a), reverse=True)
    n = len(items)
    # standard next-permutation walk, descending variant
    while True:
        yield Weight(items)
        i = n - 2
        while i >= 0 and items[i] <= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] >= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


def weyl_orbit(a) -> frozenset[Weight]:
    return frozenset(iter_orbit(a))


def brute_force_orbit(a) -> frozenset[Weight]:
    """Orbit via all ``n!`` permutations; an oracle for :func:`weyl_orbit`."""
    return frozenset(Weight(w) for w in permutations(as_weight(a)))


def is_column_regular(a, l: int) -> bool:
    if l < 2:
        raise ValueError("column regularity needs l >= 2")
    a = require_dominant(a)
    return all(x - y < l for x, y in zip(a, a[1:])) and a[-1] < l


def in_Xm(a, p: int, m: int) -> bool:
    """Membership in ``X_m(n)``: column ``p**m``-regular dominant weights."""
    if p < 2 or m < 1:
        raise ValueError("need p >= 2 and m >= 1")
    return is_column_regular(a, p**m)


@dataclass(frozen=True)
class PAdicDecomposition:
    """``a = sum_j base**j * digits[j]`` with column base-regular digits."""

    base: int
    digits: tuple[Weight, ...]

    def reconstruct(self) -> Weight:
        total = zero(len(self.digits[0]))
        for j, d in enumerate(self.digits):
            total = total + self.base**j * d
        return total

    @property
    def breadth(self) -> int:
        return max(d[0] for d in self.digits)


def p_adic_decompose(a, p: int) -> PAdicDecomposition:
    """Write a partition as ``sum_j p**j lambda^j`` with each ``lambda^j``
    column p-regular.

    Each digit is forced: its last entry is ``a_n mod p`` and each gap
    ``d_i - d_{i+1}`` is ``(a_i - a_{i+1}) mod p``.  The zero weight has the
    single digit zero.  ``p`` need not be prime.
    """
    if p < 2:
        raise ValueError("base must be >= 2")
    a = require_dominant(a, polynomial=True)
    n = len(a)
    digits = []
    rest = list(a)
    while True:
        d = [0] * n
        d[-1] = rest[-1] % p
        for i in range(n - 2, -1, -1):
            d[i] = d[i + 1] + (rest[i] - rest[i + 1]) % p
        digits.append(Weight(d))
        rest = [(x - y) // p for x, y in zip(rest, d)]
        if not any(rest):
            break
    return PAdicDecomposition(p, tuple(digits))


def p_adic_breadth(a, p: int) -> int:
    return p_adic_decompose(a, p).breadth


def partitions(r: int, n: int, max_part: int | None = None) -> Iterator[Weight]:
    """Partitions of ``r`` with at most ``n`` parts, padded to length ``n``,
    in decreasing lexicographic order."""
    if max_part is None:
        max_part = r

    def rec(left, slots, cap):
        if slots == 0:
            if left == 0:
                yield ()
            return
        for first in range(min(left, cap), -1, -1):
            if first * slots < left:
                break
            for tail in rec(left - first, slots - 1, first):
                yield (first,) + tail

    for parts in rec(r, n, max_part):
        yield Weight(parts)


def dominant_weights_up_to(max_degree: int, n: int) -> Iterator[Weight]:
    """All polynomial dominant weights of rank ``n`` and degree ``<= max_degree``."""
    for r in range(max_degree + 1):
        yield from partitions(r, n)


def restricted_weights(n: int, p: int) -> Iterator[Weight]:
    """Partitions ``lam`` with ``b(lam) < p``; these all lie in ``X_1(n)``."""
    for r in range(n * (p - 1) + 1):
        yield from partitions(r, n, max_part=p - 1)
