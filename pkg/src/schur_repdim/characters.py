"""Formal characters in the group ring ``Z X(n)``.

A :class:`Character` is a finitely supported map from weights to nonzero
integers, i.e. a Laurent polynomial in ``x_1, ..., x_n``.  Weyl characters
are built from semistandard tableaux; non-dominant arguments go through the
dot action so that Brauer's identity holds with cancellation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Mapping

from .weights import (
    Weight,
    as_weight,
    delta,
    iter_orbit,
    omega,
    require_dominant,
    zero,
)


class Character:
    """An element of ``Z X(n)``; immutable, with canonical term order."""

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Mapping | Iterable = ()):
        if rank < 1:
            raise ValueError("rank must be >= 1")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Weight, int] = {}
        for w, c in items:
            w = as_weight(w)
            if len(w) != rank:
                raise ValueError(f"weight {w} does not have rank {rank}")
            acc[w] = acc.get(w, 0) + int(c)
        self.rank = rank
        self._terms = {w: acc[w] for w in sorted(acc) if acc[w]}
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, rank: int) -> "Character":
        return cls(rank)

    @classmethod
    def exponential(cls, a) -> "Character":
        a = as_weight(a)
        return cls(len(a), {a: 1})

    @classmethod
    def _trusted(cls, rank: int, terms: dict) -> "Character":
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = {w: terms[w] for w in sorted(terms) if terms[w]}
        obj._hash = None
        return obj

    # mapping-like access ------------------------------------------------
    @property
    def terms(self) -> dict[Weight, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> list[Weight]:
        return list(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __getitem__(self, w) -> int:
        return self._terms.get(as_weight(w), 0)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, tuple(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return f"Character({self.rank}, 0)"
        body = " + ".join(
            (f"{c}*" if c != 1 else "") + f"e^{w}" for w, c in self._terms.items()
        )
        return f"Character({self.rank}, {body})"

    # ring operations ----------------------------------------------------
    def _other(self, other) -> "Character":
        if isinstance(other, int):
            return Character(self.rank, {zero(self.rank): other})
        if not isinstance(other, Character):
            raise TypeError(f"cannot combine Character with {type(other).__name__}")
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return other

    def __add__(self, other) -> "Character":
        other = self._other(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out.get(w, 0) + c
        return Character._trusted(self.rank, out)

    __radd__ = __add__

    def __neg__(self) -> "Character":
        return Character._trusted(self.rank, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "Character":
        return self + (-self._other(other))

    def __rsub__(self, other) -> "Character":
        return self._other(other) - self

    def __mul__(self, other) -> "Character":
        if isinstance(other, int):
            return Character._trusted(
                self.rank, {w: other * c for w, c in self._terms.items()}
            )
        other = self._other(other)
        out: dict[tuple, int] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(w1, w2))
                out[key] = out.get(key, 0) + c1 * c2
        return Character._trusted(
            self.rank, {Weight(w): c for w, c in out.items()}
        )

    __rmul__ = __mul__

    def shift(self, a) -> "Character":
        """Multiply by ``e^a``."""
        a = as_weight(a)
        return Character._trusted(self.rank, {w + a: c for w, c in self._terms.items()})

    # evaluation ---------------------------------------------------------
    def dimension(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, point) -> Fraction:
        """Value of the Laurent polynomial at ``point`` (exact rationals)."""
        point = [Fraction(x) for x in point]
        if len(point) != self.rank:
            raise ValueError("point has wrong length")
        return sum(
            (c * prod(x**e for x, e in zip(point, w)) for w, c in self._terms.items()),
            Fraction(0),
        )

    # serialization ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [{"weight": list(w), "mult": c} for w, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Character":
        return cls(data["rank"], [(t["weight"], t["mult"]) for t in data["terms"]])


def exponential(a) -> Character:
    return Character.exponential(a)


def multiply(x: Character, y: Character) -> Character:
    return x * y


def add(x: Character, y: Character) -> Character:
    return x + y


def subtract(x: Character, y: Character) -> Character:
    return x - y


def dimension(x: Character) -> int:
    return x.dimension()


def weight_multiplicity(x: Character, w) -> int:
    return x[w]


def orbit_sum(a) -> Character:
    """``s(a)``: the sum of ``e^mu`` over the Weyl orbit of ``a``."""
    a = as_weight(a)
    return Character._trusted(len(a), {w: 1 for w in iter_orbit(a)})


@dataclass(frozen=True)
class SignedChi:
    """Normal form ``sign * chi(dominant_rep)`` of ``chi(v)`` for arbitrary ``v``."""

    sign: int
    dominant_rep: Weight | None

    def character(self, rank: int) -> Character:
        if self.sign == 0:
            return Character.zero(rank)
        return self.sign * weyl_character(self.dominant_rep)


def dot_normalize(v) -> SignedChi:
    """Move ``v`` to the dominant chamber under the dot action ``w.v = w(v+delta)-delta``.

    Returns sign 0 when ``v + delta`` has a repeated entry (a wall).
    """
    v = as_weight(v)
    shifted = v + delta(len(v))
    if len(set(shifted)) < len(shifted):
        return SignedChi(0, None)
    inversions = sum(
        1
        for i in range(len(shifted))
        for j in range(i + 1, len(shifted))
        if shifted[i] < shifted[j]
    )
    rep = Weight(sorted(shifted, reverse=True)) - delta(len(v))
    return SignedChi(-1 if inversions % 2 else 1, rep)


@lru_cache(maxsize=None)
def _gt_weights(shape: tuple, k: int) -> dict:
    """Weights of SSYT of ``shape`` with entries ``1..k``.

    Returns ``{(c_1,...,c_k): count}``.  Removing the cells labelled ``k``
    from such a tableau leaves a horizontal strip, so we branch on the
    interlacing shape below.
    """
    if k == 0:
        return {(): 1} if not any(shape) else {}
    if len(shape) > k and shape[k] > 0:
        return {}
    out: dict[tuple, int] = {}
    size = sum(shape)
    for inner in _interlacing(shape):
        strip = size - sum(inner)
        for w, c in _gt_weights(inner, k - 1).items():
            key = w + (strip,)
            out[key] = out.get(key, 0) + c
    return out


def _interlacing(shape: tuple):
    """Partitions ``nu`` with ``shape[i+1] <= nu[i] <= shape[i]``."""
    n = len(shape)

    def rec(i):
        if i == n:
            yield ()
            return
        low = shape[i + 1] if i + 1 < n else 0
        for v in range(low, shape[i] + 1):
            for tail in rec(i + 1):
                yield (v,) + tail

    yield from rec(0)


@lru_cache(maxsize=4096)
def _schur(shape: Weight) -> Character:
    n = len(shape)
    return Character._trusted(
        n, {Weight(w): c for w, c in _gt_weights(tuple(shape), n).items()}
    )


def schur_character(a) -> Character:
    """``chi(a)`` for a partition ``a`` via tableau weight enumeration."""
    a = require_dominant(a, polynomial=True)
    return _schur(a)


def weyl_character(a) -> Character:
    """``chi(a)`` for any weight.

    Dominant weights with negative entries are handled by the determinant
    twist ``chi(a) = e^{a_n omega} chi(a - a_n omega)``; non-dominant
    weights by :func:`dot_normalize`.
    """
    a = as_weight(a)
    if not a.is_dominant():
        return dot_normalize(a).character(len(a))
    low = a[-1]
    if low == 0:
        return _schur(a)
    shift = low * omega(len(a))
    return _schur(a - shift).shift(shift)


def frobenius_twist(x: Character, factor: int) -> Character:
    """Dilate every weight by ``factor`` (the character of ``V^{F^m}`` when
    ``factor = p**m``)."""
    if factor < 1:
        raise ValueError("twist factor must be >= 1")
    return Character._trusted(x.rank, {factor * w: c for w, c in x.items()})


def brauer_expand(lam, nu) -> list[tuple[int, Weight]]:
    """Terms of ``chi(lam) s(nu) = sum_{mu in W nu} chi(lam + mu)`` in
    dot-normal form, wall terms dropped."""
    lam = require_dominant(lam)
    out = []
    for mu in iter_orbit(nu):
        sc = dot_normalize(lam + mu)
        if sc.sign:
            out.append((sc.sign, sc.dominant_rep))
    return out


def brauer_sum(terms: list[tuple[int, Weight]], rank: int) -> Character:
    total = Character.zero(rank)
    for sign, rep in terms:
        total = total + sign * weyl_character(rep)
    return total


def steinberg_character(n: int, p: int, m: int = 1) -> Character:
    """``chi((p**m - 1) delta)``."""
    return weyl_character((p**m - 1) * delta(n))


def zhat_character(lam, p: int) -> Character:
    """``e^{lam - (p-1) delta} chi((p-1) delta)``."""
    if p < 2:
        raise ValueError("p must be >= 2")
    lam = as_weight(lam)
    st = (p - 1) * delta(len(lam))
    return weyl_character(st).shift(lam - st)
