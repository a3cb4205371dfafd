"""Descriptors for the injective modules used in the construction.

A module is represented only by its socle weight, its character and what
is known about its endomorphism algebra.  Nothing here models module
structure; the descriptors record the bookkeeping that the tensor
product factorizations carry through.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence, Union

import sympy

from . import characters as ch
from .characters import Character
from .weights import (
    Weight,
    delta,
    epsilon,
    is_column_regular,
    omega,
    orbit_size,
    require_dominant,
    w0_apply,
    zero,
)


@dataclass(frozen=True)
class TruncatedPolyAlgebra:
    """``k[x_1..x_s] / (x_1^c, ..., x_s^c)``; ``s = 0`` is the ground field."""

    generators: int
    cap: int

    def __post_init__(self):
        if self.generators < 0 or self.cap < 2:
            raise ValueError("need generators >= 0 and cap >= 2")

    @property
    def dimension(self) -> int:
        return self.cap**self.generators

    def tensor(self, other: "TruncatedPolyAlgebra") -> "TruncatedPolyAlgebra":
        if other.cap != self.cap:
            raise ValueError("cannot tensor truncated algebras with different caps")
        return TruncatedPolyAlgebra(self.generators + other.generators, self.cap)

    def __str__(self) -> str:
        if self.generators == 0:
            return "k"
        xs = ",".join(f"x{i}" for i in range(1, self.generators + 1))
        rels = ",".join(f"x{i}^{self.cap}" for i in range(1, self.generators + 1))
        return f"k[{xs}]/({rels})"

    def to_json(self) -> dict:
        # dimension as a string: cap**generators outgrows JSON numbers fast
        return {"kind": "truncated", "generators": self.generators, "cap": self.cap,
                "dimension": str(self.dimension)}


@dataclass(frozen=True)
class OpaqueAlgebra:
    """An endomorphism algebra known only through its dimension."""

    dimension: int

    def tensor(self, other) -> "OpaqueAlgebra":
        return OpaqueAlgebra(self.dimension * other.dimension)

    def __str__(self) -> str:
        return f"<algebra of dimension {self.dimension}>"

    def to_json(self) -> dict:
        return {"kind": "opaque", "dimension": str(self.dimension)}


EndAlgebra = Union[TruncatedPolyAlgebra, OpaqueAlgebra]


def end_algebra_from_json(data) -> EndAlgebra:
    if data["kind"] == "truncated":
        return TruncatedPolyAlgebra(data["generators"], data["cap"])
    return OpaqueAlgebra(int(data["dimension"]))


@dataclass(frozen=True)
class AdmissibleIndex:
    value: int
    exact: bool = True

    def __add__(self, other: "AdmissibleIndex") -> "AdmissibleIndex":
        return AdmissibleIndex(self.value + other.value, self.exact and other.exact)

    def to_json(self) -> dict:
        return {"value": self.value, "exact": self.exact}


@dataclass(frozen=True)
class InjectiveDescriptor:
    """Socle weight, character and endomorphism algebra of an injective
    module ``I(socle_weight)``.

    ``character`` is ``None`` when it was not materialized.  ``index`` is
    ``None`` when the module is not known to be admissible.
    """

    socle_weight: Weight
    character: Character | None
    end_algebra: EndAlgebra
    index: AdmissibleIndex | None

    @property
    def rank(self) -> int:
        return len(self.socle_weight)

    @property
    def end_dimension(self) -> int:
        return self.end_algebra.dimension

    def to_json(self, include_character: bool = True) -> dict:
        return {
            "socle_weight": list(self.socle_weight),
            "character": (self.character.to_json()
                          if include_character and self.character is not None else None),
            "end_algebra": self.end_algebra.to_json(),
            "index": self.index.to_json() if self.index is not None else None,
        }

    @classmethod
    def from_json(cls, data) -> "InjectiveDescriptor":
        return cls(
            Weight(data["socle_weight"]),
            Character.from_json(data["character"]) if data["character"] else None,
            end_algebra_from_json(data["end_algebra"]),
            AdmissibleIndex(**data["index"]) if data["index"] else None,
        )


def _check_restricted(lam, p: int) -> Weight:
    lam = require_dominant(lam, polynomial=True)
    if lam[0] >= p or not is_column_regular(lam, p):
        raise ValueError(f"{lam} must satisfy b(lam) < {p} and lie in X_1(n)")
    return lam


def _is_hook(lam: Weight) -> bool:
    return lam[0] > 0 and not any(lam[1:])


def steinberg_tilting(n: int, p: int, lam, with_character: bool = True) -> InjectiveDescriptor:
    """``M((p-1)delta + lam) = I((p-1)delta + w0 lam)`` for ``b(lam) < p``.

    Its character is ``chi((p-1)delta) s(lam)`` and its endomorphism algebra
    has dimension ``|W lam|``.  The algebra is identified as ``k[x]/(x^n)``
    when ``lam = a eps_1`` and as ``k`` when the orbit is a point; otherwise
    only its dimension is recorded.
    """
    if n < 2:
        raise ValueError("need rank n >= 2")
    lam = _check_restricted(lam, p)
    if len(lam) != n:
        raise ValueError(f"weight {lam} does not have rank {n}")
    st = (p - 1) * delta(n)
    character = ch.weyl_character(st) * ch.orbit_sum(lam) if with_character else None
    size = orbit_size(lam)
    if _is_hook(lam):
        algebra, index = hook_injective_end(n, p, lam[0]), AdmissibleIndex(1)
    elif size == 1:
        algebra, index = TruncatedPolyAlgebra(0, n), AdmissibleIndex(0)
    else:
        algebra, index = OpaqueAlgebra(size), None
    return InjectiveDescriptor(st + w0_apply(lam), character, algebra, index)


def hook_injective_end(n: int, p: int, a: int) -> TruncatedPolyAlgebra:
    """``End(I((p-1)delta + a eps_n)) = k[x]/(x^n)`` for ``1 <= a < p``."""
    if not 1 <= a < p:
        raise ValueError(f"need 1 <= a < p, got a={a}, p={p}")
    if n < 2:
        raise ValueError("need rank n >= 2")
    return TruncatedPolyAlgebra(1, n)


def base_digits(a: int, base: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        a, d = divmod(a, base)
        out.append(d)
    return out


def pm_hook_injective(n: int, p: int, m: int, a: int,
                      with_character: bool = True) -> InjectiveDescriptor:
    """``I((p^m - 1)delta + a eps_n)`` for ``0 <= a < p^m``, split along the
    base-p digits of ``a`` into Frobenius-twisted restricted pieces.

    Every nonzero digit contributes one ``k[x]/(x^n)`` factor.
    """
    if m < 1 or not 0 <= a <= p**m - 1:
        raise ValueError(f"need m >= 1 and 0 <= a <= p^m - 1, got m={m}, a={a}")
    pieces = [steinberg_tilting(n, p, d * epsilon(1, n), with_character)
              for d in base_digits(a, p, m)]
    return tensor_factorization(pieces, p, 1, zero(n))


def determinant_shift(d: InjectiveDescriptor, k: int) -> InjectiveDescriptor:
    """Tensor with ``D^{k}``: socle and character move by ``k omega``."""
    if k < 0:
        raise ValueError("shift must be non-negative")
    sh = k * omega(d.rank)
    return replace(
        d,
        socle_weight=d.socle_weight + sh,
        character=d.character.shift(sh) if d.character is not None else None,
    )


def tensor_factorization(factors: Sequence[InjectiveDescriptor], p: int, m: int,
                         gamma, with_character: bool | None = None) -> InjectiveDescriptor:
    """``I(sum_i p^{mi} s_i + p^{mh} gamma)`` as
    ``(x)_i I(s_i)^{F^{mi}} (x) I(gamma)^{F^{mh}}`` where ``h = len(factors)``.

    ``I(gamma) = nabla(gamma)`` contributes the trivial algebra.  The
    character is materialized only if every factor carries one (or when
    ``with_character`` forces it off).
    """
    if not factors:
        raise ValueError("need at least one factor")
    n = factors[0].rank
    gamma = require_dominant(gamma, polynomial=True)
    if any(f.rank != n for f in factors) or len(gamma) != n:
        raise ValueError("rank mismatch across factors")
    if m < 1 or p < 2:
        raise ValueError("need p >= 2 and m >= 1")
    step = p**m
    h = len(factors)
    socle = zero(n)
    for i, f in enumerate(factors):
        socle = socle + step**i * f.socle_weight
    socle = socle + step**h * gamma

    if with_character is None:
        with_character = all(f.character is not None for f in factors)
    character = None
    if with_character:
        character = ch.frobenius_twist(ch.weyl_character(gamma), step**h)
        for i, f in enumerate(factors):
            character = character * ch.frobenius_twist(f.character, step**i)

    algebra = factors[0].end_algebra
    for f in factors[1:]:
        if isinstance(algebra, TruncatedPolyAlgebra) and isinstance(f.end_algebra, TruncatedPolyAlgebra):
            algebra = algebra.tensor(f.end_algebra)
        else:
            algebra = OpaqueAlgebra(algebra.dimension * f.end_algebra.dimension)

    index = None
    if all(f.index is not None for f in factors):
        index = AdmissibleIndex(0)
        for f in factors:
            index = index + f.index
    return InjectiveDescriptor(socle, character, algebra, index)


def multiplicity_product_symbolic(factor_mults):
    """Formal product of composition multiplicities ``[I(lam^i) : L(lam^i)]``.

    Integers multiply out; anything else (a sympy symbol or a name) stays
    as an unevaluated factor.
    """
    terms = [sympy.Symbol(t) if isinstance(t, str) else sympy.sympify(t) for t in factor_mults]
    out = sympy.Mul(*terms)
    if out.is_Integer:
        return int(out)
    return out


__all__ = [
    "TruncatedPolyAlgebra", "OpaqueAlgebra", "AdmissibleIndex", "InjectiveDescriptor",
    "steinberg_tilting", "hook_injective_end", "pm_hook_injective", "determinant_shift",
    "tensor_factorization", "multiplicity_product_symbolic", "base_digits",
]
