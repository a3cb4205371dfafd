"""Digit construction of the weight ``mu`` in ``Lambda+(n, r)`` and the
resulting lower bounds on the representation dimension of ``S(n, r)`` and
``S_q(n, r)``.

Classical case: write ``r - T_h = sum_{i<h} P^i u_i + P^h u_h`` with
``0 <= u_i < P`` where ``T_h = ((P-1)|delta| + 1)(P^h - 1)/(P - 1)``,
turn each digit into a hook-like weight ``lambda^i`` and glue the injectives
``I((P-1)delta + w0 lambda^i)`` with Frobenius twists.  The endomorphism
algebra of ``I(mu)`` is then a truncated polynomial algebra in at least
``h`` variables, giving ``repdim S(n, r) >= h + 1``.

Quantum case (``q`` a primitive ``l``-th root of unity): peel off one
layer of modulus ``lP`` first and run the classical construction on the
quotient, giving ``repdim S_q(n, r) >= h + 2``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import sympy

from .modules import (
    AdmissibleIndex,
    InjectiveDescriptor,
    TruncatedPolyAlgebra,
    determinant_shift,
    pm_hook_injective,
    tensor_factorization,
)
from .weights import (
    Weight,
    degree,
    delta,
    epsilon,
    is_column_regular,
    omega,
    p_adic_breadth,
    w0_apply,
)


class PreconditionError(ValueError):
    """Parameters outside the range where the construction applies."""


class ThresholdError(PreconditionError):
    def __init__(self, r: int, min_r: int):
        super().__init__(f"r={r} is below the threshold min_r={min_r}")
        self.r = r
        self.min_r = min_r


def _delta_degree(n: int) -> int:
    return n * (n - 1) // 2


def _check_classical(n: int, p: int, m: int) -> int:
    if n < 2:
        raise PreconditionError("need n >= 2")
    if not sympy.isprime(p):
        raise PreconditionError(f"p={p} is not prime")
    if m < 1:
        raise PreconditionError("need m >= 1")
    P = p**m
    if P <= n:
        raise PreconditionError(f"need P = p^m > n, got P={P}, n={n}")
    return P


def _check_level(l: int) -> None:
    if l < 2:
        raise PreconditionError(f"need l > 1, got l={l}")


def suggest_m(n: int, p: int) -> int:
    """Smallest ``m >= 1`` with ``p**m > n``."""
    m = 1
    while p**m <= n:
        m += 1
    return m


def min_r_classical(n: int, p: int, m: int, h: int) -> int:
    P = _check_classical(n, p, m)
    if h < 0:
        raise PreconditionError("need h >= 0")
    geometric = (P**h - 1) // (P - 1)
    return ((P - 1) * _delta_degree(n) + 1) * geometric


def min_r_quantum(n: int, p: int, m: int, l: int, h: int) -> int:
    P = _check_classical(n, p, m)
    _check_level(l)
    if h < 0:
        raise PreconditionError("need h >= 0")
    d = _delta_degree(n)
    return ((l * P - 1) * d + 1) + l * P * min_r_classical(n, p, m, h)


def max_h_classical(n: int, p: int, m: int, r: int) -> int:
    """Largest ``h >= 0`` with ``min_r_classical(n, p, m, h) <= r``."""
    h = 0
    while min_r_classical(n, p, m, h + 1) <= r:
        h += 1
    return h


def max_h_quantum(n: int, p: int, m: int, l: int, r: int) -> int:
    h = 0
    while min_r_quantum(n, p, m, l, h + 1) <= r:
        h += 1
    return h


@dataclass(frozen=True)
class ClassicalParams:
    n: int
    p: int
    m: int
    h: int
    r: int

    @property
    def P(self) -> int:
        return self.p**self.m


@dataclass(frozen=True)
class QuantumParams(ClassicalParams):
    l: int = 2


@dataclass
class ConstructionResult:
    regime: str
    n: int
    p: int
    m: int
    h: int
    r: int
    digits: list[int]
    lambda_factors: list[Weight]
    gamma: Weight
    mu: Weight
    descriptor: InjectiveDescriptor
    repdim_lower_bound: int
    l: Optional[int] = None
    level_digit: Optional[int] = None
    level_factor: Optional[Weight] = None
    classical: Optional["ConstructionResult"] = field(default=None, repr=False)

    @property
    def P(self) -> int:
        return self.p**self.m

    @property
    def end_algebra(self):
        return self.descriptor.end_algebra

    def to_json(self, include_character: bool = True) -> dict:
        out = {"regime": self.regime, "n": self.n, "p": self.p, "m": self.m, "P": self.P}
        if self.regime == "quantum":
            out["l"] = self.l
            out["level_digit"] = self.level_digit
            out["level_factor"] = list(self.level_factor)
        out.update({
            "h": self.h,
            "r": self.r,
            "digits": list(self.digits),
            "lambda_factors": [list(w) for w in self.lambda_factors],
            "gamma": list(self.gamma),
            "mu": list(self.mu),
            "end_algebra": {
                "generators": self.end_algebra.generators,
                "cap": self.end_algebra.cap,
                "dimension": str(self.end_algebra.dimension),
            },
            "index": self.descriptor.index.to_json(),
            "repdim_lower_bound": self.repdim_lower_bound,
            "character": (self.descriptor.character.to_json()
                          if include_character and self.descriptor.character is not None
                          else None),
        })
        return out

    @classmethod
    def from_json(cls, data) -> "ConstructionResult":
        from .characters import Character

        alg = data["end_algebra"]
        descriptor = InjectiveDescriptor(
            Weight(data["mu"]),
            Character.from_json(data["character"]) if data.get("character") else None,
            TruncatedPolyAlgebra(alg["generators"], alg["cap"]),
            AdmissibleIndex(**data["index"]),
        )
        quantum = data["regime"] == "quantum"
        return cls(
            regime=data["regime"], n=data["n"], p=data["p"], m=data["m"],
            h=data["h"], r=data["r"], digits=list(data["digits"]),
            lambda_factors=[Weight(w) for w in data["lambda_factors"]],
            gamma=Weight(data["gamma"]), mu=Weight(data["mu"]),
            descriptor=descriptor, repdim_lower_bound=data["repdim_lower_bound"],
            l=data.get("l"),
            level_digit=data.get("level_digit") if quantum else None,
            level_factor=Weight(data["level_factor"]) if quantum else None,
        )


def digit_factor(u: int, modulus: int, n: int) -> Weight:
    """``(1+u) eps_1`` if ``u < modulus - 1``, else ``(modulus - n) eps_1 + omega``."""
    if not 0 <= u <= modulus - 1:
        raise PreconditionError(f"digit {u} out of range 0..{modulus - 1}")
    e1 = epsilon(1, n)
    if u < modulus - 1:
        return (1 + u) * e1
    return (modulus - n) * e1 + omega(n)


def _factor_injective(n: int, p: int, m: int, u: int,
                      with_character: bool) -> tuple[Weight, InjectiveDescriptor]:
    P = p**m
    lam = digit_factor(u, P, n)
    if u < P - 1:
        tau, shift = lam, 0
    else:
        # I((P-1)delta + w0 lam) = I((P-1)delta + (P-n) eps_n) (x) D
        tau, shift = lam - omega(n), 1
    if p_adic_breadth(tau, p) >= p:
        raise AssertionError(f"p-adic breadth of {tau} is not < {p}")
    desc = pm_hook_injective(n, p, m, tau[0], with_character)
    desc = determinant_shift(desc, shift)
    if desc.socle_weight != (P - 1) * delta(n) + w0_apply(lam):
        raise AssertionError("factor socle weight mismatch")
    return lam, desc


def construct_classical(params: ClassicalParams, with_character: bool = False) -> ConstructionResult:
    """Build ``mu`` in ``Lambda+(n, r)`` with ``End(I(mu))`` truncated in
    at least ``h`` variables.

    >>> res = construct_classical(ClassicalParams(n=2, p=3, m=1, h=2, r=12))
    >>> res.mu, str(res.end_algebra), res.repdim_lower_bound
    ((8,4), 'k[x1,x2]/(x1^2,x2^2)', 3)
    """
    n, p, m, h, r = params.n, params.p, params.m, params.h, params.r
    P = _check_classical(n, p, m)
    if h < 1:
        raise PreconditionError("need h >= 1")
    threshold = min_r_classical(n, p, m, h)
    if r < threshold:
        raise ThresholdError(r, threshold)

    excess = r - threshold
    digits = []
    for _ in range(h):
        excess, u = divmod(excess, P)
        digits.append(u)
    digits.append(excess)

    lambdas, pieces = [], []
    for u in digits[:h]:
        lam, desc = _factor_injective(n, p, m, u, with_character)
        if not (is_column_regular(lam, P) and lam[0] < P):
            raise AssertionError(f"factor {lam} is not column {P}-regular with b < {P}")
        lambdas.append(lam)
        pieces.append(desc)
    gamma = digits[h] * epsilon(1, n)
    descriptor = tensor_factorization(pieces, p, m, gamma, with_character)
    mu = descriptor.socle_weight

    if degree(mu) != r or not mu.is_partition():
        raise AssertionError(f"constructed {mu} is not in Lambda+({n},{r})")
    if descriptor.end_algebra.generators < h:
        raise AssertionError("admissible index below h")
    return ConstructionResult(
        regime="classical", n=n, p=p, m=m, h=h, r=r, digits=digits,
        lambda_factors=lambdas, gamma=gamma, mu=mu, descriptor=descriptor,
        repdim_lower_bound=h + 1,
    )


def construct_quantum(params: QuantumParams) -> ConstructionResult:
    """Quantum analogue: ``r = (lP-1)|delta| + 1 + u_{-1} + lP s`` with the
    classical construction applied to ``s``.

    Characters are never materialized here.  The generator count of the
    endomorphism algebra is reported as a lower bound (``exact=False``):
    one variable for the level layer plus the classical count.
    """
    n, p, m, h, r, l = params.n, params.p, params.m, params.h, params.r, params.l
    P = _check_classical(n, p, m)
    _check_level(l)
    if h < 1:
        raise PreconditionError("need h >= 1")
    threshold = min_r_quantum(n, p, m, l, h)
    if r < threshold:
        raise ThresholdError(r, threshold)

    modulus = l * P
    s, u_level = divmod(r - ((modulus - 1) * _delta_degree(n) + 1), modulus)
    lam_level = digit_factor(u_level, modulus, n)
    if not (is_column_regular(lam_level, modulus) and lam_level[0] < modulus):
        raise AssertionError(f"level factor {lam_level} is not column {modulus}-regular")
    inner = construct_classical(ClassicalParams(n, p, m, h, s))
    mu = (modulus - 1) * delta(n) + w0_apply(lam_level) + modulus * inner.mu

    if degree(mu) != r or not mu.is_partition():
        raise AssertionError(f"constructed {mu} is not in Lambda+({n},{r})")
    gens = 1 + inner.end_algebra.generators
    descriptor = InjectiveDescriptor(
        mu, None, TruncatedPolyAlgebra(gens, n), AdmissibleIndex(gens, exact=False)
    )
    return ConstructionResult(
        regime="quantum", n=n, p=p, m=m, h=h, r=r, digits=inner.digits,
        lambda_factors=inner.lambda_factors, gamma=inner.gamma, mu=mu,
        descriptor=descriptor, repdim_lower_bound=h + 2, l=l,
        level_digit=u_level, level_factor=lam_level, classical=inner,
    )


__all__ = [
    "PreconditionError", "ThresholdError", "ClassicalParams", "QuantumParams",
    "ConstructionResult", "suggest_m", "min_r_classical", "min_r_quantum",
    "max_h_classical", "max_h_quantum", "construct_classical", "construct_quantum",
    "digit_factor",
]
