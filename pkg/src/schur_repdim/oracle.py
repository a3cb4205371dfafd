"""Brute-force verifiers for the character machinery.

Everything here is computed by a route independent of the tableau-based
:func:`~schur_repdim.characters.weyl_character`: bialternant determinants,
the Weyl dimension product, explicit permutation orbits.  All comparisons
are exact.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial, prod

import sympy

from . import characters as ch
from .weights import (
    Weight,
    brute_force_orbit,
    delta,
    dominance_leq,
    dominant_rep,
    dominant_weights_up_to,
    in_Xm,
    is_column_regular,
    orbit_size,
    p_adic_decompose,
    partitions,
    require_dominant,
    restricted_weights,
    w0_apply,
    weyl_orbit,
)

DEFAULT_SEED = 20240601


@dataclass
class OracleReport:
    identity: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, inputs, expected=None, got=None):
        self.checked += 1
        if not ok:
            self.failures.append({"inputs": _jsonable(inputs),
                                  "expected": _jsonable(expected),
                                  "got": _jsonable(got)})

    def to_json(self) -> dict:
        return {"identity": self.identity, "checked": self.checked,
                "failures": self.failures}

    @classmethod
    def from_json(cls, data) -> "OracleReport":
        return cls(data["identity"], data["checked"], list(data["failures"]))


def _jsonable(x):
    if isinstance(x, ch.Character):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def _det(rows) -> Fraction:
    d = sympy.Matrix(rows).det(method="bareiss")
    return Fraction(int(sympy.numer(d)), int(sympy.denom(d)))


def alternant_eval(a, point) -> Fraction:
    """Schur polynomial at ``point`` as ``det(x_i^(a_j+n-j)) / det(x_i^(n-j))``."""
    a = require_dominant(a, polynomial=True)
    n = len(a)
    xs = [sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in point]
    if len(xs) != n:
        raise ValueError("point has wrong length")
    if len(set(xs)) < n:
        raise ValueError("point entries must be pairwise distinct")
    if any(x == 0 for x in xs):
        raise ValueError("point entries must be nonzero")
    num = _det([[x ** (a[j] + n - 1 - j) for j in range(n)] for x in xs])
    den = _det([[x ** (n - 1 - j) for j in range(n)] for x in xs])
    return num / den


def dimension_via_product(a) -> int:
    """Weyl dimension formula ``prod_{i<j} (a_i - a_j + j - i) / (j - i)``."""
    a = require_dominant(a)
    n = len(a)
    num = prod(a[i] - a[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    q, r = divmod(num, den)
    assert r == 0
    return q


def brute_force_ssyt_count(a, n: int | None = None) -> int:
    """Count SSYT of shape ``a`` with entries ``1..n`` cell by cell."""
    shape = [x for x in require_dominant(a, polynomial=True) if x]
    n = len(a) if n is None else n
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    filling: dict = {}

    def rec(k):
        if k == len(cells):
            return 1
        i, j = cells[k]
        low = 1
        if j > 0:
            low = max(low, filling[(i, j - 1)])
        if i > 0:
            low = max(low, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(low, n + 1):
            filling[(i, j)] = v
            total += rec(k + 1)
        filling.pop((i, j), None)
        return total

    return rec(0)


def random_point(n: int, rng: random.Random, lo: int = 2, hi: int = 50) -> list[Fraction]:
    return [Fraction(x) for x in rng.sample(range(lo, hi + 1), n)]


def verify_chi_against_alternant(a, trials: int, rng: random.Random | None = None,
                                 report: OracleReport | None = None) -> OracleReport:
    rng = rng or random.Random(DEFAULT_SEED)
    report = report or OracleReport("chi_vs_alternant")
    chi = ch.weyl_character(a)
    for _ in range(trials):
        pt = random_point(len(a), rng)
        want = alternant_eval(a, pt)
        got = chi.evaluate(pt)
        report.check(want == got, [list(a), pt], want, got)
    return report


# -- individual identity checks ------------------------------------------

def _check_reconstruction(report, n, max_degree, primes):
    for a in dominant_weights_up_to(max_degree, n):
        for p in primes:
            dec = p_adic_decompose(a, p)
            ok = dec.reconstruct() == a and all(is_column_regular(d, p) for d in dec.digits)
            report.check(ok, [list(a), p], list(a), [list(d) for d in dec.digits])


def _check_orbit_law(report, n, max_degree):
    for a in dominant_weights_up_to(max_degree, n):
        orb = weyl_orbit(a)
        brute = brute_force_orbit(a)
        reps = prod(factorial(list(a).count(v)) for v in set(a))
        report.check(orb == brute and len(orb) * reps == factorial(n), list(a),
                     factorial(n), len(orb) * reps)


def _check_dominance_order(report, n, max_degree, rng, samples=60):
    for r in range(max_degree + 1):
        parts = list(partitions(r, n))
        for _ in range(samples if len(parts) > 1 else 1):
            a, b, c = (rng.choice(parts) for _ in range(3))
            ok = dominance_leq(a, a)
            if dominance_leq(a, b) and dominance_leq(b, a):
                ok &= a == b
            if dominance_leq(a, b) and dominance_leq(b, c):
                ok &= dominance_leq(a, c)
            report.check(ok, [list(a), list(b), list(c)])


def _check_w0(report, n, max_degree):
    for a in dominant_weights_up_to(max_degree, n):
        b = w0_apply(a)
        report.check(sum(b) == sum(a) and b in weyl_orbit(a) and w0_apply(b) == a, list(a))


def _check_remark_xm(report, n, primes, max_pm=9):
    for p in primes:
        m = 1
        while p**m <= max_pm:
            big = p**m
            st = (big - 1) * delta(n)
            for lam in restricted_weights(n, big):
                if in_Xm(lam, p, m):
                    report.check(in_Xm(st + w0_apply(lam), p, m), [list(lam), p, m])
            m += 1


def _check_characters(reports, n, max_degree, rng, trials):
    sym, hw, dim, alt = reports
    perms = list(permutations(range(n)))
    for a in dominant_weights_up_to(max_degree, n):
        chi = ch.weyl_character(a)
        for mu, c in chi.items():
            w = rng.choice(perms)
            moved = Weight(mu[i] for i in w)
            sym.check(chi[moved] == c, [list(a), list(mu), list(w)], c, chi[moved])
        ok = chi[a] == 1 and all(dominance_leq(dominant_rep(mu), a) for mu in chi)
        hw.check(ok, list(a))
        want = dimension_via_product(a)
        dim.check(chi.dimension() == want == brute_force_ssyt_count(a), list(a),
                  want, chi.dimension())
        verify_chi_against_alternant(a, trials, rng, alt)


def _check_brauer_general(report, n, max_degree):
    for da in range(max_degree + 1):
        for lam in partitions(da, n):
            chi = ch.weyl_character(lam)
            for dn in range(max_degree - da + 1):
                for nu in partitions(dn, n):
                    lhs = chi * ch.orbit_sum(nu)
                    rhs = ch.brauer_sum(ch.brauer_expand(lam, nu), n)
                    report.check(lhs == rhs, [list(lam), list(nu)], lhs, rhs)


def _check_brauer_regime(report, n, primes):
    for p in primes:
        st = (p - 1) * delta(n)
        chi = ch.weyl_character(st)
        for lam in restricted_weights(n, p):
            terms = ch.brauer_expand(st, lam)
            reps = [rep for _, rep in terms]
            lhs = chi * ch.orbit_sum(lam)
            rhs = ch.brauer_sum(terms, n)
            ok = (lhs == rhs and len(terms) == orbit_size(lam)
                  and all(s == 1 for s, _ in terms) and len(set(reps)) == len(reps))
            report.check(ok, [list(lam), p], lhs, rhs)


def _check_steinberg_mult(report, n, primes, max_degree):
    small = [a for a in dominant_weights_up_to(min(max_degree, 4), n)]
    for p in primes:
        for a in small:
            for b in small:
                x, y = ch.weyl_character(a), ch.weyl_character(b)
                for k in (p, p * p):
                    got = (x * ch.frobenius_twist(y, k)).dimension()
                    report.check(got == x.dimension() * y.dimension(),
                                 [list(a), list(b), k], x.dimension() * y.dimension(), got)


def _check_twist_hom(report, n, primes, max_degree):
    small = [a for a in dominant_weights_up_to(min(max_degree, 4), n)]
    for p in primes:
        for a in small:
            for b in small:
                x, y = ch.weyl_character(a), ch.orbit_sum(b)
                tw = lambda z: ch.frobenius_twist(z, p)  # noqa: E731
                ok = tw(x * y) == tw(x) * tw(y) and tw(x + y) == tw(x) + tw(y)
                ok &= ch.frobenius_twist(tw(x), p) == ch.frobenius_twist(x, p * p)
                report.check(ok, [list(a), list(b), p])


def run_suite(max_n: int, max_degree: int, p_set, seed: int = DEFAULT_SEED,
              trials: int = 3) -> list[OracleReport]:
    """Run every weight and character identity over ``n <= max_n`` and
    degrees ``<= max_degree``.

    The general Brauer sweep is capped at degree 14 and rank 3 regardless
    of the bounds, since it is quadratic in the number of partitions.
    """
    rng = random.Random(seed)
    names = ["padic_reconstruction", "orbit_size_law", "dominance_partial_order",
             "w0_degree_and_orbit", "xm_steinberg_shift", "w_symmetry",
             "highest_weight", "weyl_dimension_product", "chi_vs_alternant",
             "brauer_identity", "brauer_restricted_regime",
             "steinberg_dimension_multiplicative", "frobenius_twist_homomorphism"]
    reports = {name: OracleReport(name) for name in names}
    for n in range(1, max_n + 1):
        _check_reconstruction(reports["padic_reconstruction"], n, max_degree, p_set)
        _check_orbit_law(reports["orbit_size_law"], n, max_degree)
        _check_dominance_order(reports["dominance_partial_order"], n, max_degree, rng)
        _check_w0(reports["w0_degree_and_orbit"], n, max_degree)
        if n <= 3:
            _check_remark_xm(reports["xm_steinberg_shift"], n, p_set)
        _check_characters([reports["w_symmetry"], reports["highest_weight"],
                           reports["weyl_dimension_product"], reports["chi_vs_alternant"]],
                          n, max_degree, rng, trials)
        if n <= 3:
            _check_brauer_general(reports["brauer_identity"], n, min(max_degree, 14))
            _check_brauer_regime(reports["brauer_restricted_regime"], n, p_set)
        _check_steinberg_mult(reports["steinberg_dimension_multiplicative"], n, p_set, max_degree)
        _check_twist_hom(reports["frobenius_twist_homomorphism"], n, p_set, max_degree)
    return list(reports.values())


__all__ = [
    "OracleReport", "alternant_eval", "dimension_via_product", "brute_force_ssyt_count",
    "verify_chi_against_alternant", "run_suite", "random_point", "DEFAULT_SEED",
]

