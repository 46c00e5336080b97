"""Mod-p machinery: reduction of expansions, congruence verification and
multiplier solving, divisibility scanners, non-triviality witnesses, and
the cusp-correction construction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from .arith import (
    bernoulli,
    factorize,
    generalized_bernoulli,
    is_fundamental_discriminant,
    is_prime,
    kronecker_character,
    p_valuation,
    primes,
)
from .elliptic import decompose_into_e4_e6
from .errors import (
    AllZeroRhs,
    NonIntegralCoefficient,
    SpaceMismatch,
    WeightMismatch,
    WitnessSearchExhausted,
)
from .expansion import TruncatedExpansion, exp_add, exp_scale, phi_operator
from .hermitian import hermitian_expansion, imag_quad_field
from .siegel import siegel_expansion


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of a coefficient-wise congruence check f = lambda * g mod m."""

    modulus: int
    multiplier: int
    verified: bool
    indices_checked: int
    first_failure: Optional[tuple] = None  # (key string, lhs residue, rhs residue)

    def to_text(self) -> str:
        lines = [
            f"modulus {self.modulus}",
            f"lambda {self.multiplier}",
            f"verified {str(self.verified).lower()}",
            f"indices_checked {self.indices_checked}",
        ]
        if self.first_failure is not None:
            key, lhs, rhs = self.first_failure
            lines.append(f"first_failure {key} {lhs} {rhs}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class WitnessReport:
    """A prime q with chi_K(q) = -1 whose power q^(k-2) is not 1 mod p."""

    q: int
    chi_value: int
    pow_residue: int
    method: str  # "direct-search" or "crt-construction"


def _residue(value: Fraction, modulus: int, key):
    num, den = value.numerator, value.denominator
    if gcd(den, modulus) != 1:
        raise NonIntegralCoefficient(key, modulus)
    return num * pow(den, -1, modulus) % modulus


def reduce_mod_p(f: TruncatedExpansion, modulus: int) -> dict:
    """Reduce every in-bound coefficient to [0, modulus); raises
    NonIntegralCoefficient at the first index whose denominator meets the
    modulus."""
    lat = f.lattice
    out = {}
    for idx in sorted(lat.enumerate_all(f.trace_bound), key=lat.sort_key):
        out[idx] = _residue(f.coefficient(idx), modulus, lat.key_string(idx))
    return out


def _check_compatible(f: TruncatedExpansion, g: TruncatedExpansion):
    if f.lattice.space != g.lattice.space or f.lattice.disc != g.lattice.disc:
        raise SpaceMismatch(f"{f.lattice} vs {g.lattice}")
    if f.weight != g.weight:
        raise WeightMismatch(f"{f.weight} vs {g.weight}")


def verify_congruence(
    f: TruncatedExpansion, g: TruncatedExpansion, modulus: int, multiplier: int
) -> CongruenceReport:
    """Check f = multiplier * g mod modulus at every in-bound index."""
    _check_compatible(f, g)
    lat = f.lattice
    bound = min(f.trace_bound, g.trace_bound)
    multiplier %= modulus
    checked = 0
    failure = None
    for idx in sorted(lat.enumerate_all(bound), key=lat.sort_key):
        key = lat.key_string(idx)
        lhs = _residue(f.coefficient(idx), modulus, key)
        rhs = _residue(g.coefficient(idx), modulus, key) * multiplier % modulus
        checked += 1
        if lhs != rhs and failure is None:
            failure = (key, lhs, rhs)
    return CongruenceReport(modulus, multiplier, failure is None, checked, failure)


def solve_lambda(
    f: TruncatedExpansion, g: TruncatedExpansion, modulus: int
) -> CongruenceReport:
    """Pick the multiplier from the first index (canonical order) where g
    does not vanish mod modulus, then verify everywhere."""
    _check_compatible(f, g)
    lat = f.lattice
    bound = min(f.trace_bound, g.trace_bound)
    for idx in sorted(lat.enumerate_all(bound), key=lat.sort_key):
        key = lat.key_string(idx)
        rhs = _residue(g.coefficient(idx), modulus, key)
        if rhs == 0:
            continue
        if gcd(rhs, modulus) != 1:
            raise ValueError(
                f"reference coefficient at {key} is not invertible mod {modulus}"
            )
        lam = _residue(f.coefficient(idx), modulus, key) * pow(rhs, -1, modulus)
        return verify_congruence(f, g, modulus, lam % modulus)
    raise AllZeroRhs(f"rhs vanishes identically mod {modulus}")


def cusp_correction(g: TruncatedExpansion) -> TruncatedExpansion:
    """Subtract the Eisenstein polynomial matching the boundary image:
    returns g - Q(E4, E6) where Phi(g) = Q(E4, E6) in degree 1; the result
    has vanishing Phi up to the truncation."""
    q_poly = decompose_into_e4_e6(phi_operator(g), g.weight)
    bound = g.trace_bound
    if g.lattice.space == "siegel":
        e4 = siegel_expansion("E", 4, bound)
        e6 = siegel_expansion("E", 6, bound)
    elif g.lattice.space == "hermitian":
        e4 = hermitian_expansion("E", g.lattice.disc, 4, bound)
        e6 = hermitian_expansion("E", g.lattice.disc, 6, bound)
    else:
        raise ValueError("cusp correction expects a degree-2 expansion")
    return exp_add(g, exp_scale(-1, q_poly.evaluate(e4, e6)))


# ---------------------------------------------------------------------------
# Scanners
# ---------------------------------------------------------------------------


def irregular_pairs(p_max: int) -> list[tuple[int, int]]:
    """All (p, m) with p <= p_max prime, m even, 1 < m < p and p dividing
    the numerator of B_m."""
    if p_max < 3:
        raise ValueError("p_max must be >= 3")
    out = []
    for p in primes(p_max + 1):
        for m in range(2, p - 2, 2):
            if bernoulli(m).numerator % p == 0:
                out.append((p, m))
    return out


def _prime_factors_bounded(n: int, bound: int) -> set[int]:
    """Prime factors of |n| found by trial division below ``bound``, plus a
    leftover cofactor when it certifies prime.  Composite leftovers beyond
    the bound are dropped."""
    n = abs(n)
    found: set[int] = set()
    if n <= 1:
        return found
    candidates = [2, 3]

    def wheel():
        yield from candidates
        c = 5
        step = 2
        while True:
            yield c
            c += step
            step = 6 - step

    for c in wheel():
        if c > bound or c * c > n:
            break
        if n % c == 0:
            found.add(c)
            while n % c == 0:
                n //= c
            if n == 1:
                break
            if is_prime(n):
                found.add(n)
                n = 1
                break
    if n > 1 and is_prime(n):
        found.add(n)
    return found


def condition_b_primes(
    disc: int, k_max: int, *, k_min: int = 4, trial_bound: int = 10**7
) -> dict[int, list[int]]:
    """For each even weight k, the primes p > k + 1 dividing the numerator
    of the (k-1)-th generalized Bernoulli number of the field character."""
    out: dict[int, list[int]] = {}
    for k in range(k_min, k_max + 1, 2):
        num = generalized_bernoulli(k - 1, disc).numerator
        ps = _prime_factors_bounded(num, trial_bound)
        out[k] = sorted(p for p in ps if p > k + 1)
    return out


def condition_a_check(disc: int, p: int) -> bool:
    """True iff p divides neither the 3rd nor the 5th generalized Bernoulli
    number of the field character."""
    return (
        p_valuation(generalized_bernoulli(3, disc), p) <= 0
        and p_valuation(generalized_bernoulli(5, disc), p) <= 0
    )


def _primitive_root(p: int) -> int:
    fac = factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise ValueError(f"no primitive root mod {p}")


def nontriviality_witness(
    disc: int,
    k: int,
    p: int,
    *,
    direct_limit: int = 10**5,
    progression_cap: int = 10**5,
) -> WitnessReport:
    """A prime q with chi(q) = -1 and q^(k-2) not 1 mod p.

    Searches small primes first (reproducible smallest witness); falls back
    to the constructive route: a primitive root mod p glued by CRT to
    -1 mod |disc|, then a prime scan along that arithmetic progression.
    """
    if not (k - 2 < p - 1):
        raise ValueError("requires k - 2 < p - 1")
    if disc % p == 0:
        raise ValueError("requires p not dividing the discriminant")
    chi = kronecker_character(disc)
    for q in primes(direct_limit):
        if chi(q) == -1:
            r = pow(q, k - 2, p)
            if r != 1:
                return WitnessReport(q, -1, r, "direct-search")
    # constructive fallback
    alpha = _primitive_root(p)
    m = abs(disc)
    # a = alpha mod p, a = -1 mod m (p and m are coprime here)
    a = (alpha + p * ((-1 - alpha) * pow(p, -1, m) % m)) % (p * m)
    step = p * m
    for n in range(1, progression_cap + 1):
        q = a + step * n
        if is_prime(q):
            r = pow(q, k - 2, p)
            if chi(q) == -1 and r != 1:
                return WitnessReport(q, -1, r, "crt-construction")
    raise WitnessSearchExhausted(
        f"no witness within {progression_cap} progression steps"
    )


def bruinier_search(k: int, p: int, max_abs_disc: int) -> Optional[int]:
    """Smallest |D0| with D0 < 0 fundamental and p not dividing the
    numerator of the (k-1)-th generalized Bernoulli number of chi_D0."""
    for n in range(3, max_abs_disc + 1):
        d0 = -n
        if not is_fundamental_discriminant(d0):
            continue
        if generalized_bernoulli(k - 1, d0).numerator % p != 0:
            return d0
    return None
