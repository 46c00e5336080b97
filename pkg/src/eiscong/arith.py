"""Exact scalar kernel.

Bernoulli numbers and polynomials, Kronecker characters of fundamental
discriminants, character-twisted divisor sums, and p-adic valuations of
rationals.  Everything is computed over ``fractions.Fraction`` / Python
integers; no floating point enters anywhere.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt
from typing import Iterator, Optional

from .errors import (
    IntegralityViolation,
    InvalidDiscriminantResidue,
    NonFundamentalDiscriminant,
)

#: Marker returned by p_valuation(0, p).
INFINITE_VALUATION = math.inf

# Witnesses that make Miller-Rabin deterministic for n < 3.317e24.
_MR_BASES_SMALL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
# Beyond the deterministic range we add further fixed bases; the answer is
# then "probable prime", which is only ever reached for inputs far above
# anything the scanners certify.
_MR_BASES_LARGE = _MR_BASES_SMALL + (41, 43, 47, 53, 59, 61, 67, 71, 73, 79)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (for n < 3.3e24)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_BASES_SMALL if n < _MR_DETERMINISTIC_BOUND else _MR_BASES_LARGE
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes(limit: Optional[int] = None) -> Iterator[int]:
    """Yield primes in increasing order, optionally stopping below ``limit``."""
    yield from (p for p in (2, 3) if limit is None or p < limit)
    c = 5
    step = 2
    while limit is None or c < limit:
        if is_prime(c):
            yield c
        c += step
        step = 6 - step


def _wheel_candidates() -> Iterator[int]:
    # 2, 3 and then the 6k+-1 wheel; composites in the stream are harmless
    # for trial division because their prime factors come first.
    yield 2
    yield 3
    c = 5
    step = 2
    while True:
        yield c
        c += step
        step = 6 - step


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by wheel trial division."""
    if n < 1:
        raise ValueError("factorize expects n >= 1")
    out: dict[int, int] = {}
    for p in _wheel_candidates():
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    ds = [1]
    for p, e in factorize(n).items():
        ds = [d * p**i for d in ds for i in range(e + 1)]
    return sorted(ds)


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("mobius expects n >= 1")
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def squarefree(n: int) -> bool:
    return all(e == 1 for e in factorize(abs(n)).values())


# ---------------------------------------------------------------------------
# Bernoulli numbers
# ---------------------------------------------------------------------------

# B_0, B_2, B_4, ... ; grown on demand under a lock so concurrent first use
# cannot interleave appends.
_BERN_EVEN: list[Fraction] = [Fraction(1)]
_BERN_LOCK = threading.Lock()


def bernoulli(m: int) -> Fraction:
    """The m-th Bernoulli number, convention B_1 = -1/2.

    Computed by the binomial-sum recurrence sum_j C(n+1, j) B_j = 0,
    restricted to even indices (odd ones vanish beyond B_1); all values
    are cached.
    """
    if m < 0:
        raise ValueError("bernoulli expects m >= 0")
    if m == 1:
        return Fraction(-1, 2)
    if m % 2 == 1:
        return Fraction(0)
    k = m // 2
    if k >= len(_BERN_EVEN):
        with _BERN_LOCK:
            while len(_BERN_EVEN) <= k:
                n = 2 * len(_BERN_EVEN)
                acc = Fraction(-(n + 1), 2)  # the j = 1 term, B_1 = -1/2
                for j, b in enumerate(_BERN_EVEN):
                    acc += comb(n + 1, 2 * j) * b
                _BERN_EVEN.append(-acc / (n + 1))
    return _BERN_EVEN[k]


def bernoulli_polynomial(n: int, x: Fraction) -> Fraction:
    """B_n(x) = sum_j C(n, j) B_j x^(n-j), exact."""
    if n < 0:
        raise ValueError("bernoulli_polynomial expects n >= 0")
    x = Fraction(x)
    acc = Fraction(0)
    for j in range(n + 1):
        acc += comb(n, j) * bernoulli(j) * x ** (n - j)
    return acc


# ---------------------------------------------------------------------------
# Kronecker characters
# ---------------------------------------------------------------------------


def is_fundamental_discriminant(D: int) -> bool:
    """Discriminant of a quadratic field: D=1 mod 4 squarefree, or D=4m
    with m=2,3 mod 4 squarefree."""
    if D == 0:
        return False
    if D % 4 == 1:
        return squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and squarefree(m)
    return False


def kronecker_symbol(a: int, n: int) -> int:
    """The Kronecker symbol (a/n) with the standard extension at 2, 0 and
    negative arguments."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    if a == 0:
        return 1 if n in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # (a/2) factor: 0 for even a, else +1 if a = +-1 mod 8, -1 if a = +-3.
    while n % 2 == 0:
        if a % 2 == 0:
            return 0
        n //= 2
        if a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a/n) for odd n > 0 by quadratic reciprocity.
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class KroneckerCharacter:
    """The real character chi_D = (D/.) of a fundamental discriminant D,
    tabulated over one period mod |D|."""

    discriminant: int
    _table: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return abs(self.discriminant)

    def __call__(self, n: int) -> int:
        return self._table[n % self.modulus]


@lru_cache(maxsize=None)
def kronecker_character(D: int) -> KroneckerCharacter:
    if not is_fundamental_discriminant(D):
        raise NonFundamentalDiscriminant(f"{D} is not a fundamental discriminant")
    table = tuple(kronecker_symbol(D, r) for r in range(abs(D)))
    return KroneckerCharacter(D, table)


def kronecker_chi(D: int, n: int) -> int:
    """chi_D(n) for fundamental D."""
    return kronecker_character(D)(n)


# ---------------------------------------------------------------------------
# Generalized Bernoulli numbers and twisted divisor sums
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def generalized_bernoulli(n: int, D: int) -> Fraction:
    """B_{n,chi_D} = f^(n-1) sum_{a=1}^{f} chi_D(a) B_n(a/f), f = |D|."""
    if n < 1:
        raise ValueError("generalized_bernoulli expects n >= 1")
    chi = kronecker_character(D)
    f = abs(D)
    acc = Fraction(0)
    for a in range(1, f + 1):
        c = chi(a)
        if c:
            acc += c * bernoulli_polynomial(n, Fraction(a, f))
    return Fraction(f) ** (n - 1) * acc


def divisor_power_sum(
    m: int,
    N: int,
    char: Optional[KroneckerCharacter] = None,
    star: bool = False,
) -> int:
    """sigma_m(N), or its chi-twists sigma_{m,chi} / sigma*_{m,chi}.

    With a character: star=False sums chi(d) d^m over divisors d, star=True
    sums chi(N/d) d^m.
    """
    if N < 1:
        raise ValueError("divisor_power_sum expects N >= 1")
    if char is None:
        return sum(d**m for d in divisors(N))
    if star:
        return sum(char(N // d) * d**m for d in divisors(N))
    return sum(char(d) * d**m for d in divisors(N))


def g_value(D: int, m: int, N: int) -> int:
    """(sigma_{m,chi_D}(N) - sigma*_{m,chi_D}(N)) / (1 + |chi_D(N)|),
    always an exact integer."""
    chi = kronecker_character(D)
    diff = divisor_power_sum(m, N, chi) - divisor_power_sum(m, N, chi, star=True)
    q, r = divmod(diff, 1 + abs(chi(N)))
    if r:
        raise IntegralityViolation(f"g_value({D}, {m}, {N}) is not integral")
    return q


def fundamental_decomposition(N: int) -> tuple[int, int]:
    """Write N < 0 as D*f^2 with D a fundamental discriminant; unique."""
    if N >= 0 or N % 4 not in (0, 1):
        raise InvalidDiscriminantResidue(f"{N} is not 0 or 1 mod 4 and negative")
    for f in range(isqrt(-N), 0, -1):
        if N % (f * f) == 0 and is_fundamental_discriminant(N // (f * f)):
            return N // (f * f), f
    raise InvalidDiscriminantResidue(f"no fundamental decomposition of {N}")


# ---------------------------------------------------------------------------
# p-adic valuations
# ---------------------------------------------------------------------------


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_valuation(q: Fraction, p: int):
    """v_p of a rational; math.inf for 0."""
    q = Fraction(q)
    if q == 0:
        return INFINITE_VALUATION
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


def is_p_integral(q: Fraction, p: int) -> bool:
    return p_valuation(q, p) >= 0


@dataclass(frozen=True)
class PrimeLocalization:
    """Membership tests for the local ring Z_(p)."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def valuation(self, q: Fraction):
        return p_valuation(q, self.p)

    def is_integral(self, q: Fraction) -> bool:
        return is_p_integral(q, self.p)


# ---------------------------------------------------------------------------
# Rational serialization
# ---------------------------------------------------------------------------


def format_rational(q: Fraction) -> str:
    """"num/den" in lowest terms, denominator positive; integers as "n"."""
    q = Fraction(q)
    return str(q)


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())
