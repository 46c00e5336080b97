"""Degree-1 q-expansions: Eisenstein series, Delta / tau, and the exact
decomposition of a level-1 form into E4^a E6^b monomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import bernoulli, divisor_power_sum
from .errors import InvalidWeight, NotInSpace
from .expansion import (
    ELLIPTIC,
    TruncatedExpansion,
    constant_one,
    exp_add,
    exp_multiply,
    exp_scale,
    zero_expansion,
)


def dim_level_one(k: int) -> int:
    """dim M_k(SL2(Z)) by the classical formula."""
    if k < 0 or k % 2 == 1:
        return 0
    if k % 12 == 2:
        return k // 12
    return k // 12 + 1


@lru_cache(maxsize=None)
def elliptic_eisenstein(k: int, n_max: int) -> TruncatedExpansion:
    """E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, truncated at n_max."""
    if k < 4 or k % 2 == 1:
        raise InvalidWeight(f"elliptic Eisenstein series needs even k >= 4, got {k}")
    scale = Fraction(-2 * k) / bernoulli(k)
    coeffs = {0: Fraction(1)}
    for n in range(1, n_max + 1):
        coeffs[n] = scale * divisor_power_sum(k - 1, n)
    return TruncatedExpansion(ELLIPTIC, k, n_max, coeffs)


@lru_cache(maxsize=None)
def delta_expansion(n_max: int) -> TruncatedExpansion:
    """Delta = (E4^3 - E6^2) / 1728."""
    e4 = elliptic_eisenstein(4, n_max)
    e6 = elliptic_eisenstein(6, n_max)
    num = exp_add(exp_multiply(exp_multiply(e4, e4), e4),
                  exp_scale(-1, exp_multiply(e6, e6)))
    return exp_scale(Fraction(1, 1728), num)


def ramanujan_tau(n: int) -> Fraction:
    return delta_expansion(n).coefficient(n)


@dataclass(frozen=True)
class IsobaricPolynomial:
    """Polynomial in (E4, E6) with every monomial of total weight k:
    terms maps (a, b) with 4a + 6b = k to its coefficient."""

    weight: int
    terms: tuple  # sorted tuple of ((a, b), Fraction)

    def __post_init__(self):
        for (a, b), _ in self.terms:
            if 4 * a + 6 * b != self.weight:
                raise ValueError(f"monomial ({a},{b}) has weight {4*a+6*b}, "
                                 f"expected {self.weight}")

    @staticmethod
    def from_dict(weight: int, coeffs: dict) -> "IsobaricPolynomial":
        terms = tuple(sorted(
            ((ab, Fraction(c)) for ab, c in coeffs.items() if c != 0),
            key=lambda t: (-t[0][0], t[0][1]),
        ))
        return IsobaricPolynomial(weight, terms)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, e4: TruncatedExpansion, e6: TruncatedExpansion) -> TruncatedExpansion:
        """Evaluate on weight-4 / weight-6 expansions of any space."""
        bound = min(e4.trace_bound, e6.trace_bound)
        lat = e4.lattice
        acc = zero_expansion(lat, self.weight, bound)
        for (a, b), c in self.terms:
            mono = constant_one(lat, bound)
            for _ in range(a):
                mono = exp_multiply(mono, e4)
            for _ in range(b):
                mono = exp_multiply(mono, e6)
            acc = exp_add(acc, exp_scale(c, mono))
        return acc


def isobaric_monomials(k: int) -> list[tuple[int, int]]:
    """All (a, b) with 4a + 6b = k, ordered by decreasing a."""
    return [(a, (k - 4 * a) // 6)
            for a in range(k // 4, -1, -1)
            if (k - 4 * a) % 6 == 0]


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve the (possibly overdetermined) system rows*x = rhs exactly;
    raises NotInSpace when inconsistent."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pr = aug[r]
        inv = 1 / pr[col]
        aug[r] = [v * inv for v in pr]
        for i in range(m):
            if i != r and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [v - factor * w for v, w in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            raise NotInSpace("linear system is inconsistent")
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x


def decompose_into_e4_e6(f: TruncatedExpansion, k: int) -> IsobaricPolynomial:
    """Write a degree-1 weight-k expansion as Q(E4, E6); the residual must
    vanish identically up to the truncation."""
    if f.lattice.space != "elliptic":
        raise ValueError("decomposition expects a degree-1 expansion")
    if f.weight != k:
        raise ValueError(f"expansion has weight {f.weight}, expected {k}")
    monos = isobaric_monomials(k)
    n_max = f.trace_bound
    if f.is_zero() and not monos:
        return IsobaricPolynomial(k, ())
    if n_max + 1 < len(monos):
        raise ValueError(
            f"trace bound {n_max} too small to determine {len(monos)} monomials"
        )
    e4 = elliptic_eisenstein(4, n_max)
    e6 = elliptic_eisenstein(6, n_max)
    columns = []
    for a, b in monos:
        mono = constant_one(ELLIPTIC, n_max)
        for _ in range(a):
            mono = exp_multiply(mono, e4)
        for _ in range(b):
            mono = exp_multiply(mono, e6)
        columns.append([mono.coefficient(n) for n in range(n_max + 1)])
    rows = [[columns[j][n] for j in range(len(monos))] for n in range(n_max + 1)]
    rhs = [f.coefficient(n) for n in range(n_max + 1)]
    sol = _solve_exact(rows, rhs)
    # residual check over every available coefficient
    for n in range(n_max + 1):
        if sum(sol[j] * columns[j][n] for j in range(len(monos))) != rhs[n]:
            raise NotInSpace(f"residual does not vanish at q^{n}")
    return IsobaricPolynomial.from_dict(
        k, {monos[j]: sol[j] for j in range(len(monos))}
    )
