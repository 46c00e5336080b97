"""Degree-2 Hermitian Fourier indices over the nine class-number-one
imaginary quadratic fields, with the closed-form Eisenstein coefficients
and the associated cusp forms.

An index is (a, x, y, c): diagonal a, c and off-diagonal entry beta/sqrt(d)
with beta = x + y*omega, omega = (d + sqrt(d))/2 the integral basis
generator.  Positivity is |d| a c >= N(beta) for the norm form
N(x, y) = x^2 + d x y + y^2 (d^2 - d)/4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

from .arith import (
    bernoulli,
    divisor_power_sum,
    divisors,
    g_value,
    generalized_bernoulli,
    kronecker_character,
)
from .errors import InvalidWeight, NotPositiveSemidefinite, UnsupportedFieldForm
from .expansion import TruncatedExpansion, exp_add, exp_multiply, exp_scale

CLASS_NUMBER_ONE_DISCRIMINANTS = (-3, -4, -7, -8, -11, -19, -43, -67, -163)


@dataclass(frozen=True)
class ImagQuadField:
    """Imaginary quadratic field of class number one, by discriminant."""

    disc: int

    def __post_init__(self):
        if self.disc not in CLASS_NUMBER_ONE_DISCRIMINANTS:
            raise ValueError(
                f"{self.disc} is not a class-number-one field discriminant"
            )

    def norm(self, x: int, y: int) -> int:
        d = self.disc
        return x * x + d * x * y + (d * d - d) // 4 * y * y

    @property
    def character(self):
        return kronecker_character(self.disc)


@lru_cache(maxsize=None)
def imag_quad_field(disc: int) -> ImagQuadField:
    return ImagQuadField(disc)


class HermitianLattice:
    """Hermitian 2x2 indices (a, x, y, c) for a fixed field."""

    space = "hermitian"
    zero = (0, 0, 0, 0)

    def __init__(self, field: ImagQuadField):
        self.field = field
        self.disc = field.disc

    def trace(self, h):
        return h[0] + h[3]

    def is_psd(self, h):
        a, x, y, c = h
        return a >= 0 and c >= 0 and -self.disc * a * c >= self.field.norm(x, y)

    def sub(self, h, s):
        return (h[0] - s[0], h[1] - s[1], h[2] - s[2], h[3] - s[3])

    def _norm_points(self, bound):
        # lattice points with N(x, y) <= bound; the norm form is positive
        # definite so y is bounded by the minimum of the form on y-lines
        d = self.disc
        out = []
        ymax = isqrt(4 * bound // -d) if bound >= 0 else -1
        for y in range(-ymax, ymax + 1):
            r = 4 * bound + d * y * y
            if r < 0:
                continue
            s = isqrt(r)
            lo = (-d * y - s) // 2 - 1
            hi = (-d * y + s) // 2 + 1
            for x in range(lo, hi + 1):
                if self.field.norm(x, y) <= bound:
                    out.append((x, y))
        return out

    def enumerate_all(self, bound):
        out = []
        for a in range(bound + 1):
            for c in range(bound - a + 1):
                for x, y in self._norm_points(-self.disc * a * c):
                    out.append((a, x, y, c))
        return out

    def enumerate_summands(self, h):
        a, x, y, c = h
        d = self.disc
        out = []
        for a1 in range(a + 1):
            for c1 in range(c + 1):
                rem = -d * (a - a1) * (c - c1)
                for x1, y1 in self._norm_points(-d * a1 * c1):
                    if self.field.norm(x - x1, y - y1) <= rem:
                        out.append((a1, x1, y1, c1))
        return out

    def sort_key(self, h):
        return (h[0] + h[3], h)

    def key_string(self, h):
        return f"{h[0]},{h[1]},{h[2]},{h[3]}"

    def parse_key(self, s):
        parts = s.split(",")
        if len(parts) != 4:
            raise ValueError(f"bad hermitian key {s!r}")
        return tuple(int(p) for p in parts)

    def diag_embed(self, t):
        return (t, 0, 0, 0)

    def __repr__(self):
        return f"HermitianLattice(disc={self.disc})"


@lru_cache(maxsize=None)
def hermitian_lattice(disc: int) -> HermitianLattice:
    return HermitianLattice(imag_quad_field(disc))


def det_scaled(field: ImagQuadField, h) -> int:
    """|d| det(H) = |d| a c - N(beta); an integer by construction."""
    a, x, y, c = h
    return -field.disc * a * c - field.norm(x, y)


def content(h) -> int:
    if h == (0, 0, 0, 0):
        raise ValueError("content of the zero index is undefined")
    return gcd(gcd(h[0], h[3]), gcd(h[1], h[2]))


def rank(field: ImagQuadField, h) -> int:
    if h == (0, 0, 0, 0):
        return 0
    return 1 if det_scaled(field, h) == 0 else 2


def _check(field: ImagQuadField, k: int, h):
    if k < 4 or k % 2 == 1:
        raise InvalidWeight(f"even weight >= 4 required, got {k}")
    if not hermitian_lattice(field.disc).is_psd(h):
        raise NotPositiveSemidefinite(f"{h} is not psd over disc {field.disc}")


def hermitian_g_coefficient(field: ImagQuadField, k: int, h) -> Fraction:
    """Coefficient of the Bernoulli-normalized Eisenstein series: integral
    of rank 2, where it is a plain divisor sum of integer values."""
    _check(field, k, h)
    d = field.disc
    if h == (0, 0, 0, 0):
        return bernoulli(k) * generalized_bernoulli(k - 1, d) / (4 * k * (k - 1))
    det = det_scaled(field, h)
    eps = content(h)
    if det == 0:
        return -generalized_bernoulli(k - 1, d) / (2 * k - 2) * divisor_power_sum(
            k - 1, eps
        )
    total = 0
    for e in divisors(eps):
        total += e ** (k - 1) * g_value(d, k - 2, det // (e * e))
    return Fraction(total)


def hermitian_e_coefficient(field: ImagQuadField, k: int, h) -> Fraction:
    """Coefficient of E_{k,K}, normalized to constant term 1."""
    _check(field, k, h)
    d = field.disc
    if h == (0, 0, 0, 0):
        return Fraction(1)
    det = det_scaled(field, h)
    eps = content(h)
    if det == 0:
        return Fraction(-2 * k) / bernoulli(k) * divisor_power_sum(k - 1, eps)
    total = 0
    for e in divisors(eps):
        total += e ** (k - 1) * g_value(d, k - 2, det // (e * e))
    return Fraction(4 * k * (k - 1)) / (
        bernoulli(k) * generalized_bernoulli(k - 1, d)
    ) * total


@lru_cache(maxsize=None)
def hermitian_expansion(
    form: str, disc: int, k: int, trace_bound: int
) -> TruncatedExpansion:
    """Truncated expansion of G_{k,K} or E_{k,K}."""
    if form not in ("G", "E"):
        raise ValueError(f"form must be 'G' or 'E', got {form!r}")
    field = imag_quad_field(disc)
    lat = hermitian_lattice(disc)
    coeff = hermitian_g_coefficient if form == "G" else hermitian_e_coefficient
    coeffs = {h: coeff(field, k, h) for h in lat.enumerate_all(trace_bound)}
    return TruncatedExpansion(lat, k, trace_bound, coeffs)


# (name, disc) -> (weight, leading rational, [(coefficient, [factor weights])])
# Each cusp form is a rational multiple of a difference of Eisenstein
# products, exactly as constructed for these two fields.
_CUSP_WEIGHTS = {("CHI8", -4): 8, ("F10", -4): 10, ("F10", -3): 10, ("F12", -3): 12}


@lru_cache(maxsize=None)
def hermitian_cusp_form(name: str, disc: int, trace_bound: int) -> TruncatedExpansion:
    """The cusp forms CHI8 (disc -4), F10 (disc -3 or -4), F12 (disc -3)."""
    if (name, disc) not in _CUSP_WEIGHTS:
        raise UnsupportedFieldForm(f"no cusp form {name!r} over disc {disc}")

    def eis(k):
        return hermitian_expansion("E", disc, k, trace_bound)

    if name == "CHI8":
        e4 = eis(4)
        diff = exp_add(eis(8), exp_scale(-1, exp_multiply(e4, e4)))
        return exp_scale(Fraction(-61, 230400), diff)
    if name == "F10":
        diff = exp_add(eis(10), exp_scale(-1, exp_multiply(eis(4), eis(6))))
        front = Fraction(-277, 2419200) if disc == -4 else Fraction(-809, 21772800)
        return exp_scale(front, diff)
    # F12 over disc -3
    e4 = eis(4)
    e6 = eis(6)
    e4cubed = exp_multiply(exp_multiply(e4, e4), e4)
    e6sq = exp_multiply(e6, e6)
    comb = exp_add(
        eis(12),
        exp_add(
            exp_scale(Fraction(-441, 691), e4cubed),
            exp_scale(Fraction(-250, 691), e6sq),
        ),
    )
    return exp_scale(Fraction(-1276277, 36578304000), comb)
