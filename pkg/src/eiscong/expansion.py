"""Truncated Fourier expansions over an abstract psd lattice index.

A lattice object supplies index enumeration, summand decomposition and the
canonical ordering; expansions are finite index -> Fraction maps truncated
at a trace bound.  Multiplication enumerates psd summand pairs, which is
exact inside the truncation because psd summands cannot exceed the target
trace.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .arith import format_rational, parse_rational
from .errors import (
    NotPositiveSemidefinite,
    OutOfTruncation,
    ParseError,
    SpaceMismatch,
    WeightMismatch,
)


class EllipticLattice:
    """Degree-1 index lattice: t in Z>=0, the classical q-expansion index."""

    space = "elliptic"
    disc = None
    zero = 0

    def trace(self, t):
        return t

    def is_psd(self, t):
        return isinstance(t, int) and t >= 0

    def sub(self, t, s):
        return t - s

    def enumerate_all(self, bound):
        return list(range(bound + 1))

    def enumerate_summands(self, t):
        return list(range(t + 1))

    def sort_key(self, t):
        return (t, (t,))

    def key_string(self, t):
        return str(t)

    def parse_key(self, s):
        return int(s)

    def __repr__(self):
        return "EllipticLattice()"


ELLIPTIC = EllipticLattice()


def _same_lattice(a, b):
    return a.space == b.space and a.disc == b.disc


class TruncatedExpansion:
    """Finite Fourier expansion: map from lattice index to Fraction.

    Zero coefficients are never stored; lookups beyond the trace bound raise
    OutOfTruncation rather than returning a silent zero.
    """

    __slots__ = ("lattice", "weight", "trace_bound", "coeffs")

    def __init__(self, lattice, weight: int, trace_bound: int, coeffs: Mapping):
        if trace_bound < 0:
            raise ValueError("trace_bound must be >= 0")
        clean = {}
        for idx, val in coeffs.items():
            val = Fraction(val)
            if val == 0:
                continue
            if not lattice.is_psd(idx):
                raise NotPositiveSemidefinite(f"index {idx} is not psd")
            if lattice.trace(idx) > trace_bound:
                raise OutOfTruncation(f"index {idx} exceeds trace bound {trace_bound}")
            clean[idx] = val
        self.lattice = lattice
        self.weight = weight
        self.trace_bound = trace_bound
        self.coeffs = clean

    def coefficient(self, idx) -> Fraction:
        if not self.lattice.is_psd(idx):
            raise NotPositiveSemidefinite(f"index {idx} is not psd")
        if self.lattice.trace(idx) > self.trace_bound:
            raise OutOfTruncation(
                f"index {idx} is beyond trace bound {self.trace_bound}"
            )
        return self.coeffs.get(idx, Fraction(0))

    def support(self) -> list:
        return sorted(self.coeffs, key=self.lattice.sort_key)

    def is_zero(self) -> bool:
        return not self.coeffs

    def restrict(self, trace_bound: int) -> "TruncatedExpansion":
        if trace_bound > self.trace_bound:
            raise OutOfTruncation("cannot extend a truncated expansion")
        kept = {
            i: v
            for i, v in self.coeffs.items()
            if self.lattice.trace(i) <= trace_bound
        }
        return TruncatedExpansion(self.lattice, self.weight, trace_bound, kept)

    def __eq__(self, other):
        if not isinstance(other, TruncatedExpansion):
            return NotImplemented
        return (
            _same_lattice(self.lattice, other.lattice)
            and self.weight == other.weight
            and self.trace_bound == other.trace_bound
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash(
            (self.lattice.space, self.lattice.disc, self.weight, self.trace_bound)
        )

    def __add__(self, other):
        return exp_add(self, other)

    def __sub__(self, other):
        return exp_add(self, exp_scale(-1, other))

    def __mul__(self, other):
        if isinstance(other, TruncatedExpansion):
            return exp_multiply(self, other)
        return exp_scale(other, self)

    __rmul__ = __mul__

    def __repr__(self):
        tag = self.lattice.space
        if self.lattice.disc is not None:
            tag += f"[{self.lattice.disc}]"
        return (
            f"<TruncatedExpansion {tag} weight={self.weight} "
            f"bound={self.trace_bound} terms={len(self.coeffs)}>"
        )


def zero_expansion(lattice, weight, trace_bound) -> TruncatedExpansion:
    return TruncatedExpansion(lattice, weight, trace_bound, {})


def constant_one(lattice, trace_bound) -> TruncatedExpansion:
    return TruncatedExpansion(lattice, 0, trace_bound, {lattice.zero: Fraction(1)})


def exp_add(f: TruncatedExpansion, g: TruncatedExpansion) -> TruncatedExpansion:
    if not _same_lattice(f.lattice, g.lattice):
        raise SpaceMismatch(f"{f.lattice} vs {g.lattice}")
    if f.weight != g.weight:
        raise WeightMismatch(f"{f.weight} vs {g.weight}")
    bound = min(f.trace_bound, g.trace_bound)
    coeffs: dict = {}
    for idx in set(f.coeffs) | set(g.coeffs):
        if f.lattice.trace(idx) > bound:
            continue
        coeffs[idx] = f.coeffs.get(idx, 0) + g.coeffs.get(idx, 0)
    return TruncatedExpansion(f.lattice, f.weight, bound, coeffs)


def exp_scale(c, f: TruncatedExpansion) -> TruncatedExpansion:
    c = Fraction(c)
    return TruncatedExpansion(
        f.lattice,
        f.weight,
        f.trace_bound,
        {idx: c * v for idx, v in f.coeffs.items()},
    )


def exp_multiply(f: TruncatedExpansion, g: TruncatedExpansion) -> TruncatedExpansion:
    if not _same_lattice(f.lattice, g.lattice):
        raise SpaceMismatch(f"{f.lattice} vs {g.lattice}")
    lat = f.lattice
    bound = min(f.trace_bound, g.trace_bound)
    coeffs: dict = {}
    for t in lat.enumerate_all(bound):
        acc = Fraction(0)
        for s in lat.enumerate_summands(t):
            a = f.coeffs.get(s)
            if a:
                b = g.coeffs.get(lat.sub(t, s))
                if b:
                    acc += a * b
        if acc:
            coeffs[t] = acc
    return TruncatedExpansion(lat, f.weight + g.weight, bound, coeffs)


def phi_operator(f: TruncatedExpansion) -> TruncatedExpansion:
    """Restrict a degree-2 expansion to the boundary: the q-series whose
    t-th coefficient sits at the index diag(t, 0)."""
    if f.lattice.space == "elliptic":
        raise ValueError("phi_operator expects a degree-2 expansion")
    coeffs = {}
    for t in range(f.trace_bound + 1):
        v = f.coeffs.get(f.lattice.diag_embed(t))
        if v:
            coeffs[t] = v
    return TruncatedExpansion(ELLIPTIC, f.weight, f.trace_bound, coeffs)


# ---------------------------------------------------------------------------
# Canonical text format
# ---------------------------------------------------------------------------

_SENTINEL = "coefficients"


def exp_serialize(f: TruncatedExpansion) -> str:
    """Byte-deterministic canonical text form of an expansion."""
    lines = [f"space {f.lattice.space}"]
    if f.lattice.disc is not None:
        lines.append(f"disc {f.lattice.disc}")
    lines.append(f"weight {f.weight}")
    lines.append(f"trace_bound {f.trace_bound}")
    lines.append(_SENTINEL)
    for idx in f.support():
        lines.append(f"{f.lattice.key_string(idx)} {format_rational(f.coeffs[idx])}")
    return "\n".join(lines) + "\n"


def lattice_for(space: str, disc=None):
    if space == "elliptic":
        return ELLIPTIC
    if space == "siegel":
        from .siegel import SIEGEL

        return SIEGEL
    if space == "hermitian":
        from .hermitian import hermitian_lattice

        if disc is None:
            raise ValueError("hermitian space needs a discriminant")
        return hermitian_lattice(disc)
    raise ValueError(f"unknown space {space!r}")


def exp_parse(text: str) -> TruncatedExpansion:
    header: dict[str, str] = {}
    lines = text.splitlines()
    body_start = None
    for i, line in enumerate(lines):
        line = line.strip()
        if not line:
            continue
        if line == _SENTINEL:
            body_start = i + 1
            break
        parts = line.split(None, 1)
        if len(parts) != 2:
            raise ParseError(i + 1, f"malformed header line {line!r}")
        header[parts[0]] = parts[1]
    if body_start is None:
        raise ParseError(len(lines), "missing 'coefficients' sentinel")
    try:
        space = header["space"]
        weight = int(header["weight"])
        bound = int(header["trace_bound"])
    except KeyError as exc:
        raise ParseError(1, f"missing header field {exc}") from None
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None
    disc = int(header["disc"]) if "disc" in header else None
    try:
        lat = lattice_for(space, disc)
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None
    coeffs = {}
    for off, line in enumerate(lines[body_start:]):
        lineno = body_start + off + 1
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"malformed coefficient line {line!r}")
        try:
            idx = lat.parse_key(parts[0])
            val = parse_rational(parts[1])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(lineno, str(exc)) from None
        if idx in coeffs:
            raise ParseError(lineno, f"duplicate key {parts[0]}")
        coeffs[idx] = val
    try:
        return TruncatedExpansion(lat, weight, bound, coeffs)
    except (NotPositiveSemidefinite, OutOfTruncation) as exc:
        raise ParseError(body_start, str(exc)) from None
