"""Jet-equation generators.

The m-jet space of a hypersurface f = 0 is cut out by the coefficients
f^(0)..f^(m) of the expansion of f at a generic truncated power series.
This module produces those coefficients for the two surfaces under study
(xy - z^(n+1) and x^2 - y^2*z + z^3), their shifted variants where each
coordinate series starts at a prescribed t-power, the combinatorial index
sets behind the closed formula for shifted coefficients, and the reindexed
polynomials that describe jet equations after splitting off a ladder of
coordinate hyperplanes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .poly import (
    Polynomial,
    var_code,
    var_family,
    var_index,
    substitute_series,
    X,
    Y,
    Z,
)

# ---------------------------------------------------------------------------
# surfaces


@dataclass(frozen=True)
class Surface:
    """Either the A-series surface xy - z^(n+1) or the D4 surface."""

    kind: str  # "An" | "D4"
    n: int | None = None

    def __post_init__(self):
        if self.kind == "An":
            if self.n is None or self.n < 1:
                raise ValueError("A-series surfaces need n >= 1")
        elif self.kind == "D4":
            if self.n is not None:
                raise ValueError("the D4 surface takes no parameter")
        else:
            raise ValueError(f"unknown surface kind {self.kind!r}")

    def ambient_polynomial(self) -> Polynomial:
        x0 = Polynomial.variable(var_code(X, 0))
        y0 = Polynomial.variable(var_code(Y, 0))
        z0 = Polynomial.variable(var_code(Z, 0))
        if self.kind == "An":
            return x0 * y0 - z0 ** (self.n + 1)
        return x0**2 - y0**2 * z0 + z0**3

    @property
    def label(self) -> str:
        return f"A{self.n}" if self.kind == "An" else "D4"


def an_surface(n: int) -> Surface:
    return Surface("An", n)


def d4_surface() -> Surface:
    return Surface("D4")


# ---------------------------------------------------------------------------
# expansions


@dataclass(frozen=True)
class JetExpansion:
    """The coefficients of t^0..t^m of f expanded at a (shifted) generic jet."""

    surface: Surface
    order: int
    shifts: tuple[int, int, int]
    coefficients: tuple[Polynomial, ...] = field(repr=False)

    def __getitem__(self, j: int) -> Polynomial:
        return self.coefficients[j]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coefficients]


def expand_ambient(f: Polynomial, m: int, shifts: tuple[int, int, int] = (0, 0, 0)):
    """Coefficient polynomials of f at the generic jet whose x/y/z series
    start at the given t-powers.  The workhorse behind everything below."""
    p, q, r = shifts
    zero = Polynomial.zero()
    series = {}
    for family, start in ((X, p), (Y, q), (Z, r)):
        series[family] = [
            zero if i < start else Polynomial.variable(var_code(family, i))
            for i in range(m + 1)
        ]
    return substitute_series(f, series[X], series[Y], series[Z], m)


@lru_cache(maxsize=None)
def jet_coeffs(surface: Surface, m: int) -> JetExpansion:
    """[f^(0), ..., f^(m)] for the surface equation."""
    if m < 0:
        raise ValueError("jet order must be nonnegative")
    coeffs = expand_ambient(surface.ambient_polynomial(), m)
    return JetExpansion(surface, m, (0, 0, 0), tuple(coeffs))


@lru_cache(maxsize=None)
def jet_coeffs_shifted(surface: Surface, m: int, p: int, q: int, r: int) -> JetExpansion:
    """Coefficients of f at the jet with x starting at t^p, y at t^q, z at t^r."""
    if min(p, q, r) < 0:
        raise ValueError("shifts must be nonnegative")
    if max(p, q, r) > m:
        raise ValueError(f"shift exceeds jet order {m}")
    coeffs = expand_ambient(surface.ambient_polynomial(), m, (p, q, r))
    return JetExpansion(surface, m, (p, q, r), tuple(coeffs))


# ---------------------------------------------------------------------------
# the combinatorial index sets of the closed formula


@dataclass(frozen=True)
class LambdaXY:
    """Exponent pairs (l1, l2) with l1 >= p, l2 >= q, l1 + l2 = j."""

    p: int
    q: int
    j: int
    pairs: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self):
        return len(self.pairs)


def lambda_xy(p: int, q: int, j: int) -> LambdaXY:
    pairs = tuple((l1, j - l1) for l1 in range(p, j - q + 1))
    return LambdaXY(p, q, j, pairs)


@dataclass(frozen=True)
class LambdaZ:
    """Weighted compositions: supports r <= i_1 < ... < i_l <= j with positive
    parts d_k summing to n+1 and total weight sum(i_k * d_k) = j."""

    r: int
    j: int
    n: int
    entries: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)


def lambda_z(r: int, j: int, n: int) -> LambdaZ:
    total = n + 1
    found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    support: list[int] = []
    parts: list[int] = []

    def descend(i_min: int, deg_left: int, weight_left: int):
        if deg_left == 0:
            if weight_left == 0:
                found.append((tuple(support), tuple(parts)))
            return
        for i in range(i_min, j + 1):
            if i * deg_left > weight_left:
                break  # indices only grow, so the minimum weight already exceeds
            for d in range(1, deg_left + 1):
                w = weight_left - i * d
                if w < 0:
                    break
                rest = deg_left - d
                if rest == 0 and w != 0:
                    continue
                if rest > 0 and (i + 1) * rest > w:
                    continue
                support.append(i)
                parts.append(d)
                descend(i + 1, rest, w)
                support.pop()
                parts.pop()

    descend(r, total, j)
    return LambdaZ(r, j, n, tuple(found))


@lru_cache(maxsize=None)
def multinomial(parts: tuple[int, ...]) -> int:
    total = math.factorial(sum(parts))
    for d in parts:
        total //= math.factorial(d)
    return total


def fpqr_closed(n: int, p: int, q: int, r: int, j: int) -> Polynomial:
    """Closed formula for the shifted coefficient of t^j on the A-series
    surface: the x*y pairs minus the multinomial-weighted z monomials.
    Either sum is empty exactly when its index set is."""
    if n < 1:
        raise ValueError("the closed formula needs n >= 1")
    terms = []
    for l1, l2 in lambda_xy(p, q, j):
        terms.append((((var_code(X, l1), 1), (var_code(Y, l2), 1)), 1))
    for support, parts in lambda_z(r, j, n):
        mono = tuple(
            (var_code(Z, i), d) for i, d in sorted(zip(support, parts), reverse=True)
        )
        terms.append((mono, -multinomial(parts)))
    return Polynomial.from_terms(terms)


# ---------------------------------------------------------------------------
# reindexed coefficients


def g_shift(n: int, l: int, e: int, j: int) -> Polynomial:
    """f^(j) of the A-series surface with variables moved to x_(l+k),
    y_(e(n+1)-l+k), z_(e+k); the residual jet equation after splitting a
    coordinate ladder off the shifted equations."""
    hi = e * (n + 1)
    if not 0 <= l <= hi:
        raise ValueError(f"shift l={l} outside 0..{hi}")
    if j < 0:
        raise ValueError("coefficient index must be nonnegative")
    base = jet_coeffs(an_surface(n), j)[j]
    offsets = {X: l, Y: hi - l, Z: e}

    def remap(code: int) -> int:
        family = var_family(code)
        return var_code(family, var_index(code) + offsets[family])

    return base.reindex(remap)
