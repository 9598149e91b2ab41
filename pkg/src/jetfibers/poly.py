"""Sparse multivariate polynomials with exact rational coefficients.

Everything downstream (jet equations, Groebner computations, certificate
checks) is built on the types here.  Coefficients are ``fractions.Fraction``
throughout, so every identity in the package is decided by exact equality,
never by a tolerance.

Variables
---------
A variable is a (family, index) pair packed into a single int code:

* families, from lowest to highest rank: ``z`` < ``y`` < ``x`` < ``w``,
  where ``w`` holds auxiliary slots used by radical/saturation tricks;
* within a family a higher jet index is a higher code.

Auxiliary slots sorting above every jet variable is what makes elimination
of a fresh ``w`` fall out of a block order for free.

Monomials are tuples of (code, exponent) pairs sorted by descending code
with no zero exponents; the empty tuple is the monomial 1.

Printing uses a separate *display* ranking (families ``w > x > y > z`` but
lower index first within a family, terms sorted by ungraded reverse
lexicographic comparison).  That is the one documented textual form; parse
and print round-trip bit-exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .kernel import impl as _K

# ---------------------------------------------------------------------------
# variable codes

_FAMILY_RANK = {"z": 0, "y": 1, "x": 2, "w": 3}
_RANK_TO_FAMILY = ("z", "y", "x", "w", "t")
_INDEX_BITS = 24
_INDEX_MASK = (1 << _INDEX_BITS) - 1

# reserved slot for the series variable t; ranks above every user variable
T_CODE = 4 << _INDEX_BITS

X, Y, Z, AUX = "x", "y", "z", "w"
FAMILIES = (X, Y, Z, AUX)


def var_code(family: str, index: int) -> int:
    """Pack a (family, index) pair into its total-order code."""
    if family not in _FAMILY_RANK:
        raise ValueError(f"unknown variable family {family!r}")
    if index < 0 or index > _INDEX_MASK:
        raise ValueError(f"variable index {index} out of range")
    return (_FAMILY_RANK[family] << _INDEX_BITS) | index


def var_family(code: int) -> str:
    return _RANK_TO_FAMILY[code >> _INDEX_BITS]


def var_index(code: int) -> int:
    return code & _INDEX_MASK


def var_name(code: int) -> str:
    if code == T_CODE:
        return "t"
    return f"{var_family(code)}{var_index(code)}"


@dataclass(frozen=True)
class VariableId:
    """Public face of a variable; ordering matches the packed code."""

    family: str
    index: int

    @property
    def code(self) -> int:
        return var_code(self.family, self.index)

    @classmethod
    def from_code(cls, code: int) -> "VariableId":
        return cls(var_family(code), var_index(code))

    def __lt__(self, other: "VariableId") -> bool:
        return self.code < other.code

    def __str__(self) -> str:
        return var_name(self.code)


def jet_variables(m: int) -> tuple[int, ...]:
    """Codes of x0..xm, y0..ym, z0..zm: the ambient ring of the m-jet space."""
    out = []
    for fam in (X, Y, Z):
        out.extend(var_code(fam, i) for i in range(m + 1))
    return tuple(out)


# ---------------------------------------------------------------------------
# monomials: tuples of (code, exp), descending code, exponents > 0

Monomial = tuple  # tuple[tuple[int, int], ...]

MONO_ONE: Monomial = ()


def mono_from_pairs(pairs) -> Monomial:
    merged: dict[int, int] = {}
    for code, exp in pairs:
        if exp:
            merged[code] = merged.get(code, 0) + exp
    items = sorted(((c, e) for c, e in merged.items() if e), reverse=True)
    for _, e in items:
        if e < 0:
            raise ValueError("negative exponent in monomial")
    return tuple(items)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ca, ea = a[i]
        cb, eb = b[j]
        if ca == cb:
            out.append((ca, ea + eb))
            i += 1
            j += 1
        elif ca > cb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when monomial a divides monomial b."""
    pos = {c: e for c, e in b}
    return all(pos.get(c, 0) >= e for c, e in a)


def _display_key(code: int):
    # ascending display rank: family low to high, then index high to low
    return (code >> _INDEX_BITS, -(code & _INDEX_MASK))


def _display_term_cmp(a: Monomial, b: Monomial) -> int:
    """Ungraded reverse-lex comparison under the display ranking."""
    ea = dict(a)
    eb = dict(b)
    for code in sorted(set(ea) | set(eb), key=_display_key):
        xa = ea.get(code, 0)
        xb = eb.get(code, 0)
        if xa != xb:
            return 1 if xa < xb else -1
    return 0


_DISPLAY_SORT_KEY = cmp_to_key(_display_term_cmp)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable sparse polynomial; the term dict never stores a zero."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None):
        # trusted constructor: terms must already be canonical
        object.__setattr__(self, "_terms", terms or {})

    # -- builders ----------------------------------------------------------

    @classmethod
    def from_terms(cls, items) -> "Polynomial":
        """Build from (monomial, coefficient) pairs, merging and dropping zeros."""
        acc: dict[Monomial, Fraction] = {}
        for mono, coeff in items if not isinstance(items, dict) else items.items():
            c = Fraction(coeff)
            if not c:
                continue
            mono = mono_from_pairs(mono)
            v = acc.get(mono)
            if v is None:
                acc[mono] = c
            else:
                v = v + c
                if v:
                    acc[mono] = v
                else:
                    del acc[mono]
        return cls(acc)

    @classmethod
    def zero(cls) -> "Polynomial":
        return _ZERO

    @classmethod
    def one(cls) -> "Polynomial":
        return _ONE

    @classmethod
    def constant(cls, c) -> "Polynomial":
        c = Fraction(c)
        return cls({MONO_ONE: c}) if c else _ZERO

    @classmethod
    def variable(cls, code: int) -> "Polynomial":
        return cls({((code, 1),): Fraction(1)})

    @classmethod
    def term(cls, coeff, pairs) -> "Polynomial":
        c = Fraction(coeff)
        if not c:
            return _ZERO
        return cls({mono_from_pairs(pairs): c})

    # -- inspection --------------------------------------------------------

    def items(self):
        return self._terms.items()

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, mono) -> Fraction:
        return self._terms.get(mono_from_pairs(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(MONO_ONE, Fraction(0))

    def total_degree(self) -> int:
        """Largest term degree; 0 for the zero polynomial."""
        if not self._terms:
            return 0
        return max(mono_degree(m) for m in self._terms)

    def variables(self) -> frozenset[int]:
        out = set()
        for mono in self._terms:
            for code, _ in mono:
                out.add(code)
        return frozenset(out)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_variable(self) -> bool:
        """True for c*v with a single variable to the first power."""
        if len(self._terms) != 1:
            return False
        (mono,) = self._terms
        return len(mono) == 1 and mono[0][1] == 1

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for mono, c in other._terms.items():
            v = out.get(mono)
            if v is None:
                out[mono] = c
            else:
                v = v + c
                if v:
                    out[mono] = v
                else:
                    del out[mono]
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return _ZERO
            return Polynomial({m: c * v for m, v in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = mono_mul(ma, mb)
                v = out.get(m)
                if v is None:
                    out[m] = ca * cb
                else:
                    v = v + ca * cb
                    if v:
                        out[m] = v
                    else:
                        del out[m]
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers take a nonnegative integer")
        result = _ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- structural maps ----------------------------------------------------

    def reindex(self, code_map) -> "Polynomial":
        """Apply a variable-to-variable map (callable on codes)."""
        out: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            new = mono_from_pairs((code_map(code), e) for code, e in mono)
            v = out.get(new)
            if v is None:
                out[new] = c
            else:
                v = v + c
                if v:
                    out[new] = v
                else:
                    del out[new]
        return Polynomial(out)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)})"


_ZERO = Polynomial({})
_ONE = Polynomial({MONO_ONE: Fraction(1)})


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return Polynomial.constant(value)
    return NotImplemented


def xvar(i: int) -> Polynomial:
    return Polynomial.variable(var_code(X, i))


def yvar(i: int) -> Polynomial:
    return Polynomial.variable(var_code(Y, i))


def zvar(i: int) -> Polynomial:
    return Polynomial.variable(var_code(Z, i))


def auxvar(i: int) -> Polynomial:
    return Polynomial.variable(var_code(AUX, i))


# ---------------------------------------------------------------------------
# formatting


def _format_term(mono: Monomial, coeff: Fraction) -> str:
    parts = []
    mag = -coeff if coeff < 0 else coeff
    if not mono:
        parts.append(str(mag))
    else:
        if mag != 1:
            parts.append(str(mag))
        for code, exp in sorted(mono, key=lambda ce: _display_key(ce[0]), reverse=True):
            name = var_name(code)
            parts.append(name if exp == 1 else f"{name}^{exp}")
    return "*".join(parts)


def format_polynomial(p: Polynomial) -> str:
    """Canonical textual form; parse_polynomial inverts it bit-exactly."""
    if p.is_zero:
        return "0"
    monos = sorted(p._terms, key=_DISPLAY_SORT_KEY, reverse=True)
    first = monos[0]
    coeff = p._terms[first]
    chunks = ["-" if coeff < 0 else ""]
    chunks.append(_format_term(first, coeff))
    for mono in monos[1:]:
        coeff = p._terms[mono]
        chunks.append(" - " if coeff < 0 else " + ")
        chunks.append(_format_term(mono, coeff))
    return "".join(chunks)


# ---------------------------------------------------------------------------
# parsing


class PolynomialParseError(ValueError):
    """Parse failure; carries the 0-based offset of the offending token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_NUMBER, _NAME, _OP, _END = "number", "name", "op", "end"


def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append((_NUMBER, text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            tokens.append((_NAME, text[i:j], i))
            i = j
            continue
        if ch in "+-*/^":
            tokens.append((_OP, ch, i))
            i += 1
            continue
        raise PolynomialParseError(f"unexpected character {ch!r}", i)
    tokens.append((_END, "", n))
    return tokens


def parse_polynomial(text: str, *, ambient: bool = False) -> Polynomial:
    """Parse the canonical grammar.

    Variables are x<k>, y<k>, z<k> and w<k> for auxiliary slots; ``^`` takes
    powers, ``*`` between factors is optional, coefficients are integers or
    integer ratios p/q.  With ambient=True only bare x, y, z are accepted
    (they mean jet index 0) and indexed or auxiliary variables are rejected.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def advance():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_variable(name: str, at: int) -> int:
        family = name[0]
        digits = name[1:]
        if family not in _FAMILY_RANK:
            raise PolynomialParseError(f"unknown variable {name!r}", at)
        if ambient:
            if family == AUX:
                raise PolynomialParseError("auxiliary variables are not ambient", at)
            if digits:
                raise PolynomialParseError(
                    f"jet-indexed variable {name!r} not allowed here", at
                )
            return var_code(family, 0)
        if not digits:
            raise PolynomialParseError(f"variable {name!r} is missing a jet index", at)
        return var_code(family, int(digits))

    def parse_factor() -> Polynomial:
        kind, value, at = peek()
        if kind == _NUMBER:
            advance()
            num = int(value)
            if peek()[:2] == (_OP, "/"):
                advance()
                dkind, dvalue, dat = peek()
                if dkind != _NUMBER:
                    raise PolynomialParseError("expected integer denominator", dat)
                advance()
                den = int(dvalue)
                if den == 0:
                    raise PolynomialParseError("zero denominator", dat)
                return Polynomial.constant(Fraction(num, den))
            return Polynomial.constant(num)
        if kind == _NAME:
            advance()
            code = parse_variable(value, at)
            if peek()[:2] == (_OP, "^"):
                advance()
                ekind, evalue, eat = peek()
                if ekind != _NUMBER:
                    raise PolynomialParseError("expected integer exponent", eat)
                advance()
                return Polynomial.term(1, [(code, int(evalue))])
            return Polynomial.variable(code)
        raise PolynomialParseError(f"expected a factor, found {value or kind!r}", at)

    def parse_term() -> Polynomial:
        result = parse_factor()
        while True:
            kind, value, _ = peek()
            if kind == _OP and value == "*":
                advance()
                result = result * parse_factor()
            elif kind in (_NUMBER, _NAME):
                result = result * parse_factor()
            else:
                return result

    total = Polynomial.zero()
    sign = 1
    kind, value, _ = peek()
    if kind == _OP and value in "+-":
        advance()
        sign = -1 if value == "-" else 1
    total = total + sign * parse_term()
    while True:
        kind, value, at = peek()
        if kind == _END:
            return total
        if kind == _OP and value in "+-":
            advance()
            term = parse_term()
            total = total + (term if value == "+" else -term)
        else:
            raise PolynomialParseError(f"expected '+' or '-', found {value!r}", at)


# ---------------------------------------------------------------------------
# linear substitution


def linear_substitute(p: Polynomial, mapping: dict[int, Polynomial]) -> Polynomial:
    """Substitute variables by polynomials of degree at most one.

    Variables absent from the mapping are left alone, which makes the
    identity substitution the empty dict.
    """
    for code, image in mapping.items():
        if image.total_degree() > 1:
            raise ValueError(
                f"image of {var_name(code)} has degree {image.total_degree()} > 1"
            )
    out = Polynomial.zero()
    for mono, coeff in p.items():
        acc = Polynomial.constant(coeff)
        for code, exp in mono:
            image = mapping.get(code)
            if image is None:
                acc = acc * Polynomial.term(1, [(code, exp)])
            else:
                acc = acc * image**exp
        out = out + acc
    return out


# ---------------------------------------------------------------------------
# jet points and truncated series


def _coeffs(values, m: int, what: str) -> tuple[Fraction, ...]:
    if isinstance(values, dict):
        out = [Fraction(0)] * (m + 1)
        for idx, val in values.items():
            if not 0 <= idx <= m:
                raise ValueError(f"{what} coefficient index {idx} out of range")
            out[idx] = Fraction(val)
        return tuple(out)
    out = tuple(Fraction(v) for v in values)
    if not out:
        return (Fraction(0),) * (m + 1)
    if len(out) != m + 1:
        raise ValueError(f"{what} needs exactly {m + 1} coefficients")
    return out


@dataclass(frozen=True)
class JetPoint:
    """A closed point of the m-jet space of affine 3-space: one truncated
    power series in t per ambient coordinate."""

    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...]
    zs: tuple[Fraction, ...]

    def __post_init__(self):
        if not (len(self.xs) == len(self.ys) == len(self.zs)) or not self.xs:
            raise ValueError("coefficient lists must share length m+1 >= 1")

    @classmethod
    def make(cls, m: int, x=(), y=(), z=()) -> "JetPoint":
        return cls(_coeffs(x, m, "x"), _coeffs(y, m, "y"), _coeffs(z, m, "z"))

    @property
    def order(self) -> int:
        return len(self.xs) - 1

    def family(self, family: str) -> tuple[Fraction, ...]:
        return {X: self.xs, Y: self.ys, Z: self.zs}[family]

    def truncate(self, new_order: int) -> "JetPoint":
        """Drop series coefficients above new_order."""
        if new_order > self.order:
            raise ValueError(f"cannot truncate order {self.order} to {new_order}")
        if new_order < 0:
            raise ValueError("truncation order must be nonnegative")
        k = new_order + 1
        return JetPoint(self.xs[:k], self.ys[:k], self.zs[:k])


def _series_mul(a, b, cap: int):
    out = [Fraction(0)] * (cap + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            k = i + j
            if k > cap:
                break
            if bj:
                out[k] += ai * bj
    return out


def _check_ambient(f: Polynomial):
    allowed = {var_code(X, 0), var_code(Y, 0), var_code(Z, 0)}
    bad = f.variables() - allowed
    if bad:
        names = ", ".join(sorted(var_name(c) for c in bad))
        raise ValueError(f"not an ambient polynomial (uses {names})")


def t_order(point: JetPoint, g: Polynomial):
    """t-adic order of g along the jet, computed modulo t^(m+1).

    Returns None when g vanishes to order > m; with truncated data that is
    all that can be said ("at least m+1").
    """
    _check_ambient(g)
    m = point.order
    one = [Fraction(1)] + [Fraction(0)] * m
    powers: dict[tuple[str, int], list] = {}

    def family_power(family: str, exp: int):
        key = (family, exp)
        got = powers.get(key)
        if got is None:
            if exp == 1:
                got = list(point.family(family))
            else:
                got = _series_mul(family_power(family, exp - 1), point.family(family), m)
            powers[key] = got
        return got

    acc = [Fraction(0)] * (m + 1)
    for mono, coeff in g.items():
        cur = list(one)
        for code, exp in mono:
            cur = _series_mul(cur, family_power(var_family(code), exp), m)
        for k in range(m + 1):
            acc[k] += coeff * cur[k]
    for k, value in enumerate(acc):
        if value:
            return k
    return None


def evaluate(p: Polynomial, values: dict[int, Fraction]) -> Fraction:
    """Value of p at a point given as variable-code -> rational; absent
    variables count as zero."""
    total = Fraction(0)
    for mono, coeff in p.items():
        term = coeff
        for code, exp in mono:
            v = values.get(code, Fraction(0))
            if not v:
                term = Fraction(0)
                break
            term = term * v**exp
        total += term
    return total


def jet_point_values(pt: JetPoint) -> dict[int, Fraction]:
    """The coordinates of a jet point, keyed by jet-variable code."""
    out = {}
    for fam, coeffs in ((X, pt.xs), (Y, pt.ys), (Z, pt.zs)):
        for i, c in enumerate(coeffs):
            out[var_code(fam, i)] = c
    return out


# ---------------------------------------------------------------------------
# symbolic truncated-series substitution (the jet-equation engine)


def substitute_series(f: Polynomial, x_coeffs, y_coeffs, z_coeffs, m: int):
    """Expand f(X(t), Y(t), Z(t)) modulo t^(m+1).

    f must be ambient (variables x0, y0, z0 only); each series argument is a
    sequence of m+1 coefficient polynomials.  Returns the list of the m+1
    coefficient polynomials of t^0..t^m.  Work happens on dense exponent
    tuples with an explicit t slot so products can drop unneeded high t
    powers as they arise.
    """
    if m < 0:
        raise ValueError("series order must be nonnegative")
    _check_ambient(f)
    series = {}
    for family, coeffs in ((X, x_coeffs), (Y, y_coeffs), (Z, z_coeffs)):
        lifted = [_coerce(c) for c in coeffs]
        if any(c is NotImplemented for c in lifted):
            raise TypeError("series coefficients must be polynomials or rationals")
        if len(lifted) != m + 1:
            raise ValueError(f"{family} series needs exactly {m + 1} coefficients")
        series[family] = lifted

    codes: set[int] = set()
    for lifted in series.values():
        for c in lifted:
            codes.update(c.variables())
    if T_CODE in codes:
        raise ValueError("series coefficients may not use the reserved t slot")
    ring = (T_CODE,) + tuple(sorted(codes, reverse=True))
    pos = {code: k for k, code in enumerate(ring)}
    width = len(ring)
    zero_mono = (0,) * width

    def densify(p: Polynomial, t_exp: int):
        out = {}
        for mono, coeff in p.items():
            vec = [0] * width
            vec[0] = t_exp
            for code, exp in mono:
                vec[pos[code]] = exp
            out[tuple(vec)] = coeff
        return out

    dense_series = {}
    for family, lifted in series.items():
        acc: dict = {}
        for i, c in enumerate(lifted):
            if c:
                acc.update(densify(c, i))
        dense_series[family] = acc

    one = {zero_mono: Fraction(1)}
    powers: dict[tuple[str, int], dict] = {}

    def family_power(family: str, exp: int):
        key = (family, exp)
        got = powers.get(key)
        if got is None:
            if exp == 1:
                got = dense_series[family]
            else:
                got = _K.mul_terms(family_power(family, exp - 1), dense_series[family], 0, m)
            powers[key] = got
        return got

    acc: dict = {}
    for mono, coeff in f.items():
        cur = {zero_mono: coeff}
        for code, exp in mono:
            cur = _K.mul_terms(cur, family_power(var_family(code), exp), 0, m)
        acc = _K.add_scaled(acc, cur, Fraction(1)) if acc else cur

    buckets: list[dict] = [dict() for _ in range(m + 1)]
    for vec, coeff in acc.items():
        buckets[vec[0]][vec] = coeff

    out = []
    for bucket in buckets:
        terms = {}
        for vec, coeff in bucket.items():
            mono = tuple(
                (ring[k], vec[k]) for k in range(1, width) if vec[k]
            )
            terms[mono] = coeff
        out.append(Polynomial(terms))
    return out
