"""Sparse exact polynomials in the Cox coordinates of a Hirzebruch surface.

The surface ``S_delta`` is the quotient of ``(C^2 \\ 0) x (C^2 \\ 0)`` with
coordinates ``(X0, X1, Y0, Y1)`` by the torus action

    (lam, mu) . (X0, X1, Y0, Y1) = (lam*X0, lam*X1, mu*Y0, lam^-delta*mu*Y1).

A monomial ``X0^a * X1^b * Y0^g * Y1^m`` has bidegree
``(a + b - delta*m, g + m)``; a polynomial all of whose monomials share one
bidegree is bi-homogeneous and corresponds to a global section of the line
bundle ``O(d1, d2)``.

Polynomials are stored as dicts mapping exponent 4-tuples to nonzero
``Fraction`` coefficients, so equality is structural and all arithmetic is
exact.  Values are never mutated after construction; every operation returns
a fresh object, which makes concurrent read access safe.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

VARIABLES = ("X0", "X1", "Y0", "Y1")


class BiMonomial(NamedTuple):
    """Exponent vector (alpha, beta, gamma, mu) of X0^a X1^b Y0^g Y1^m."""

    alpha: int
    beta: int
    gamma: int
    mu: int


class BiDegree(NamedTuple):
    """Bidegree (d1, d2); negative entries are legal divisor data."""

    d1: int
    d2: int

    def __add__(self, other):  # type: ignore[override]
        return BiDegree(self.d1 + other.d1, self.d2 + other.d2)


class _AnyBidegree:
    """Marker returned for the zero polynomial, bi-homogeneous of every bidegree."""

    def __repr__(self) -> str:
        return "ANY_BIDEGREE"


ANY_BIDEGREE = _AnyBidegree()


class ChartId(NamedTuple):
    """Affine chart U_ij = {X_i != 0 and Y_j != 0}."""

    i: int
    j: int

    @property
    def name(self) -> str:
        return f"U{self.i}{self.j}"


U00 = ChartId(0, 0)
U10 = ChartId(1, 0)
U01 = ChartId(0, 1)
U11 = ChartId(1, 1)
CHARTS = (U00, U10, U01, U11)


def bidegree_of(m: BiMonomial | tuple, delta: int) -> BiDegree:
    """Bidegree of a single monomial on S_delta."""
    a, b, g, mu = m
    return BiDegree(a + b - delta * mu, g + mu)


def term_sort_key(m: tuple) -> tuple:
    """Graded-lexicographic key on (alpha, beta, gamma, mu)."""
    return (sum(m), m)


def _clean(terms: Mapping[tuple, Fraction]) -> dict[BiMonomial, Fraction]:
    out: dict[BiMonomial, Fraction] = {}
    for m, c in terms.items():
        c = Fraction(c)
        if c == 0:
            continue
        mono = BiMonomial(*m)
        if any(e < 0 for e in mono):
            raise ValueError(f"negative exponent in monomial {mono}")
        out[mono] = c
    return out


class BiPoly:
    """Polynomial in X0, X1, Y0, Y1 over the rationals, tagged with delta.

    The tag records which surface the polynomial lives on; mixing different
    deltas in arithmetic is an error because bidegree bookkeeping would be
    meaningless.
    """

    __slots__ = ("delta", "_terms")

    def __init__(self, delta: int, terms: Mapping[tuple, Fraction | int] | None = None):
        if delta < 0:
            raise ValueError("delta must be a non-negative integer")
        self.delta = delta
        self._terms = _clean(terms or {})

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, delta: int) -> BiPoly:
        return cls(delta, {})

    @classmethod
    def constant(cls, delta: int, c) -> BiPoly:
        return cls(delta, {(0, 0, 0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, delta: int, exponents: tuple, c=1) -> BiPoly:
        return cls(delta, {tuple(exponents): Fraction(c)})

    @classmethod
    def gens(cls, delta: int) -> tuple[BiPoly, BiPoly, BiPoly, BiPoly]:
        """The four coordinate polynomials (X0, X1, Y0, Y1)."""
        eye = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
        return tuple(cls.monomial(delta, e) for e in eye)  # type: ignore[return-value]

    # -- mapping access ----------------------------------------------------

    @property
    def terms(self) -> dict[BiMonomial, Fraction]:
        """Copy of the term map (monomial -> coefficient)."""
        return dict(self._terms)

    def coefficient(self, m: tuple) -> Fraction:
        return self._terms.get(BiMonomial(*m), Fraction(0))

    def sorted_terms(self) -> list[tuple[BiMonomial, Fraction]]:
        """Terms in descending graded-lex order (canonical print order)."""
        return sorted(self._terms.items(), key=lambda t: term_sort_key(t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: BiPoly) -> None:
        if self.delta != other.delta:
            raise ValueError(f"delta mismatch: {self.delta} vs {other.delta}")

    def __add__(self, other: BiPoly) -> BiPoly:
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return BiPoly(self.delta, out)

    def __neg__(self) -> BiPoly:
        return BiPoly(self.delta, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            self._check(other)
            out: dict[tuple, Fraction] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2], m1[3] + m2[3])
                    out[m] = out.get(m, Fraction(0)) + c1 * c2
            return BiPoly(self.delta, out)
        return self.scale(other)

    def __rmul__(self, other) -> BiPoly:
        return self.scale(other)

    def scale(self, c) -> BiPoly:
        c = Fraction(c)
        return BiPoly(self.delta, {m: c * v for m, v in self._terms.items()})

    def __pow__(self, n: int) -> BiPoly:
        if n < 0:
            raise ValueError("negative power")
        out = BiPoly.constant(self.delta, 1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BiPoly)
            and self.delta == other.delta
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.delta, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"BiPoly(delta={self.delta}, {poly_to_str(self)!r})"

    def __str__(self) -> str:
        return poly_to_str(self)

    # -- queries -----------------------------------------------------------

    def min_exponent(self, var: int) -> int:
        """Smallest exponent of the given variable (0..3) over all terms.

        The zero polynomial is divisible by everything; we return a large
        sentinel so min() aggregation over several polynomials works.
        """
        if not self._terms:
            return 10**9
        return min(m[var] for m in self._terms)

    def divide_by_monomial(self, exponents: tuple) -> BiPoly:
        """Exact division by a monomial; raises if any term is not divisible."""
        out = {}
        for m, c in self._terms.items():
            shifted = tuple(e - d for e, d in zip(m, exponents))
            if any(e < 0 for e in shifted):
                raise ValueError("polynomial not divisible by monomial")
            out[shifted] = c
        return BiPoly(self.delta, out)


def is_bihomogeneous(p: BiPoly):
    """Common bidegree of all monomials of p.

    Returns a BiDegree when the monomials agree, ``ANY_BIDEGREE`` for the
    zero polynomial and ``None`` when bidegrees differ.
    """
    if p.is_zero():
        return ANY_BIDEGREE
    degs = {bidegree_of(m, p.delta) for m in p.terms}
    if len(degs) == 1:
        return degs.pop()
    return None


def has_bidegree(p: BiPoly, d: BiDegree | tuple) -> bool:
    """True when p is bi-homogeneous of bidegree d (zero matches any d)."""
    found = is_bihomogeneous(p)
    if found is ANY_BIDEGREE:
        return True
    return found == BiDegree(*d)


def partial_derivative(p: BiPoly, var: int) -> BiPoly:
    """Partial derivative with respect to variable index 0..3 (X0,X1,Y0,Y1)."""
    out: dict[tuple, Fraction] = {}
    for m, c in p.terms.items():
        e = m[var]
        if e == 0:
            continue
        shifted = list(m)
        shifted[var] = e - 1
        key = tuple(shifted)
        out[key] = out.get(key, Fraction(0)) + c * e
    return BiPoly(p.delta, out)


def monomial_basis(delta: int, d: BiDegree | tuple) -> list[BiMonomial]:
    """All monomials of bidegree (d1, d2) on S_delta, in descending graded-lex order.

    A monomial X0^a X1^b Y0^g Y1^m of that bidegree has mu in [0, d2],
    gamma = d2 - mu and a + b = d1 + delta*mu; the list is empty when no
    exponents solve these constraints.
    """
    d1, d2 = d
    if d2 < 0:
        return []
    out = []
    for mu in range(d2 + 1):
        gamma = d2 - mu
        s = d1 + delta * mu
        if s < 0:
            continue
        for alpha in range(s + 1):
            out.append(BiMonomial(alpha, s - alpha, gamma, mu))
    out.sort(key=term_sort_key, reverse=True)
    return out


def torus_scale(p: BiPoly, lam, mu_scalar) -> BiPoly:
    """Substitute the torus action (lam, mu) into p.

    Each monomial picks up the factor lam^d1 * mu^d2 of its own bidegree, so
    for bi-homogeneous p the result is a global scalar multiple of p.
    """
    lam = Fraction(lam)
    mu_scalar = Fraction(mu_scalar)
    if lam == 0 or mu_scalar == 0:
        raise ValueError("torus scalars must be nonzero")
    out = {}
    for m, c in p.terms.items():
        d1, d2 = bidegree_of(m, p.delta)
        out[m] = c * lam**d1 * mu_scalar**d2
    return BiPoly(p.delta, out)


# ---------------------------------------------------------------------------
# Charts
# ---------------------------------------------------------------------------

class ChartPoly:
    """Bivariate polynomial in the affine coordinates (x, y) of one chart.

    On U_ij the chart coordinates come from setting X_i = 1 and Y_j = 1; the
    surviving X-variable becomes x and the surviving Y-variable becomes y.
    """

    __slots__ = ("chart", "delta", "_terms")

    def __init__(self, chart: ChartId, delta: int, terms: Mapping[tuple, Fraction | int] | None = None):
        self.chart = ChartId(*chart)
        self.delta = delta
        cleaned: dict[tuple[int, int], Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            i, j = m
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in chart monomial {m}")
            cleaned[(i, j)] = c
        self._terms = cleaned

    @classmethod
    def zero(cls, chart: ChartId = U00, delta: int = 0) -> ChartPoly:
        return cls(chart, delta, {})

    @classmethod
    def constant(cls, c, chart: ChartId = U00, delta: int = 0) -> ChartPoly:
        return cls(chart, delta, {(0, 0): Fraction(c)})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _check(self, other: ChartPoly) -> None:
        if self.chart != other.chart or self.delta != other.delta:
            raise ValueError("chart/delta mismatch in chart arithmetic")

    def __add__(self, other: ChartPoly) -> ChartPoly:
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return ChartPoly(self.chart, self.delta, out)

    def __neg__(self) -> ChartPoly:
        return ChartPoly(self.chart, self.delta, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: ChartPoly) -> ChartPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ChartPoly):
            self._check(other)
            out: dict[tuple, Fraction] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = (m1[0] + m2[0], m1[1] + m2[1])
                    out[m] = out.get(m, Fraction(0)) + c1 * c2
            return ChartPoly(self.chart, self.delta, out)
        return self.scale(other)

    def __rmul__(self, other) -> ChartPoly:
        return self.scale(other)

    def scale(self, c) -> ChartPoly:
        c = Fraction(c)
        return ChartPoly(self.chart, self.delta, {m: c * v for m, v in self._terms.items()})

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChartPoly)
            and self.chart == other.chart
            and self.delta == other.delta
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.chart, self.delta, frozenset(self._terms.items())))

    def evaluate(self, x, y) -> Fraction:
        x, y = Fraction(x), Fraction(y)
        return sum((c * x**i * y**j for (i, j), c in self._terms.items()), Fraction(0))

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def __repr__(self) -> str:
        return f"ChartPoly({self.chart.name}, {chart_poly_to_str(self)!r})"

    def __str__(self) -> str:
        return chart_poly_to_str(self)


def chart_substitution(chart: ChartId) -> tuple[int, int]:
    """Indices of the variables set to 1 on this chart: (X_i slot, Y_j slot)."""
    c = ChartId(*chart)
    return (c.i, 2 + c.j)


def dehomogenize(p: BiPoly, chart: ChartId) -> ChartPoly:
    """Restrict a bi-homogeneous polynomial to an affine chart.

    Substitutions per chart: U00 (X0,X1,Y0,Y1) -> (1,x,1,y); U10 -> (x,1,1,y);
    U01 -> (1,x,y,1); U11 -> (x,1,y,1).
    """
    if is_bihomogeneous(p) is None:
        raise ValueError("dehomogenize requires a bi-homogeneous polynomial")
    c = ChartId(*chart)
    x_slot = 1 - c.i   # surviving X variable index
    y_slot = 3 - c.j   # surviving Y variable index (2 or 3)
    out: dict[tuple, Fraction] = {}
    for m, coef in p.terms.items():
        key = (m[x_slot], m[y_slot])
        out[key] = out.get(key, Fraction(0)) + coef
    return ChartPoly(c, p.delta, out)


def rehomogenize(g: ChartPoly) -> BiPoly:
    """Minimal bi-homogeneous lift of a U00 chart polynomial.

    The lift is the unique bi-homogeneous polynomial, divisible by neither X0
    nor Y0, restricting to g on U00.  A chart monomial x^s y^t corresponds to
    X1^s Y1^t of bidegree (s - delta*t, t); X0 and Y0 pad every term up to
    the maximal bidegree.
    """
    if ChartId(*g.chart) != U00:
        raise ValueError("rehomogenize is defined on U00 chart polynomials")
    delta = g.delta
    if g.is_zero():
        return BiPoly.zero(delta)
    d1 = max(s - delta * t for (s, t) in g.terms)
    d2 = max(t for (s, t) in g.terms)
    out = {}
    for (s, t), coef in g.terms.items():
        pad1 = d1 + delta * t - s
        pad2 = d2 - t
        out[(pad1, s, pad2, t)] = coef
    lifted = BiPoly(delta, out)
    if not has_bidegree(lifted, (d1, d2)):
        raise AssertionError("rehomogenize produced a non-bi-homogeneous lift")
    return lifted


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------
#
# A polynomial is a signed sum of terms `c*X0^a*X1^b*Y0^g*Y1^m` where c is a
# rational `p/q`; factors with exponent 0 are omitted, exponent 1 is elided
# and a coefficient of 1 is dropped.  Whitespace is ignored.  The printer
# emits terms in descending graded-lex order so printing is canonical and
# parse(print(p)) == p bit-exactly.

_FACTOR_RE = re.compile(r"^(X0|X1|Y0|Y1)(?:\^(\d+))?$")
_NUMBER_RE = re.compile(r"^\d+(?:/\d+)?$")


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_to_str(p: BiPoly) -> str:
    if p.is_zero():
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        factors = []
        for name, e in zip(VARIABLES, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        body = "*".join(factors)
        if not factors:
            body = _format_coeff(mag)
        elif mag != 1:
            body = f"{_format_coeff(mag)}*{body}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces)


def _parse_terms(text: str) -> Iterable[tuple[Fraction, list[str]]]:
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty polynomial string")
    # split into signed chunks
    chunks: list[tuple[int, str]] = []
    sign, start = 1, 0
    if compact[0] in "+-":
        sign = -1 if compact[0] == "-" else 1
        start = 1
    cur = []
    i = start
    while i <= len(compact):
        if i == len(compact) or compact[i] in "+-":
            if not cur:
                raise ValueError(f"malformed polynomial near position {i}: {text!r}")
            chunks.append((sign, "".join(cur)))
            if i < len(compact):
                sign = -1 if compact[i] == "-" else 1
            cur = []
        else:
            cur.append(compact[i])
        i += 1
    for sgn, chunk in chunks:
        yield Fraction(sgn), chunk.split("*")


def parse_bipoly(text: str, delta: int) -> BiPoly:
    """Parse the text format; inverse of poly_to_str for any term order."""
    compact = "".join(text.split())
    if compact == "0":
        return BiPoly.zero(delta)
    terms: dict[tuple, Fraction] = {}
    for sign, factors in _parse_terms(text):
        coef = sign
        expo = [0, 0, 0, 0]
        for f in factors:
            if _NUMBER_RE.match(f):
                coef *= Fraction(f)
                continue
            m = _FACTOR_RE.match(f)
            if not m:
                raise ValueError(f"bad factor {f!r} in polynomial {text!r}")
            idx = VARIABLES.index(m.group(1))
            expo[idx] += int(m.group(2) or 1)
        key = tuple(expo)
        terms[key] = terms.get(key, Fraction(0)) + coef
    return BiPoly(delta, terms)


def chart_poly_to_str(g: ChartPoly) -> str:
    if g.is_zero():
        return "0"
    pieces = []
    for m, c in sorted(g.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True):
        factors = []
        for name, e in zip(("x", "y"), m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        body = "*".join(factors)
        if not factors:
            body = _format_coeff(mag)
        elif mag != 1:
            body = f"{_format_coeff(mag)}*{body}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(pieces)
