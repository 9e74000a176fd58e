"""Groebner bases for ideals in the bivariate chart rings Q[x, y].

Plain Buchberger with the coprime and chain criteria; the chart ideals this
package meets have two generators of modest degree, so simplicity wins over
F4-style machinery.  Bases are interreduced, monic and sorted, hence
canonical for a fixed monomial order: two ideals are equal iff their reduced
bases coincide.

The engine works on raw ``{exponent tuple: Fraction}`` dicts of any arity;
colon ideals are computed through a temporary elimination variable, while
saturation stays in the chart ring by iterating colon to a fixed point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .bipoly import ChartId, ChartPoly, U00

Term = tuple[tuple, Fraction]
Poly = dict  # {exponent tuple: Fraction}


@dataclass(frozen=True)
class MonomialOrder:
    """Total order on monomials refining divisibility.

    tag 'grevlex': degree first, ties by reverse lexicographic order.
    tag 'lex': plain lexicographic, x before y.
    elim_block > 0 compares the first elim_block exponents lexicographically
    before the rest, which is what elimination of auxiliary variables needs.
    """

    tag: str = "grevlex"
    elim_block: int = 0

    def key(self, e: tuple):
        head, tail = e[: self.elim_block], e[self.elim_block :]
        if self.tag == "grevlex":
            body = (sum(tail), tuple(-x for x in reversed(tail)))
        elif self.tag == "lex":
            body = tail
        else:
            raise ValueError(f"unknown order tag {self.tag!r}")
        return (head, body) if self.elim_block else body


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


# ---------------------------------------------------------------------------
# Raw-dict polynomial helpers
# ---------------------------------------------------------------------------

def _leading(f: Poly, order: MonomialOrder) -> Term:
    e = max(f, key=order.key)
    return e, f[e]


def _divides(e: tuple, m: tuple) -> bool:
    return all(a <= b for a, b in zip(e, m))


def _sub_scaled(f: Poly, c: Fraction, shift: tuple, g: Poly) -> Poly:
    """f - c * x^shift * g, in place on a copy of f."""
    out = dict(f)
    for e, v in g.items():
        m = tuple(a + b for a, b in zip(e, shift))
        nv = out.get(m, Fraction(0)) - c * v
        if nv:
            out[m] = nv
        else:
            out.pop(m, None)
    return out


def _normal_form_raw(f: Poly, basis: Sequence[Poly], order: MonomialOrder) -> Poly:
    p = dict(f)
    remainder: Poly = {}
    leads = [(_leading(g, order), g) for g in basis if g]
    while p:
        e, c = _leading(p, order)
        for (ge, gc), g in leads:
            if _divides(ge, e):
                shift = tuple(a - b for a, b in zip(e, ge))
                p = _sub_scaled(p, c / gc, shift, g)
                break
        else:
            remainder[e] = c
            del p[e]
    return remainder


def _exact_quotient_raw(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    """Quotient f/g when g divides f; raises otherwise."""
    p = dict(f)
    q: Poly = {}
    ge, gc = _leading(g, order)
    while p:
        e, c = _leading(p, order)
        if not _divides(ge, e):
            raise ValueError("exact division failed")
        shift = tuple(a - b for a, b in zip(e, ge))
        q[shift] = c / gc
        p = _sub_scaled(p, c / gc, shift, g)
    return q


def _spoly(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    (fe, fc), (ge, gc) = _leading(f, order), _leading(g, order)
    lcm = tuple(max(a, b) for a, b in zip(fe, ge))
    sf = tuple(a - b for a, b in zip(lcm, fe))
    sg = tuple(a - b for a, b in zip(lcm, ge))
    out = _sub_scaled({}, Fraction(-1) / fc, sf, f)
    return _sub_scaled(out, Fraction(1) / gc, sg, g)


def _monic(f: Poly, order: MonomialOrder) -> Poly:
    if not f:
        return f
    _, c = _leading(f, order)
    return {e: v / c for e, v in f.items()}


def _pair_lcm(basis: list[Poly], pair: tuple[int, int], order: MonomialOrder) -> tuple:
    fe, _ = _leading(basis[pair[0]], order)
    ge, _ = _leading(basis[pair[1]], order)
    return tuple(max(a, b) for a, b in zip(fe, ge))


def _buchberger_raw(gens: Iterable[Poly], order: MonomialOrder) -> list[Poly]:
    basis = [_monic(dict(g), order) for g in gens if g]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done = set()
    while pairs:
        # normal selection: smallest lcm of leading monomials first
        i, j = min(pairs, key=lambda p: (order.key(_pair_lcm(basis, p, order)), p))
        pairs.discard((i, j))
        done.add((i, j))
        fe, _ = _leading(basis[i], order)
        ge, _ = _leading(basis[j], order)
        lcm = tuple(max(a, b) for a, b in zip(fe, ge))
        # coprime leading terms: S-polynomial reduces to zero
        if all(a + b == m for a, b, m in zip(fe, ge, lcm)):
            continue
        if _chain_criterion(basis, i, j, lcm, done, order):
            continue
        r = _normal_form_raw(_spoly(basis[i], basis[j], order), basis, order)
        if r:
            basis.append(_monic(r, order))
            k = len(basis) - 1
            pairs.update((i2, k) for i2 in range(k))
    return _interreduce(basis, order)


def _chain_criterion(basis, i, j, lcm, done, order) -> bool:
    for k in range(len(basis)):
        if k in (i, j):
            continue
        ke, _ = _leading(basis[k], order)
        if _divides(ke, lcm):
            p1 = (min(i, k), max(i, k))
            p2 = (min(j, k), max(j, k))
            if p1 in done and p2 in done:
                return True
    return False


def _interreduce(basis: list[Poly], order: MonomialOrder) -> list[Poly]:
    # minimalize: walking by ascending leading monomial, an element is
    # redundant iff a kept element's leading monomial divides its own
    basis = sorted((g for g in basis if g), key=lambda g: order.key(_leading(g, order)[0]))
    minimal: list[Poly] = []
    for g in basis:
        ge = _leading(g, order)[0]
        if not any(_divides(_leading(h, order)[0], ge) for h in minimal):
            minimal.append(g)
    # fully reduce each tail against the others until stable
    changed = True
    while changed:
        changed = False
        for idx in range(len(minimal)):
            rest = [minimal[k] for k in range(len(minimal)) if k != idx]
            r = _monic(_normal_form_raw(minimal[idx], rest, order), order)
            if r != minimal[idx]:
                minimal[idx] = r
                changed = True
        minimal = [g for g in minimal if g]
    minimal.sort(key=lambda g: order.key(_leading(g, order)[0]), reverse=True)
    return minimal


# ---------------------------------------------------------------------------
# Chart-level API
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChartIdeal:
    """Ideal in the coordinate ring of one affine chart."""

    chart: ChartId
    delta: int
    generators: tuple[ChartPoly, ...]

    @classmethod
    def of(cls, gens: Sequence[ChartPoly], chart: ChartId | None = None, delta: int | None = None) -> ChartIdeal:
        gens = [g for g in gens if not g.is_zero()]
        if gens:
            chart = chart if chart is not None else gens[0].chart
            delta = delta if delta is not None else gens[0].delta
        else:
            chart = chart if chart is not None else U00
            delta = delta if delta is not None else 0
        for g in gens:
            if g.chart != chart or g.delta != delta:
                raise ValueError("ideal generators live on different charts")
        return cls(ChartId(*chart), delta, tuple(gens))


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced monic Groebner basis; canonical for its order."""

    order: MonomialOrder
    chart: ChartId
    delta: int
    elements: tuple[ChartPoly, ...]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].terms == {(0, 0): Fraction(1)}

    def is_zero_ideal(self) -> bool:
        return not self.elements

    def leading_exponents(self) -> list[tuple[int, int]]:
        return [max(g.terms, key=self.order.key) for g in self.elements]


def buchberger(ideal: ChartIdeal, order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal; {1} iff the ideal is the unit ideal."""
    raw = _buchberger_raw([g.terms for g in ideal.generators], order)
    elems = tuple(ChartPoly(ideal.chart, ideal.delta, g) for g in raw)
    return GroebnerBasis(order, ideal.chart, ideal.delta, elems)


def normal_form(f: ChartPoly, gb: GroebnerBasis) -> ChartPoly:
    """Remainder of multivariate division by the basis; zero iff f is a member."""
    raw = _normal_form_raw(f.terms, [g.terms for g in gb.elements], gb.order)
    return ChartPoly(f.chart, f.delta, raw)


def ideal_contains(gb: GroebnerBasis, f: ChartPoly) -> bool:
    return normal_form(f, gb).is_zero()


def ideal_equal(a: ChartIdeal | GroebnerBasis, b: ChartIdeal | GroebnerBasis) -> bool:
    """Mutual membership of generators; equivalent to equal reduced bases."""
    gb_a = a if isinstance(a, GroebnerBasis) else buchberger(a)
    gb_b = b if isinstance(b, GroebnerBasis) else buchberger(b)
    return all(ideal_contains(gb_b, g) for g in gb_a.elements) and all(
        ideal_contains(gb_a, g) for g in gb_b.elements
    )


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """True iff the leading monomials contain pure powers of both variables.

    The unit ideal qualifies (its basis element 1 is a zeroth power of each
    variable); the zero ideal does not.
    """
    leads = gb.leading_exponents()
    return any(e[1] == 0 for e in leads) and any(e[0] == 0 for e in leads)


def standard_monomials(gb: GroebnerBasis) -> list[tuple[int, int]]:
    """Monomials outside the leading-term ideal, for zero-dimensional ideals."""
    if not is_zero_dimensional(gb):
        raise ValueError("quotient ring has infinite dimension")
    leads = gb.leading_exponents()
    bound_x = min(e[0] for e in leads if e[1] == 0)
    bound_y = min(e[1] for e in leads if e[0] == 0)
    out = []
    for i in range(bound_x):
        for j in range(bound_y):
            if not any(_divides(e, (i, j)) for e in leads):
                out.append((i, j))
    out.sort(key=lambda e: (sum(e), e))
    return out


def quotient_dimension(gb: GroebnerBasis) -> int:
    """Vector-space dimension of Q[x,y]/I, the total multiplicity of V(I)."""
    return len(standard_monomials(gb))


def colon(ideal: ChartIdeal, f: ChartPoly, order: MonomialOrder = GREVLEX) -> ChartIdeal:
    """Ideal quotient (I : f) = {g : g*f in I}.

    Computed as (I intersect (f)) / f, with the intersection obtained from a
    temporary elimination variable t: I cap (f) is the t-free part of a basis
    of t*I + (1-t)*(f).
    """
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    if not ideal.generators:
        return ChartIdeal.of([], ideal.chart, ideal.delta)
    if set(f.terms) == {(0, 0)}:
        return canonical_generators(ideal, order)
    elim = MonomialOrder("grevlex", elim_block=1)
    gens3: list[Poly] = []
    for g in ideal.generators:
        gens3.append({(1, e[0], e[1]): c for e, c in g.terms.items()})
    both: Poly = {}
    for e, c in f.terms.items():
        both[(0, e[0], e[1])] = c
        both[(1, e[0], e[1])] = -c
    gens3.append(both)
    basis3 = _buchberger_raw(gens3, elim)
    members = []
    for g in basis3:
        if all(e[0] == 0 for e in g):
            members.append({(e[1], e[2]): c for e, c in g.items()})
    quot = [_exact_quotient_raw(m, f.terms, order) for m in members]
    raw = _buchberger_raw(quot, order)
    return ChartIdeal.of(
        [ChartPoly(ideal.chart, ideal.delta, g) for g in raw], ideal.chart, ideal.delta
    )


def saturate(ideal: ChartIdeal, f: ChartPoly, order: MonomialOrder = GREVLEX) -> ChartIdeal:
    """Stable colon (I : f^infinity), reached by iterating (I : f)."""
    current = canonical_generators(ideal, order)
    while True:
        nxt = colon(current, f, order)
        if ideal_equal(nxt, current):
            return current
        current = nxt


def canonical_generators(ideal: ChartIdeal, order: MonomialOrder = GREVLEX) -> ChartIdeal:
    """Replace generators by the reduced basis (canonical form of the ideal)."""
    gb = buchberger(ideal, order)
    return ChartIdeal.of(list(gb.elements), ideal.chart, ideal.delta)
