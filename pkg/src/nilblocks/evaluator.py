"""Closed-form values of nilpotent integrals for regular-by-blocks orbits.

Psi(1) is the value at t = 1 of a Weyl- and center-averaged product of
zeta factors.  Along the multiplicative line t_i = X^{b_i} it becomes a
one-variable limit X -> 1.  The default method expands every factor as a
Laurent series in h = X - 1 and sums over permutations with a dynamic
program over subsets; ``method="rational"`` forms the rational function
literally and calls ``limit_at_one``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd
from typing import Iterable, Sequence

from .arthur import (
    CofamilyMember,
    LineArg,
    c_xi_term,
    dual_triplet,
    line_scale,
)
from .curvezeta import CurveZeta, vol_gl, z_dD
from .exactmath import (
    CycloNumber,
    CycloRationalFunction,
    PoleAtOne,
    RadicalRational,
    as_rational,
    cyclo_reduce,
    is_zero,
    laurent_expand,
    lcm,
    limit_at_one,
)
from .rootdata import (
    Parabolic,
    Vec,
    add,
    combination,
    coordinates,
    dim_a,
    dot,
    root_sets,
    scale,
    tau_hat,
)


class DegenerateDirection(ValueError):
    """A proper subset of the direction sums to zero."""


class NotCoprime(ValueError):
    pass


class NonRationalLimit(ArithmeticError):
    pass


class BoxTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class IntegralQuery:
    curve: CurveZeta
    degD: int
    n: int
    d: int
    e: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1 or self.n % self.d:
            raise ValueError(f"d = {self.d} must be a positive divisor of n = {self.n}")

    @property
    def r(self) -> int:
        return self.n // self.d


@dataclass(frozen=True)
class GenericDirection:
    """Exponents b_1..b_r of the line t_i = X^{b_i}; no proper subset sums to zero."""

    b: tuple[int, ...]
    salt: int = 0

    def __post_init__(self):
        if sum(self.b) != 0:
            raise DegenerateDirection(f"{self.b} does not sum to zero")
        r = len(self.b)
        for size in range(1, r):
            for subset in itertools.combinations(self.b, size):
                if sum(subset) == 0:
                    raise DegenerateDirection(f"subset {subset} of {self.b} sums to zero")

    @classmethod
    def default(cls, r: int, salt: int = 0) -> "GenericDirection":
        """b_i = r B^(i-1) - sum_j B^(j-1) with B = r + 1 + salt.

        Subset sums of r B^(i-1) are base-B numbers with digits r, which
        never match |S| times the all-ones number unless S is everything.
        """
        while True:
            base = r + 1 + salt
            total = sum(base**j for j in range(r))
            try:
                return cls(tuple(r * base**i - total for i in range(r)), salt)
            except DegenerateDirection:
                salt += 1

    def permuted(self, sigma: Sequence[int]) -> "GenericDirection":
        return GenericDirection(tuple(self.b[sigma[i]] for i in range(len(self.b))), self.salt)


@dataclass(frozen=True)
class IntegralResult:
    value: Fraction
    psi_at_one: Fraction
    volume_factor: Fraction
    q_power: Fraction
    direction_used: GenericDirection


# ------------------------------------------------------------------ zeta factors


def phi_of_y(curve: CurveZeta, d: int, degD: int) -> CycloRationalFunction:
    """q^{d^2(g-1)} y^{-d degD} prod_{j=1..d} Z_C(q^{-j} y)."""
    y = CycloRationalFunction.x()
    return z_dD(curve, d, degD, y) * Fraction(curve.q) ** (d * d * (curve.genus - 1))


def zeta_factor(curve: CurveZeta, d: int, degD: int, arg):
    """Z^d_{C,D}(arg) = arg^{-d degD} Z_C(arg/q) ... Z_C(arg/q^d): the factor used in Psi."""
    return z_dD(curve, d, degD, arg)


def phi_P_line(
    curve: CurveZeta,
    d: int,
    degD: int,
    w: Sequence[int],
    k: int,
    direction: GenericDirection,
    order: int | None = None,
    twist: int = 1,
) -> CycloRationalFunction:
    """prod_{j=1}^{r-1} Z^d(zeta^{k j twist} X^{d (b_{w^-1(1)} + ... + b_{w^-1(j)})}).

    ``w[i]`` is the position that block i moves to.  ``zeta`` is a primitive
    ``order``-th root of unity (default r).
    """
    r = len(direction.b)
    order = order or r
    inverse = [0] * r
    for i, wi in enumerate(w):
        inverse[wi] = i
    out = CycloRationalFunction(1)
    partial = 0
    for j in range(1, r):
        partial += direction.b[inverse[j - 1]]
        c = _root(order, k * j * twist)
        arg = CycloRationalFunction.monomial(c, d * partial)
        out = out * zeta_factor(curve, d, degD, arg)
    return out


def _root(order: int, power: int):
    power %= order
    if power == 0:
        return Fraction(1)
    return cyclo_reduce(order, power)


# ------------------------------------------------------------ Laurent series in h


class _Laurent:
    """Truncated Laurent series in h, exact on degrees valuation .. precision-1."""

    __slots__ = ("valuation", "coeffs", "precision")

    def __init__(self, valuation: int, coeffs: list, precision: int):
        self.valuation = valuation
        self.coeffs = coeffs[: max(precision - valuation, 0)]
        self.precision = precision

    @classmethod
    def one(cls) -> "_Laurent":
        return cls(0, [Fraction(1)], 10**9)

    def coeff(self, k: int):
        if k >= self.precision:
            raise ArithmeticError("coefficient beyond the tracked precision")
        i = k - self.valuation
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "_Laurent") -> "_Laurent":
        v = min(self.valuation, other.valuation)
        p = min(self.precision, other.precision)
        return _Laurent(v, [self.coeff(k) + other.coeff(k) for k in range(v, p)], p)

    def __mul__(self, other):
        if not isinstance(other, _Laurent):
            return _Laurent(self.valuation, [c * other for c in self.coeffs], self.precision)
        v = self.valuation + other.valuation
        p = min(self.valuation + other.precision, other.valuation + self.precision)
        out = [Fraction(0)] * max(p - v, 0)
        for i, a in enumerate(self.coeffs):
            if is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if i + j >= len(out):
                    break
                out[i + j] = out[i + j] + a * b
        return _Laurent(v, out, p)

    __rmul__ = __mul__


def _binomial(a: int, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out = out * (a - i) / (i + 1)
    return out


def _poly_at_line(coeffs: Sequence, c, m: int, terms: int) -> list:
    """Coefficients of h^0..h^{terms-1} in sum_i coeffs[i] (c (1+h)^m)^i."""
    out = [Fraction(0)] * terms
    power = Fraction(1)
    for i, a in enumerate(coeffs):
        if i:
            power = power * c
        if is_zero(a):
            continue
        base = a * power
        for k in range(terms):
            out[k] = out[k] + base * _binomial(m * i, k)
    return out


def _divide_series(num: list, den: list, terms: int) -> tuple[int, list]:
    """Laurent quotient of two power series given to equal length."""
    vd = next(i for i, x in enumerate(den) if not is_zero(x))
    den = den[vd:]
    num = num[: len(den)]
    inv0 = 1 / den[0]
    out = []
    for k in range(min(terms, len(num))):
        acc = num[k]
        for i in range(1, k + 1):
            if i < len(den):
                acc = acc - den[i] * out[k - i]
        out.append(acc * inv0)
    return -vd, out


@lru_cache(maxsize=None)
def _zeta_factor_parts(curve: CurveZeta, d: int) -> tuple[tuple, tuple]:
    """Numerator and denominator polynomials of prod_j Z_C(X/q^j)."""
    from .exactmath import Poly

    x = Poly.x()
    num = Poly([1])
    den = Poly([1])
    for j in range(1, d + 1):
        qj = Fraction(1, curve.q**j)
        num = num * curve.numerator.compose_monomial(qj, 1)
        den = den * (1 - x * qj) * (1 - x * (qj * curve.q))
    return tuple(num.coeffs), tuple(den.coeffs)


def _factor_series(curve: CurveZeta, d: int, degD: int, c, m: int, terms: int) -> _Laurent:
    """Z^d(c (1+h)^m) to ``terms`` coefficients past its valuation."""
    num, den = _zeta_factor_parts(curve, d)
    width = terms + 2
    top = _poly_at_line(num, c, m, width)
    bottom = _poly_at_line(den, c, m, width)
    mono = [(c ** (-d * degD)) * _binomial(-m * d * degD, k) for k in range(width)]
    top = [sum((mono[i] * top[k - i] for i in range(k + 1)), Fraction(0)) for k in range(width)]
    if all(is_zero(x) for x in bottom):
        raise PoleAtOne(width)
    v, coeffs = _divide_series(top, bottom, terms + 1)
    return _Laurent(v, coeffs, v + len(coeffs))


def _chain_sum(curve, d, degD, direction, consts: Sequence, terms: int) -> _Laurent:
    """sum over w in S_r of prod_j Z^d(consts[j] X^{d * partial sum}) at X = 1 + h.

    Each permutation is a maximal chain of subsets; F(S) accumulates the
    products over chains ending at S.
    """
    r = len(direction.b)
    full = (1 << r) - 1
    F = {0: _Laurent.one()}
    for mask in range(1, full + 1):
        size = bin(mask).count("1")
        acc = None
        for i in range(r):
            if mask & (1 << i):
                prev = F[mask & ~(1 << i)]
                acc = prev if acc is None else acc + prev
        if mask != full:
            m = d * sum(direction.b[i] for i in range(r) if mask & (1 << i))
            acc = acc * _factor_series(curve, d, degD, consts[size], m, terms)
        F[mask] = acc
    return F[full]


@lru_cache(maxsize=4096)
def _k_series(curve, d, degD, direction, order, k, twist) -> _Laurent:
    r = len(direction.b)
    consts = [None] + [_root(order, k * j * twist) for j in range(1, r)]
    return _chain_sum(curve, d, degD, direction, consts, r + 1)


def _psi_engine(query: IntegralQuery, direction: GenericDirection, form: str, ks: Iterable[int] | None):
    """The normalized h^0 coefficient of the (restricted) k-sum, after checking for poles."""
    r, d = query.r, query.d
    if form == "collapsed":
        order, twist, count = r, 1, r
        weight = lambda k: _root(r, -k * query.e)
    elif form == "literal":
        order, twist, count = query.n, d, query.n
        weight = lambda k: _root(query.n, -k * d * query.e)
    else:
        raise ValueError(f"unknown form {form!r}")
    total = None
    for k in range(count) if ks is None else ks:
        term = _k_series(query.curve, d, query.degD, direction, order, k, twist) * weight(k)
        total = term if total is None else total + term
    norm = Fraction(1, count * factorial(r))
    for deg in range(total.valuation, 0):
        if not is_zero(total.coeff(deg)):
            raise PoleAtOne(-deg)
    return total.coeff(0) * norm


def _rationalize(x) -> Fraction:
    if isinstance(x, CycloNumber) and not x.is_rational():
        raise NonRationalLimit(f"limit {x!r} has nonzero irrational coordinates")
    return as_rational(x)


def psi_at_one(
    query: IntegralQuery,
    direction: GenericDirection | None = None,
    method: str = "series",
    form: str = "collapsed",
) -> Fraction:
    """Psi^{d,e}_{C,D}(1) as an exact rational.

    ``form="collapsed"`` averages over mu_r, ``form="literal"`` over mu_n.
    """
    r = query.r
    if r == 1:
        return Fraction(1)
    direction = direction or GenericDirection.default(r)
    if len(direction.b) != r:
        raise DegenerateDirection(f"direction has {len(direction.b)} entries, expected {r}")
    if method == "series":
        return _rationalize(_psi_engine(query, direction, form, None))
    if method == "rational":
        return _rationalize(limit_at_one(psi_line_function(query, direction, form)))
    raise ValueError(f"unknown method {method!r}")


def psi_partial(query: IntegralQuery, ks: Iterable[int], direction: GenericDirection | None = None):
    """The part of Psi(1) coming from the listed k (mu_r form), same normalization."""
    direction = direction or GenericDirection.default(query.r)
    value = _psi_engine(query, direction, "collapsed", list(ks))
    if isinstance(value, CycloNumber) and value.is_rational():
        return value.to_rational()
    return value


def psi_line_function(query: IntegralQuery, direction: GenericDirection, form: str = "collapsed") -> CycloRationalFunction:
    """The averaged sum as one rational function of X along the line."""
    r, d = query.r, query.d
    if form == "collapsed":
        order, twist, count = r, 1, r
    else:
        order, twist, count = query.n, d, query.n
    total = CycloRationalFunction(0)
    for k in range(count):
        inner = CycloRationalFunction(0)
        for w in itertools.permutations(range(r)):
            inner = inner + phi_P_line(query.curve, d, query.degD, w, k, direction, order, twist)
        total = total + inner * _root(order, -k * twist * query.e)
    return total * Fraction(1, count * factorial(r))


def psi_line_value(query: IntegralQuery, direction: GenericDirection, X: Fraction):
    """The averaged sum evaluated at a point X of the line (X != 1)."""
    r, d = query.r, query.d
    total = Fraction(0)
    for k in range(r):
        inner = Fraction(0)
        for w in itertools.permutations(range(r)):
            inverse = [0] * r
            for i, wi in enumerate(w):
                inverse[wi] = i
            prod = Fraction(1)
            partial = 0
            for j in range(1, r):
                partial += direction.b[inverse[j - 1]]
                prod = prod * zeta_factor(query.curve, d, query.degD, _root(r, k * j) * X ** (d * partial))
            inner = inner + prod
        total = total + inner * _root(r, -k * query.e)
    return _rationalize(total * Fraction(1, r * factorial(r)))


# ------------------------------------------------------------------ final values


def q_power(q: int, numerator: int, denominator: int = 2) -> RadicalRational:
    """q^(numerator/denominator) for denominator 2, exactly."""
    if denominator != 2:
        raise ValueError("only half-integer powers are supported")
    if numerator % 2 == 0:
        return RadicalRational.of(Fraction(q) ** (numerator // 2))
    return RadicalRational.sqrt(q) * (Fraction(q) ** ((numerator - 1) // 2))


def volume_factor(curve: CurveZeta, n: int, d: int) -> Fraction:
    """q^{nd(g-1)} Z*_C(1/q) Z_C(1/q^2) ... Z_C(1/q^d)."""
    q = Fraction(curve.q)
    out = q ** (n * d * (curve.genus - 1)) * curve.zeta_star(1 / q)
    for j in range(2, d + 1):
        out *= curve.zeta(q**-j)
    return out


def integral_value(query: IntegralQuery, direction: GenericDirection | None = None, method: str = "series") -> IntegralResult:
    r = query.r
    if gcd(query.e, r) != 1:
        raise NotCoprime(f"e = {query.e} is not prime to r = {r}")
    direction = direction or GenericDirection.default(r)
    psi = psi_at_one(query, direction, method)
    power = q_power(query.curve.q, query.n * (query.n - query.d) * query.degD)
    if not power.is_rational():
        raise ArithmeticError("half-integer power of q in a rational result")
    qp = power.to_rational()
    vol = volume_factor(query.curve, query.n, query.d)
    return IntegralResult(qp * vol * psi, psi, vol, qp, direction)


def siegel_value(curve: CurveZeta, n: int) -> Fraction:
    """q^{n^2(g-1)} Z*_C(1/q) Z_C(1/q^2) ... Z_C(1/q^n)."""
    q = Fraction(curve.q)
    out = q ** (n * n * (curve.genus - 1)) * curve.numerator(1 / q) / (1 - 1 / q)
    for j in range(2, n + 1):
        t = q**-j
        out *= curve.numerator(t) / ((1 - t) * (1 - q * t))
    return out


def _is_prime(r: int) -> bool:
    return r >= 2 and all(r % p for p in range(2, int(r**0.5) + 1))


def prime_r_oracle(query: IntegralQuery) -> Fraction:
    """-(1/r) prod_{j=1}^{r-1} Z^d(zeta_r^j): the k != 0 part of Psi(1) for prime r."""
    r = query.r
    if not _is_prime(r):
        raise ValueError(f"r = {r} is not prime")
    if gcd(query.e, r) != 1:
        raise NotCoprime(f"e = {query.e} is not prime to r = {r}")
    prod = Fraction(1)
    for j in range(1, r):
        prod = prod * zeta_factor(query.curve, query.d, query.degD, _root(r, j))
    return _rationalize(prod * Fraction(-1, r))


# ---------------------------------------------------------- series vs closed form


def _regular_levi(n: int, d: int) -> Parabolic:
    return Parabolic.from_sizes([d] * (n // d))


def _series_coefficients(curve: CurveZeta, d: int, degD: int, top: int) -> dict[int, Fraction]:
    """Coefficients c_m (m <= top) of Z_{d,D}(s+d) in y = q^{-s}."""
    from .curvezeta import series_coeffs_ZdD

    start, coeffs = series_coeffs_ZdD(curve, d, degD, max(top - (-d * degD) + 1, 1))
    return {start + i: c for i, c in enumerate(coeffs)}


def _positive_direction(P0: Parabolic, P: Parabolic) -> Vec:
    """A direction with positive pairings against the coweights of P0 in P and the coroots of P."""
    inner = root_sets(P0, P)
    outer = root_sets(P, Parabolic.whole(P.n))
    mu = combination([1 + i for i in range(len(inner.roots))], inner.roots, P.n)
    return add(mu, combination([2 + i for i in range(len(outer.weights))], outer.weights, P.n))


def bridge_coefficients(
    curve: CurveZeta,
    degD: int,
    n: int,
    d: int,
    P: Parabolic,
    xi: Sequence,
    box: int,
    e: int | None = None,
    direction: Sequence | None = None,
) -> list[tuple[int, Fraction, object]]:
    """(k, series coefficient, closed-form coefficient) for the first ``box`` line exponents.

    Exponents are counted from the leading exponent of the closed form, which
    moves with xi.  The series sums over H in Z(coweights of P0) with
    tau_hat_P(H/d - xi) > 0, weighting H by the coefficients of Z_{d,D}(s+d)
    at <alpha, H> for alpha in Delta_0^P.  With ``e`` given, H is restricted by
    the degree congruence and the closed form is averaged over the shifts
    k*gamma.  Both sides carry the constant vol^{|Delta_P|+1} q^{degD dim N_0}.
    """
    P0 = _regular_levi(n, d)
    G = Parabolic.whole(n)
    if not P0.contained_in(P) or not P.is_standard():
        raise ValueError(f"{P} must be a standard parabolic containing {P0}")
    r = n // d
    q = Fraction(curve.q)
    vol = vol_gl(curve, d)
    dim_n0 = d * d * r * (r - 1) // 2
    full = root_sets(P0, G)
    inner = root_sets(P0, P)
    outer = root_sets(P, G)
    mu = tuple(Fraction(x) for x in (direction or _positive_direction(P0, P)))
    if any(dot(mu, v) <= 0 for v in inner.coweights) or any(dot(mu, v) <= 0 for v in outer.coroots):
        raise ValueError("direction must pair positively with the convergence cone")

    triplet = dual_triplet(P0)
    scale_ = line_scale(P0, mu, triplet.b)
    for cw in full.coweights:
        scale_ = lcm(scale_, dot(mu, cw).denominator)

    # ---- closed side
    from .curvezeta import ztilde_dD

    ztilde = ztilde_dD(curve, d, degD)
    psi = CofamilyMember(P0, {label: ztilde for label in full.labels})
    arg = LineArg(curve.q, mu, scale=scale_)
    dxi = scale(d, xi)
    if e is None:
        closed = c_xi_term(P0, P, psi, arg, dxi, triplet)
    else:
        gamma = combination([Fraction(j, r) for j in range(1, r)], full.roots, n)
        closed = None
        for k in range(r):
            term = c_xi_term(P0, P, psi, arg.shifted(scale(k, gamma)), dxi, triplet) * _root(r, -k * e)
            closed = term if closed is None else closed + term
        closed = closed * Fraction(1, r)
    # the psi member already contributes Ztilde(1)^{|Delta_P|} = vol^{|Delta_P|}
    closed = closed * vol * q ** (degD * dim_n0)
    valuation = 0 if closed.is_zero() else laurent_expand(closed, 1)[0]
    top = valuation + box - 1

    # ---- series side
    weights = [dot(mu, v) * scale_ for v in inner.coweights] + [dot(mu, v) * scale_ for v in outer.coroots]
    basis_dual = list(inner.coweights) + list(outer.coroots)
    lows = [Fraction(-d * degD)] * len(inner.coweights)
    steps = [Fraction(1)] * len(inner.coweights)
    for w in outer.weights:
        denom = 1
        for cw in full.coweights:
            denom = lcm(denom, dot(w, cw).denominator)
        bound = dot(w, dxi)
        first = Fraction(int(bound * denom // 1) + 1, denom)
        lows.append(first)
        steps.append(Fraction(1, denom))
    base = sum(wt * lo for wt, lo in zip(weights, lows))
    const = vol ** (len(outer.roots) + 1) * q ** (degD * dim_n0)
    per_alpha = q ** (d * d * (curve.genus - 1 - degD))

    series: dict[int, Fraction] = {}
    ranges = []
    for wt, lo, st in zip(weights, lows, steps):
        count = int((top - base) / (wt * st)) + 1 if top >= base else 0
        ranges.append([lo + i * st for i in range(count + 1)])
    coeff_top = max([int(rg[-1]) for rg in ranges[: len(inner.coweights)]], default=0)
    zeta_coeffs = _series_coefficients(curve, d, degD, coeff_top)
    for coords in itertools.product(*ranges):
        exponent = sum(wt * c for wt, c in zip(weights, coords))
        if exponent > top:
            continue
        H = combination(coords, basis_dual, n)
        cw_coords = [dot(alpha, H) for alpha in full.roots]
        if any(c.denominator != 1 for c in cw_coords):
            continue
        if e is not None and sum(j * int(c) for j, c in enumerate(cw_coords, 1)) % r != (-e) % r:
            continue
        if not tau_hat(P, G, [x - y for x, y in zip(scale(Fraction(1, d), H), xi)]):
            continue
        value = const
        for alpha in full.roots:
            if alpha in inner.roots:
                value *= per_alpha * zeta_coeffs.get(int(dot(alpha, H)), Fraction(0))
        if exponent.denominator != 1:
            raise ArithmeticError("non-integral exponent on the line")
        series[int(exponent)] = series.get(int(exponent), Fraction(0)) + value

    low = min([valuation] + list(series))
    coeffs = laurent_expand(closed, top - valuation + 1)[1] if not closed.is_zero() else []
    out = []
    for k in range(low, top + 1):
        i = k - valuation
        out.append((k, series.get(k, Fraction(0)), coeffs[i] if 0 <= i < len(coeffs) else Fraction(0)))
    return out


def series_vs_closed_check(
    curve: CurveZeta,
    degD: int,
    n: int,
    d: int,
    P: Parabolic,
    xi: Sequence,
    order: int,
    box: int | None = None,
    e: int | None = None,
    direction: Sequence | None = None,
) -> bool:
    """True when the truncated lattice series for P agrees with its closed form
    in the first ``order`` line exponents.

    ``box`` is how many exponents the series side enumerates, counted from
    the leading exponent of the closed form; it must reach ``order``.
    """
    box = order if box is None else box
    if box < order:
        raise BoxTooSmall(f"box {box} is below the comparison order {order}")
    rows = bridge_coefficients(curve, degD, n, d, P, xi, box, e, direction)
    top = rows[-1][0] - (box - order) if rows else 0
    return all(a == b for k, a, b in rows if k <= top)
