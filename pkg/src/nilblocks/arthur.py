"""Combinatorics of (G,M)-cofamilies for GL(n).

Two kinds of evaluation are supported.  Functions of a rational point
lambda return exact values (RadicalRational for the theta functions).
Exponential functions q^{-<lambda, v>} are evaluated along a line
lambda(u) = base + imag + u*dir, where ``imag`` is a purely imaginary shift
measured in units of 2*pi*i/log(q) and q^{-u} = Y^scale.  Along a line the
results are rational functions of Y; passing ``at`` to :class:`LineArg` gives
the value at one point Y = at instead, using the same code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Callable, Mapping, Sequence

from .exactmath import (
    CycloNumber,
    CycloRationalFunction,
    Poly,
    RadicalRational,
    cyclo_reduce,
    is_zero,
    lcm,
)
from .rootdata import (
    Parabolic,
    Vec,
    add,
    combination,
    coordinates,
    covolume,
    dim_a,
    dot,
    levi_part,
    parabolics_between,
    parabolics_containing,
    parabolics_with_levi,
    project,
    root_sets,
    scale,
    sub,
    tau,
    tau_hat,
    xi_bracket,
)


class SingularPoint(ArithmeticError):
    """A pairing in a denominator vanishes."""


class DegenerateXi(ValueError):
    """xi is not in general position."""


def _whole(P: Parabolic) -> Parabolic:
    return Parabolic.whole(P.n)


# ------------------------------------------------------------- theta functions


@lru_cache(maxsize=None)
def root_covolume(P: Parabolic, Q: Parabolic) -> RadicalRational:
    return covolume(list(root_sets(P, Q).roots))


@lru_cache(maxsize=None)
def coweight_covolume(P: Parabolic, Q: Parabolic) -> RadicalRational:
    return covolume(list(root_sets(P, Q).coweights))


def _pairing_product(vectors, lam) -> Fraction:
    prod = Fraction(1)
    for v in vectors:
        p = dot(lam, v)
        if p == 0:
            raise SingularPoint(f"pairing with {v} vanishes at {lam}")
        prod *= p
    return prod


def theta(P: Parabolic, Q: Parabolic, lam: Sequence) -> RadicalRational:
    return root_covolume(P, Q) * (1 / _pairing_product(root_sets(P, Q).coroots, lam))


def theta_hat(P: Parabolic, Q: Parabolic, lam: Sequence) -> RadicalRational:
    return coweight_covolume(P, Q) * (1 / _pairing_product(root_sets(P, Q).coweights, lam))


def theta_orthogonality_check(P: Parabolic, Q: Parabolic, lam: Sequence) -> bool:
    expected = RadicalRational.of(int(P == Q))
    first = RadicalRational()
    second = RadicalRational()
    for R in parabolics_between(P, Q):
        sign = (-1) ** dim_a(P, R)
        first = first + theta_hat(P, R, lam) * theta(R, Q, lam) * sign
        second = second + theta(P, R, lam) * theta_hat(R, Q, lam) * sign
    return first == expected and second == expected


def _as_radical(x) -> RadicalRational:
    return x if isinstance(x, RadicalRational) else RadicalRational.of(x)


def c_fn(P: Parabolic, Q: Parabolic, phi: Callable, lam: Sequence) -> RadicalRational:
    """Sum over R between P and Q of +-theta_hat_P^R(lam) phi(lam^R) theta_R^Q(lam)."""
    total = RadicalRational()
    for R in parabolics_between(P, Q):
        term = theta_hat(P, R, lam) * _as_radical(phi(levi_part(lam, R))) * theta(R, Q, lam)
        total = total + term * (-1) ** dim_a(R, Q)
    return total


def tilde_lambda(Q: Parabolic, P: Parabolic, lam: Sequence) -> Vec:
    """lam^P plus the sum over alpha in Delta_P^Q of <lam, coweight_alpha> alpha.

    The coweights are those of P in G.
    """
    full = root_sets(P, _whole(P))
    inner = set(root_sets(P, Q).labels)
    out = levi_part(lam, P)
    for label, alpha, cw in zip(full.labels, full.roots, full.coweights):
        if label in inner:
            out = add(out, scale(dot(lam, cw), alpha))
    return out


def tilde_c(Q: Parabolic, P: Parabolic, phi: Callable, lam: Sequence) -> RadicalRational:
    total = RadicalRational()
    for R in parabolics_between(P, Q):
        total = total + _as_radical(phi(tilde_lambda(R, P, lam))) * (-1) ** dim_a(R, Q)
    return theta_hat(P, Q, tilde_lambda(Q, P, lam)) * total


# -------------------------------------------------------------- Gamma functions


def gamma_fn(P: Parabolic, Q: Parabolic, H: Sequence, X: Sequence, xi: Sequence) -> int:
    """Alternating sum of tau_P^R(H - X) tau_hat_R^Q(H - xi) over P in R in Q."""
    hx, hxi = sub(H, X), sub(H, xi)
    return sum(
        (-1) ** dim_a(R, Q) * tau(P, R, hx) * tau_hat(R, Q, hxi)
        for R in parabolics_between(P, Q)
    )


def gamma_prime(Q: Parabolic, H: Sequence, T: Sequence) -> int:
    return gamma_fn(Q, _whole(Q), H, [0] * Q.n, T)


# ------------------------------------------------------------------ lines


def _root_of_unity(t: Fraction):
    """exp(-2 pi i t) as a cyclotomic number."""
    t = Fraction(t)
    if t.denominator == 1:
        return Fraction(1)
    return cyclo_reduce(t.denominator, -t.numerator)


@dataclass(frozen=True)
class LineArg:
    """The point lambda(u) = base + imag + u*dir with q^{-u} = Y**scale.

    ``imag`` is measured in units of 2*pi*i/log(q).  When ``at`` is given,
    monomials are evaluated at Y = at rather than kept symbolic.
    """

    q: int
    dir: Vec
    base: Vec | None = None
    imag: Vec | None = None
    scale: int = 1
    at: object = None

    def _parts(self, v: Sequence) -> tuple[Fraction, Fraction, Fraction]:
        re = dot(self.base, v) if self.base is not None else Fraction(0)
        im = dot(self.imag, v) if self.imag is not None else Fraction(0)
        return re, im, dot(self.dir, v)

    def monomial_data(self, v: Sequence):
        """(c, e) with q^{-<lambda(u), v>} = c * Y**e."""
        re, im, slope = self._parts(v)
        if re.denominator != 1:
            raise ValueError(f"non-integral real pairing {re} along the line")
        e = slope * self.scale
        if e.denominator != 1:
            raise ValueError(f"exponent {e} is not integral; increase the line scale")
        c = Fraction(self.q) ** (-int(re)) * _root_of_unity(im)
        return c, int(e)

    def monomial(self, v: Sequence):
        c, e = self.monomial_data(v)
        if self.at is not None:
            return c * self.at ** e
        return CycloRationalFunction.monomial(c, e)

    def geometric(self, v: Sequence):
        """1 / (1 - q^{-<lambda, v>})."""
        c, e = self.monomial_data(v)
        if e == 0 and c == 1:
            raise SingularPoint(f"q^(-<lambda, {v}>) is identically 1 on the line")
        denom = 1 - self.monomial(v)
        if denom.is_zero() if isinstance(denom, CycloRationalFunction) else is_zero(denom):
            raise SingularPoint(f"pole of 1/(1 - q^(-<lambda, {v}>)) at the evaluation point")
        return 1 / denom

    def apply(self, f: CycloRationalFunction, v: Sequence):
        """f(q^{-<lambda, v>})."""
        c, e = self.monomial_data(v)
        if self.at is not None:
            return f(self.monomial(v))
        return f.compose_monomial(c, e)

    def shifted(self, nu: Sequence) -> "LineArg":
        imag = add(self.imag, nu) if self.imag is not None else tuple(Fraction(x) for x in nu)
        return LineArg(self.q, self.dir, self.base, imag, self.scale, self.at)

    def divided(self, b: int) -> "LineArg":
        """The point lambda(u)/b, same variable Y."""
        f = Fraction(1, b)
        return LineArg(
            self.q,
            scale(f, self.dir),
            scale(f, self.base) if self.base is not None else None,
            scale(f, self.imag) if self.imag is not None else None,
            self.scale,
            self.at,
        )

    def one(self):
        return Fraction(1) if self.at is not None else CycloRationalFunction(1)


def vartheta(P: Parabolic, Q: Parabolic, xi: Sequence, arg: LineArg):
    if P == Q:
        return arg.one()
    rs = root_sets(P, Q)
    out = arg.monomial(xi_bracket(xi, P, Q))
    for cor in rs.coroots:
        out = out * arg.geometric(cor)
    return out


def vartheta_hat(P: Parabolic, Q: Parabolic, arg: LineArg):
    out = arg.one()
    for cw in root_sets(P, Q).coweights:
        out = out * arg.geometric(cw)
    return out


# ---------------------------------------------------------------- cofamilies


@dataclass(frozen=True)
class CofamilyMember:
    """phi_P(lambda) = product over alpha in Delta_P of f_alpha(q^{-<lambda, coweight_alpha>}).

    ``factors`` maps the label of a simple root of P (index of the adjacent
    block pair) to a rational function of one variable.
    """

    parabolic: Parabolic
    factors: Mapping[int, CycloRationalFunction] = field(hash=False)

    def _coweights(self):
        rs = root_sets(self.parabolic, _whole(self.parabolic))
        return list(zip(rs.labels, rs.coweights))

    def evaluate(self, arg: LineArg, R: Parabolic | None = None):
        """phi_P((lambda)^R) along the line (R = G means no projection)."""
        out = arg.one()
        for label, cw in self._coweights():
            f = self.factors.get(label)
            if f is None:
                continue
            v = levi_part(cw, R) if R is not None else cw
            out = out * arg.apply(f, v)
        return out

    def value_at(self, lam: Sequence, q: int):
        """phi_P at a rational point with integral pairings."""
        out = Fraction(1)
        for label, cw in self._coweights():
            f = self.factors.get(label)
            if f is None:
                continue
            k = dot(lam, cw)
            if k.denominator != 1:
                raise ValueError("sample point must have integral coweight pairings")
            out = out * f(Fraction(q) ** (-int(k)))
        return out


def product_family(M: Parabolic, f: CycloRationalFunction) -> list[CofamilyMember]:
    """The family phi_P = product of f over the simple roots of P."""
    out = []
    for P in parabolics_with_levi(M):
        labels = root_sets(P, _whole(P)).labels
        out.append(CofamilyMember(P, {j: f for j in labels}))
    return out


def cofamily_check(members: Sequence[CofamilyMember], q: int, samples: int = 5, seed: int = 0):
    """Check the gluing condition on lattice points of each co-adjacent wall.

    Returns (True, None) or (False, (P1, P2, lambda)).
    """
    import random

    from .rootdata import co_adjacent

    rng = random.Random(seed)
    by_parabolic = {m.parabolic: m for m in members}
    for m1, m2 in itertools.combinations(members, 2):
        P1, P2 = m1.parabolic, m2.parabolic
        witness = co_adjacent(P1, P2)
        if witness is None:
            continue
        roots = root_sets(P1, _whole(P1)).roots
        wall = [a for a in roots if dot(a, witness) == 0]
        for _ in range(samples):
            lam = combination([rng.randint(-3, 3) for _ in wall], wall, P1.n)
            if by_parabolic[P1].value_at(lam, q) != by_parabolic[P2].value_at(lam, q):
                return False, (P1, P2, lam)
    return True, None


def assemble_phi_M(members: Sequence[CofamilyMember], arg: LineArg):
    """Sum over P of vartheta_hat_P^G(lambda) phi_P(lambda) (periodic version)."""
    total = None
    for m in members:
        P = m.parabolic
        term = vartheta_hat(P, _whole(P), arg) * m.evaluate(arg)
        total = term if total is None else total + term
    return total


def assemble_phi_M_point(members: Mapping[Parabolic, Callable], lam: Sequence) -> RadicalRational:
    """Sum over P of theta_hat_P^G(lambda) phi_P(lambda) at a rational point."""
    total = RadicalRational()
    for P, phi in members.items():
        total = total + theta_hat(P, _whole(P), lam) * _as_radical(phi(lam))
    return total


# --------------------------------------------------------------- dual triplets


@dataclass(frozen=True)
class DualTriplet:
    """Averaging data: nu runs over sum k_alpha * alpha with 0 <= k_alpha < bprime."""

    levi: Parabolic
    b: int
    bprime: int

    @property
    def roots(self) -> tuple[Vec, ...]:
        P = parabolics_with_levi(self.levi)[0]
        return root_sets(P, _whole(P)).roots

    @property
    def reps(self):
        return itertools.product(range(self.bprime), repeat=len(self.roots))

    @property
    def size(self) -> int:
        return self.bprime ** len(self.roots)

    @property
    def nus(self):
        roots = self.roots
        return (combination(k, roots, self.levi.n) for k in self.reps)


def _denominator_lcm(values) -> int:
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out


def _triplet_constraints(M: Parabolic):
    """Yield (P, R, coweights of P in G, coweights of P in R, coroots of R in G)."""
    for P in parabolics_with_levi(M):
        G = _whole(P)
        full = root_sets(P, G).coweights
        for R in parabolics_containing(P):
            yield P, R, full, root_sets(P, R).coweights, root_sets(R, G).coroots


def _triplet_valid(M: Parabolic, b: int, bprime: int) -> bool:
    for _, _, full, inner, outer in _triplet_constraints(M):
        basis = list(inner) + list(outer)
        for w in full:
            coords = coordinates(w, basis)
            if coords is None:
                return False
            if any(c.denominator != 1 for c in coords[: len(inner)]):
                return False
            if any((b * c).denominator != 1 for c in coords[len(inner):]):
                return False
        for g in list(inner) + [scale(Fraction(1, b), v) for v in outer]:
            coords = coordinates(g, list(full))
            if coords is None or any((bprime * c).denominator != 1 for c in coords):
                return False
    return True


def dual_triplet(M: Parabolic, b: int | None = None, bprime: int | None = None) -> DualTriplet:
    """Build (reps, b, b') for the Levi of M, searching small values if not given."""
    if b is None:
        b = 1
        for _, _, full, inner, outer in _triplet_constraints(M):
            basis = list(inner) + list(outer)
            for w in full:
                coords = coordinates(w, basis)
                b = lcm(b, _denominator_lcm(coords[len(inner):]))
    if bprime is None:
        bprime = 1
        for _, _, full, inner, outer in _triplet_constraints(M):
            for g in list(inner) + [scale(Fraction(1, b), v) for v in outer]:
                bprime = lcm(bprime, _denominator_lcm(coordinates(g, list(full))))
    if not _triplet_valid(M, b, bprime):
        raise ValueError(f"(b, b') = ({b}, {bprime}) does not satisfy the lattice inclusions")
    return DualTriplet(M, b, bprime)


def triplet_indicator(triplet: DualTriplet, H: Sequence, method: str = "product"):
    """(1/|N|) * sum over nu of q^{-<nu, H>} (nu imaginary), an exact number.

    The sum over nu = sum k_alpha alpha splits into one geometric sum per
    root; ``method="literal"`` adds up all |N| terms instead.
    """
    if method == "literal":
        total = Fraction(0)
        for nu in triplet.nus:
            total = total + _root_of_unity(dot(nu, H))
        return total / triplet.size
    out = Fraction(1)
    for alpha in triplet.roots:
        step = _root_of_unity(dot(alpha, H))
        power, acc = Fraction(1), Fraction(0)
        for _ in range(triplet.bprime):
            acc = acc + power
            power = power * step
        out = out * acc / triplet.bprime
    return out


def line_scale(M: Parabolic, direction: Sequence, b: int = 1) -> int:
    """A scale making every exponent used by c_xi_fn along ``direction`` integral."""
    out = 1
    for P in parabolics_with_levi(M):
        for R in parabolics_containing(P):
            rs = root_sets(P, R)
            for v in rs.coroots + rs.coweights + rs.weights:
                out = lcm(out, dot(direction, v).denominator)
            for cw in root_sets(P, _whole(P)).coweights:
                out = lcm(out, dot(direction, levi_part(cw, R)).denominator)
            for cor in root_sets(R, _whole(R)).coroots:
                out = lcm(out, (dot(direction, cor) / b).denominator)
    return out * b


def generic_direction(M: Parabolic, direction: Sequence) -> bool:
    """True when no exponent used by c_xi_fn is identically zero along ``direction``."""
    for P in parabolics_with_levi(M):
        for R in parabolics_containing(P):
            rs = root_sets(P, R)
            vectors = list(rs.coroots) + list(rs.coweights)
            vectors += list(root_sets(R, _whole(R)).coroots)
            if any(dot(direction, v) == 0 for v in vectors):
                return False
    return True


def general_position(xi: Sequence, M: Parabolic, factors: Sequence[int] = (1,)) -> bool:
    for P in parabolics_with_levi(M):
        for R in parabolics_containing(P):
            rs = root_sets(P, R)
            for f in factors:
                x = scale(f, xi)
                if any(dot(w, x).denominator == 1 for w in rs.weights):
                    return False
                if any(dot(c, x) == 0 for c in rs.coroots):
                    return False
    return True


def hermite_basis(rows: Sequence[Sequence[int]], k: int) -> list[list[int]]:
    """Upper triangular integer basis (positive pivots) of the lattice spanned by ``rows``.

    The rows must span a full-rank sublattice of Z^k.
    """
    rows = [list(r) for r in rows if any(r)]
    basis = []
    for col in range(k):
        live = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            pivot = live[0]
            nxt = [pivot]
            for r in live[1:]:
                f = r[col] // pivot[col]
                r = [x - f * y for x, y in zip(r, pivot)]
                (nxt if r[col] != 0 else rest).append(r)
            live = nxt
        if not live:
            raise ValueError("generators do not span a full-rank lattice")
        pivot = live[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        rows = [r for r in rest if any(r)]
    return basis


def coset_representatives(rows: Sequence[Sequence[int]], k: int) -> list[tuple[int, ...]]:
    """One representative per coset of Z^k modulo the lattice spanned by ``rows``."""
    pivots = [row[i] for i, row in enumerate(hermite_basis(rows, k))]
    return list(itertools.product(*(range(d) for d in pivots)))


@lru_cache(maxsize=None)
def _reduced_shifts(P: Parabolic, R: Parabolic, b: int) -> tuple[Vec, ...]:
    """Representatives of Z(Delta_P) modulo Z(Delta_P^R) + b Z(weights of R in G)."""
    G = _whole(P)
    roots = list(root_sets(P, G).roots)
    gens = list(root_sets(P, R).roots) + [scale(b, w) for w in root_sets(R, G).weights]
    rows = []
    for g in gens:
        coords = coordinates(g, roots)
        if coords is None or any(c.denominator != 1 for c in coords):
            raise ValueError("triplet parameter b violates the lattice inclusion")
        rows.append([int(c) for c in coords])
    reps = coset_representatives(rows, len(roots))
    return tuple(combination(k, roots, P.n) for k in reps)


def c_xi_term(
    P: Parabolic,
    R: Parabolic,
    phi: CofamilyMember,
    arg: LineArg,
    xi: Sequence,
    triplet: DualTriplet,
    method: str = "reduced",
):
    """Average over nu of vartheta_hat_P^R(l) phi^R(l) vartheta_R^{G, b xi}(l/b), l = lambda + nu.

    ``method="literal"`` averages over all of N.  The default averages over
    Z(Delta_P) modulo Z(Delta_P^R) + b Z(weights of R), a lattice under which
    the summand is invariant and which contains b' Z(Delta_P); both give the
    same average.
    """
    G = _whole(P)
    b = triplet.b
    bxi = scale(b, xi)
    if method == "literal":
        shifts, count = triplet.nus, triplet.size
    else:
        shifts = _reduced_shifts(P, R, b)
        count = len(shifts)
    acc = None
    for nu in shifts:
        a = arg.shifted(nu)
        t = vartheta_hat(P, R, a) * phi.evaluate(a, R) * vartheta(R, G, bxi, a.divided(b))
        acc = t if acc is None else acc + t
    return acc * Fraction(1, count)


def c_xi_fn(
    P: Parabolic,
    phi: CofamilyMember,
    arg: LineArg,
    xi: Sequence,
    triplet: DualTriplet,
    method: str = "reduced",
):
    """Alternating sum over R containing P of the averaged terms (see c_xi_term)."""
    G = _whole(P)
    total = None
    for R in parabolics_containing(P):
        term = c_xi_term(P, R, phi, arg, xi, triplet, method)
        if dim_a(R, G) % 2:
            term = -term
        total = term if total is None else total + term
    return total


def ppalper_check(
    members: Sequence[CofamilyMember],
    arg: LineArg,
    xi: Sequence,
    triplet: DualTriplet | None = None,
    method: str = "reduced",
) -> bool:
    M = members[0].parabolic
    if triplet is None:
        triplet = dual_triplet(M)
    if not general_position(xi, M, (1, triplet.b)):
        raise DegenerateXi(f"{xi} is not in general position")
    left = assemble_phi_M(members, arg)
    right = None
    for m in members:
        term = c_xi_fn(m.parabolic, m, arg, xi, triplet, method)
        right = term if right is None else right + term
    return left == right


def xigeneral_check(M: Parabolic, Q: Parabolic, xi: Sequence, arg: LineArg) -> bool:
    if not general_position(xi, M):
        raise DegenerateXi(f"{xi} is not in general position")
    total = None
    for P in parabolics_with_levi(M):
        if not P.contained_in(Q):
            continue
        term = vartheta(P, Q, xi, arg)
        total = term if total is None else total + term
    expected = 1 if M.levi == Q.levi else 0
    return total == expected


def monomial_member(P: Parabolic, X: Sequence) -> CofamilyMember:
    """The member phi(lambda) = q^{-<lambda, X>} for X in the coweight lattice of P."""
    rs = root_sets(P, _whole(P))
    factors = {}
    z = CycloRationalFunction.x()
    for label, alpha in zip(rs.labels, rs.roots):
        k = dot(alpha, X)
        if k.denominator != 1:
            raise ValueError("X must lie in the coweight lattice")
        factors[label] = z ** int(k)
    return CofamilyMember(P, factors)


def gamma_fourier_sum(P: Parabolic, X: Sequence, xi: Sequence, arg: LineArg, radius: int):
    """Sum over H in the coweight lattice (coordinates within ``radius``) of
    Gamma_P^G(H, X', xi) q^{-<lambda, H>}, with X' = X - sum of coweights.

    Also returns the largest |coordinate| where Gamma was nonzero, so callers
    can confirm the box contains the support.
    """
    G = _whole(P)
    cws = root_sets(P, G).coweights
    shifted = X
    for cw in cws:
        shifted = sub(shifted, cw)
    total = None
    reach = 0
    for coeffs in itertools.product(range(-radius, radius + 1), repeat=len(cws)):
        H = combination(coeffs, cws, P.n)
        g = gamma_fn(P, G, H, shifted, xi)
        if g:
            reach = max(reach, max(abs(c) for c in coeffs))
            term = arg.monomial(H) * g
            total = term if total is None else total + term
    if total is None:
        total = arg.one() * 0
    return total, reach


# ---------------------------------------------------------- lines in u (non-periodic)


def theta_line(P: Parabolic, Q: Parabolic, mu: Sequence, hat: bool = False):
    """theta (or theta_hat) at lambda = u*mu as (radical constant, rational function of u)."""
    rs = root_sets(P, Q)
    vecs = rs.coweights if hat else rs.coroots
    const = coweight_covolume(P, Q) if hat else root_covolume(P, Q)
    slope = _pairing_product(vecs, mu) if vecs else Fraction(1)
    u = Poly.x()
    f = CycloRationalFunction(Poly([1 / slope]), u ** len(vecs))
    return const, f


def c_fn_line(P: Parabolic, Q: Parabolic, phi_line: Callable, mu: Sequence) -> dict:
    """c_P^Q(phi, u*mu) as {squarefree m: rational function of u} meaning sum sqrt(m) f_m(u).

    ``phi_line(v)`` must return phi(u*v) as a rational function of u.
    """
    out: dict[int, CycloRationalFunction] = {}
    for R in parabolics_between(P, Q):
        c1, f1 = theta_line(P, R, mu, hat=True)
        c2, f2 = theta_line(R, Q, mu)
        const = c1 * c2 * (-1) ** dim_a(R, Q)
        f = f1 * f2 * phi_line(levi_part(mu, R))
        for m, c in const.terms.items():
            out[m] = out.get(m, CycloRationalFunction(0)) + f * c
    return {m: f for m, f in out.items() if not f.is_zero()}
