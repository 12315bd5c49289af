"""Randomized identity suites run by ``check-identities``.

Each suite takes (n, rng) and returns None on success or a short description
of the first counterexample.  Inputs that land on a singular hyperplane are
redrawn rather than counted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..arthur import (
    LineArg,
    SingularPoint,
    assemble_phi_M_point,
    c_fn,
    cofamily_check,
    dual_triplet,
    gamma_fn,
    gamma_prime,
    general_position,
    product_family,
    theta_orthogonality_check,
    triplet_indicator,
    xigeneral_check,
)
from ..curvezeta import CurveZeta, series_coeffs_ZdD, vol_gl, ztilde_dD
from ..exactmath import CycloRationalFunction, Poly, RadicalRational
from ..orbits import (
    BlockNilpotent,
    Partition,
    dim_orbit,
    dominates,
    induce_to_group,
    ls_induce,
    richardson,
    transpose,
)
from ..rootdata import (
    Parabolic,
    all_parabolics,
    co_adjacent,
    combination,
    coordinates,
    dim_a,
    dot,
    levi_part,
    parabolics_between,
    parabolics_with_levi,
    project,
    root_sets,
    scale,
    standard_parabolics,
    tau,
    tau_hat,
    xi_bracket,
)


@dataclass(frozen=True)
class Suite:
    module: str
    identity: str
    run: Callable[[int, random.Random], str | None]


def random_vec(rng: random.Random, n: int, spread: int = 9, den: int = 1) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(-spread * den, spread * den), den) for _ in range(n))


def generic_xi(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    """A point whose pairings with every weight and coroot are non-integral."""
    while True:
        xi = tuple(Fraction(rng.randint(-60, 60), rng.choice((7, 11, 13))) for _ in range(n))
        if general_position(xi, Parabolic.borel(n)):
            return xi


def _chains(n: int):
    parabolics = all_parabolics(n) if n <= 3 else standard_parabolics(n)
    for P in parabolics:
        for Q in parabolics:
            if P.contained_in(Q):
                yield P, Q


# ------------------------------------------------------------------ rootdata


def duality(n, rng):
    for P, Q in _chains(n):
        rs = root_sets(P, Q)
        for i, a in enumerate(rs.roots):
            for j, w in enumerate(rs.coweights):
                if dot(a, w) != (i == j):
                    return f"roots/coweights of {P} in {Q}"
            for j, w in enumerate(rs.weights):
                if dot(w, rs.coroots[i]) != (i == j):
                    return f"weights/coroots of {P} in {Q}"
    return None


def tau_orthogonality(n, rng, samples=20):
    for P, Q in _chains(n):
        for _ in range(samples):
            H = random_vec(rng, n)
            first = sum((-1) ** dim_a(P, R) * tau(P, R, H) * tau_hat(R, Q, H) for R in parabolics_between(P, Q))
            second = sum((-1) ** dim_a(P, R) * tau_hat(P, R, H) * tau(R, Q, H) for R in parabolics_between(P, Q))
            if first != (P == Q) or second != (P == Q):
                return f"P={P}, Q={Q}, H={H}"
    return None


def bracket_projection(n, rng, samples=30):
    for _ in range(samples):
        xi = random_vec(rng, n, den=rng.choice((2, 3, 5, 7)))
        for P, Q in _chains(n):
            bracket = xi_bracket(xi, P, Q)
            if P != Q:
                coords = coordinates(bracket, root_sets(P, Q).coroots)
                if coords is None or any(c.denominator != 1 for c in coords):
                    return f"bracket of {xi} for {P} in {Q} leaves the coroot lattice"
            for R in parabolics_between(P, Q):
                if project(bracket, R, Q) != xi_bracket(xi, R, Q):
                    return f"xi={xi}, P={P}, R={R}, Q={Q}"
    return None


def co_adjacency_symmetry(n, rng):
    for M in {P.levi for P in all_parabolics(n)}:
        members = parabolics_with_levi(M)
        for P1 in members:
            for P2 in members:
                w12, w21 = co_adjacent(P1, P2), co_adjacent(P2, P1)
                if (w12 is None) != (w21 is None):
                    return f"{P1}, {P2}"
                if w12 is not None and tuple(-x for x in w12) != tuple(w21):
                    return f"witness sign for {P1}, {P2}"
    return None


def parabolic_count(n, rng):
    ordered_bell = {1: 1, 2: 3, 3: 13, 4: 75, 5: 541}
    if n in ordered_bell and len(all_parabolics(n)) != ordered_bell[n]:
        return f"{len(all_parabolics(n))} parabolics for n={n}"
    if len(standard_parabolics(n)) != 2 ** (n - 1):
        return "standard parabolic count"
    return None


# -------------------------------------------------------------------- arthur


def _generic_lambda(rng, n):
    while True:
        lam = random_vec(rng, n, den=rng.choice((1, 2, 3)))
        G = Parabolic.whole(n)
        vectors = [v for P in all_parabolics(n) for Q in parabolics_between(P, G) for v in root_sets(P, Q).coweights]
        if all(dot(lam, v) != 0 for v in vectors):
            return lam


def theta_orthogonality(n, rng, samples=5):
    for _ in range(samples):
        lam = _generic_lambda(rng, n)
        for P, Q in _chains(min(n, 3)):
            if not theta_orthogonality_check(P, Q, lam):
                return f"P={P}, Q={Q}, lambda={lam}"
    return None


def c_of_constant(n, rng, samples=5):
    for _ in range(samples):
        lam = _generic_lambda(rng, n)
        for P, Q in _chains(min(n, 3)):
            value = c_fn(P, Q, lambda _: 1, lam)
            if value != RadicalRational.of(int(P == Q)):
                return f"P={P}, Q={Q}, lambda={lam}"
    return None


def _poly_product_member(P: Parabolic, f: Poly):
    cws = root_sets(P, Parabolic.whole(P.n)).coweights

    def phi(lam):
        out = Fraction(1)
        for cw in cws:
            out *= f(dot(lam, cw))
        return out

    return phi


def cofamily_assembly(n, rng, samples=5):
    """The assembled function equals the sum of c-operators."""
    f = Poly([Fraction(rng.randint(1, 5)), Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-2, 2))])
    M = Parabolic.borel(n)
    members = {P: _poly_product_member(P, f) for P in parabolics_with_levi(M)}
    G = Parabolic.whole(n)
    for _ in range(samples):
        lam = _generic_lambda(rng, n)
        left = assemble_phi_M_point(members, lam)
        right = RadicalRational()
        for P, phi in members.items():
            right = right + c_fn(P, G, phi, lam)
        if left != right:
            return f"f={f.coeffs}, lambda={lam}"
    return None


def cofamily_gluing(n, rng):
    z = CycloRationalFunction.x()
    f = (1 + z * 2) / (1 - z * Fraction(1, 3))
    for M in (Parabolic.borel(n), Parabolic.from_sizes([1] * (n - 2) + [2]) if n >= 2 else Parabolic.borel(n)):
        ok, witness = cofamily_check(product_family(M, f), 2, samples=3, seed=rng.randint(0, 10**6))
        if not ok:
            return f"gluing fails at {witness}"
    return None


def xi_general(n, rng, samples=2):
    G = Parabolic.whole(n)
    M = Parabolic.borel(n)
    for _ in range(samples):
        xi = generic_xi(rng, n)
        mu = tuple(Fraction(rng.randint(1, 40)) * (1 if i % 2 else 3) + i for i in range(n))
        arg = LineArg(2, mu, at=Fraction(rng.randint(2, 50), rng.randint(51, 99)))
        try:
            if not xigeneral_check(M, G, xi, arg):
                return f"xi={xi}, direction={mu}"
        except SingularPoint:
            continue
    return None


def gamma_inversion(n, rng, samples=20):
    """tau_hat_P(H - T) = sum over Q of (-1)^{dim a_Q^G} tau_hat_P^Q(H) Gamma'_Q(H, T)."""
    G = Parabolic.whole(n)
    for _ in range(samples):
        H = random_vec(rng, n, den=7)
        T = random_vec(rng, n, den=11)
        for P in standard_parabolics(n):
            rhs = sum(
                (-1) ** dim_a(Q, G) * tau_hat(P, Q, H) * gamma_prime(Q, H, T)
                for Q in parabolics_between(P, G)
            )
            if tau_hat(P, G, [h - t for h, t in zip(H, T)]) != rhs:
                return f"P={P}, H={H}, T={T}"
    return None


def gamma_projection(n, rng, samples=20):
    G = Parabolic.whole(n)
    for _ in range(samples):
        H, X, xi = random_vec(rng, n, den=5), random_vec(rng, n, den=5), random_vec(rng, n, den=7)
        c = Fraction(rng.randint(-5, 5), 3)
        shift = lambda v: tuple(x + c for x in v)
        for P in standard_parabolics(n):
            if gamma_fn(P, G, H, X, xi) != gamma_fn(P, G, shift(H), shift(X), xi):
                return f"P={P}, H={H}, X={X}"
    return None


def triplet_orthogonality(n, rng, samples=20):
    M = Parabolic.borel(n)
    triplet = dual_triplet(M)
    cws = root_sets(M, Parabolic.whole(n)).coweights
    for _ in range(samples):
        coeffs = [Fraction(rng.randint(-12, 12), triplet.bprime) for _ in cws]
        H = combination(coeffs, cws, n)
        inside = all(c.denominator == 1 for c in coeffs)
        if triplet_indicator(triplet, H) != int(inside):
            return f"H={H}"
    return None


# -------------------------------------------------------------------- orbits


def _random_partition(rng, n):
    parts, left = [], n
    while left:
        p = rng.randint(1, left)
        parts.append(p)
        left -= p
    return Partition.sorted(parts)


def _random_composition(rng, n):
    cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1))) if n > 1 else []
    bounds = [0] + cuts + [n]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def richardson_rectangle(n, rng):
    for d in range(1, n + 1):
        if n % d == 0:
            lam = richardson([d] * (n // d))
            if lam != Partition.rectangle(n // d, d) or dim_orbit(lam) != n * (n - d):
                return f"n={n}, d={d}"
    return None


def transpose_involution(n, rng, samples=30):
    for _ in range(samples):
        lam = _random_partition(rng, rng.randint(1, max(n, 8)))
        if transpose(transpose(lam)) != lam:
            return f"{lam}"
    return None


def induction_transitivity(n, rng, samples=30):
    for _ in range(samples):
        m = rng.randint(1, max(n, 10))
        outer = _random_composition(rng, m)
        inner = [_random_composition(rng, s) for s in outer]
        parts = [[_random_partition(rng, s) for s in block] for block in inner]
        stepwise = ls_induce(outer, [ls_induce(b, p) for b, p in zip(inner, parts)])
        direct = ls_induce([s for b in inner for s in b], [p for ps in parts for p in ps])
        if stepwise != direct:
            return f"outer={outer}, inner={inner}, parts={parts}"
    return None


def induction_monotone(n, rng):
    X = BlockNilpotent.zero(Parabolic.borel(n))
    for P in standard_parabolics(n):
        for Q in standard_parabolics(n):
            if P.contained_in(Q) and not dominates(induce_to_group(P, X), induce_to_group(Q, X)):
                return f"P={P}, Q={Q}"
    return None


# ----------------------------------------------------------------- curvezeta


SAMPLE_CURVES = (
    CurveZeta.from_numerator(2, 0, [1]),
    CurveZeta.from_numerator(3, 0, [1]),
    CurveZeta.from_point_counts(2, 1, [3]),
)


def class_number_volume(n, rng):
    for c in SAMPLE_CURVES:
        if vol_gl(c, 1) != c.class_number / (c.q - 1):
            return f"q={c.q}, g={c.genus}"
    return None


def ztilde_at_one(n, rng):
    for c in SAMPLE_CURVES:
        for d in (1, 2):
            values = {ztilde_dD(c, d, degD)(Fraction(1)) for degD in (-1, 0, 2)}
            if values != {vol_gl(c, d)}:
                return f"q={c.q}, g={c.genus}, d={d}"
    return None


def series_nonnegative(n, rng):
    for c in SAMPLE_CURVES:
        for d in (1, 2):
            _, coeffs = series_coeffs_ZdD(c, d, rng.randint(-1, 2), 12)
            if any(x < 0 for x in coeffs):
                return f"q={c.q}, g={c.genus}, d={d}"
    return None


SUITES = (
    Suite("rootdata", "dual-bases", duality),
    Suite("rootdata", "tau-orthogonality", tau_orthogonality),
    Suite("rootdata", "bracket-projection", bracket_projection),
    Suite("rootdata", "co-adjacency-symmetry", co_adjacency_symmetry),
    Suite("rootdata", "parabolic-count", parabolic_count),
    Suite("arthur", "theta-orthogonality", theta_orthogonality),
    Suite("arthur", "c-of-constant", c_of_constant),
    Suite("arthur", "assembly-equals-c-sum", cofamily_assembly),
    Suite("arthur", "product-family-gluing", cofamily_gluing),
    Suite("arthur", "xi-general-sum", xi_general),
    Suite("arthur", "gamma-inversion", gamma_inversion),
    Suite("arthur", "gamma-central-shift", gamma_projection),
    Suite("arthur", "triplet-orthogonality", triplet_orthogonality),
    Suite("orbits", "richardson-rectangle", richardson_rectangle),
    Suite("orbits", "transpose-involution", transpose_involution),
    Suite("orbits", "induction-transitivity", induction_transitivity),
    Suite("orbits", "induction-monotone", induction_monotone),
    Suite("curvezeta", "class-number-volume", class_number_volume),
    Suite("curvezeta", "ztilde-at-one", ztilde_at_one),
    Suite("curvezeta", "series-nonnegative", series_nonnegative),
)


def run_suites(n: int, seed: int) -> list[dict]:
    """Run every suite in order, stopping at the first failure."""
    out = []
    for suite in SUITES:
        rng = random.Random(f"{seed}:{suite.identity}")
        failure = suite.run(n, rng)
        out.append(
            {
                "module": suite.module,
                "identity": suite.identity,
                "passed": failure is None,
                "counterexample": failure,
            }
        )
        if failure is not None:
            break
    return out
