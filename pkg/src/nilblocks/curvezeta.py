"""Zeta functions of curves over F_q and the zeta-type factors built from them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactmath import CycloRationalFunction, Poly, laurent_expand


class InconsistentCurve(ValueError):
    """Point counts or numerator incompatible with a curve zeta function."""


class SingularArgument(ArithmeticError):
    """The argument makes the zeta function identically singular."""


def _functional_equation_holds(q: int, genus: int, coeffs: Sequence[Fraction]) -> bool:
    """P(t) = q^g t^{2g} P(1/(qt)), i.e. c_{2g-i} = q^{g-i} c_i."""
    if len(coeffs) != 2 * genus + 1:
        return False
    return all(coeffs[2 * genus - i] == Fraction(q) ** (genus - i) * coeffs[i] for i in range(2 * genus + 1))


@dataclass(frozen=True)
class CurveZeta:
    """Z_C(t) = numerator(t) / ((1 - t)(1 - q t))."""

    q: int
    genus: int
    numerator: Poly

    def __post_init__(self):
        if self.q < 2:
            raise InconsistentCurve(f"q must be at least 2, got {self.q}")
        coeffs = list(self.numerator.coeffs) + [Fraction(0)] * (2 * self.genus + 1 - len(self.numerator.coeffs))
        if not coeffs or coeffs[0] != 1:
            raise InconsistentCurve("numerator must satisfy P(0) = 1")
        if self.numerator.degree != 2 * self.genus:
            raise InconsistentCurve(f"numerator degree {self.numerator.degree} differs from 2g = {2 * self.genus}")
        if not _functional_equation_holds(self.q, self.genus, coeffs):
            raise InconsistentCurve("numerator violates P(t) = q^g t^(2g) P(1/(q t))")

    @classmethod
    def from_numerator(cls, q: int, genus: int, coeffs: Sequence) -> "CurveZeta":
        return cls(q, genus, Poly([Fraction(c) for c in coeffs]))

    @classmethod
    def from_point_counts(cls, q: int, genus: int, counts: Sequence[int]) -> "CurveZeta":
        """Build Z_C from |C(F_{q^k})| for k = 1..len(counts).

        The first ``genus`` counts determine the numerator; any further counts
        are checked against the completed zeta function.
        """
        if len(counts) < genus:
            raise InconsistentCurve(f"need {genus} point counts, got {len(counts)}")
        known = max(len(counts), genus)
        z = _exp_log_series([Fraction(c) for c in counts], known)
        # P(t) = Z(t) (1 - t)(1 - q t), truncated at degree `known`
        head = _mul_truncated(z, [Fraction(1), Fraction(-1 - q), Fraction(q)], known)
        coeffs = head[: genus + 1] + [Fraction(0)] * genus
        for i in range(genus):
            coeffs[2 * genus - i] = Fraction(q) ** (genus - i) * coeffs[i]
        curve = cls(q, genus, Poly(coeffs))
        predicted = curve.point_counts(known)
        if predicted != [Fraction(c) for c in counts]:
            raise InconsistentCurve(f"point counts {list(counts)} disagree with completed zeta ({predicted})")
        return curve

    def point_counts(self, k: int) -> list[Fraction]:
        """|C(F_{q^j})| for j = 1..k, read off from the logarithmic derivative."""
        z = series_of(zeta_function(self), k + 1)
        # t Z'/Z = sum_j N_j t^j
        out = []
        for j in range(1, k + 1):
            acc = j * z[j] - sum(out[i - 1] * z[j - i] for i in range(1, j))
            out.append(acc)
        return out

    def zeta(self, t):
        """Z_C at a scalar or a rational function."""
        return zeta_eval(self, t)

    def zeta_star(self, t):
        """(1 - q t) Z_C(t) = P(t)/(1 - t)."""
        return self.numerator(t) / (1 - t)

    @property
    def class_number(self) -> Fraction:
        return self.numerator(Fraction(1))


def _exp_log_series(counts: Sequence[Fraction], terms: int) -> list[Fraction]:
    """Coefficients z_0..z_terms of exp(sum_k counts[k-1] t^k / k)."""
    z = [Fraction(1)]
    for m in range(1, terms + 1):
        s = sum(counts[k - 1] * z[m - k] for k in range(1, m + 1) if k <= len(counts))
        z.append(s / m)
    return z


def _mul_truncated(a: Sequence[Fraction], b: Sequence[Fraction], degree: int) -> list[Fraction]:
    out = [Fraction(0)] * (degree + 1)
    for i, x in enumerate(a[: degree + 1]):
        for j, y in enumerate(b):
            if i + j <= degree:
                out[i + j] += x * y
    return out


def zeta_function(curve: CurveZeta) -> CycloRationalFunction:
    t = Poly.x()
    return CycloRationalFunction(curve.numerator, (1 - t) * (1 - t * curve.q))


def series_of(f: CycloRationalFunction, terms: int) -> list:
    valuation, coeffs = laurent_expand(f, terms)
    if valuation < 0:
        raise ValueError("expected a power series")
    return ([Fraction(0)] * valuation + list(coeffs))[:terms]


def zeta_eval(curve: CurveZeta, arg):
    """Z_C(arg) for a scalar or a CycloRationalFunction argument."""
    if isinstance(arg, CycloRationalFunction):
        if arg.is_constant() and arg.constant_value() in (1, Fraction(1, curve.q)):
            raise SingularArgument("argument is identically a pole of Z_C")
        return zeta_function(curve).compose(arg)
    den = (1 - arg) * (1 - curve.q * arg)
    if den == 0:
        raise SingularArgument(f"Z_C has a pole at {arg}")
    return curve.numerator(arg) / den


def z_dD(curve: CurveZeta, d: int, degD: int, arg):
    """X^{-d degD} Z_C(X/q) Z_C(X/q^2) ... Z_C(X/q^d) at X = arg.

    ``arg`` is a nonzero scalar or a monomial c*X^e.
    """
    if isinstance(arg, CycloRationalFunction):
        if arg.is_zero():
            raise SingularArgument("argument must be invertible")
        out = arg ** (-d * degD)
        for j in range(1, d + 1):
            out = out * zeta_eval(curve, arg * Fraction(1, curve.q**j))
        return out
    if arg == 0:
        raise SingularArgument("argument must be invertible")
    out = arg ** (-d * degD)
    for j in range(1, d + 1):
        out = out * zeta_eval(curve, arg * Fraction(1, curve.q**j))
    return out


def ztilde_dD(curve: CurveZeta, d: int, degD: int) -> CycloRationalFunction:
    """The holomorphic normalisation y^{-d degD} (1 - y) q^{d^2(g-1)} prod_j Z_C(q^{-j} y)."""
    y = CycloRationalFunction.x()
    factor = Fraction(curve.q) ** (d * d * (curve.genus - 1))
    return z_dD(curve, d, degD, y) * (1 - y) * factor


def vol_gl(curve: CurveZeta, d: int) -> Fraction:
    """q^{d^2(g-1)} Z*_C(1/q) Z_C(1/q^2) ... Z_C(1/q^d)."""
    q = Fraction(curve.q)
    out = q ** (d * d * (curve.genus - 1)) * curve.zeta_star(1 / q)
    for j in range(2, d + 1):
        out *= curve.zeta(q**-j)
    return out


def series_coeffs_ZdD(curve: CurveZeta, d: int, degD: int, terms: int) -> tuple[int, list[Fraction]]:
    """Laurent coefficients in y of q^{d^2(degD+1-g)} Ztilde_{d,D}(y) / (1 - y).

    Returns (first exponent, coefficients); the first exponent is -d*degD.
    """
    y = CycloRationalFunction.x()
    factor = Fraction(curve.q) ** (d * d * (degD + 1 - curve.genus))
    closed = ztilde_dD(curve, d, degD) * factor / (1 - y)
    start = -d * degD
    shifted = closed * CycloRationalFunction.monomial(Fraction(1), -start)
    return start, series_of(shifted, terms)
