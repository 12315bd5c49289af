"""Exact arithmetic: rationals, cyclotomic numbers, polynomials, rational
functions in one variable, sums of square roots, and limits at X = 1.

Rationals are plain ``fractions.Fraction`` values.  Cyclotomic numbers live in
Q[x]/Phi_N(x) with the power basis; elements of different orders are combined
in the field of the least common multiple order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Sequence, Union


class PoleAtOne(ArithmeticError):
    """Raised by :func:`limit_at_one` when X = 1 is a genuine pole."""

    def __init__(self, order: int):
        super().__init__(f"pole of order {order} at X=1")
        self.order = order


class PoleAtCenter(ArithmeticError):
    """Raised when a Taylor expansion is requested at a pole."""


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _int_poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; division is exact by construction
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert not any(num[: len(den) - 1]), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first."""
    if n < 1:
        raise ValueError("cyclotomic order must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for k in range(1, n):
        if n % k == 0:
            poly = _int_poly_divexact(poly, cyclotomic_poly(k))
    return tuple(poly)


# ---------------------------------------------------------------- cyclotomics

Scalar = Union[int, Fraction, "CycloNumber"]


def _reduce_mod_cyclotomic(coeffs: list, order: int) -> tuple[Fraction, ...]:
    phi_poly = cyclotomic_poly(order)
    deg = len(phi_poly) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        top = c[i]
        if top:
            base = i - deg
            for j in range(deg):
                pj = phi_poly[j]
                if pj:
                    c[base + j] -= top * pj
        c[i] = 0
    c = c[:deg] + [0] * (deg - len(c))
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in c)


def _frac_poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    inv = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _frac_poly_trim(q), _frac_poly_trim(a[: len(b) - 1])


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _frac_poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _frac_poly_trim([x - y for x, y in zip(a, b)])


class CycloNumber:
    """An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable):
        if order < 1:
            raise ValueError("order must be positive")
        self.order = order
        self.coeffs = _reduce_mod_cyclotomic(list(coeffs), order)

    @classmethod
    def _raw(cls, order: int, coeffs: tuple[Fraction, ...]) -> "CycloNumber":
        obj = object.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, value, order: int = 1) -> "CycloNumber":
        deg = euler_phi(order)
        return cls._raw(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    # -- coercion
    def lift(self, order: int) -> "CycloNumber":
        """The same number written in Q(zeta_order); self.order must divide order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError("cannot lift to a non-multiple order")
        step = order // self.order
        spread = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for i, c in enumerate(self.coeffs):
            spread[i * step] = c
        return CycloNumber(order, spread)

    def _common(self, other):
        if isinstance(other, CycloNumber):
            if other.order == self.order:
                return self, other
            m = lcm(self.order, other.order)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Fraction)):
            return self, CycloNumber.rational(other, self.order)
        return None, None

    # -- predicates
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic
    def __add__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CycloNumber._raw(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber._raw(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return CycloNumber._raw(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNumber._raw(self.order, tuple(x * other for x in self.coeffs))
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        if len(a.coeffs) == 1:
            return CycloNumber._raw(a.order, (a.coeffs[0] * b.coeffs[0],))
        prod = _frac_poly_mul(list(a.coeffs), list(b.coeffs))
        return CycloNumber._raw(a.order, _reduce_mod_cyclotomic(prod, a.order))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return CycloNumber.rational(1 / self.coeffs[0], self.order)
        # extended Euclid: find s with s*self = 1 mod Phi_N
        modulus = [Fraction(c) for c in cyclotomic_poly(self.order)]
        r0, r1 = modulus, _frac_poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
        c = r1[0]
        return CycloNumber(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        if isinstance(other, CycloNumber):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloNumber.rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        a, b = self._common(other)
        if a is None:
            return NotImplemented
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z{self.order}^{i}")
        return " + ".join(terms) if terms else "0"


def cyclo_reduce(order: int, power: int) -> CycloNumber:
    """zeta_order ** power in reduced form."""
    k = power % order
    coeffs = [Fraction(0)] * (k + 1)
    coeffs[k] = Fraction(1)
    return CycloNumber(order, coeffs)


def is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, CycloNumber) else x == 0


def as_rational(x) -> Fraction:
    """Return x as a Fraction, failing if x is a non-rational cyclotomic."""
    if isinstance(x, CycloNumber):
        return x.to_rational()
    return Fraction(x)


# --------------------------------------------------------------- polynomials


class Poly:
    """Univariate polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [x if isinstance(x, (Fraction, CycloNumber)) else Fraction(x) for x in coeffs]
        while c and is_zero(c[-1]):
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, c, k: int) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1]

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return Poly([-x for x in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly([x * other for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly([1])
        for _ in range(k):
            result = result * self
        return result

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        inv = 1 / other.lead()
        quot = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - db - 1, -1, -1):
            c = rem[i + db] * inv
            quot[i] = c
            if not is_zero(c):
                for j, bj in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * bj
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        inv = 1 / self.lead()
        return Poly([c * inv for c in self.coeffs])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_monomial(self, c, e: int) -> "Poly":
        """p(c * X**e) for e >= 0."""
        if e < 0:
            raise ValueError("negative exponent; use CycloRationalFunction")
        out = [0] * (e * self.degree + 1) if self.coeffs else []
        power = 1
        for i, a in enumerate(self.coeffs):
            out[i * e] = out[i * e] + a * power
            power = power * c
        return Poly(out)

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if not is_zero(c):
                return i
        raise ValueError("valuation of the zero polynomial")

    def shift_down(self, k: int) -> "Poly":
        return Poly(self.coeffs[k:])

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly([other])
        return len(self.coeffs) == len(other.coeffs) and all(
            x == y for x, y in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero only when both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a if a.is_zero() else a.monic()


# ---------------------------------------------------------- rational functions


class CycloRationalFunction:
    """num/den in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            num = Poly([num])
        if den is None:
            den = Poly([1])
        elif not isinstance(den, Poly):
            den = Poly([den])
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly(), Poly([1])
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        inv = 1 / den.lead()
        self.num = Poly([c * inv for c in num.coeffs])
        self.den = Poly([c * inv for c in den.coeffs])

    @classmethod
    def _trusted(cls, num: Poly, den: Poly) -> "CycloRationalFunction":
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def x(cls) -> "CycloRationalFunction":
        return cls(Poly.x())

    @classmethod
    def monomial(cls, c, e: int) -> "CycloRationalFunction":
        """c * X**e for any integer e."""
        if e >= 0:
            return cls._trusted(Poly.monomial(c, e), Poly([1]))
        return cls(Poly([c]), Poly.monomial(1, -e))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant rational function")
        return self.num.coeffs[0] if self.num.coeffs else Fraction(0)

    def _coerce(self, other):
        if isinstance(other, CycloRationalFunction):
            return other
        if isinstance(other, Poly):
            return CycloRationalFunction._trusted(other, Poly([1]))
        if isinstance(other, (int, Fraction, CycloNumber)):
            return CycloRationalFunction._trusted(Poly([other]), Poly([1]))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return CycloRationalFunction(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        a_co = self.den // g
        b_co = other.den // g
        return CycloRationalFunction(self.num * b_co + other.num * a_co, self.den * b_co)

    __radd__ = __add__

    def __neg__(self):
        return CycloRationalFunction._trusted(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.den.degree == 0 and other.num.degree <= 0:
            c = other.constant_value()
            return CycloRationalFunction._trusted(self.num * c, self.den) if not is_zero(c) else CycloRationalFunction(0)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        num = (self.num // g1 if g1.degree > 0 else self.num) * (other.num // g2 if g2.degree > 0 else other.num)
        den = (self.den // g2 if g2.degree > 0 else self.den) * (other.den // g1 if g1.degree > 0 else other.den)
        return CycloRationalFunction(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "CycloRationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        return CycloRationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloRationalFunction(1)
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x):
        d = self.den(x)
        if is_zero(d):
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(x) / d

    def compose_monomial(self, c, e: int) -> "CycloRationalFunction":
        """f(c * X**e) for a nonzero integer e (or e = 0, giving a constant)."""
        if e == 0:
            return CycloRationalFunction(self(c))
        if e > 0:
            return CycloRationalFunction(self.num.compose_monomial(c, e), self.den.compose_monomial(c, e))
        # X**e = 1/X**|e|: multiply through by X**(|e| * max degree)
        k = -e
        top = max(self.num.degree, self.den.degree, 0)

        def flip(p: Poly) -> Poly:
            out = [0] * (k * top + 1)
            power = 1
            for i, a in enumerate(p.coeffs):
                out[k * (top - i)] = a * power
                power = power * c
            return Poly(out)

        return CycloRationalFunction(flip(self.num), flip(self.den))

    def compose(self, inner: "CycloRationalFunction") -> "CycloRationalFunction":
        """f(inner(X))."""
        top = max(self.num.degree, self.den.degree, 0)
        u, v = inner.num, inner.den
        u_pows = [Poly([1])]
        v_pows = [Poly([1])]
        for _ in range(top):
            u_pows.append(u_pows[-1] * u)
            v_pows.append(v_pows[-1] * v)

        def homog(p: Poly) -> Poly:
            acc = Poly()
            for i, a in enumerate(p.coeffs):
                acc = acc + u_pows[i] * v_pows[top - i] * a
            return acc

        return CycloRationalFunction(homog(self.num), homog(self.den))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"({self.num.coeffs!r}) / ({self.den.coeffs!r})"


def rf_normalize(num: Poly, den: Poly) -> CycloRationalFunction:
    return CycloRationalFunction(num, den)


def _strip_root_at_one(p: Poly) -> tuple[Poly, int]:
    """Divide out (X - 1) as often as possible."""
    mult = 0
    while not p.is_zero() and is_zero(p(1)):
        # synthetic division by X - 1
        c = p.coeffs
        out = [0] * (len(c) - 1)
        acc = 0
        for i in range(len(c) - 1, 0, -1):
            acc = acc + c[i]
            out[i - 1] = acc
        p = Poly(out)
        mult += 1
    return p, mult


def limit_at_one(f: CycloRationalFunction):
    """Value of f at X = 1 after cancelling common powers of (X - 1)."""
    if f.is_zero():
        return Fraction(0)
    num, j = _strip_root_at_one(f.num)
    den, k = _strip_root_at_one(f.den)
    if j < k:
        raise PoleAtOne(k - j)
    if j > k:
        return Fraction(0)
    return num(1) / den(1)


def series_expand(f: CycloRationalFunction, terms: int) -> list:
    """First ``terms`` Taylor coefficients of f at X = 0."""
    den = f.den.coeffs
    if not den or is_zero(den[0]):
        raise PoleAtCenter("denominator vanishes at X=0")
    inv0 = 1 / den[0]
    num = f.num.coeffs
    out = []
    for k in range(terms):
        acc = num[k] if k < len(num) else 0
        for i in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[i] * out[k - i]
        out.append(acc * inv0)
    return out


def laurent_expand(f: CycloRationalFunction, terms: int) -> tuple[int, list]:
    """(v, c) with f = X**v * (c[0] + c[1] X + ...), exactly ``terms`` coefficients."""
    if f.is_zero():
        return 0, [Fraction(0)] * terms
    nv = f.num.valuation()
    dv = f.den.valuation()
    g = CycloRationalFunction._trusted(f.num.shift_down(nv), f.den.shift_down(dv))
    return nv - dv, series_expand(g, terms)


# --------------------------------------------------------------- radicals


def squarefree_split(n: int) -> tuple[int, int]:
    """Return (s, f) with n = f*f*s and s squarefree (n > 0)."""
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer")
    s, f = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            f *= p ** (e // 2)
            if e % 2:
                s *= p
        p += 1 if p == 2 else 2
    s *= n
    return s, f


class RadicalRational:
    """A finite sum of c_m * sqrt(m) with m squarefree and c_m rational."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, Fraction(0)) + c
        self.terms = {m: c for m, c in clean.items() if c}

    @classmethod
    def of(cls, value) -> "RadicalRational":
        return cls({1: Fraction(value)})

    @classmethod
    def sqrt(cls, value) -> "RadicalRational":
        """sqrt(value) for a nonnegative rational."""
        value = Fraction(value)
        if value < 0:
            raise ValueError("square root of a negative rational")
        if value == 0:
            return cls()
        # sqrt(p/q) = sqrt(p*q)/q
        s, f = squarefree_split(value.numerator * value.denominator)
        return cls({s: Fraction(f, value.denominator)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_pure(self) -> bool:
        return len(self.terms) <= 1

    def is_rational(self) -> bool:
        return set(self.terms) <= {1}

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational value")
        return self.terms.get(1, Fraction(0))

    def _coerce(self, other):
        if isinstance(other, RadicalRational):
            return other
        if isinstance(other, (int, Fraction)):
            return RadicalRational.of(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return RadicalRational(out)

    __radd__ = __add__

    def __neg__(self):
        return RadicalRational({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                g = gcd(m1, m2)
                # sqrt(m1*m2) = g * sqrt(m1*m2/g^2), and m1*m2/g^2 is squarefree
                m = (m1 // g) * (m2 // g)
                out[m] = out.get(m, Fraction(0)) + c1 * c2 * g
        return RadicalRational(out)

    __rmul__ = __mul__

    def inverse(self) -> "RadicalRational":
        if len(self.terms) != 1:
            raise ValueError("only single-term radicals are invertible here")
        (m, c), = self.terms.items()
        # 1/(c sqrt m) = sqrt(m)/(c m)
        return RadicalRational({m: 1 / (c * m)})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            parts.append(f"{c}" if m == 1 else f"{c}*sqrt({m})")
        return " + ".join(parts)

    def __float__(self):
        return float(sum(float(c) * float(m) ** 0.5 for m, c in self.terms.items()))


def radical_is_zero(v: RadicalRational) -> bool:
    return v.is_zero()
