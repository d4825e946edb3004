"""Exact arithmetic over the Gaussian rationals.

The numeric kernel for the rest of the package: arbitrary-precision
rationals (stdlib ``fractions.Fraction``), complex numbers with rational
real and imaginary parts (:class:`GaussianRational`), dense univariate
polynomials and rational functions over them, exact root extraction and
partial-fraction decomposition.

All values are immutable after construction and every operation is a pure
function, so instances can be shared freely across threads.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import NotASquare, RootsNotExpressible

#: The exact scalar field used for real quantities.
Rational = Fraction

ScalarLike = Union[int, Fraction, "GaussianRational"]


# ---------------------------------------------------------------------------
# scalars


class GaussianRational:
    """A complex number ``re + im*i`` with exact rational parts.

    Field operations (addition, subtraction, multiplication, division by a
    nonzero value) are closed and exact.  Conjugation is an involution and
    ``abs2`` returns the exact nonnegative rational ``re**2 + im**2``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, str, Fraction] = 0, im: Union[int, str, Fraction] = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- construction helpers

    @staticmethod
    def coerce(value: ScalarLike) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    # -- structure

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Exact squared modulus ``re**2 + im**2``."""
        return self.re * self.re + self.im * self.im

    @property
    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def real_exact(self) -> Fraction:
        """Return the value as a Fraction; raises if the part is not real."""
        if self.im != 0:
            raise ValueError(f"{self} has a nonzero imaginary part")
        return self.re

    def key(self) -> tuple:
        """Total order used for deterministic sorting of outputs."""
        return (self.re, self.im)

    # -- arithmetic

    def __add__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.abs2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (GaussianRational(1) / self) ** (-exponent)
        result = GaussianRational(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons / conversions

    def __eq__(self, other):
        other = _as_gaussian(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        imag = f"{self.im}i" if abs(self.im) != 1 else ("i" if self.im > 0 else "-i")
        if self.re == 0:
            return imag
        sign = "+" if self.im > 0 else ""
        return f"{self.re}{sign}{imag}"


def _as_gaussian(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return NotImplemented


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def sqrt_rational(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None when irrational."""
    if q < 0:
        return None
    if q == 0:
        return Fraction(0)
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn != q.numerator or rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)


def sqrt_exact(z: ScalarLike) -> GaussianRational:
    """Square root of ``z`` within the Gaussian rationals.

    The branch is canonical: the result has positive real part, or zero
    real part and nonnegative imaginary part, so serialized outputs are
    deterministic.  Raises :class:`NotASquare` when no Gaussian-rational
    square root exists.
    """
    z = GaussianRational.coerce(z)
    if z.is_zero:
        return ZERO
    if z.im == 0:
        if z.re > 0:
            r = sqrt_rational(z.re)
            if r is None:
                raise NotASquare(f"{z} has no Gaussian-rational square root")
            return GaussianRational(r)
        r = sqrt_rational(-z.re)
        if r is None:
            raise NotASquare(f"{z} has no Gaussian-rational square root")
        return GaussianRational(0, r)
    # For x + y*i = sqrt(a + b*i): x^2 + y^2 = |z| must itself be rational,
    # then x^2 = (a + |z|)/2 and y = b / (2 x).
    modulus = sqrt_rational(z.abs2())
    if modulus is None:
        raise NotASquare(f"{z} has no Gaussian-rational square root")
    x_sq = (z.re + modulus) / 2
    x = sqrt_rational(x_sq)
    if x is None or x == 0:
        raise NotASquare(f"{z} has no Gaussian-rational square root")
    y = z.im / (2 * x)
    root = GaussianRational(x, y)
    if root * root != z:
        raise NotASquare(f"{z} has no Gaussian-rational square root")
    return root  # x > 0 by construction, matching the canonical branch


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Dense univariate polynomial over the Gaussian rationals.

    Coefficients are stored constant term first.  The zero polynomial has
    an empty coefficient tuple and, by convention, degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        cs = [GaussianRational.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors

    @staticmethod
    def constant(c: ScalarLike) -> "Poly":
        return Poly((c,))

    @staticmethod
    def x() -> "Poly":
        return Poly((0, 1))

    # -- structure

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> GaussianRational:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, m: int) -> GaussianRational:
        if 0 <= m < len(self.coeffs):
            return self.coeffs[m]
        return ZERO

    def is_real(self) -> bool:
        return all(c.is_real for c in self.coeffs)

    def real_coeffs(self) -> tuple:
        """Coefficients as Fractions; raises if any is not real."""
        return tuple(c.real_exact() for c in self.coeffs)

    # -- evaluation

    def __call__(self, x: ScalarLike) -> GaussianRational:
        x = GaussianRational.coerce(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self[m] + other[m] for m in range(n)))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self[m] - other[m] for m in range(n)))

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = GaussianRational.coerce(other)
            return Poly(tuple(a * c for a in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __neg__(self):
        return Poly(tuple(-c for c in self.coeffs))

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative integer")
        result = Poly.constant(1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Poly"):
        if not isinstance(other, Poly):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [ZERO] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            coeff = rem[k + other.degree] / lead
            quot[k] = coeff
            if not coeff.is_zero:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - coeff * b
        return Poly(quot), Poly(rem[: other.degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- transforms

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        inv = ONE / self.leading
        return Poly(tuple(c * inv for c in self.coeffs))

    def derivative(self) -> "Poly":
        return Poly(tuple(self.coeffs[m] * m for m in range(1, len(self.coeffs))))

    def shifted(self, a: ScalarLike) -> "Poly":
        """Return ``p(x + a)`` (exact Taylor shift)."""
        a = GaussianRational.coerce(a)
        result = Poly()
        base = Poly((a, 1))
        power = Poly.constant(1)
        for c in self.coeffs:
            result = result + power * c
            power = power * base
        return result

    def scaled_arg(self, a: ScalarLike) -> "Poly":
        """Return ``p(a * x)``."""
        a = GaussianRational.coerce(a)
        out, pw = [], ONE
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * a
        return Poly(out)

    def reversed_(self, n: Optional[int] = None) -> "Poly":
        """Return ``x**n * p(1/x)``; ``n`` defaults to the degree."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal order below degree")
        out = [ZERO] * (n + 1)
        for m, c in enumerate(self.coeffs):
            out[n - m] = c
        return Poly(out)

    def conjugate(self) -> "Poly":
        return Poly(tuple(c.conjugate() for c in self.coeffs))

    def is_palindromic(self) -> bool:
        d = self.degree
        return all(self[m] == self[d - m] for m in range(d + 1))

    # -- comparisons

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return Poly((value,))
    return NotImplemented


def poly_from_roots(roots: Iterable[ScalarLike]) -> Poly:
    """Monic polynomial with exactly the given roots (with repetition)."""
    result = Poly.constant(1)
    for r in roots:
        r = GaussianRational.coerce(r)
        result = result * Poly((-r, 1))
    return result


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    if a.is_zero:
        return a
    return a.monic()


def solve_linear_system(matrix: Sequence[Sequence[ScalarLike]],
                        rhs: Sequence[ScalarLike]) -> list:
    """Solve a square linear system exactly by Gaussian elimination.

    Raises ValueError when the matrix is singular.
    """
    n = len(rhs)
    rows = [[GaussianRational.coerce(x) for x in row] + [GaussianRational.coerce(r)]
            for row, r in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not rows[r][col].is_zero), None)
        if pivot is None:
            raise ValueError("singular linear system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = ONE / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and not rows[r][col].is_zero:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [rows[r][n] for r in range(n)]


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """Reduced quotient of two polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = Poly((1,))):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num = Poly()
            self.den = Poly((1,))
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lead = den.leading
        if lead != ONE:
            inv = ONE / lead
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    @staticmethod
    def constant(c: ScalarLike) -> "RationalFunction":
        return RationalFunction(Poly((c,)))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den - other.num * self.den,
                                self.den * other.den)

    def __rsub__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __call__(self, x: ScalarLike) -> GaussianRational:
        d = self.den(x)
        if d.is_zero:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def __eq__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


def _as_ratfun(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Poly):
        return RationalFunction(value)
    if isinstance(value, (int, Fraction, GaussianRational)):
        return RationalFunction(Poly((value,)))
    return NotImplemented


# ---------------------------------------------------------------------------
# exact root extraction

_DENOMINATOR_LADDER = (1, 2, 4, 8, 16, 64, 256, 4096, 10**6, 10**9, 10**12)


def roots_exact(p: Poly) -> list:
    """All roots of ``p`` in the Gaussian rationals, with multiplicities.

    Returns a list of ``(root, multiplicity)`` pairs sorted by the root's
    canonical key; the multiplicities sum to the degree and the monic
    product of the linear factors reproduces ``p`` up to its leading
    coefficient.  Multiplicity is established by exact repeated deflation,
    so no tolerance is involved.

    Raises :class:`RootsNotExpressible` when any root lies outside the
    Gaussian-rational field.
    """
    if p.is_zero or p.degree < 1:
        raise ValueError("root extraction needs a polynomial of degree >= 1")
    work = p
    found: list = []
    while work.degree >= 1:
        root = _find_one_root(work)
        if root is None:
            raise RootsNotExpressible(
                f"a factor of degree {work.degree} has no Gaussian-rational roots")
        found.append(root)
        work = work // Poly((-root, 1))
    counts = Counter(found)
    return sorted(counts.items(), key=lambda item: item[0].key())


def _find_one_root(p: Poly) -> Optional[GaussianRational]:
    if p.degree == 1:
        return -p[0] / p[1]
    for cand in _numeric_candidates(p):
        if p(cand).is_zero:
            return cand
    if p.degree == 2:
        try:
            return _quadratic_root(p)
        except NotASquare:
            return None
    return None


def _numeric_candidates(p: Poly):
    """Float-seeded candidate roots, rationalized and deduplicated.

    Floating approximations only suggest candidates; every candidate is
    verified exactly by the caller before it is accepted.
    """
    monic = p.monic()
    try:
        coeffs = [complex(c) for c in reversed(monic.coeffs)]
        approx = np.roots(coeffs)
    except (OverflowError, np.linalg.LinAlgError, ValueError):
        return
    seen = set()
    for bound in _DENOMINATOR_LADDER:
        for z in approx:
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                continue
            cand = GaussianRational(Fraction(z.real).limit_denominator(bound),
                                    Fraction(z.imag).limit_denominator(bound))
            if cand not in seen:
                seen.add(cand)
                yield cand


def _quadratic_root(p: Poly) -> GaussianRational:
    a, b, c = p[2], p[1], p[0]
    disc = b * b - 4 * a * c
    return (-b + sqrt_exact(disc)) / (2 * a)


# ---------------------------------------------------------------------------
# partial fractions

POWER = "power"
POLE = "pole"


@dataclass(frozen=True)
class PartialFractionTerm:
    """One addend of a partial-fraction decomposition in ``y``.

    ``power`` terms are ``c * y**m`` with any integer ``m``; ``pole`` terms
    are ``c / (y - lam)**ell`` with nonzero ``lam`` and ``ell >= 1``.
    """

    kind: str
    c: GaussianRational
    m: int = 0
    lam: GaussianRational = ZERO
    ell: int = 1

    def __post_init__(self):
        if self.kind not in (POWER, POLE):
            raise ValueError(f"unknown term kind {self.kind!r}")
        if self.kind == POLE:
            if self.lam.is_zero:
                raise ValueError("pole terms require a nonzero location")
            if self.ell < 1:
                raise ValueError("pole order must be at least 1")

    def as_rational_function(self) -> RationalFunction:
        if self.kind == POWER:
            if self.m >= 0:
                return RationalFunction(Poly([ZERO] * self.m + [self.c]))
            return RationalFunction(Poly((self.c,)), Poly([ZERO] * (-self.m) + [ONE]))
        return RationalFunction(Poly((self.c,)), Poly((-self.lam, 1)) ** self.ell)


def power_term(c: ScalarLike, m: int) -> PartialFractionTerm:
    return PartialFractionTerm(POWER, GaussianRational.coerce(c), m=m)


def pole_term(c: ScalarLike, lam: ScalarLike, ell: int) -> PartialFractionTerm:
    return PartialFractionTerm(POLE, GaussianRational.coerce(c),
                               lam=GaussianRational.coerce(lam), ell=ell)


def partial_fractions(f: RationalFunction) -> list:
    """Exact partial-fraction decomposition of ``f`` in ``y``.

    The returned terms sum back to ``f`` as an exact identity.  Poles at
    the origin are emitted as ``power`` terms with negative exponents, the
    polynomial part as ``power`` terms with nonnegative exponents, and all
    other denominator roots as ``pole`` terms grouped by location with
    orders ``1..multiplicity``.  Zero coefficients are omitted.

    Raises :class:`RootsNotExpressible` if the denominator does not split
    over the Gaussian rationals.
    """
    terms: list = []
    quot, rem = divmod(f.num, f.den)
    for m, c in enumerate(quot.coeffs):
        if not c.is_zero:
            terms.append(power_term(c, m))
    if rem.is_zero:
        return terms
    den = f.den
    for lam, mult in roots_exact(den):
        cofactor = den // (Poly((-lam, 1)) ** mult)
        coeffs = _local_expansion(rem, cofactor, lam, mult)
        for ell in range(1, mult + 1):
            c = coeffs[mult - ell]
            if c.is_zero:
                continue
            if lam.is_zero:
                terms.append(power_term(c, -ell))
            else:
                terms.append(pole_term(c, lam, ell))
    terms.sort(key=_term_sort_key)
    return terms


def _local_expansion(num: Poly, cofactor: Poly, lam: GaussianRational, order: int) -> list:
    """First ``order`` Taylor coefficients of ``num/cofactor`` about ``lam``."""
    a = num.shifted(lam).coeffs
    b = cofactor.shifted(lam).coeffs
    b0 = b[0]
    out = []
    for j in range(order):
        acc = a[j] if j < len(a) else ZERO
        for i in range(j):
            if j - i < len(b):
                acc = acc - out[i] * b[j - i]
        out.append(acc / b0)
    return out


def _term_sort_key(term: PartialFractionTerm):
    if term.kind == POWER:
        return (0, term.m, Fraction(0), Fraction(0), 0)
    return (1, 0, term.lam.re, term.lam.im, term.ell)


def recombine_partial_fractions(terms: Iterable[PartialFractionTerm]) -> RationalFunction:
    """Sum a list of partial-fraction terms back into one rational function."""
    total = RationalFunction(Poly())
    for term in terms:
        total = total + term.as_rational_function()
    return total


# ---------------------------------------------------------------------------
# trigonometric-basis helpers


@lru_cache(maxsize=None)
def chebyshev_t(n: int) -> Poly:
    """Chebyshev polynomial of the first kind, ``T_n(cos b) = cos(n b)``."""
    if n == 0:
        return Poly((1,))
    if n == 1:
        return Poly((0, 1))
    return Poly((0, 2)) * chebyshev_t(n - 1) - chebyshev_t(n - 2)


def symmetric_laurent_to_cos(p: Poly) -> Poly:
    """Rewrite ``p(y) / y**d`` as a polynomial in ``c = (y + 1/y) / 2``.

    ``p`` must be palindromic of even degree ``2*d``; the identity
    ``y**j + y**-j = 2*T_j(c)`` drives the rewrite.
    """
    if p.is_zero:
        return Poly()
    d2 = p.degree
    if d2 % 2 != 0 or not p.is_palindromic():
        raise ValueError("polynomial is not an even-degree palindrome")
    d = d2 // 2
    result = Poly((p[d],))
    for j in range(1, d + 1):
        result = result + chebyshev_t(j) * (2 * p[d + j])
    return result


def poly_cos_to_y(p: Poly) -> Poly:
    """Return ``p((y + 1/y) / 2) * y**deg(p)`` as a polynomial in ``y``.

    The result is palindromic of degree ``2*deg(p)``; dividing it by
    ``y**deg(p)`` recovers the substituted value.
    """
    if p.is_zero:
        return Poly()
    d = p.degree
    y_sq_plus_1 = Poly((1, 0, 1))
    result = Poly()
    for m, c in enumerate(p.coeffs):
        if c.is_zero:
            continue
        piece = (y_sq_plus_1 ** m) * (c * Fraction(1, 2**m))
        result = result + Poly([ZERO] * (d - m) + list(piece.coeffs))
    return result
