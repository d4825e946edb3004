"""Closed-form serial-correlation representation of an ARMA process.

The representation is a finite sum of polynomial-times-power terms in the
lag, evaluated exactly, plus a table of exceptional small-lag values and
the process variance.  Complex bases are allowed but must occur in
conjugate pairs, which makes every evaluated correlation exactly real.

The equivalent all-real form, with sine/cosine terms replacing conjugate
pairs, is available through :meth:`Correlogram.to_real_form` and
:func:`from_real_form`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Tuple, Union

from .errors import NormalizationViolated, NotSummable, SchemaError
from .exact import GaussianRational, Poly

ScalarLike = Union[int, Fraction, GaussianRational]


@dataclass(frozen=True)
class CorrelogramTerm:
    """One ``poly(k) * theta**k`` addend of the general lag formula."""

    theta: GaussianRational
    poly: tuple

    def __init__(self, theta: ScalarLike, poly: Sequence[ScalarLike]):
        object.__setattr__(self, "theta", GaussianRational.coerce(theta))
        cs = [GaussianRational.coerce(c) for c in poly]
        while cs and cs[-1].is_zero:
            cs.pop()
        object.__setattr__(self, "poly", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    def value(self, k: int) -> GaussianRational:
        acc = GaussianRational(0)
        for j, c in enumerate(self.poly):
            acc = acc + c * (k**j)
        return acc * self.theta**k

    def conjugate(self) -> "CorrelogramTerm":
        return CorrelogramTerm(self.theta.conjugate(),
                               tuple(c.conjugate() for c in self.poly))


class Correlogram:
    """Exact lag-correlation formula with exceptional values and variance.

    ``terms`` drive the general formula, valid for every lag at or beyond
    ``valid_from``; lags below that are read from ``specials``.  The
    constructor canonicalizes ordering, drops vanished terms, and enforces
    the structural invariants (bases strictly inside the unit disk and
    distinct, conjugate-pair symmetry, exceptional values covering exactly
    the lags ``0..valid_from-1``, correlation one at lag zero).
    """

    __slots__ = ("terms", "specials", "valid_from", "variance")

    def __init__(self, terms: Iterable, specials: Mapping[int, Fraction],
                 valid_from: int, variance: Union[int, str, Fraction]):
        canonical = []
        for item in terms:
            term = item if isinstance(item, CorrelogramTerm) else CorrelogramTerm(*item)
            if term.poly:
                canonical.append(term)
        canonical.sort(key=lambda t: t.theta.key())
        self.terms = tuple(canonical)
        self.specials = {int(k): Fraction(v) for k, v in dict(specials).items()}
        self.valid_from = int(valid_from)
        self.variance = Fraction(variance)
        self._check()

    def _check(self):
        if self.variance <= 0:
            raise ValueError("process variance must be positive")
        by_theta = {}
        for term in self.terms:
            if term.theta in by_theta:
                raise ValueError(f"duplicate base {term.theta}")
            by_theta[term.theta] = term
            norm = term.theta.abs2()
            if norm == 0:
                raise ValueError("zero base is not allowed in the general formula")
            if norm >= 1:
                raise NotSummable(
                    f"base {term.theta} has modulus >= 1; the correlation "
                    "series cannot converge")
        for term in self.terms:
            if term.theta.is_real:
                if not all(c.is_real for c in term.poly):
                    raise ValueError(
                        f"real base {term.theta} carries non-real coefficients")
            else:
                partner = by_theta.get(term.theta.conjugate())
                if partner is None or partner != term.conjugate():
                    raise ValueError(
                        f"base {term.theta} lacks its complex-conjugate partner")
        expected_keys = set(range(max(0, self.valid_from)))
        if set(self.specials) != expected_keys:
            raise ValueError(
                f"exceptional lags must be exactly {sorted(expected_keys)}, "
                f"found {sorted(self.specials)}")
        if self.rho(0) != 1:
            raise NormalizationViolated(
                f"correlation at lag 0 is {self.rho(0)}, expected exactly 1")

    # -- structure

    @property
    def p(self) -> int:
        """Expanded term count: one per power of the lag in each addend."""
        return sum(len(t.poly) for t in self.terms)

    def general_value(self, k: int) -> Fraction:
        """Evaluate the general formula, ignoring exceptional overrides."""
        acc = GaussianRational(0)
        for term in self.terms:
            acc = acc + term.value(k)
        return acc.real_exact()

    def rho(self, k: int) -> Fraction:
        """Exact correlation at lag ``k >= 0``.

        Conjugate-pair cancellation makes the imaginary part exactly zero,
        so the value is returned as a plain Fraction.
        """
        if k < 0:
            raise ValueError("lag must be nonnegative")
        if k in self.specials:
            return self.specials[k]
        return self.general_value(k)

    # -- real trigonometric form

    def to_real_form(self) -> "RealCorrelogramForm":
        """Pair conjugate terms into sine/cosine terms with real coefficients.

        The complex base of each pair is retained exactly (its modulus and
        angle are rendered as floats only for display), so converting back
        with :func:`from_real_form` is lossless.
        """
        real_terms = []
        trig_terms = []
        for term in self.terms:
            if term.theta.is_real:
                real_terms.append(RealTerm(term.theta.real_exact(),
                                           tuple(c.real_exact() for c in term.poly)))
            elif term.theta.im > 0:
                cos_poly = tuple(2 * c.re for c in term.poly)
                sin_poly = tuple(-2 * c.im for c in term.poly)
                trig_terms.append(TrigTerm(term.theta, sin_poly, cos_poly))
        return RealCorrelogramForm(tuple(real_terms), tuple(trig_terms),
                                   self.valid_from)

    # -- serialization

    def to_dict(self) -> dict:
        return {
            "form": "correlogram",
            "terms": [
                {"theta": {"re": str(t.theta.re), "im": str(t.theta.im)},
                 "poly": [_scalar_to_json(c) for c in t.poly]}
                for t in self.terms
            ],
            "specials": {str(k): str(v) for k, v in sorted(self.specials.items())},
            "valid_from": self.valid_from,
            "variance": str(self.variance),
        }

    @staticmethod
    def from_dict(data: Mapping) -> "Correlogram":
        if not isinstance(data, Mapping):
            raise SchemaError("correlogram document must be a JSON object")
        form = data.get("form", "correlogram")
        if form != "correlogram":
            raise SchemaError(f"expected form 'correlogram', found {form!r}")
        missing = {"terms", "specials", "valid_from", "variance"} - set(data)
        if missing:
            raise SchemaError(f"correlogram document is missing keys: {sorted(missing)}")
        try:
            terms = [CorrelogramTerm(_scalar_from_json(entry["theta"]),
                                     [_scalar_from_json(c) for c in entry["poly"]])
                     for entry in data["terms"]]
            specials = {int(k): Fraction(v) for k, v in data["specials"].items()}
            return Correlogram(terms, specials, data["valid_from"], data["variance"])
        except (KeyError, ValueError, ZeroDivisionError, TypeError) as exc:
            raise SchemaError(f"invalid correlogram document: {exc}") from exc

    # -- comparisons

    def __eq__(self, other):
        if not isinstance(other, Correlogram):
            return NotImplemented
        return (self.terms == other.terms and self.specials == other.specials
                and self.valid_from == other.valid_from
                and self.variance == other.variance)

    def __repr__(self):
        return (f"Correlogram(terms={len(self.terms)}, specials={self.specials}, "
                f"valid_from={self.valid_from}, variance={self.variance})")


@dataclass(frozen=True)
class RealTerm:
    """``poly(k) * theta**k`` with a real base and real coefficients."""

    theta: Fraction
    poly: tuple


@dataclass(frozen=True)
class TrigTerm:
    """Damped oscillation ``|root|**k (sin_poly(k) sin(a k) + cos_poly(k) cos(a k))``.

    ``root`` is the exact complex base with positive imaginary part from
    which the modulus and the angle ``a`` derive; it is kept exactly so the
    trig form loses no information.
    """

    root: GaussianRational
    sin_poly: tuple
    cos_poly: tuple

    @property
    def modulus_sq(self) -> Fraction:
        return self.root.abs2()

    @property
    def angle(self) -> float:
        return math.atan2(float(self.root.im), float(self.root.re))


@dataclass(frozen=True)
class RealCorrelogramForm:
    """All-real rendering of the general lag formula.

    Carries the validity threshold of the formula it came from so that a
    round trip through :func:`from_real_form` is the identity.
    """

    real_terms: tuple
    trig_terms: tuple
    valid_from: int

    def value(self, k: int) -> Fraction:
        """Exact evaluation (complex pairing is used internally)."""
        acc = Fraction(0)
        for term in self.real_terms:
            acc += sum(c * k**j for j, c in enumerate(term.poly)) * term.theta**k
        for term in self.trig_terms:
            coeff = GaussianRational(0)
            for j in range(max(len(term.sin_poly), len(term.cos_poly))):
                cos_c = term.cos_poly[j] if j < len(term.cos_poly) else Fraction(0)
                sin_c = term.sin_poly[j] if j < len(term.sin_poly) else Fraction(0)
                coeff = coeff + GaussianRational(cos_c / 2, -sin_c / 2) * (k**j)
            acc += 2 * (coeff * term.root**k).re
        return acc


def from_real_form(form: RealCorrelogramForm, specials: Mapping[int, Fraction],
                   variance: Union[int, str, Fraction]) -> Correlogram:
    """Rebuild the complex-base correlogram from its all-real form."""
    terms = []
    for term in form.real_terms:
        terms.append(CorrelogramTerm(GaussianRational(term.theta), term.poly))
    for term in form.trig_terms:
        rep_poly = []
        for j in range(max(len(term.sin_poly), len(term.cos_poly))):
            cos_c = term.cos_poly[j] if j < len(term.cos_poly) else Fraction(0)
            sin_c = term.sin_poly[j] if j < len(term.sin_poly) else Fraction(0)
            rep_poly.append(GaussianRational(cos_c / 2, -sin_c / 2))
        rep = CorrelogramTerm(term.root, rep_poly)
        terms.append(rep)
        terms.append(rep.conjugate())
    return Correlogram(terms, specials, form.valid_from, variance)


def _scalar_to_json(value: GaussianRational):
    if value.is_real:
        return str(value.re)
    return {"re": str(value.re), "im": str(value.im)}


def _scalar_from_json(data) -> GaussianRational:
    if isinstance(data, str):
        return GaussianRational(Fraction(data))
    if isinstance(data, Mapping) and {"re", "im"} <= set(data):
        return GaussianRational(Fraction(data["re"]), Fraction(data["im"]))
    raise SchemaError(f"cannot parse scalar value {data!r}")


__all__ = [
    "Correlogram",
    "CorrelogramTerm",
    "RealCorrelogramForm",
    "RealTerm",
    "TrigTerm",
    "from_real_form",
]
