"""Coefficient representation of a stationary ARMA(p, q) process.

A model is given by its autoregressive coefficients, its moving-average
coefficients and the standard deviation of the Gaussian innovations.  The
orders p and q are implied by the coefficient list lengths; trailing zero
coefficients are rejected at construction rather than silently trimmed, so
the orders are always unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .errors import SchemaError
from .exact import GaussianRational, Poly, roots_exact

RationalLike = Union[int, str, Fraction]


def _fraction_tuple(values: Sequence[RationalLike], label: str) -> tuple:
    try:
        return tuple(Fraction(v) for v in values)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise SchemaError(f"invalid rational value in {label}: {exc}") from exc


@dataclass(frozen=True)
class ArmaModel:
    """Exact ARMA(p, q) coefficients plus the innovation scale.

    ``alphas`` are the autoregressive weights on the lagged process values,
    ``gammas`` the moving-average weights on the lagged innovations, and
    ``sigma`` the standard deviation of the independent N(0, sigma)
    innovations.
    """

    alphas: tuple
    gammas: tuple
    sigma: Fraction

    def __init__(self, alphas: Sequence[RationalLike], gammas: Sequence[RationalLike],
                 sigma: RationalLike):
        object.__setattr__(self, "alphas", _fraction_tuple(alphas, "ar coefficients"))
        object.__setattr__(self, "gammas", _fraction_tuple(gammas, "ma coefficients"))
        object.__setattr__(self, "sigma", Fraction(sigma))
        if self.sigma <= 0:
            raise ValueError("innovation standard deviation must be positive")
        if self.alphas and self.alphas[-1] == 0:
            raise ValueError("highest-order ar coefficient must be nonzero")
        if self.gammas and self.gammas[-1] == 0:
            raise ValueError("highest-order ma coefficient must be nonzero")

    @property
    def p(self) -> int:
        return len(self.alphas)

    @property
    def q(self) -> int:
        return len(self.gammas)

    def char_poly(self) -> Poly:
        """Characteristic polynomial of the autoregressive part.

        ``x**p - a_1 x**(p-1) - ... - a_p``; its roots must lie strictly
        inside the unit disk for the process to be stationary.
        """
        return Poly(tuple(-a for a in reversed(self.alphas)) + (1,))

    def ma_poly(self) -> Poly:
        """Characteristic polynomial of the moving-average part.

        ``x**q + g_1 x**(q-1) + ... + g_q``.
        """
        return Poly(tuple(reversed(self.gammas)) + (1,))

    def validate(self) -> "ValidationReport":
        """Exact stationarity and coprimality report.

        May raise :class:`armaforms.errors.RootsNotExpressible` when a
        characteristic root lies outside the Gaussian-rational field.
        """
        ar_roots = tuple(roots_exact(self.char_poly())) if self.p else ()
        ma_roots = tuple(roots_exact(self.ma_poly())) if self.q else ()
        stationary = all(r.abs2() < 1 for r, _ in ar_roots)
        ar_set = {r for r, _ in ar_roots}
        coprime = not any(r in ar_set for r, _ in ma_roots)
        return ValidationReport(stationary, coprime, ar_roots, ma_roots)

    # -- serialization

    def to_dict(self) -> dict:
        return {
            "form": "ag",
            "ar": [str(a) for a in self.alphas],
            "ma": [str(g) for g in self.gammas],
            "sigma": str(self.sigma),
        }

    @staticmethod
    def from_dict(data: Mapping) -> "ArmaModel":
        if not isinstance(data, Mapping):
            raise SchemaError("model document must be a JSON object")
        form = data.get("form", "ag")
        if form != "ag":
            raise SchemaError(f"expected form 'ag', found {form!r}")
        missing = {"ar", "ma", "sigma"} - set(data)
        if missing:
            raise SchemaError(f"model document is missing keys: {sorted(missing)}")
        try:
            return ArmaModel(data["ar"], data["ma"], data["sigma"])
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise SchemaError(f"invalid model document: {exc}") from exc


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the exact stationarity and coprimality checks."""

    stationary: bool
    coprime: bool
    ar_roots: tuple
    ma_roots: tuple

    @property
    def ok(self) -> bool:
        return self.stationary and self.coprime

    def to_dict(self) -> dict:
        def roots(items):
            return [{"root": {"re": str(r.re), "im": str(r.im)}, "multiplicity": m}
                    for r, m in items]

        return {
            "stationary": self.stationary,
            "coprime": self.coprime,
            "ar_roots": roots(self.ar_roots),
            "ma_roots": roots(self.ma_roots),
        }


def white_noise(sigma: RationalLike) -> ArmaModel:
    """The trivial ARMA(0, 0) model."""
    return ArmaModel((), (), sigma)


__all__ = ["ArmaModel", "ValidationReport", "white_noise"]
