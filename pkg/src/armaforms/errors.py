"""Exception hierarchy shared by every module in the package."""


class ArmaFormsError(Exception):
    """Base class for all errors raised by this package."""


class SchemaError(ArmaFormsError):
    """An input file or JSON document does not match the expected schema."""


class NotASquare(ArmaFormsError):
    """The argument has no square root among the Gaussian rationals."""


class RootsNotExpressible(ArmaFormsError):
    """A polynomial root does not lie in the Gaussian-rational field.

    Signals that the model is outside the scope of exact-mode processing;
    no decimal fallback is attempted.
    """


class NotStationary(ArmaFormsError):
    """A characteristic root has modulus greater than or equal to one."""


class DenominatorZero(ArmaFormsError):
    """The spectral denominator vanishes somewhere on the evaluation range."""


class IllegitimateSpectrum(ArmaFormsError):
    """The spectral density violates nonnegativity, boundedness or scaling."""


class NotSummable(ArmaFormsError):
    """A correlogram term decays too slowly for its cosine series to converge."""


class NormalizationViolated(ArmaFormsError):
    """A computed correlogram does not satisfy rho(0) = 1 exactly."""
