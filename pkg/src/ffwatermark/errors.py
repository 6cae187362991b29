"""Exception types raised across the package.

Every error derives from :class:`FiniteFieldError`, itself a ``ValueError``,
so callers can catch the whole family or one precondition at a time.
"""


class FiniteFieldError(ValueError):
    pass


class NotPrime(FiniteFieldError):
    pass


class UnsupportedModulus(FiniteFieldError):
    """p = 2, p = 1 (mod 4) where GI(p) is required, or p above the supported bound."""


class ZeroInverse(FiniteFieldError):
    pass


class ZeroElement(FiniteFieldError):
    pass


class FieldMismatch(FiniteFieldError):
    pass


class NotUnimodular(FiniteFieldError):
    pass


class InvalidZeta(FiniteFieldError):
    """zeta does not have the order or form that the transform kind requires."""


class KindMismatch(FiniteFieldError):
    pass


class LengthMismatch(FiniteFieldError):
    pass


class ShapeMismatch(FiniteFieldError):
    pass


class SingularMatrix(FiniteFieldError):
    pass


class IndivisibleDimensions(FiniteFieldError):
    def __init__(self, width: int, height: int, n: int):
        self.width = width
        self.height = height
        self.n = n
        super().__init__(
            f"image of {width}x{height} pixels cannot be split into {n}x{n} blocks"
        )


class ElementOutOfField(FiniteFieldError):
    """An input value lies outside the canonical range [0, p)."""


class PixelOutOfField(ElementOutOfField):
    pass


class WatermarkOutOfField(ElementOutOfField):
    pass


class PgmFormatError(ValueError):
    pass
