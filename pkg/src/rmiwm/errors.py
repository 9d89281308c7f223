"""Exception hierarchy shared by all modules.

Every error raised by the library derives from RmiError, which is itself a
ValueError. The CLI maps the two middle layers onto exit codes:
FormatError -> 2, PreconditionError -> 3.
"""


class RmiError(ValueError):
    pass


class FormatError(RmiError):
    """Input bytes or arguments could not be parsed."""


class PreconditionError(RmiError):
    """Well-formed inputs that violate an operation's precondition."""


class InvalidDimensions(FormatError):
    pass


# image_core
class MalformedHeader(FormatError):
    pass


class MalformedPayload(FormatError):
    pass


class TruncatedPayload(MalformedPayload):
    pass


class PixelValueOutOfRange(FormatError):
    pass


class OutOfBounds(PreconditionError):
    pass


# rmi / keyfile
class KeyEntryOutOfRange(FormatError):
    pass


class LengthMismatch(FormatError):
    pass


class KeyFileError(FormatError):
    pass


class BadMagic(KeyFileError):
    pass


class MalformedDimensions(KeyFileError, InvalidDimensions):
    pass


class UnknownMode(KeyFileError):
    pass


class WrongEntryCount(KeyFileError):
    pass


class MalformedSeed(KeyFileError):
    pass


# watermark / metrics / attacks
class DimensionMismatch(PreconditionError):
    pass


class HostPixelTooBright(PreconditionError):
    def __init__(self, x, y, value):
        self.x, self.y, self.value = x, y, value
        super().__init__(
            f"host pixel at (x={x}, y={y}) is {value}; embedding requires every pixel <= 245"
        )


class NegativePixel(PreconditionError):
    def __init__(self, x, y, value):
        self.x, self.y, self.value = x, y, value
        super().__init__(
            f"subtraction underflow at (x={x}, y={y}): {value}; "
            "image was altered or the key is wrong"
        )


class InvalidThreshold(FormatError):
    pass


class InvalidAttackSpec(FormatError):
    pass
