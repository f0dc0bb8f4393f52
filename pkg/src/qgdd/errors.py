"""Exception hierarchy. Every domain failure derives from QgddError."""


class QgddError(Exception):
    pass


class NonPrimeModulus(QgddError, ValueError):
    pass


class NonPrimitivePolynomial(QgddError, ValueError):
    pass


class DimensionMismatch(QgddError, ValueError):
    pass


AmbientMismatch = DimensionMismatch


class NotAPoint(QgddError, ValueError):
    pass


class ConstraintRequiresSpread(QgddError, ValueError):
    pass


class TooLarge(QgddError):
    pass


FieldTooLarge = TooLarge


class NotAPartition(QgddError, ValueError):
    pass


class DuplicateBlocks(QgddError, ValueError):
    pass


class BlockDimensionMismatch(QgddError, ValueError):
    pass


class BlockMeetsGroupBadly(QgddError, ValueError):
    """A block contains a line covered by the spread (block is not scattered)."""


class NoLambdaMax(QgddError):
    pass


class NotFat(QgddError, ValueError):
    pass


class WrongDimension(QgddError, ValueError):
    pass


class SelectionRequired(QgddError, ValueError):
    pass


class SelectionOutOfRange(QgddError, ValueError):
    pass


class NotSteinerSampled(QgddError):
    pass


class GroupDoesNotStabilizeSpread(QgddError):
    pass


class DecodeError(QgddError, ValueError):
    pass
