class FrobCloseError(Exception):
    """Base class for every error raised by this package."""


class ParseError(FrobCloseError):
    def __init__(self, message, position=None, text=None):
        self.message = message
        self.position = position
        self.text = text
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class RingFileError(FrobCloseError):
    pass


class CharacteristicMismatch(FrobCloseError, ValueError):
    pass


class ExponentOverflow(FrobCloseError, OverflowError):
    pass


class BudgetExhausted(FrobCloseError):
    """A Groebner or enumeration budget ran out; no answer is given."""


class UnitIdealError(FrobCloseError, ValueError):
    pass


class NotPrimaryError(FrobCloseError, ValueError):
    """The ideal is not primary to the homogeneous maximal ideal."""


class NotParameterError(FrobCloseError, ValueError):
    pass


class ContainmentError(FrobCloseError, ValueError):
    pass


class MultiplicityNotCertified(FrobCloseError):
    pass


class SamplingError(FrobCloseError):
    pass
