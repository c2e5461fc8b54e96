"""Exception types raised across the pipeline."""


class MeterError(Exception):
    """Base class for all kurdmeter errors."""


class EmptyLine(MeterError):
    pass


class EmptyPoem(MeterError):
    pass


class UnknownSymbol(MeterError):
    def __init__(self, symbol: str, offset: int):
        super().__init__(f"unknown symbol {symbol!r} at offset {offset}")
        self.symbol = symbol
        self.offset = offset


class Unsyllabifiable(MeterError):
    def __init__(self, position: int, reason: str = ""):
        msg = f"cannot syllabify at phoneme {position}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)
        self.position = position


class NoLegalParse(MeterError):
    """No /i/ epenthesis pattern makes the word syllabifiable."""


class TooManyReadings(MeterError):
    pass


class UnknownFoot(MeterError, KeyError):
    pass


class ParseError(MeterError):
    def __init__(self, message: str, index: int | None = None):
        if index is not None:
            message = f"record {index}: {message}"
        super().__init__(message)
        self.index = index


class SchemaError(ParseError):
    pass
