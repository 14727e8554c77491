"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class StinvError(Exception):
    """Base class for all errors raised by :mod:`stinv`."""


class ParseError(StinvError, ValueError):
    """A document could not be turned into an invariant."""


class DocumentSyntaxError(ParseError):
    def __init__(self, msg: str, line: int, column: int):
        super().__init__(f"{msg} (line {line}, column {column})")
        self.line = line
        self.column = column


class SchemaError(ParseError):
    """Unknown op, missing field or wrongly typed field."""


class RangeError(ParseError):
    """A field value violates a term invariant (Prob outside [0, 1], t1 > t2, ...)."""


class ShapeError(StinvError, ValueError):
    """The invariant does not have the shape an operator requires."""


class UnsupportedAtomError(ShapeError):
    """An atom outside the point-semantics fragment was encountered."""


class ParameterError(StinvError, ValueError):
    """Invalid operator parameters: empty step, unreachable stop box, reversed window."""
