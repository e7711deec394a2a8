"""Exception hierarchy.

``InputError`` covers everything a caller can fix (bad files, violated
preconditions); the CLI maps it to exit code 2.  ``InternalError`` marks
conditions that indicate a bug in the library itself and maps to exit
code 1.
"""


class WedkitError(Exception):
    pass


class InputError(WedkitError):
    pass


class InternalError(WedkitError):
    pass


class DimensionMismatch(InputError):
    pass


class NotAnIdeal(InputError):
    pass


class NotSemisimple(InputError):
    pass


class NotNilpotent(InputError):
    pass


class UnsplitQuotient(InputError):
    pass


class CyclicQuiver(InputError):
    pass


class NotADE(InputError):
    pass


class ExponentHypothesisFails(InputError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
