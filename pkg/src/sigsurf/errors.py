"""Exception hierarchy.

``InputError`` subclasses signal bad user data (CLI exit code 2);
``ComputationError`` subclasses signal engine-level failures (exit code 1).
"""


class SigsurfError(Exception):
    pass


class InputError(SigsurfError, ValueError):
    pass


class ComputationError(SigsurfError):
    pass


class PolynomialSyntaxError(InputError):
    def __init__(self, message, position, text=""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class UnsupportedVariable(PolynomialSyntaxError):
    pass


class InvalidPairs(InputError):
    pass


class InvalidExponents(InputError):
    pass


class InvalidSequence(InputError):
    pass


class InvalidGraph(InputError):
    pass


class InvalidSpectralPairs(InputError):
    pass


class NotCoprime(InputError):
    pass


class FieldExtensionRequired(ComputationError):
    """A Newton polygon edge needs a root outside Q."""


class ReducibleCurve(ComputationError):
    """The germ at the origin has more than one branch (or a repeated one)."""


class SmoothBranch(ComputationError):
    """An engine that needs a singular branch received a smooth one."""


class NonIntegerSignature(ComputationError):
    pass


class NoApplicableEngine(ComputationError):
    pass


class AllEnginesFailed(ComputationError):
    def __init__(self, errors):
        self.errors = dict(errors)
        detail = "; ".join(f"{k}: {v}" for k, v in self.errors.items())
        super().__init__(f"every engine failed ({detail})")


class ConsensusFailure(ComputationError):
    def __init__(self, values):
        self.values = dict(values)
        detail = ", ".join(f"{k}={v}" for k, v in self.values.items())
        super().__init__(f"engines disagree: {detail}")


class Cancelled(SigsurfError):
    pass
