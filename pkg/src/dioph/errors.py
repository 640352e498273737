"""Exception taxonomy shared by every module.

Each class carries a ``name`` used verbatim in CLI error documents.
"""


class DiophError(Exception):
    name = "DiophError"


class NonPrime(DiophError, ValueError):
    name = "NonPrime"


class ReducibleModulus(DiophError, ValueError):
    name = "ReducibleModulus"


class ModulusNotMonic(DiophError, ValueError):
    name = "ModulusNotMonic"


class FieldMismatch(DiophError, ValueError):
    name = "FieldMismatch"


class ZeroDenominator(DiophError, ZeroDivisionError):
    name = "ZeroDenominator"


class NotIrreducible(DiophError, ValueError):
    name = "NotIrreducible"


class TextSyntaxError(DiophError, ValueError):
    """Malformed polynomial, rational function or field spec text."""

    name = "SyntaxError"


class ExponentCapExceeded(DiophError, OverflowError):
    name = "ExponentCapExceeded"


class ZeroInput(DiophError, ValueError):
    name = "ZeroInput"


class WrongCharacteristic(DiophError, ValueError):
    name = "WrongCharacteristic"


class InternalLemmaViolation(DiophError, AssertionError):
    """The equation-based verdict disagrees with the syntactic form t^(p^s)."""

    name = "InternalLemmaViolation"


class NegativeValuation(DiophError, ValueError):
    name = "NegativeValuation"


class NonpositiveEpsilon(DiophError, ValueError):
    name = "NonpositiveEpsilon"


class FormulaSyntaxError(DiophError, ValueError):
    name = "SyntaxError"

    def __init__(self, position, expected, text=""):
        self.position = position
        self.expected = expected
        msg = f"at position {position}: expected {expected}"
        if text:
            msg += f" in {text!r}"
        super().__init__(msg)


class NegationUnsupported(FormulaSyntaxError):
    name = "NegationUnsupported"


class UniversalUnsupported(FormulaSyntaxError):
    name = "UniversalUnsupported"


class UnboundVariable(DiophError, KeyError):
    name = "UnboundVariable"

    def __str__(self):
        return Exception.__str__(self)


class RebindingUnsupported(DiophError, ValueError):
    """A variable is quantified twice, or quantifies over a bound input."""

    name = "RebindingUnsupported"
