"""Exception hierarchy with stable error codes.

Every error raised by this package derives from VandermergeError and
carries a machine-readable ``code`` that the CLI surfaces verbatim, so
scripts can match on codes instead of message text.
"""


class VandermergeError(Exception):
    code = "error"


# -- field construction and arithmetic

class NotPrime(VandermergeError):
    code = "not-prime"


class ReducibleModulus(VandermergeError):
    code = "reducible-modulus"

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class MixedFields(VandermergeError):
    code = "mixed-fields"


class ZeroInverse(VandermergeError):
    code = "zero-inverse"


class ZeroElement(VandermergeError):
    code = "zero-element"


class BadExponent(VandermergeError):
    code = "bad-exponent"


# -- matrices

class NotSquare(VandermergeError):
    code = "not-square"


class ZeroScalar(VandermergeError):
    code = "zero-scalar"


# -- feasibility bounds

class NotPrimePower(VandermergeError):
    code = "not-prime-power"


class NotPowerOfTwo(VandermergeError):
    code = "not-power-of-two"


class NoZeroSumSubset(VandermergeError):
    code = "no-zero-sum-subset"


class TooFewRows(VandermergeError):
    code = "too-few-rows"


# -- scalar constructions

class TooManyScalars(VandermergeError):
    code = "too-many-scalars"


class CoprimalityViolation(VandermergeError):
    code = "coprimality-violation"

    def __init__(self, message, which=None):
        super().__init__(message)
        self.which = which


class FixedFieldTooLarge(VandermergeError):
    code = "fixed-field-too-large"


class TrivialAutomorphism(VandermergeError):
    code = "trivial-automorphism"


class PreconditionViolated(VandermergeError):
    code = "precondition-violated"


# -- codes and conversion

class LengthMismatch(VandermergeError):
    code = "length-mismatch"


class TooFewSymbols(VandermergeError):
    code = "too-few-symbols"


class SingularSubsystem(VandermergeError):
    code = "singular-subsystem"


class InvalidInitialCodeword(VandermergeError):
    code = "invalid-initial-codeword"


class NotSuperRegular(VandermergeError):
    code = "not-super-regular"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BadLambda(VandermergeError):
    code = "bad-lambda"


# -- search

class BudgetExceeded(VandermergeError):
    code = "budget-exceeded"
