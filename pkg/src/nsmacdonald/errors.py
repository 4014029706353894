from ._validation import ContractViolation


class ResultFailure(AssertionError):
    """A proved identity failed on a concrete instance.

    ``witness`` carries whatever data reproduces the failure; the CLI dumps it
    and exits with a dedicated status.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class HypothesisViolation(ContractViolation):
    """The hypothesis of the union-reflection step does not hold."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


__all__ = ["ContractViolation", "HypothesisViolation", "ResultFailure"]
