"""Exceptions raised by `mbuniq`. All of them derive from :class:`ValueError`
so that callers written against plain `ValueError` keep working.
"""
class MbuniqError(ValueError):
    """Base class for all errors raised by the package."""
    pass

class UnknownVariableError(MbuniqError):
    """A variable id was referenced that the distribution or dataset does not
    declare.
    """
    def __init__(self, ids, known):
        self.ids = sorted(ids)
        self.known = list(known)
        super(UnknownVariableError, self).__init__(
            "Unknown variable(s) {}; known are {}.".format(self.ids, self.known))

class OverlapError(MbuniqError):
    """Variable sets that must be disjoint (e.g. `x`, `y` and the conditioning
    set of a measure) share members.
    """
    def __init__(self, shared):
        self.shared = sorted(shared)
        super(OverlapError, self).__init__(
            "Variable sets must be disjoint; shared: {}.".format(self.shared))

class NormalizationError(MbuniqError):
    """A probability table or noise distribution is negative somewhere, does not
    sum to one, or is not strictly positive where it must be.
    """
    pass

class SupportError(MbuniqError):
    """A precondition on the support of a distribution is violated, e.g. the
    witness pair of a singularity family has positive probability.
    """
    pass

class ScopeError(MbuniqError):
    """The scope of a boundary search is invalid (too large for the oracle, or
    it contains the target).
    """
    pass

class ConfigError(MbuniqError):
    """An experiment or command configuration is invalid."""
    pass
