"""Exception hierarchy shared by all modules."""


class SemimodError(Exception):
    pass


class ShapeError(SemimodError, ValueError):
    pass


class AxiomViolation(SemimodError, ValueError):
    """Raised when operation tables fail the commutative semiring axioms.

    ``violations`` is a list of ``(axiom_name, witness_tuple)`` pairs; the
    first entry is the first failing axiom in :data:`AXIOM_ORDER` order.
    """

    def __init__(self, violations, labels=None):
        self.violations = list(violations)
        self.labels = labels
        axiom, witness = self.violations[0]
        super().__init__(f"{axiom} fails at {witness}")

    @property
    def axiom(self):
        return self.violations[0][0]

    @property
    def witness(self):
        return self.violations[0][1]


class NotALattice(SemimodError, ValueError):
    pass


class NotARing(SemimodError, ValueError):
    pass


class RankMismatch(SemimodError, ValueError):
    pass


class AmbientMismatch(SemimodError, ValueError):
    pass


class NotSplitting(SemimodError, ValueError):
    pass


class NotCommuting(SemimodError, ValueError):
    pass


class UniquenessViolation(SemimodError, RuntimeError):
    pass


class NoBounds(SemimodError, ValueError):
    pass


class InvolutionNotClosed(SemimodError, ValueError):
    pass


class NoInvolution(SemimodError, ValueError):
    pass


class NotOrthoposet(SemimodError, ValueError):
    pass


class NotAPartialOrder(SemimodError, ValueError):
    pass


class CapExceeded(SemimodError):
    """Base for all size/search cap errors (CLI exit code 4)."""


class SizeCapExceeded(CapExceeded):
    pass


class EnumerationCapExceeded(CapExceeded):
    pass


class SearchCapExceeded(CapExceeded):
    pass
