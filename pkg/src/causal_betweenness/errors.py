"""Exception types shared across the package."""


class NotABetweenness(ValueError):
    """Raised when an operation needs a betweenness and got something else."""

    def __init__(self, report):
        self.report = report
        shown = ", ".join(f"{axiom} {t}" for axiom, t in report.violations[:5])
        super().__init__(f"relation is not a betweenness ({shown})")


class CyclicGraph(ValueError):
    def __init__(self, cycle):
        self.cycle = cycle
        super().__init__(f"derived digraph has a directed cycle of length {len(cycle)}")


class NotRealizable(ValueError):
    """The relation fails the realizability test; carries the certificate."""

    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__(f"relation is not an abstract causal betweenness: {certificate.verdict}")


class UnsupportedOrder(ValueError):
    pass


class TooLarge(ValueError):
    pass


class ConditionOnNull(ZeroDivisionError):
    pass


class DuplicateEvents(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class ConstructionError(AssertionError):
    """A witness invariant failed. This is a bug, never a bad input."""
