"""Exception hierarchy.

Every error raised by the library derives from :class:`TaxsimError`.  The CLI
maps the three families below onto its exit codes:

* :class:`UnknownConcept`       -> 2
* :class:`InputError`           -> 3 (file, taxonomy and frequency parsing)
* :class:`MeasureError`         -> 4 (measure preconditions)
"""


class TaxsimError(Exception):
    """Base class for all taxsim errors."""


class UnknownConcept(TaxsimError, KeyError):
    def __init__(self, label):
        super().__init__(label)
        self.label = label

    def __str__(self):
        return f"unknown concept {self.label!r}"


class InputError(TaxsimError):
    """Malformed or inconsistent input document."""


class MalformedLine(InputError):
    def __init__(self, lineno, reason):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


class EmptyTaxonomy(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class MultipleRoots(InputError):
    def __init__(self, roots):
        super().__init__("multiple parentless concepts: " + ", ".join(roots))
        self.roots = tuple(roots)


class CycleDetected(InputError):
    def __init__(self, cycle):
        super().__init__("cycle through " + " -> ".join(cycle))
        self.cycle = tuple(cycle)


class NoRoot(CycleDetected):
    """Every concept has a parent, which in a finite hierarchy implies a cycle."""


class NegativeCount(InputError):
    pass


class MeasureError(TaxsimError):
    """A similarity measure cannot be evaluated on the given inputs."""


class InvalidDepth(MeasureError):
    pass


class MissingIcTable(MeasureError):
    pass


class ZeroTotal(MeasureError):
    pass


class ZeroCumulative(MeasureError):
    def __init__(self, label):
        super().__init__(f"concept {label!r} has zero cumulative frequency")
        self.label = label


class ZeroDenominator(MeasureError):
    pass


class NegativeDistance(MeasureError):
    """Jiang-Conrath distance below zero; only possible with a corrupted IC table."""
