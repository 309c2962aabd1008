"""Exception taxonomy. Domain errors map to CLI exit code 1, I/O and parse errors to 2."""


class FanoscapeError(Exception):
    """Base class for all domain errors raised by this package."""


class DegenerateHull(FanoscapeError):
    """Input points are not full-dimensional in the ambient lattice."""


class OriginNotInterior(FanoscapeError):
    """An operation that needs the origin strictly inside the polytope got one without."""


class DimensionMismatch(FanoscapeError):
    """Operand has the wrong ambient dimension."""


class NotPointed(FanoscapeError):
    """The cone contains a line, so it has no Hilbert basis."""


class ZeroWeight(FanoscapeError):
    """A grading weight or equation degree must be a positive integer."""


class NotMutable(FanoscapeError):
    """The mutation divisibility / Minkowski-summand precondition fails."""


class WeightMismatch(FanoscapeError):
    """Hypersurface degree does not equal the required sum of weights."""


class NotQuasismooth(FanoscapeError):
    """Terminality analysis requires a quasismooth candidate."""


class EmptyStore(FanoscapeError):
    """A scatter plot needs at least one record."""


class DuplicateId(FanoscapeError):
    """Two landscape records share an id."""


class ParseError(Exception):
    """Malformed input file. Carries a 1-based line number when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
