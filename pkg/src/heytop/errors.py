"""Exception hierarchy shared by all heytop modules."""


class HeytopError(Exception):
    """Base class for every error raised by this package."""


class NotALattice(HeytopError):
    """The given order is not a (bounded) lattice.

    ``witness`` is a pair of element names lacking a meet or join, or None
    when the defect is global (no bottom/top, broken antisymmetry).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotHeyting(HeytopError):
    """The lattice has no relative pseudo-complement.

    ``witness`` is a triple of element names (a, b, c) on which the
    residuation law c <= a->b  iff  c /\\ a <= b fails.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ContextMismatch(HeytopError):
    """Two values built over different algebras or carriers were combined."""


class CapExceeded(HeytopError):
    """An operation required enumerating a subset space above the cap."""


class CertificateFailure(HeytopError):
    """An operator failed the profile check required by its wrapper type.

    ``flag`` names the offending profile flag, ``witness`` re-checks false.
    """

    def __init__(self, message, flag=None, witness=None):
        super().__init__(message)
        self.flag = flag
        self.witness = witness


class NotCompatible(HeytopError):
    """A saturation/reduction pair is not compatible.

    ``witness`` is the first subset pair (U, V) on which compatibility
    fails; ``degree`` is the element name of the compatibility degree.
    """

    def __init__(self, message, witness=None, degree=None):
        super().__init__(message)
        self.witness = witness
        self.degree = degree


class UnknownEntry(HeytopError):
    """Requested catalog entry does not exist."""


class ParseError(HeytopError):
    """Workspace document is syntactically malformed."""

    def __init__(self, message, line=0, column=0):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ValidationError(HeytopError):
    """Workspace document parsed but violates an invariant."""

    def __init__(self, message, obj=None):
        super().__init__(message)
        self.obj = obj


class UnknownName(HeytopError):
    """A command referred to a workspace object that does not exist."""


class UnknownCommand(HeytopError):
    """The CLI was invoked with an unrecognized command."""
