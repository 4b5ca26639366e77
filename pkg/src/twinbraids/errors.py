"""Exception types shared across the package."""


class TwinBraidError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGeneratorError(TwinBraidError, ValueError):
    """A word contains a letter outside the ambient graph's vertex range."""


class InvalidTripleError(TwinBraidError, ValueError):
    """A shuffle triple is not strictly increasing inside 1..6."""


class NotBicolouredError(TwinBraidError):
    """A braid word does not preserve the partition {1,2,3} | {4,5,6}."""


class NotPureError(TwinBraidError):
    """A braid word has a non-identity underlying permutation."""


class NotInKernelError(TwinBraidError):
    """A free-product element does not map to the identity of S."""


class NotInQError(TwinBraidError):
    """A word in A does not map to the identity of S3 x S3."""


class SetupError(TwinBraidError):
    """A kernel-rewriting setup is inconsistent (bad transversal or images)."""


class InconsistentImagesError(TwinBraidError):
    """Generator images do not satisfy the presentation's relators."""


class NonTransitiveActionError(TwinBraidError):
    """The generator images do not act transitively from point 0."""


class TableConsistencyError(TwinBraidError):
    """The embedded generator table disagrees with its braid re-derivation."""
