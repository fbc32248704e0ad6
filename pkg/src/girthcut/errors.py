"""Exception types shared across the package.

Plain ``ValueError`` is used for ordinary domain errors (bad degree, bad
radius, length mismatches); the classes here mark failures that callers,
in particular the CLI, need to tell apart.
"""


class GirthCutError(Exception):
    """Base class for girthcut-specific failures."""


class IngestionError(GirthCutError):
    """Raised when an edge-list stream cannot be parsed into a simple graph."""


class CertificationError(GirthCutError):
    """Raised when a graph fails a required (degree, girth) precondition."""


class GenerationError(GirthCutError):
    """Raised when random graph generation exhausts its attempt budget."""
