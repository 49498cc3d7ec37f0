"""Exception types shared across the package.

PipelineError subclasses are user-facing failure modes (CLI exit code 3);
InternalInvariantError always indicates a bug in this package, never bad input.
"""

from __future__ import annotations


class KMinorError(Exception):
    """Base class for all package-specific errors."""


class PipelineError(KMinorError):
    """An extraction run could not produce a certificate."""


class DensityTooLowError(PipelineError):
    """Input graph has edge_count < d * vertex_count."""


class CoreExtractionError(PipelineError):
    """The highly-connected core could not be certified after one split."""


class LemmaPreconditionError(PipelineError):
    """A precondition of the dominating-set sampler does not hold."""


class SamplerFailedError(PipelineError):
    """The Las-Vegas sampler exhausted its retry budget."""


class JoinOverflowError(PipelineError):
    """Connecting the sampled set required more than 65 extra vertices."""


class GuaranteeUnmetError(PipelineError):
    """Guarantee mode could not complete its planned iterations."""


class InternalInvariantError(KMinorError):
    """An internal consistency check failed; this is a bug, not bad input."""


class EdgeListFormatError(KMinorError):
    """Malformed edge-list document."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class CertificateFormatError(KMinorError):
    """Malformed certificate document or out-of-range certificate ids."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
