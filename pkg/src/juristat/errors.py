"""Exception hierarchy.

Every error raised for bad user input derives from :class:`JuristatError` and
carries a stable, machine-readable ``code`` that the CLI prints on failure.
"""


class JuristatError(Exception):
    code = "JURISTAT_ERROR"


class InvalidValue(JuristatError, ValueError):
    code = "INVALID_VALUE"


class MalformedRow(JuristatError, ValueError):
    code = "MALFORMED_ROW"


class NonContiguous(JuristatError, ValueError):
    code = "NON_CONTIGUOUS"


class EmptySeries(JuristatError, ValueError):
    code = "EMPTY_SERIES"


class TooShort(JuristatError, ValueError):
    code = "TOO_SHORT"


class LengthMismatch(JuristatError, ValueError):
    code = "LENGTH_MISMATCH"


class EvenPanel(JuristatError, ValueError):
    code = "EVEN_PANEL"


class CapExceeded(JuristatError, RuntimeError):
    code = "CAP_EXCEEDED"


class InconsistentCounts(JuristatError, ValueError):
    code = "INCONSISTENT_COUNTS"


class ZeroAccused(JuristatError, ValueError):
    code = "ZERO_ACCUSED"


class ZeroEvidence(JuristatError, ValueError):
    code = "ZERO_EVIDENCE"


class OutOfRange(JuristatError, ValueError):
    code = "OUT_OF_RANGE"


class DegenerateTerm(JuristatError, ValueError):
    code = "DEGENERATE_TERM"


class CorrectionDominates(JuristatError, ValueError):
    code = "CORRECTION_DOMINATES"


class SingularDesign(JuristatError, ValueError):
    code = "SINGULAR_DESIGN"


class AllModelsFailed(JuristatError, RuntimeError):
    code = "ALL_MODELS_FAILED"


class UnsupportedFrequency(JuristatError, ValueError):
    code = "UNSUPPORTED_FREQUENCY"


class IoFailure(JuristatError, OSError):
    code = "IO_FAILURE"


class InputFileNotFound(JuristatError, FileNotFoundError):
    code = "FILE_NOT_FOUND"
