class InputError(ValueError):
    """Raised for malformed or out-of-range inputs (bad family, rank, parameters, dimensions)."""


class OracleDisagreement(RuntimeError):
    """The matrix oracle contradicted a root-level certificate."""
