"""Custom exception classes for the symprod toolkit."""


class SymprodError(Exception):
    """Base exception for all symprod errors."""
    pass


class InvalidInputError(SymprodError):
    """Input violates an operation's preconditions."""
    pass


class OutOfRegimeError(SymprodError):
    """A formula was requested outside the range where it holds."""
    pass


class IndistinguishableError(SymprodError):
    """No implemented invariant separates two multi symmetric products."""

    def __init__(self, a, b, genus: int):
        self.a = a
        self.b = b
        self.genus = genus
        super().__init__(
            f"no implemented invariant separates {a} and {b} at genus {genus}"
        )


class CertificateError(SymprodError):
    """A certificate payload could not be reproduced."""
    pass
