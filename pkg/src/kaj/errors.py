"""Exception hierarchy shared by every kaj module."""


class KajError(ValueError):
    """Base class for all errors raised by the library."""


class EmptyMessage(KajError):
    pass


class InvalidParams(KajError):
    pass


class MalformedImage(KajError):
    pass


class RemainderOutOfRange(KajError):
    pass


class IntegrityError(KajError):
    """Decryption produced something that cannot be a valid plaintext.

    Raised on a wrong key, wrong parameters or a tampered ciphertext.
    """


class DivisibilityError(IntegrityError):
    pass


class ByteRangeError(IntegrityError):
    pass


class LengthMismatch(IntegrityError):
    pass


class InvalidEncoding(KajError):
    pass


class FormatError(KajError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
