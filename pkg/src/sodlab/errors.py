class VerificationError(RuntimeError):
    """A computed object failed an identity it is asserted to satisfy."""
