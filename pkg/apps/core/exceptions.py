"""
Error hierarchy shared by every NCK app.

Modelled on REST framework's APIException: each class carries a default
detail and code, plus the process exit code the command line maps it to.
"""


class ToolkitError(Exception):
    """Base class for toolkit failures."""

    default_detail = 'Toolkit error.'
    default_code = 'error'
    exit_code = 1

    def __init__(self, detail=None, code=None):
        self.detail = detail if detail is not None else self.default_detail
        self.code = code if code is not None else self.default_code
        super().__init__(self.detail)

    def __str__(self):
        return str(self.detail)


class DomainError(ToolkitError, ValueError):
    """Input outside the domain of an operation."""

    default_detail = 'Invalid input.'
    default_code = 'domain'


class AlphaTooSmallError(DomainError):
    """The family's modulus at delta exceeds the requested alpha."""

    default_code = 'alpha_too_small'

    def __init__(self, omega, alpha, delta):
        self.omega = omega
        self.alpha = alpha
        self.delta = delta
        super().__init__(
            f'alpha too small for delta: omega({delta!r})={omega!r} > alpha={alpha!r}'
        )


class QuantizationRangeError(DomainError):
    """A value left the ball the lattice was sized for."""

    default_code = 'quantization_range'

    def __init__(self, norm, bound):
        self.norm = norm
        self.bound = bound
        super().__init__(
            f'quantization range exceeded: |value|={norm!r} > bound={bound!r}'
        )


class ContractViolation(ToolkitError, RuntimeError):
    """An internal postcondition did not hold."""

    default_detail = 'Internal contract violation.'
    default_code = 'contract'


class VerificationFailed(ToolkitError):
    """A verification ran to completion and failed."""

    default_detail = 'Verification failed.'
    default_code = 'verification'
    exit_code = 2
