"""Exception hierarchy.

InputError covers anything a caller can fix (bad dimensions, malformed
documents, preconditions not met); InternalError marks contract
violations inside the library.  The CLI maps these to exit codes 2 and
3 respectively.
"""


class TropconnError(Exception):
    """Base class for all library errors."""


class InputError(TropconnError):
    """Caller-side problem: bad input, failed precondition."""


class EmptyPolyhedronError(InputError):
    """Operation needs a nonempty polyhedron."""


class PurityError(InputError):
    """Operation is only defined for pure-dimensional complexes."""


class ValidationRequiredError(InputError):
    """Operation needs a validated complex; call validate() first."""


class ImproperIntersectionError(InputError):
    """Slicing precondition failed: the intersection is not proper."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class TranslateSearchError(InputError):
    """No admissible slicing translate found within the retry budget."""


class DisconnectedSliceError(InputError):
    """A proper slice came out disconnected through codimension 1.

    This is a reported outcome, not a bug: for complexes that are not
    tropicalizations the inductive walk construction can fail here.
    """


class InternalError(TropconnError):
    """The library violated one of its own contracts."""


class RepairFailedError(InternalError):
    """Union repair did not converge within the iteration bound."""


class CertificateError(InternalError):
    """A slice certificate is corrupt or breaks the lifting lemma."""


class BasisSearchError(InternalError):
    """Basis search bound exhausted (mathematically impossible)."""
