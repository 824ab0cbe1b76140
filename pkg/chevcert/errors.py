""" This module defines the exceptions raised by ChevCert. """


class ChevCertError(RuntimeError):
    """Base class of all ChevCert errors."""


class InputError(ChevCertError, ValueError):
    """Invalid user input (type strings, primes, ranks, levels...)."""


class DegenerateCartanPairing(InputError):
    """The prime divides the determinant of the Cartan matrix."""


class StructureConstantsVanish(InputError):
    """The prime does not exceed the largest structure constant."""


class EnumerationCapExceeded(ChevCertError):
    """A subgroup enumeration grew past the configured cap."""


class PrimeSearchCeilingExceeded(ChevCertError):
    """The prime search of the effective bound passed its ceiling."""


class NoValidToralElement(ChevCertError):
    """No toral element with nonzero value on every root could be found."""


class InvariantViolation(ChevCertError):
    """
    An outcome that contradicts a proven statement. This is always a defect
    of the implementation, never a property of the input.
    """
