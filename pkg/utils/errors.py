# utils/errors.py
"""
Domain errors shared by every package
"""
from typing import Dict


class CompleteSetError(ValueError):
    """Base class for all domain errors; `code` is the machine-readable name"""

    code = 'CompleteSetError'

    def to_dict(self) -> Dict[str, str]:
        return {'name': self.code, 'message': str(self)}


class EmptyInput(CompleteSetError):
    code = 'EmptyInput'


class DuplicateElement(CompleteSetError):
    code = 'DuplicateElement'


class Overflow(CompleteSetError):
    code = 'Overflow'


class DegenerateSet(CompleteSetError):
    code = 'DegenerateSet'


class NotComplete(CompleteSetError):
    code = 'NotComplete'


class ZeroSum(CompleteSetError):
    code = 'ZeroSum'


class NoSuchT(CompleteSetError):
    code = 'NoSuchT'


class NotDisjoint(CompleteSetError):
    code = 'NotDisjoint'


class NonZeroSum(CompleteSetError):
    code = 'NonZeroSum'


class NTooLarge(CompleteSetError):
    code = 'NTooLarge'


class ZeroInput(CompleteSetError):
    code = 'ZeroInput'


class InvalidParameter(CompleteSetError):
    code = 'InvalidParameter'


class ConfigurationError(CompleteSetError):
    code = 'ConfigurationError'


class SetLiteralError(CompleteSetError):
    """Raised for malformed set literals; the CLI treats it as a usage error"""
    code = 'SetLiteralError'
