"""Exception taxonomy.

Two families matter downstream: InputError descendants are the caller's
fault (the CLI exits 2), InternalCheckError descendants mean a theorem-level
consistency assertion failed and indicate a bug (the CLI exits 1).
"""


class EquiorientError(Exception):
    """Base for all library errors."""


class InputError(EquiorientError):
    """Invalid user-supplied data (bad permutation, bad JSON, wrong group...)."""


class InvalidPermutation(InputError):
    """A supplied image sequence is not a bijection of the stated degree."""


class OrderCapExceeded(InputError):
    """Group closure or subgroup enumeration exceeded the configured cap."""


class NonIntegralElement(InputError):
    """A mark vector does not lie in the lattice of virtual G-sets."""


class NotAUnit(InputError):
    """Element passed where a unit of the Burnside ring was required."""


class NotIndexTwo(InputError):
    """Sign representation requested for a subgroup of index != 2."""


class OddOrderInput(InputError):
    """Operation defined only for groups of even order."""


class EvenOrderInput(InputError):
    """Operation defined only for groups of odd order."""


class NotFree(InputError):
    """Complex has a cell with nontrivial isotropy where a free one is required."""


class CoefficientMismatch(InputError):
    """Coefficient system and complex live over different groups."""


class InternalCheckError(EquiorientError):
    """A consistency check that should be a theorem failed; indicates a bug."""


class MatsudaMismatch(InternalCheckError):
    """Enumerated unit-group order disagrees with the 2^(m+1) count."""


class FormulaMismatch(InternalCheckError):
    """Computed restriction/transfer tables disagree with the closed form."""
