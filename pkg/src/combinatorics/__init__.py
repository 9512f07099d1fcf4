# Permutations, signed permutations and vectorised enumeration
from .permutations import BoundaryConvention, Direction, Permutation, StatProfile
from .signed import SignedPermutation

__all__ = ['BoundaryConvention', 'Direction', 'Permutation', 'StatProfile', 'SignedPermutation']
