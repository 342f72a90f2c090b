"""Linear-delay Lyndon word enumeration and irreducible polynomials over F_p."""

from .finite_field import (
    ConsistencyError,
    DegreeCollapse,
    ExtensionField,
    NormalBasis,
    PrimeField,
    find_irreducible,
    find_normal_basis,
    frobenius_normal,
    gamma_from_word,
    is_irreducible,
    minimal_polynomial,
)
from .lyndon_enum import (
    EnumState,
    Exhausted,
    UpdateTally,
    count_lyndon,
    duval_next,
    enumerate_all,
    next_lyndon_of_length_n,
)
from .pipeline import EnumConfig, EnumRecord, preprocess, run, verify_stream
from .suffix_membership import SymbolOrder, build_suffix_tree, is_lyndon_suffix_tree
from .words import CompressedWord, ContractError, compress, decompress, is_lyndon_naive, rotate

__version__ = '0.1.0'
