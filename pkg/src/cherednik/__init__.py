"""Blocks, smoothness and character-theoretic invariants of restricted rational
Cherednik algebras of G(m,1,n) in positive characteristic."""

__version__ = "0.1.0"

from .blocks import BlockPartition, ParameterSet, block_partition, derive_params, residue_of, same_block
from .combinatorics import Multipartition, ResidueMultiset, enumerate_multipartitions, parse_multipartition, shifted_residue
from .gf import FieldCtx, FieldElement, artin_schreier, ctx_create, in_prime_subfield, primitive_root_of_unity
from .smoothness import g4_generic_check, singular_locus_report, smooth_iff_singleton_blocks

__all__ = [
    "BlockPartition",
    "FieldCtx",
    "FieldElement",
    "Multipartition",
    "ParameterSet",
    "ResidueMultiset",
    "artin_schreier",
    "block_partition",
    "ctx_create",
    "derive_params",
    "enumerate_multipartitions",
    "g4_generic_check",
    "in_prime_subfield",
    "parse_multipartition",
    "primitive_root_of_unity",
    "residue_of",
    "same_block",
    "shifted_residue",
    "singular_locus_report",
    "smooth_iff_singleton_blocks",
]
