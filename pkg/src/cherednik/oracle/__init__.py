"""Brute-force restricted Cherednik algebras for C_m and S_2 over small fields."""

from __future__ import annotations

from ..blocks import ParameterSet, block_partition
from .analysis import (
    block_decomposition,
    centre_data,
    power_sum_eigenvalues,
    simple_head_dims,
    verify_DO_identities,
)
from .modules import baby_verma, central_character, linear_characters, simple_head
from .pbw import RestrictedAlgebra, build_restricted_rank1, build_restricted_s2, expected_dimension


def oracle_report(alg: RestrictedAlgebra, identities: bool = True) -> dict:
    """Everything the oracle computes for one algebra, as JSON-ready data."""
    ps = alg.ps
    cd = centre_data(alg)
    blocks = block_decomposition(alg, cd)
    predicted = block_partition(ps)
    report = {
        "params": ps.describe(),
        "ctx": ps.ctx.describe(),
        "dim": alg.dim,
        "verma_dims": {str(lam.label): baby_verma(alg, lam).dim for lam in linear_characters(alg)},
        **blocks.to_json(),
        "predicted_classes": [[str(x) for x in cl.members] for cl in predicted.classes],
        "simple_head_dims": simple_head_dims(alg),
        "power_sums": {
            str(r): {k: str(v) for k, v in power_sum_eigenvalues(alg, r).items()} for r in range(1, ps.n + 1)
        },
    }
    if identities:
        rep = verify_DO_identities(alg, strict=False)
        report["identities"] = rep.checks
    return report


__all__ = [
    "RestrictedAlgebra",
    "baby_verma",
    "block_decomposition",
    "build_restricted_rank1",
    "build_restricted_s2",
    "central_character",
    "centre_data",
    "expected_dimension",
    "linear_characters",
    "oracle_report",
    "power_sum_eigenvalues",
    "simple_head",
    "simple_head_dims",
    "verify_DO_identities",
]
