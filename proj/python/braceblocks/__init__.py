"""Finite groups, abelian-image endomorphisms, twisted products, and the
resulting set-theoretic Yang-Baxter solutions. The heavy lifting lives in
the compiled extension; this package just re-exports it."""

from ._core import (
    AbelianMap,
    BraceBlock,
    Census,
    Group,
    InvalidParameter,
    ParseError,
    VerificationError,
    abelian_map,
    abelian_map_from_images,
    build_census,
    compute_block,
    enumerate_abelian_maps,
    group,
    group_from_table,
    group_isomorphic,
    psi_n,
    verify_properties,
)

__all__ = [
    "AbelianMap",
    "BraceBlock",
    "Census",
    "Group",
    "InvalidParameter",
    "ParseError",
    "VerificationError",
    "abelian_map",
    "abelian_map_from_images",
    "build_census",
    "compute_block",
    "enumerate_abelian_maps",
    "group",
    "group_from_table",
    "group_isomorphic",
    "psi_n",
    "verify_properties",
]
