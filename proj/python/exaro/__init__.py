"""Exotic aromatic tree calculus: enumeration, elementary differentials,
dual pairings, equivariance verification and gradient normal forms."""

from ._exaro import (
    Tree,
    enumerate_by_composition,
    enumerate_by_nodes,
    enumerate_by_order,
    pairing,
    render_table,
    verify,
)

__all__ = [
    "Tree",
    "enumerate_by_composition",
    "enumerate_by_nodes",
    "enumerate_by_order",
    "pairing",
    "render_table",
    "verify",
]
