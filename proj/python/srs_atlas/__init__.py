"""Exact finiteness analysis for shift radix systems."""

from ._core import (
    SrsError,
    cell_contains,
    cutout_cell,
    decide,
    orbit,
    region,
    render,
    run_cli,
    tau,
    verify_catalog,
    verify_family,
    witness_set,
)

__all__ = [
    "SrsError",
    "cell_contains",
    "cutout_cell",
    "decide",
    "orbit",
    "region",
    "render",
    "run_cli",
    "tau",
    "verify_catalog",
    "verify_family",
    "witness_set",
]
