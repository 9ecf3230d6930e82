"""Divides, vanishing-cycle lattices and decomposition reports for plane curve singularities."""

from ._acampo import (
    atomic_classes,
    decompose,
    dynkin,
    enumerate_quotient,
    generate_grid_divide,
    generate_line_arrangement_divide,
    germ_invariants,
    homology_limit_report,
    kernel_of_hom_on_subgroup,
    run_cli,
    semigroup_and_delta,
    smith_normal_form,
    subgroup_quotient_order,
    validate_divide,
)

__all__ = [
    "atomic_classes",
    "decompose",
    "dynkin",
    "enumerate_quotient",
    "generate_grid_divide",
    "generate_line_arrangement_divide",
    "germ_invariants",
    "homology_limit_report",
    "kernel_of_hom_on_subgroup",
    "run_cli",
    "semigroup_and_delta",
    "smith_normal_form",
    "subgroup_quotient_order",
    "validate_divide",
]
