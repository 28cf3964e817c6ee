"""Counting engines: closed formula, cell census and brute-force oracle."""

from .census import (
    CaseTag,
    CellCount,
    PartitionSizes,
    census,
    census_count,
    closed_form_partition_sizes,
    h_histogram,
    h_st,
    max_h,
    partition_sizes,
    partition_table,
    r_st,
)
from .formula import (
    CoefficientTable,
    ExampleBookkeeping,
    ZetaFactors,
    coeff_a,
    coeff_a_prime,
    coefficient_table,
    example_decomposition,
    model_count,
    moduli_dimension,
    zeta_factors,
    zeta_series,
    zeta_series_from_counts,
)
from .inputs import ModelCount, RamificationInput, WeightDecomposition, decompose_e, decompose_n, prime_power_exponent
from .oracle import (
    LatticePoint,
    OracleReport,
    cancellation_profile,
    enumerate_cell,
    matrix_condition,
    oracle_count,
    same_point,
    valuation_condition,
)

__all__ = [
    "CaseTag",
    "CellCount",
    "PartitionSizes",
    "census",
    "census_count",
    "closed_form_partition_sizes",
    "h_histogram",
    "h_st",
    "max_h",
    "partition_sizes",
    "partition_table",
    "r_st",
    "CoefficientTable",
    "ExampleBookkeeping",
    "ZetaFactors",
    "coeff_a",
    "coeff_a_prime",
    "coefficient_table",
    "example_decomposition",
    "model_count",
    "moduli_dimension",
    "zeta_factors",
    "zeta_series",
    "zeta_series_from_counts",
    "ModelCount",
    "RamificationInput",
    "WeightDecomposition",
    "decompose_e",
    "decompose_n",
    "prime_power_exponent",
    "LatticePoint",
    "OracleReport",
    "cancellation_profile",
    "enumerate_cell",
    "matrix_condition",
    "oracle_count",
    "same_point",
    "valuation_condition",
]
