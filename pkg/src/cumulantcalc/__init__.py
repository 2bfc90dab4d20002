"""Exact combinatorics of classical, free, Boolean and monotone cumulants.

The package computes, over exact rationals, the combinatorial apparatus
relating the four cumulant families of noncommutative probability: set
partition lattices with their Moebius functions, nesting forests and tree
factorials, labelling polynomials, crossing and anti-interval graphs with
Tutte evaluations, heap/pyramid enumeration, permutation statistics, and
the beta coefficients of the monotone-to-classical expansion.  Every
identity in the catalog is machine-verified as an exact polynomial or
series equality (see `cumulantcalc.identities`).
"""

from .algebra import (
    MomentPolynomial,
    Polynomial,
    Rational,
    TruncatedSeries,
    bernoulli_number,
    bernoulli_polynomial,
    faulhaber_polynomial,
    moment_monomial,
    rational_from_str,
    rational_to_str,
)
from .cumulants import (
    BetaTable,
    CumulantKind,
    beta,
    beta_expansion_check,
    beta_formula,
    beta_recursive,
    boolean_poisson_kappa,
    build_beta_table,
    convert_sequence,
    cumulant_poly,
    cumulants_from_moments,
    determinant_cumulants,
    determinant_moments,
    lenczewski_sum_check,
    logbessel_beta_check,
    moments_from_cumulants,
    monotone_dilate,
    nested_pair_partition,
    partitioned_cumulant,
    tilde_transform,
)
from .forests import (
    RootedForest,
    RootedTree,
    alpha,
    depth,
    labelling_polynomial,
    monotone_labelling_count,
    nesting_forest,
    tree_factorial,
)
from .graphs import (
    HeapOrder,
    MixedGraph,
    acyclic_orientations_unique_source,
    anti_interval_digraph,
    anti_interval_graph,
    count_pyramids,
    crossing_graph,
    enumerate_pyramids,
    partition_sum_identity_check,
    tutte_eval,
    tutte_polynomial,
)
from .identities import (
    IDENTITY_CATALOG,
    Report,
    experimental_thm2_multivariate,
    identity_names,
    run_catalog,
    verify_identity,
)
from .limits import ResourceLimitError
from .partitions import (
    OrderedPartition,
    PartitionClass,
    SetPartition,
    enumerate_monotone,
    enumerate_partitions,
    kreweras_complement,
    lattice_join,
    lattice_leq,
    lattice_meet,
    mobius,
    triangle_geq,
)
from .permutations import (
    Permutation,
    cycle_runs,
    cycles,
    cyclic_permutations,
    eulerian,
    eulerian_polynomial,
    phi,
    psi,
    psi_inverse,
    runs,
)

__version__ = "0.1.0"
