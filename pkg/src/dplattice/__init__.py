"""Lattice combinatorics of degree-2 weak del Pezzo surfaces.

The package models the Picard lattice Z^{1,7} exactly over the
integers and mechanizes the combinatorial facts behind the
classification of singular del Pezzo surfaces of degree 2: the 56
exceptional classes and 126 roots with their intersection tables,
singularity configurations and their ADE types, derivation and
contraction of (-1)-curves for every configuration type, the full
Weyl group W(E7) with its orbit and trace computations, and the
resulting rational point-count thresholds over finite fields.
"""

from .lattice import (
    ContractionError,
    DivisorClass,
    InvalidRootError,
    LatticeError,
    SurfaceLattice,
)
from .enumeration import (
    ClassCatalog,
    catalog,
    exceptional_classes,
    intersection_table,
    root_classes,
)
from .contraction import BlowDownResult, QuadricLattice, blow_down
from .configuration import (
    Configuration,
    DEGREE2_TYPES,
    Fingerprint,
    InvalidConfigurationError,
    SMOOTH,
    SingularityType,
    classify_dynkin,
    orbit_fingerprint,
    validate_configuration,
)
from .curves import (
    classes_meeting,
    derive_pair_curves,
    eckardt_quadruples,
    free_minus_one_curves,
    is_minus_one_curve,
    pair_classes,
    reduce_to_minus_one,
    triple_a1_curves,
)
from .derivations import DerivedGraph, derive_configuration, terminal_leaf_pair
from . import registry
from .weyl import (
    GROUP_ORDER,
    WeylElement,
    WeylGroup,
    delta_sets,
    generate_group,
    shared_group,
    trace_set,
    verify_transitivity,
)
from .arithmetic import (
    ArithmeticCase,
    ArithmeticInputError,
    CASES,
    min_surface_points,
    off_ramification_lower_bound,
    prime_powers_up_to,
    ramification_point_bound,
    required_point_count,
    unirationality_threshold,
)

__version__ = "1.0.0"
