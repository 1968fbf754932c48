"""Exact integer Hodge diamond calculator for the OG10 manifold."""

from .diamond import (
    DiamondError,
    DuplicateEntry,
    HodgeDiamond,
    NegativeMultiplicity,
    NegativeValue,
    VirtualDiamond,
    make_diamond,
)
from .diamondfile import ParseError, parse_diamond, write_diamond
from .ledger import (
    ArityMismatch,
    Inconsistent,
    NgoString,
    StringTerm,
    StratumRankTable,
    build_string,
    rhl_check,
    solve_epsilon,
    string_cohomology_class,
    weight_slices,
)
from .partitions import Partition, partitions_of, schur_dimension
from .pipeline import (
    ConsistencyError,
    hilb2,
    hilb5,
    hilb5_schur_decomposition,
    k3,
    og10_diamond,
    og10_schur_decomposition,
    schur_identities,
)
from .series import DiamondSeries, NotASurface, goettsche, macdonald_sym
from .symfunc import (
    OddClassesUnsupported,
    e_series,
    ext_power,
    h_series,
    schur,
    sym_power,
)
from .validators import (
    check_euler,
    check_hodge_symmetry,
    check_poincare,
    check_salamon,
    validation_report,
)

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "ConsistencyError",
    "DiamondError",
    "DiamondSeries",
    "DuplicateEntry",
    "HodgeDiamond",
    "Inconsistent",
    "NegativeMultiplicity",
    "NegativeValue",
    "NgoString",
    "NotASurface",
    "OddClassesUnsupported",
    "ParseError",
    "Partition",
    "StratumRankTable",
    "StringTerm",
    "VirtualDiamond",
    "build_string",
    "check_euler",
    "check_hodge_symmetry",
    "check_poincare",
    "check_salamon",
    "e_series",
    "ext_power",
    "goettsche",
    "h_series",
    "hilb2",
    "hilb5",
    "hilb5_schur_decomposition",
    "k3",
    "macdonald_sym",
    "make_diamond",
    "og10_diamond",
    "og10_schur_decomposition",
    "parse_diamond",
    "partitions_of",
    "rhl_check",
    "schur",
    "schur_dimension",
    "schur_identities",
    "solve_epsilon",
    "string_cohomology_class",
    "sym_power",
    "validation_report",
    "weight_slices",
    "write_diamond",
]
