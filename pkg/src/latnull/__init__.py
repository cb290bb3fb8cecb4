"""Idempotent nullnorms on finite bounded lattices."""

from .axioms import (
    AxiomReport,
    OpTable,
    check_associative,
    check_commutative,
    check_idempotent,
    check_monotone,
    check_zero_element,
    is_idempotent_nullnorm,
)
from .characterization import (
    ExistenceVerdict,
    UniquenessClass,
    candidate_tables,
    check_comparable_corollary,
    check_ia_lemma,
    check_pro_special,
    classify_uniqueness,
    decide_existence,
    enumerate_idempotent_nullnorms,
)
from .constructions import (
    PartialOpTable,
    Variant,
    applicable_variants,
    build_skeleton,
    canonical_pair,
    construct_variant,
)
from .errors import *  # noqa: F401,F403
from .io import (
    LatticeDocument,
    emit_dot,
    emit_op_table_csv,
    format_lattice_file,
    load_fixture,
    parse_lattice_file,
    parse_op_table_csv,
    read_lattice_file,
)
from .lattice import CoverSpec, Lattice, build_from_covers, random_bounded_lattice

__version__ = "0.1.0"
