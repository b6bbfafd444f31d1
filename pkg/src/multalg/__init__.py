"""Exact computations with multiplier algebras of non-unital algebras.

The most used entry points are re-exported here; the submodules hold the
rest (``multalg.modules``, ``multalg.homs``, ``multalg.coalgebra``,
``multalg.colimit``, ``multalg.oracles``).
"""

from .algebra import FiniteAlgebra, Verdict, check_idempotent, check_nondegenerate, is_ideal
from .errors import (
    DegenerateProduct,
    MultalgError,
    PropertyMismatch,
    ValidationError,
)
from .fields import GF, QI, QQ, field_from_name
from .fixtures import FIXTURES, worked_example, matrix_units, upper_triangular
from .linalg import Subspace
from .local_units import find_unit, firm_ring_check, has_local_units, local_unit_for
from .multipliers import (
    Multiplier,
    MultiplierAlgebra,
    compute_left_multipliers,
    compute_multiplier_algebra,
    compute_right_multipliers,
    density_test,
    left_realize,
    pullback_check,
    realize_in_unital,
    strict_closure,
    universal_map,
)
from .serialize import algebra_from_spec, algebra_to_spec, load_algebra

__version__ = "0.1.0"

__all__ = [
    "FIXTURES",
    "GF",
    "QI",
    "QQ",
    "DegenerateProduct",
    "FiniteAlgebra",
    "MultalgError",
    "Multiplier",
    "MultiplierAlgebra",
    "PropertyMismatch",
    "Subspace",
    "ValidationError",
    "Verdict",
    "algebra_from_spec",
    "algebra_to_spec",
    "check_idempotent",
    "check_nondegenerate",
    "compute_left_multipliers",
    "compute_multiplier_algebra",
    "compute_right_multipliers",
    "density_test",
    "worked_example",
    "field_from_name",
    "find_unit",
    "firm_ring_check",
    "has_local_units",
    "is_ideal",
    "left_realize",
    "load_algebra",
    "local_unit_for",
    "matrix_units",
    "pullback_check",
    "realize_in_unital",
    "strict_closure",
    "universal_map",
    "upper_triangular",
]
