"""Holes of affine semigroups: the right-hand sides ``b`` for which
``A x = b`` has a non-negative real solution but no non-negative integer one.

The columns of ``A`` are the generators.  Column indices are 0-based in the
library and 1-based in command-line output.
"""

from .diophantine import (
    HilbertBasis,
    MembershipOracle,
    MinimalSolutionSet,
    integer_feasible,
    minimal_inhomogeneous,
    minimal_nonneg_kernel,
    saturation_hilbert_basis,
)
from .errors import (
    DimensionError,
    GcdNotOneError,
    MultiRowError,
    NotPointedError,
    ParseError,
    UnboundedRegionError,
    ZeroColumnError,
)
from .linalg import IntMat, hermite_normal_form, lattice_rank_index, solve_integer
from .models import cdem_expected, cdem_matrix, hall_condition, idp_check, lop_matrix, polytope_lift
from .polyhedra import (
    ConeDescription,
    dual_description,
    enumerate_lattice_points,
    is_pointed,
    parallelepiped_points,
)
from .report import parse_mat, render_mat, render_report
from .semigroup import (
    HoleFamily,
    HoleReport,
    PointClass,
    SemigroupProblem,
    Tag,
    classify_point,
    droppable_columns,
    frobenius_number,
    fundamental_holes,
    hole_ideal,
    hole_report,
    holes_above,
    is_saturated,
)
from .stdpairs import MonomialIdeal, StandardPair, is_standard, minimalize, standard_pairs

__version__ = "0.1.0"
