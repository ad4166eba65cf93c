"""permrat: the rational map family x + 1/(x^{p^d} - x + b) over F_{p^n}.

Exhaustive permutation scans with collision witnesses, plane-curve point
counts in exact arithmetic, Hasse-Weil-style bound audits as pure integer
comparisons, and the verification campaigns tying them together.
"""

from .backend import backend_name, have_compiled
from .curves import (
    BiPoly,
    CurveReport,
    TriPoly,
    UniPoly,
    affine_zeros,
    audit_curve,
    collision_curve,
    count_affine,
    count_infinity,
    criterion_sextic,
    homogenization_quartic,
    homogenize,
    is_squarefree,
    parse_bipoly,
    phi_fibers,
    symmetric_quartic,
    uni_derivative,
    uni_gcd,
    uni_square_root,
    weil_lower_check,
    weil_upper_check,
)
from .field import (
    Elem,
    Field,
    absolute_trace,
    first_elem_with_trace,
    frobenius,
    is_irreducible,
    is_prime,
    make_field,
    subfield_elements,
    trace_rel,
)
from .maps import (
    MapSpec,
    PermReport,
    conjugate_b,
    difference_value,
    eval_f,
    is_permutation,
    subfield_trace_reps,
    trace_class_reps,
    verify_witness,
)

__version__ = "0.1.0"
