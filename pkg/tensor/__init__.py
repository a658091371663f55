"""
Charts, fields and primitive tensor operators for ngtlab.
Consolidates the component-level machinery shared by geometry, ngt and structures.
"""

from .chart import Chart, Point
from .fields import (
    FINITE_DIFFERENCE,
    SYMBOLIC,
    USER,
    ArrayField,
    CallableField,
    ComponentField,
    ConstantField,
    ExprField,
    LinearMapField,
    ScalarField,
    ScaledField,
    TensorField,
    central_difference,
    constant_field,
    decompose,
    from_expressions,
    skew_from_expressions,
)
from .frame import GeneralizedMetric, PointFrame, endomorphism_from_two_form, recover_a
from .operators import (
    compose_slots,
    contract,
    covariant_derivative,
    d_one_form,
    d_two_form,
    exterior_derivative1,
    exterior_derivative2,
    invert_metric,
    inverse_partials,
    lie_derivative_metric,
    lie_derivative_two_form,
    lower,
    permute,
    raise_last,
    skew_residual,
    torsion,
)

__all__ = [
    # Charts
    "Chart",
    "Point",
    # Fields
    "ScalarField",
    "ExprField",
    "CallableField",
    "ConstantField",
    "ScaledField",
    "TensorField",
    "ComponentField",
    "ArrayField",
    "LinearMapField",
    "SYMBOLIC",
    "USER",
    "FINITE_DIFFERENCE",
    "central_difference",
    "constant_field",
    "from_expressions",
    "skew_from_expressions",
    "decompose",
    # Frames
    "GeneralizedMetric",
    "PointFrame",
    "endomorphism_from_two_form",
    "recover_a",
    # Operators
    "invert_metric",
    "inverse_partials",
    "d_two_form",
    "d_one_form",
    "exterior_derivative2",
    "exterior_derivative1",
    "covariant_derivative",
    "torsion",
    "lower",
    "raise_last",
    "compose_slots",
    "permute",
    "contract",
    "skew_residual",
    "lie_derivative_metric",
    "lie_derivative_two_form",
]
