from .chain import (
    base_points,
    chain_extend,
    closed_form_points,
    det_of_labels,
    interpolation_matrix,
    interpolation_minor,
    periodicity_residual,
)
from .cubic import (
    cubic_gradient,
    cubic_through,
    node_residual,
    param_r,
    param_w,
    singular_point,
    smooth_param,
)
from .grouplaw import chord_tangent_add, third_point
from .objects import MONOMIALS, TRIAL_FACTORS, ChainParams, ChainWindow, CubicForm, tidy
