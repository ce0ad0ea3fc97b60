from .checks import (
    alt_check,
    closed_form_check,
    closed_form_residuals,
    collinearity_check,
    cubic_vanishing_check,
    cusp_constant_check,
)
from .objects import PsiMatrix, SpanSolution
from .psi import SigmaTable, ak_bk_alt, psi_matrix, recover_st
from .span import prop_all_solve, span_labels, span_solve
