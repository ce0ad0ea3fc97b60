from .families import FRAME, small_family, special_family
from .matroid import (
    apply_transform,
    check_realization,
    det3,
    dual_lines,
    frame_transform,
    is_proportional,
    normalize_frame,
    normalized_transform,
    projective_equivalence,
    special_matroids,
    tn_matroid,
)
from .objects import Configuration, Matroid3, RealizationReport, encode_value, normalize_point
