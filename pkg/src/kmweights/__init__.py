"""Exact weights and truncated characters of Kac-Moody highest weight modules."""

__version__ = "0.1.0"

from .cartan import (
    GCM,
    DiagramType,
    RootDatum,
    Symmetrizer,
    classify_subdiagram,
    positive_roots,
    real_roots,
    symmetrize,
    validate_gcm,
)
from .characters import (
    bggl_euler_character,
    ch_parabolic_verma_alternating,
    ch_parabolic_verma_atiyahbott,
    ch_parabolic_verma_induction,
    denominator_identity_check,
    freudenthal_mult,
    rank2_trivial_identity,
)
from .hull import hull_contains, hull_stabilizer, ray_decomposition, wt_via_hull
from .series import FormalSeries, series_product
from .weights import (
    ModuleSpec,
    Undetermined,
    WeightSet,
    integrability_of_simple,
    lepowsky_complete,
    potential_integrability,
    wt_highest_weight_module,
    wt_integrable_simple_levi,
    wt_parabolic_verma,
    wt_simple,
    wt_simple_via_orbit,
    wt_slice_decomposition,
    weyl_kac_partial_sums,
    weyl_kac_weight_series,
)
from .weyl import (
    Weight,
    WeylWord,
    dot_action,
    group_elements_bounded,
    isotropy_is_finite,
    minimal_coset_reps,
    orbit,
    reflect,
    stabilizer_simple_generators,
    to_dominant,
)
