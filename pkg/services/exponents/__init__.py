from services.exponents.admissibility import (
    christ_range,
    christ_range_complement,
    drury_fixed_point,
    dual_consistent,
    extension_admissible,
    extension_endpoint,
    reduced_range,
    restriction_admissible,
    restriction_endpoint,
    scaling_factor,
)
from services.exponents.drury import drury_iterate, drury_step, interp_region_check
from services.exponents.pairs import ExponentPair, as_exponent, conjugate, duality_map, to_text
from services.exponents.profile import (
    TorsionProfile,
    level_sum_exponents,
    torsion_profile,
    unweighted_range,
    weight_exponent,
)
from services.exponents.table import TABLE_HEADER, exponent_table
