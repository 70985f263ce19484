from services.inequality_lab.bands import FrequencyBand, freq_band_check, vanishing_order
from services.inequality_lab.convolution import (
    ALL,
    INCREASING,
    DensityValue,
    convolution_density_2d,
    convolution_mass,
    quadratic_frame,
)
from services.inequality_lab.decay import (
    DecayFit,
    multilinear_decay_fit,
    pigeonhole_split_index,
    predicted_decay_exponent,
    split_for_scales,
)
from services.inequality_lab.multilinear import graded_rule, multilinear_T
from services.inequality_lab.scans import (
    InjectivityReport,
    RatioScanReport,
    attach_injectivity,
    geometric_ratio_scan,
    injectivity_probe,
    offspring_torsion_check,
    require_normalized,
)
